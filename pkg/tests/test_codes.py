"""LinearCode operations: minimum weight, duality, LCD test, shortening."""

import numpy as np
import pytest

from lcdcodes import codes, gf
from lcdcodes.codes import (BudgetExceededError, RankDeficiencyError,
                            ZeroDimensionalCodeError, from_generator,
                            load_code, save_code)
from lcdcodes.gf import from_rows


def _hamming74():
    return from_generator(from_rows(2, [
        [1, 0, 0, 0, 0, 1, 1],
        [0, 1, 0, 0, 1, 0, 1],
        [0, 0, 1, 0, 1, 1, 0],
        [0, 0, 0, 1, 1, 1, 1],
    ]))


def test_from_generator_rejects_rank_deficient():
    with pytest.raises(RankDeficiencyError):
        from_generator(from_rows(2, [[1, 1, 0], [1, 1, 0]]))


def test_min_weight_hamming():
    c = _hamming74()
    assert (c.n, c.k) == (7, 4)
    assert codes.min_weight(c) == 3


def test_min_weight_simplex():
    # dual of the Hamming code: the [7,3,4] simplex
    c = codes.dual(_hamming74())
    assert (c.n, c.k) == (7, 3)
    assert codes.min_weight(c) == 4


def test_min_weight_gf3():
    c = from_generator(from_rows(3, [[1, 0, 1, 1], [0, 1, 1, 2]]))
    # codewords: 8 nonzero; smallest is weight 3
    assert codes.min_weight(c) == 3


def test_min_weight_budget():
    c = _hamming74()
    with pytest.raises(BudgetExceededError):
        codes.min_weight(c, budget=4)


def test_min_weight_at_most_agrees_brute():
    rng = np.random.default_rng(20260823)
    print("seed = 20260823")
    checked = 0
    while checked < 60:
        q = int(rng.choice([2, 3]))
        n = int(rng.integers(4, 12))
        k = int(rng.integers(1, min(6, n) + 1))
        arr = rng.integers(0, q, size=(k, n)).astype(np.uint8)
        m = gf.FqMatrix(q, arr)
        if gf.rank(m) < k:
            continue
        c = from_generator(m)
        d = codes.min_weight(c)
        for w in range(1, 5):
            assert codes.min_weight_at_most(c, w) == (d <= w), (q, n, k, d, w)
        checked += 1


def test_dual_involution_and_orthogonality():
    c = _hamming74()
    dd = codes.dual(codes.dual(c))
    # same row space
    assert gf.rref(c.gen)[0] == gf.rref(dd.gen)[0]
    prod = gf.mat_mul(c.gen, gf.transpose(codes.dual(c).gen))
    assert prod == gf.zeros(2, c.k, c.n - c.k)


def test_dual_distance():
    assert codes.dual_distance(_hamming74()) == 4
    assert codes.dual_distance_at_least_2(_hamming74())
    # a zero column forces dual distance 1
    c = from_generator(from_rows(2, [[1, 0, 0], [0, 1, 0]]))
    assert not codes.dual_distance_at_least_2(c)
    assert codes.dual_distance(c) == 1


def test_full_length_code_has_no_dual():
    c = from_generator(gf.identity(2, 3))
    with pytest.raises(ZeroDimensionalCodeError):
        codes.dual(c)


def test_is_lcd():
    assert not codes.is_lcd(_hamming74())  # Gram is singular
    c = from_generator(from_rows(2, [[1, 1, 0], [0, 0, 1]]))
    assert not codes.is_lcd(c)  # first row self-orthogonal
    c2 = from_generator(from_rows(2, [[1, 0, 0], [0, 1, 0]]))
    assert codes.is_lcd(c2)


def test_lcd_matches_hull_oracle():
    """is_lcd iff rank(G) + rank(H) spans everything jointly: brute hull."""
    rng = np.random.default_rng(77)
    print("seed = 77")
    checked = 0
    while checked < 40:
        q = int(rng.choice([2, 3]))
        n = int(rng.integers(3, 9))
        k = int(rng.integers(1, n))
        arr = rng.integers(0, q, size=(k, n)).astype(np.uint8)
        m = gf.FqMatrix(q, arr)
        if gf.rank(m) < k:
            continue
        c = from_generator(m)
        stacked = np.vstack([c.gen.arr, codes.dual(c).gen.arr])
        hull_trivial = gf.rank(gf.FqMatrix(q, stacked)) == n
        assert codes.is_lcd(c) == hull_trivial
        checked += 1


def test_shorten():
    c = _hamming74()
    s = codes.shorten(codes.shorten(c, 1), 1)
    assert (s.n, s.k) == (5, 2)
    assert codes.min_weight(s) >= 3
    with pytest.raises(ValueError):
        codes.shorten(c, 8)
    with pytest.raises(ValueError):
        codes.shorten(c, 0)


def test_save_load_roundtrip(tmp_path):
    c = from_generator(from_rows(3, [[1, 0, 2, 1], [0, 1, 1, 1]]))
    p = tmp_path / "c.code"
    save_code(c, p)
    assert load_code(p).gen == c.gen


def test_load_rejects_bad_digit(tmp_path):
    p = tmp_path / "bad.code"
    p.write_text("2 1 3\n021\n")
    with pytest.raises(ValueError):
        load_code(p)
