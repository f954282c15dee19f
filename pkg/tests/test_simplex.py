"""Simplex matrices, multiplicity vectors, and the extension construction."""

import numpy as np
import pytest

from lcdcodes import codes, gf, simplex
from lcdcodes.simplex import (MultiplicityVector, build_multiset_code,
                              extend_lcd, first_row_support,
                              format_multiplicities, multiplicities_of,
                              multiplicity_bounds, parse_multiplicities,
                              simplex_matrix, unit_column_indices,
                              weight_profile)


def test_simplex_matrix_shape_and_columns():
    s = simplex_matrix(3, 4)
    assert (s.rows, s.cols) == (4, 40)
    cols = [s.col(j) for j in range(40)]
    assert len(set(cols)) == 40
    # one representative per projective point: first nonzero entry is 1
    for c in cols:
        nz = [x for x in c if x]
        assert nz and nz[0] == 1


def test_simplex_matrix_binary():
    s = simplex_matrix(2, 5)
    assert (s.rows, s.cols) == (5, 31)
    assert len({s.col(j) for j in range(31)}) == 31


def test_unit_columns_and_support():
    units = unit_column_indices(3, 4)
    assert len(units) == 4
    s = simplex_matrix(3, 4)
    for pos, i in enumerate(units):
        col = s.col(i - 1)
        assert col.count(0) == 3 and col[pos] == 1
    sup = first_row_support(3, 4)
    assert len(sup) == 27  # q^(k-1) columns meet the first row
    assert all(s.col(i - 1)[0] != 0 for i in sup)


def test_multiplicity_vector_validation():
    with pytest.raises(ValueError):
        MultiplicityVector(3, 4, (1,) * 39)
    with pytest.raises(ValueError):
        MultiplicityVector(3, 4, (1,) * 39 + (-1,))
    mv = MultiplicityVector(3, 4, (1,) * 40)
    assert mv.n == 40


def test_format_parse_roundtrip():
    mv = MultiplicityVector(2, 3, (2, 0, 1, 1, 0, 3, 1))
    assert parse_multiplicities(2, 3, format_multiplicities(mv)) == mv
    with pytest.raises(ValueError):
        parse_multiplicities(2, 3, "20110x1")
    with pytest.raises(ValueError):
        parse_multiplicities(2, 3, "201")


def test_build_multiset_code_simplex():
    # all-ones multiplicities give the simplex code itself
    c = build_multiset_code(MultiplicityVector(2, 3, (1,) * 7))
    assert (c.n, c.k) == (7, 3)
    assert codes.min_weight(c) == 4
    c3 = build_multiset_code(MultiplicityVector(3, 4, (1,) * 40))
    assert (c3.n, c3.k) == (40, 4)
    assert codes.min_weight(c3) == 27


def test_build_multiset_code_zero_mult_errors():
    with pytest.raises(ValueError):
        build_multiset_code(MultiplicityVector(2, 3, (0,) * 7))


def test_weight_profile_matches_direct():
    rng = np.random.default_rng(4040)
    print("seed = 4040")
    for _ in range(50):
        q = int(rng.choice([2, 3]))
        k = int(rng.integers(2, 5)) if q == 3 else int(rng.integers(3, 6))
        p = simplex.simplex_matrix(q, k).cols
        m = tuple(int(x) for x in rng.integers(0, 3, size=p))
        if sum(m) == 0 or sum(1 for x in m if x) < k:
            continue
        mv = MultiplicityVector(q, k, m)
        try:
            c = build_multiset_code(mv)
        except Exception:
            continue
        prof = weight_profile(mv)
        dmin = min(int(w) for w in prof)
        assert dmin == codes.min_weight(c)


def test_multiplicities_of_inverts_build():
    mv = MultiplicityVector(3, 4, tuple([2, 1, 0, 1] * 10))
    c = build_multiset_code(mv)
    assert multiplicities_of(c) == mv


def test_multiplicity_bounds_window():
    lo, hi = multiplicity_bounds(3, 4, 39, 26)
    assert (lo, hi) == (0, 1)
    lo, hi = multiplicity_bounds(2, 5, 30, 15)
    assert (lo, hi) == (0, 1)
    lo, hi = multiplicity_bounds(2, 5, 32, 16)
    assert (lo, hi) == (0, 2)
    # Eq-style lower bound activates when qd > (q-1)n
    lo, hi = multiplicity_bounds(3, 4, 40, 27)
    assert lo == 1


def test_multiplicity_bounds_rejects_small_k():
    with pytest.raises(ValueError):
        multiplicity_bounds(2, 2, 10, 4)
    multiplicity_bounds(3, 2, 10, 4)


def test_extend_lcd():
    from lcdcodes.refdata import build_paper_code
    c = build_paper_code("T11")  # ternary LCD [11,4,6]
    e = extend_lcd(c, 1)
    assert (e.n, e.k) == (51, 4)
    assert codes.is_lcd(e)
    assert codes.min_weight(e) == 6 + 27
    e2 = extend_lcd(c, 2)
    assert (e2.n, codes.min_weight(e2)) == (91, 60)


def test_extend_lcd_rejects_negative():
    from lcdcodes.refdata import build_paper_code
    c = build_paper_code("T11")
    with pytest.raises(ValueError):
        extend_lcd(c, -1)
    with pytest.raises(ValueError):
        extend_lcd(c, 0)
