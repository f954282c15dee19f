"""Distance-3 high-rate searches over parity-check column subsets."""

import numpy as np
import pytest

from lcdcodes import codes, gf, highrate, method1
from lcdcodes.highrate import (check_matrix_from_points, code_from_check,
                               highrate_column_search, projective_points)
from lcdcodes.search import (GOAL_FIND_ONE, GOAL_PROVE_EMPTY, KIND_BOUND_EMPTY,
                             KIND_EMPTY, KIND_INCONCLUSIVE, KIND_WITNESS,
                             SearchError)


def test_projective_points():
    pts = projective_points(2, 3)
    assert len(pts) == 7
    assert all(len(p) == 3 for p in pts)
    pts3 = projective_points(3, 3)
    assert len(pts3) == 13
    for p in pts3:
        nz = [x for x in p if x]
        assert nz[0] == 1


def test_code_from_check():
    pts = projective_points(2, 3)
    h = check_matrix_from_points(2, list(pts))
    c = code_from_check(h)
    assert (c.n, c.k) == (7, 4)
    assert codes.min_weight(c) == 3   # the Hamming code


def test_witness_found_and_verified():
    cert = highrate_column_search(2, 26, 5, goal=GOAL_FIND_ONE)
    assert cert.kind == KIND_WITNESS
    assert cert.params["n"] == 26 and cert.params["k"] == 21


def test_small_empty_matches_method1():
    # same parameter sets, two independent engines
    for q, n, i in [(2, 6, 3), (2, 7, 3), (3, 7, 3), (3, 8, 4)]:
        hr = highrate_column_search(q, n, i, goal=GOAL_FIND_ONE)
        m1 = method1.run_method1(q, n, n - i, 3, goal=GOAL_FIND_ONE)
        assert (hr.kind == KIND_WITNESS) == (m1.kind == KIND_WITNESS), (q, n, i)


def test_known_empty_runs():
    cert = highrate_column_search(2, 27, 5, goal=GOAL_PROVE_EMPTY)
    assert cert.kind == KIND_EMPTY
    assert "LCD" in cert.conclusion
    cert = highrate_column_search(3, 37, 4, goal=GOAL_PROVE_EMPTY)
    assert cert.kind == KIND_EMPTY


def test_bound_empty_beyond_cap():
    cert = highrate_column_search(2, 32, 5, goal=GOAL_PROVE_EMPTY)
    assert cert.kind == KIND_BOUND_EMPTY
    assert "at all" in cert.conclusion


def test_budget_inconclusive():
    cert = highrate_column_search(3, 30, 4, goal=GOAL_PROVE_EMPTY, budget=10)
    assert cert.kind == KIND_INCONCLUSIVE


def test_validation():
    with pytest.raises(SearchError):
        highrate_column_search(2, 10, 3, d=4)
    with pytest.raises(SearchError):
        highrate_column_search(2, 10, 7)
    with pytest.raises(SearchError):
        highrate_column_search(2, 3, 3)


def test_gram_negation_invariance():
    """Negating GF(3) columns leaves the Gram entrywise unchanged."""
    rng = np.random.default_rng(909)
    print("seed = 909")
    for _ in range(100):
        rows = int(rng.integers(2, 6))
        cols = int(rng.integers(rows, 10))
        arr = rng.integers(0, 3, size=(rows, cols)).astype(np.uint8)
        mask = rng.integers(0, 2, size=cols).astype(bool)
        neg = arr.copy()
        neg[:, mask] = (3 - neg[:, mask]) % 3
        g1 = gf.gram(gf.FqMatrix(3, arr))
        g2 = gf.gram(gf.FqMatrix(3, neg))
        assert g1 == g2
