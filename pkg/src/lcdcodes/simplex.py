"""Simplex generator matrices and projective-multiset codes.

A k-dimensional code whose generator columns are projective points with
multiplicities is described by a multiplicity vector m indexed by the
columns of the simplex matrix S_{q,k}.  The column order of S_{q,k} is
fixed by the recursion below and is normative: multiplicity vectors,
weight profiles and search certificates all refer to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import math

import numpy as np

from . import codes, gf
from .bounds import k_bracket
from .codes import LinearCode
from .gf import FqMatrix


@lru_cache(maxsize=None)
def simplex_matrix(q: int, k: int) -> FqMatrix:
    """S_{q,k}: k x [k]_q, one column per projective point.

    S_{q,1} = (1).  For k >= 2 over GF(2) the columns are (S | e_k-block | S)
    with a 0/1 last row; over GF(3) they are (S | e_k-block | S | S) with a
    0/1/2 last row, where S = S_{q,k-1} sits over constant last-row blocks.
    """
    gf._check_field(q)
    if k < 1:
        raise ValueError("k must be at least 1")
    if k == 1:
        return FqMatrix(q, np.ones((1, 1), dtype=np.uint8))
    prev = simplex_matrix(q, k - 1).arr
    w = prev.shape[1]
    blocks = [prev, np.zeros((k - 1, 1), dtype=np.uint8)] + [prev] * (q - 1)
    top = np.hstack(blocks)
    last = np.concatenate(
        [np.zeros(w, dtype=np.uint8), np.ones(1, dtype=np.uint8)]
        + [np.full(w, c, dtype=np.uint8) for c in range(1, q)]
    )
    return FqMatrix(q, np.vstack([top, last]))


@lru_cache(maxsize=None)
def first_row_support(q: int, k: int) -> tuple[int, ...]:
    """1-indexed columns of S_{q,k} whose first entry is nonzero."""
    s = simplex_matrix(q, k)
    return tuple(int(j) + 1 for j in np.nonzero(s.arr[0])[0])


@lru_cache(maxsize=None)
def unit_column_indices(q: int, k: int) -> tuple[int, ...]:
    """1-indexed positions of the standard basis vectors among the columns."""
    s = simplex_matrix(q, k).arr
    out = []
    for j in range(s.shape[1]):
        col = s[:, j]
        if col.sum() == 1:
            out.append(j + 1)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _nonorth_incidence(q: int, k: int) -> np.ndarray:
    """P x P boolean table: inner product of projective points x and i is nonzero."""
    s = simplex_matrix(q, k).arr.astype(np.int64)
    return (s.T @ s) % q != 0


@dataclass(frozen=True)
class MultiplicityVector:
    """Column multiplicities for a (q, k) projective multiset, length [k]_q."""

    q: int
    k: int
    m: tuple[int, ...]

    def __post_init__(self) -> None:
        p = k_bracket(self.q, self.k)
        if len(self.m) != p:
            raise ValueError(f"expected {p} multiplicities for (q={self.q}, k={self.k}), got {len(self.m)}")
        if any(v < 0 for v in self.m):
            raise ValueError("multiplicities must be nonnegative")
        object.__setattr__(self, "m", tuple(int(v) for v in self.m))

    @property
    def n(self) -> int:
        return sum(self.m)

    def __str__(self) -> str:
        return format_multiplicities(self)


def format_multiplicities(mv: MultiplicityVector) -> str:
    if all(v <= 9 for v in mv.m):
        return "".join(str(v) for v in mv.m)
    return ",".join(str(v) for v in mv.m)


def parse_multiplicities(q: int, k: int, text: str) -> MultiplicityVector:
    text = text.strip()
    if "," in text:
        vals = [int(x) for x in text.split(",")]
    else:
        if not text.isdigit():
            raise ValueError(f"multiplicity string must be digits or comma-separated: {text!r}")
        vals = [int(ch) for ch in text]
    return MultiplicityVector(q, k, tuple(vals))


def build_multiset_code(mv: MultiplicityVector) -> LinearCode:
    """Code generated by the simplex columns repeated per multiplicity.

    Columns appear in simplex order, each column index i repeated m_i times.
    Raises RankDeficiencyError when the support misses a hyperplane's
    complement (the multiset spans a proper subspace).
    """
    if mv.n < 1:
        raise ValueError("multiset is empty")
    s = simplex_matrix(mv.q, mv.k).arr
    gen = np.repeat(s, np.array(mv.m, dtype=np.int64), axis=1)
    return codes.from_generator(FqMatrix(mv.q, gen))


def multiplicity_bounds(q: int, k: int, n: int, d: int) -> tuple[int, int]:
    """Per-column multiplicity window (lo, hi) for an LCD-eligible multiset.

    Any k-dimensional code with parameters [n, >= d] and no identically
    zero coordinate has every m_i >= lo, and d <= all column classes forces
    m_i <= hi.  hi < lo signals an empty search space; that is a legal
    outcome, not an error.
    """
    gf._check_field(q)
    kmin = 3 if q == 2 else 2
    if k < kmin:
        raise ValueError(f"need k >= {kmin} over GF({q})")
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    lo = max(0, q * d - (q - 1) * n)
    hi = math.floor(n - Fraction((q ** (k - 1) - 1) * d, (q - 1) * q ** (k - 2)))
    return lo, hi


def weight_profile(mv: MultiplicityVector) -> np.ndarray:
    """Weight of each projective message class, in simplex column order.

    Entry x is the total multiplicity of the columns not orthogonal to
    point x; the minimum over x equals the code's minimum weight.
    """
    inc = _nonorth_incidence(mv.q, mv.k)
    return inc.astype(np.int64) @ np.array(mv.m, dtype=np.int64)


def multiplicities_of(c: LinearCode) -> MultiplicityVector:
    """Recover the multiplicity vector of a code whose columns are projective
    points in simplex order (zero columns are rejected)."""
    s = simplex_matrix(c.q, c.k).arr
    norm_index = {}
    for j in range(s.shape[1]):
        norm_index[tuple(int(v) for v in s[:, j])] = j
    m = [0] * s.shape[1]
    for j in range(c.n):
        col = c.gen.col(j)
        ncol = codes._normalize_col(col, c.q)
        if ncol == (0,) * c.k:
            raise ValueError(f"column {j + 1} is zero")
        m[norm_index[ncol]] += 1
    return MultiplicityVector(c.q, c.k, tuple(m))


def extend_lcd(c: LinearCode, s: int, *, budget: int = codes.DEFAULT_ENUM_BUDGET) -> LinearCode:
    """Prepend s copies of the simplex matrix to an LCD generator.

    Takes an LCD [n, k, d] code to an LCD [n + s*[k]_q, k, d + s*q^(k-1)]
    code.  Needs k >= 3 over GF(2), k >= 2 over GF(3).  Both the LCD
    property and the distance shift are re-verified when enumeration fits
    the budget.
    """
    kmin = 3 if c.q == 2 else 2
    if c.k < kmin:
        raise ValueError(f"extension needs k >= {kmin} over GF({c.q})")
    if s < 1:
        raise ValueError("s must be at least 1")
    if not codes.is_lcd(c):
        raise ValueError("input code is not LCD")
    sm = simplex_matrix(c.q, c.k)
    gen = np.hstack([sm.arr] * s + [c.gen.arr])
    out = codes.from_generator(FqMatrix(c.q, gen))
    if c.q ** c.k <= budget:
        d_in = codes.min_weight(c, budget)
        d_out = codes.min_weight(out, budget)
        expect = d_in + s * c.q ** (c.k - 1)
        if d_out != expect or not codes.is_lcd(out):
            raise AssertionError("extension postcondition failed")
    return out
