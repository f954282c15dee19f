"""Linear codes over GF(2) and GF(3).

A code is held by a full-rank generator matrix.  Coordinates are 1-indexed
in every public operation that takes one.  Minimum weights are exact and
come from message enumeration under an explicit work budget; the bounded
probes (`min_weight_at_most`) instead test small column dependencies of a
parity-check matrix and stay cheap at any length.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import gf
from .gf import FqMatrix

#: ceiling on enumerated messages for exact minimum-weight computation
DEFAULT_ENUM_BUDGET = 2 ** 24


class RankDeficiencyError(ValueError):
    pass


class BudgetExceededError(RuntimeError):
    pass


class ZeroDimensionalCodeError(ValueError):
    pass


@dataclass(frozen=True)
class LinearCode:
    """An [n, k] code over GF(q), generated by the rows of `gen`."""

    gen: FqMatrix

    @property
    def q(self) -> int:
        return self.gen.q

    @property
    def n(self) -> int:
        return self.gen.cols

    @property
    def k(self) -> int:
        return self.gen.rows

    def __repr__(self) -> str:
        return f"LinearCode(q={self.q}, n={self.n}, k={self.k})"


def _first_dependent_row(g: FqMatrix) -> int:
    """1-indexed first row lying in the span of the rows above it."""
    for i in range(1, g.rows + 1):
        if gf.rank(FqMatrix(g.q, g.arr[:i])) < i:
            return i
    raise AssertionError("matrix has full row rank")


def from_generator(g: FqMatrix) -> LinearCode:
    """Wrap a generator matrix, rejecting rank-deficient input."""
    if g.rows == 0:
        raise ZeroDimensionalCodeError("a code needs at least one generator row")
    if g.rows > g.cols or gf.rank(g) < g.rows:
        dep = _first_dependent_row(g)
        raise RankDeficiencyError(
            f"generator is rank deficient: row {dep} depends on the rows above it"
        )
    return LinearCode(g)


# ---------------------------------------------------------------
# exact minimum weight by message enumeration
# ---------------------------------------------------------------

def _min_weight_gf2(gen: np.ndarray) -> int:
    k, n = gen.shape
    rows = [int(sum(1 << j for j in range(n) if gen[i, j])) for i in range(k)]
    best = n
    cw = 0
    for i in range(1, 1 << k):
        cw ^= rows[(i & -i).bit_length() - 1]
        w = cw.bit_count()
        if 0 < w < best:
            best = w
    return best


def _min_weight_gf3(gen: np.ndarray) -> int:
    k, n = gen.shape
    g = gen.astype(np.int64)
    best = n
    chunk = 1 << 16
    # one representative per scalar class: leading coefficient 1
    for lead in range(k):
        nfree = k - lead - 1
        total = 3 ** nfree
        for start in range(0, total, chunk):
            cnt = min(chunk, total - start)
            idx = np.arange(start, start + cnt, dtype=np.int64)
            words = np.empty((cnt, n), dtype=np.int64)
            words[:] = g[lead]
            rem = idx
            for p in range(nfree):
                rem, digit = np.divmod(rem, 3)
                words += digit[:, None] * g[lead + 1 + p]
            w = int(np.count_nonzero(words % 3, axis=1).min())
            if w < best:
                best = w
    return best


def min_weight(c: LinearCode, budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """Exact minimum weight; raises BudgetExceededError if q^k > budget."""
    if c.q ** c.k > budget:
        raise BudgetExceededError(
            f"minimum-weight enumeration needs {c.q}^{c.k} messages, budget is {budget}"
        )
    if c.q == 2:
        return _min_weight_gf2(c.gen.arr)
    return _min_weight_gf3(c.gen.arr)


# ---------------------------------------------------------------
# bounded probes: does a codeword of weight <= w exist (w <= 4)
# ---------------------------------------------------------------

def _normalize_col(col: tuple[int, ...], q: int) -> tuple[int, ...]:
    for v in col:
        if v:
            if v == 1:
                return col
            inv = gf._INV[q][v]
            return tuple((x * inv) % q for x in col)
    return col


def min_weight_at_most(c: LinearCode, w: int) -> bool:
    """True iff the code has a nonzero codeword of weight at most w (w <= 4).

    Tests linear dependence among up to w parity-check columns, so the cost
    is polynomial in n regardless of k.
    """
    if not 1 <= w <= 4:
        raise ValueError(f"probe supports 1 <= w <= 4, got {w}")
    q, n, k = c.q, c.n, c.k
    if k == n:
        return True
    h = gf.nullspace_basis(c.gen)
    cols = [h.col(j) for j in range(n)]
    zero = (0,) * h.rows

    if any(col == zero for col in cols):
        return True
    if w == 1:
        return False

    norm = [_normalize_col(col, q) for col in cols]
    where: dict[tuple[int, ...], list[int]] = {}
    for j, p in enumerate(norm):
        where.setdefault(p, []).append(j)
    if any(len(v) > 1 for v in where.values()):
        return True
    if w == 2:
        return False

    # from here on all columns are nonzero and pairwise independent
    def neg(vec: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((-x) % q for x in vec)

    def add(u: tuple[int, ...], v: tuple[int, ...], lam: int) -> tuple[int, ...]:
        return tuple((a + lam * b) % q for a, b in zip(u, v))

    for a, b in combinations(range(n), 2):
        for lam in range(1, q):
            target = _normalize_col(neg(add(cols[a], cols[b], lam)), q)
            hit = where.get(target)
            if hit and hit[0] not in (a, b):
                return True
    if w == 3:
        return False

    pair_sums: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for a, b in combinations(range(n), 2):
        for la in range(1, q):
            for lb in range(1, q):
                s = tuple((la * x + lb * y) % q for x, y in zip(cols[a], cols[b]))
                pair_sums.setdefault(s, []).append((a, b))
    for a, b in combinations(range(n), 2):
        for lb in range(1, q):
            s = neg(add(cols[a], cols[b], lb))
            for cc, dd in pair_sums.get(s, ()):
                if cc not in (a, b) and dd not in (a, b):
                    return True
    return False


# ---------------------------------------------------------------
# duals, LCD test, shortening
# ---------------------------------------------------------------

def dual(c: LinearCode) -> LinearCode:
    if c.k == c.n:
        raise ZeroDimensionalCodeError("dual of the full space is the zero code")
    return from_generator(gf.nullspace_basis(c.gen))


def dual_distance(c: LinearCode, budget: int = DEFAULT_ENUM_BUDGET) -> int:
    return min_weight(dual(c), budget)


def dual_distance_at_least_2(c: LinearCode) -> bool:
    """Fast predicate: the dual has no weight-1 word iff no generator column is zero."""
    return not bool((~c.gen.arr.any(axis=0)).any())


def is_lcd(c: LinearCode) -> bool:
    """True iff the code meets its dual only in 0 (G G^T nonsingular)."""
    return gf.is_nonsingular(gf.gram(c.gen))


def shorten(c: LinearCode, t: int) -> LinearCode:
    """Shorten at 1-indexed coordinate t.

    Keeps the codewords that are zero at t and drops that coordinate.  The
    dimension drops by one exactly when some codeword is nonzero at t.
    """
    if not 1 <= t <= c.n:
        raise ValueError(f"coordinate {t} out of range 1..{c.n}")
    j = t - 1
    a = c.gen.arr.astype(np.int64)
    col = a[:, j]
    live = np.nonzero(col)[0]
    if live.size == 0:
        return from_generator(FqMatrix(c.q, np.delete(a, j, axis=1).astype(np.uint8)))
    if c.k == 1:
        raise ZeroDimensionalCodeError("shortening drops the dimension to 0")
    p = int(live[0])
    inv = gf._INV[c.q][int(a[p, j])]
    for i in range(c.k):
        if i != p and a[i, j]:
            a[i] = (a[i] - a[i, j] * inv * a[p]) % c.q
    a = np.delete(np.delete(a, p, axis=0), j, axis=1)
    return from_generator(FqMatrix(c.q, a.astype(np.uint8)))


# ---------------------------------------------------------------
# file round trip
# ---------------------------------------------------------------

def save_code(c: LinearCode, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(gf.format_matrix(c.gen))


def load_code(path) -> LinearCode:
    with open(path, "r", encoding="ascii") as fh:
        return from_generator(gf.parse_matrix(fh.read()))
