"""Exact dense linear algebra over GF(2) and GF(3).

Matrices are immutable wrappers around numpy uint8 arrays with entries in
{0, ..., q-1}.  Row reduction pivots on the first nonzero entry scanning
columns left to right and rows top to bottom, so echelon forms and
everything derived from them (rank, nullspaces, duals) are deterministic.
Empty matrices (0 rows or 0 columns) are legal throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

SUPPORTED_FIELDS = (2, 3)

# multiplicative inverses, indexed by element value (index 0 unused)
_INV = {2: (0, 1), 3: (0, 1, 2)}


class FieldMismatchError(ValueError):
    pass


class DimensionMismatchError(ValueError):
    pass


def _check_field(q: int) -> None:
    if q not in SUPPORTED_FIELDS:
        raise FieldMismatchError(f"unsupported field GF({q}); supported: GF(2), GF(3)")


@dataclass(frozen=True, eq=False)
class FqMatrix:
    """A rows x cols matrix over GF(q), q in {2, 3}."""

    q: int
    arr: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        _check_field(self.q)
        a = np.asarray(self.arr)
        if a.ndim != 2:
            raise DimensionMismatchError(f"matrix must be 2-dimensional, got shape {a.shape}")
        if a.size and (a.min() < 0 or a.max() >= self.q):
            raise ValueError(f"entries must lie in 0..{self.q - 1}")
        a = np.ascontiguousarray(a, dtype=np.uint8)
        a.setflags(write=False)
        object.__setattr__(self, "arr", a)

    @property
    def rows(self) -> int:
        return self.arr.shape[0]

    @property
    def cols(self) -> int:
        return self.arr.shape[1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FqMatrix):
            return NotImplemented
        return self.q == other.q and self.arr.shape == other.arr.shape and bool(
            np.array_equal(self.arr, other.arr)
        )

    def __repr__(self) -> str:
        return f"FqMatrix(q={self.q}, {self.rows}x{self.cols})"

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self.arr[i])

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self.arr[:, j])


def from_rows(q: int, rows) -> FqMatrix:
    """Build a matrix from an iterable of equal-length entry rows."""
    rows = [list(r) for r in rows]
    if not rows:
        return FqMatrix(q, np.zeros((0, 0), dtype=np.uint8))
    width = len(rows[0])
    for i, r in enumerate(rows):
        if len(r) != width:
            raise DimensionMismatchError(f"row {i + 1} has length {len(r)}, expected {width}")
    return FqMatrix(q, np.array(rows, dtype=np.uint8))


def zeros(q: int, rows: int, cols: int) -> FqMatrix:
    return FqMatrix(q, np.zeros((rows, cols), dtype=np.uint8))


def identity(q: int, n: int) -> FqMatrix:
    return FqMatrix(q, np.eye(n, dtype=np.uint8))


def transpose(m: FqMatrix) -> FqMatrix:
    return FqMatrix(m.q, m.arr.T)


def mat_mul(a: FqMatrix, b: FqMatrix) -> FqMatrix:
    if a.q != b.q:
        raise FieldMismatchError(f"field mismatch: GF({a.q}) vs GF({b.q})")
    if a.cols != b.rows:
        raise DimensionMismatchError(
            f"dimension mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}"
        )
    prod = (a.arr.astype(np.int64) @ b.arr.astype(np.int64)) % a.q
    return FqMatrix(a.q, prod.astype(np.uint8))


def gram(g: FqMatrix) -> FqMatrix:
    """G * G^T reduced mod q.  Square of side g.rows."""
    return mat_mul(g, transpose(g))


def hconcat(a: FqMatrix, b: FqMatrix) -> FqMatrix:
    if a.q != b.q:
        raise FieldMismatchError(f"field mismatch: GF({a.q}) vs GF({b.q})")
    if a.rows != b.rows:
        raise DimensionMismatchError(f"row count mismatch: {a.rows} vs {b.rows}")
    return FqMatrix(a.q, np.hstack([a.arr, b.arr]))


def _rref(a: np.ndarray, q: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form with the leftmost-pivot, topmost-row rule."""
    r = a.astype(np.int64, copy=True)
    rows, cols = r.shape
    piv: list[int] = []
    pr = 0
    for c in range(cols):
        if pr == rows:
            break
        nz = np.nonzero(r[pr:, c])[0]
        if nz.size == 0:
            continue
        i = pr + int(nz[0])
        if i != pr:
            r[[pr, i]] = r[[i, pr]]
        v = int(r[pr, c])
        if v != 1:
            r[pr] = (r[pr] * _INV[q][v]) % q
        col = r[:, c].copy()
        col[pr] = 0
        mask = col != 0
        if mask.any():
            r[mask] = (r[mask] - np.outer(col[mask], r[pr])) % q
        piv.append(c)
        pr += 1
    return r.astype(np.uint8), tuple(piv)


def rref(m: FqMatrix) -> tuple[FqMatrix, tuple[int, ...]]:
    """Canonical reduced row echelon form and the 0-indexed pivot columns."""
    r, piv = _rref(m.arr, m.q)
    return FqMatrix(m.q, r), piv


def rank(m: FqMatrix) -> int:
    return len(_rref(m.arr, m.q)[1])


def is_nonsingular(m: FqMatrix) -> bool:
    if m.rows != m.cols:
        raise DimensionMismatchError(f"nonsingularity needs a square matrix, got {m.rows}x{m.cols}")
    return rank(m) == m.rows


def nullspace_basis(m: FqMatrix) -> FqMatrix:
    """Basis of the right nullspace {x : m x = 0}, one vector per row.

    Rows are produced in ascending free-column order from the RREF, so the
    result is canonical.  Returns a (cols - rank) x cols matrix.
    """
    r, piv = _rref(m.arr, m.q)
    q = m.q
    cols = m.cols
    pivset = set(piv)
    free = [c for c in range(cols) if c not in pivset]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for bi, f in enumerate(free):
        basis[bi, f] = 1
        for ri, p in enumerate(piv):
            basis[bi, p] = (-int(r[ri, f])) % q
    return FqMatrix(q, basis)


# ---------------------------------------------------------------
# plain-text matrix format: header "q rows cols", then one digit
# string per row
# ---------------------------------------------------------------

def format_matrix(m: FqMatrix) -> str:
    lines = [f"{m.q} {m.rows} {m.cols}"]
    for i in range(m.rows):
        lines.append("".join(str(int(v)) for v in m.arr[i]))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> FqMatrix:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("empty matrix text")
    head = lines[0].split()
    if len(head) != 3:
        raise ValueError(f"bad header {lines[0]!r}, expected 'q rows cols'")
    try:
        q, rows, cols = (int(x) for x in head)
    except ValueError:
        raise ValueError(f"bad header {lines[0]!r}, expected three integers") from None
    _check_field(q)
    if rows < 0 or cols < 0:
        raise ValueError("negative dimensions")
    body = lines[1:]
    if len(body) != rows:
        raise ValueError(f"expected {rows} matrix rows, found {len(body)}")
    arr = np.zeros((rows, cols), dtype=np.uint8)
    for i, ln in enumerate(body):
        if len(ln) != cols:
            raise ValueError(f"row {i + 1} has {len(ln)} digits, expected {cols}")
        for j, ch in enumerate(ln):
            if not ch.isdigit() or int(ch) >= q:
                raise ValueError(f"illegal digit {ch!r} in row {i + 1} over GF({q})")
            arr[i, j] = int(ch)
    return FqMatrix(q, arr)
