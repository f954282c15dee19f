"""Bundled reference data: explicit codes, residue tables, and the
parity-check constructions for high-rate codes.

The matrices and multiplicity vectors live as text assets under data/ and
are loaded verbatim; loaders assert shape and digit-sum consistency so a
transcription slip fails immediately.  Residue tables are small frozen
dicts consumed by the verification harness and its tests.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

import numpy as np

from . import codes, gf
from .codes import LinearCode
from .gf import FqMatrix
from .simplex import parse_multiplicities, build_multiset_code

# ---------------------------------------------------------------
# residue tables (dimension 5 over GF(2): n = 31s+t; dimension 4
# over GF(3): n = 40s+t)
# ---------------------------------------------------------------

# g_2(31s+t, 5) = 16s + G2_COEFF[t]
G2_COEFF = (0, 0, 0, 0, 0, 1, 2, 2, 3, 4, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 9,
            10, 10, 11, 12, 12, 12, 13, 14, 14, 15)

# g_3(40s+t, 4) = 27s + G3_COEFF[t]
G3_COEFF = (0, 0, 0, 0, 1, 2, 3, 3, 4, 5, 6, 6, 7, 8, 9, 9, 9, 10, 11, 12,
            12, 13, 14, 15, 15, 16, 17, 18, 18, 18, 19, 20, 21, 21, 22, 23,
            24, 24, 25, 26)

# residues where the parity rules force lcd_upper = g - 1
GB_RESIDUES_BINARY = (0, 6, 9, 13, 16, 21, 24, 28)
GB_RESIDUES_TERNARY = (0, 6, 10, 14, 19, 23, 27, 32, 36)

# nonexistence-reduction inputs: t -> (alpha, r) with d(s,t) = q^{k-1} s + alpha
BINARY_REDUCTION = {
    0: (-1, 31), 1: (0, 16), 2: (0, 32), 8: (3, 35), 10: (4, 36),
    12: (5, 37), 14: (6, 38), 15: (7, 23), 16: (7, 39), 17: (8, 24),
    18: (8, 40), 23: (11, 27), 25: (12, 28), 27: (13, 29), 29: (14, 30),
    30: (15, 15),
}
TERNARY_REDUCTION = {
    0: (-1, 40), 1: (0, 27), 2: (0, 54), 3: (0, 81), 9: (5, 43),
    12: (7, 44), 13: (8, 31), 15: (9, 45), 18: (11, 46), 21: (13, 47),
    22: (14, 34), 23: (14, 61), 25: (16, 35), 26: (17, 22), 27: (17, 49),
    28: (18, 36), 31: (20, 37), 32: (20, 64), 34: (22, 38), 35: (23, 25),
    37: (24, 39), 38: (25, 26), 39: (26, 13),
}

# the two final residue theorems: offsets below floor(16n/31) resp. floor(27n/40)
THEOREM_2_5_MINUS_1 = frozenset({1, 9, 13, 15, 17, 21, 23, 24, 25, 27, 28, 29, 30})
THEOREM_2_5_MINUS_2 = frozenset({0, 6})
THEOREM_3_4_MINUS_1 = frozenset({4, 5, 7, 8, 10, 11, 14, 16, 17, 19, 20, 24,
                                 26, 29, 30, 33, 35, 36, 38, 39})
THEOREM_3_4_MINUS_2 = frozenset({6})

# ternary dimension-4 witness residues: LCD [n,4,g] resp. [n,4,g-1] exists
TERNARY_WITNESS_AT_G = frozenset({4, 5, 7, 8, 11, 16, 17, 20, 24, 29, 30, 33})
TERNARY_WITNESS_AT_G_MINUS_1 = frozenset({6, 10, 14, 19, 26, 35, 36, 38, 39})

# d_3(n,k) for 11 <= n <= 20, 4 <= k <= n-5; pairs are unresolved two-value cells
D3_SMALL = {
    11: {4: 6, 5: 5, 6: 4},
    12: {4: 6, 5: 5, 6: 5, 7: 4},
    13: {4: 7, 5: 6, 6: 6, 7: 5, 8: 4},
    14: {4: 8, 5: 7, 6: 6, 7: 6, 8: 5, 9: 4},
    15: {4: 8, 5: 8, 6: 7, 7: 6, 8: 5, 9: 4, 10: 4},
    16: {4: 9, 5: 8, 6: 7, 7: 6, 8: 6, 9: 5, 10: 4, 11: 4},
    17: {4: 10, 5: 9, 6: 8, 7: 7, 8: 6, 9: 6, 10: 5, 11: 4, 12: 4},
    18: {4: 10, 5: 9, 6: 9, 7: 8, 8: 7, 9: 6, 10: 6, 11: 5, 12: 4, 13: 4},
    19: {4: 11, 5: 10, 6: 9, 7: 8, 8: 8, 9: 7, 10: 6, 11: 6, 12: 5, 13: 4, 14: 4},
    20: {4: 12, 5: 11, 6: 10, 7: (8, 9), 8: 8, 9: (7, 8), 10: 7, 11: 6,
         12: (5, 6), 13: 5, 14: 4, 15: (3, 4)},
}

FIG_CODE_PARAMS = ((11, 5, 5), (12, 6, 5), (13, 6, 6), (13, 7, 5), (14, 7, 6),
                   (14, 8, 5), (15, 5, 8), (17, 5, 9), (18, 6, 9))


def _read_asset(name: str) -> str:
    return resources.files("lcdcodes.data").joinpath(name).read_text(encoding="ascii")


@lru_cache(maxsize=None)
def t_code_table() -> dict[int, tuple[int, str]]:
    """n -> (d, multiplicity digit string) for the 29 stored vectors."""
    out: dict[int, tuple[int, str]] = {}
    for line in _read_asset("t_codes.txt").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n_s, d_s, m_s = line.split()
        n, d = int(n_s), int(d_s)
        if len(m_s) != 40 or sum(int(c) for c in m_s) != n:
            raise AssertionError(f"corrupt multiplicity row for n={n}")
        out[n] = (d, m_s)
    if len(out) != 29:
        raise AssertionError(f"expected 29 vectors, found {len(out)}")
    return out


@lru_cache(maxsize=None)
def _asset_matrix(name: str, shape: tuple[int, int]) -> FqMatrix:
    m = gf.parse_matrix(_read_asset(name))
    if (m.rows, m.cols) != shape:
        raise AssertionError(f"{name}: expected shape {shape}, got {(m.rows, m.cols)}")
    return m


def m26_matrix() -> FqMatrix:
    return _asset_matrix("m26.txt", (5, 21))


def m36_matrix() -> FqMatrix:
    return gf.transpose(_asset_matrix("m36_t.txt", (4, 32)))


# ---------------------------------------------------------------
# id resolution
# ---------------------------------------------------------------

def list_paper_code_ids() -> tuple[str, ...]:
    ids = [f"T{n}" for n in sorted(t_code_table())]
    ids += [f"M{n}-{k}-{d}" for n, k, d in FIG_CODE_PARAMS]
    ids += ["H25", "H26"]
    ids += [f"M36-chain-{i}" for i in range(7, 33)]
    return tuple(ids)


def _canonical_id(raw: str) -> str:
    return raw.strip().upper().replace("_", "-").replace(",", "-").replace(" ", "")


def build_paper_code(code_id: str) -> LinearCode:
    """Resolve a stored id (T<n>, M<n>-<k>-<d>, H25, H26, M36-chain-<i>)."""
    cid = _canonical_id(code_id)
    if cid.startswith("T") and cid[1:].isdigit():
        n = int(cid[1:])
        table = t_code_table()
        if n in table:
            return build_multiset_code(parse_multiplicities(3, 4, table[n][1]))
    if cid.startswith("M36-CHAIN-"):
        i = int(cid.rsplit("-", 1)[1])
        if not 7 <= i <= 32:
            raise KeyError(f"chain index {i} out of range 7..32")
        m36 = m36_matrix().arr
        gen = np.hstack([np.eye(i, dtype=np.uint8), m36[:i]])
        return codes.from_generator(FqMatrix(3, gen))
    if cid in ("H25", "H26"):
        h = np.hstack([np.eye(5, dtype=np.uint8), m26_matrix().arr])
        if cid == "H25":
            # dropping the final column leaves a singular Gram; the
            # next-to-last is the latest deletion that stays LCD
            h = np.delete(h, 24, axis=1)
        return codes.from_generator(gf.nullspace_basis(FqMatrix(2, h)))
    if cid.startswith("M") and cid.count("-") == 2:
        n_s, k_s, d_s = cid[1:].split("-")
        n, k, d = int(n_s), int(k_s), int(d_s)
        if (n, k, d) in FIG_CODE_PARAMS:
            m = _asset_matrix(f"m_{n}_{k}_{d}.txt", (k, n - k))
            gen = np.hstack([np.eye(k, dtype=np.uint8), m.arr])
            return codes.from_generator(FqMatrix(3, gen))
    raise KeyError(f"unknown code id {code_id!r}")


def paper_code_params(code_id: str) -> tuple[int, int, int, int]:
    """Stated (q, n, k, d) for an id."""
    cid = _canonical_id(code_id)
    if cid.startswith("T") and cid[1:].isdigit():
        n = int(cid[1:])
        return (3, n, 4, t_code_table()[n][0])
    if cid.startswith("M36-CHAIN-"):
        i = int(cid.rsplit("-", 1)[1])
        return (3, i + 4, i, 3)
    if cid == "H25":
        return (2, 25, 20, 3)
    if cid == "H26":
        return (2, 26, 21, 3)
    if cid.startswith("M") and cid.count("-") == 2:
        n, k, d = (int(x) for x in cid[1:].split("-"))
        return (3, n, k, d)
    raise KeyError(f"unknown code id {code_id!r}")


# ---------------------------------------------------------------
# parity-check constructions for minimum weight 2
# ---------------------------------------------------------------

def parity_family_check_matrix(n: int, i: int) -> FqMatrix:
    """Ternary i x n parity-check matrix with LCD nullspace and weight-2 words.

    Tail block: an all-ones first row and a second row (1,1,0,...,0).  The
    single-tail-column case n - i = 1 degenerates (the displayed tail needs
    two columns), so it uses the column (1,0,...,0) instead; the resulting
    [n,1] code is spanned by (2,0,...,0,1), still LCD with weight 2.
    """
    if not 2 <= i <= n - 1:
        raise ValueError(f"need 2 <= i <= n-1, got i={i}, n={n}")
    tail = np.zeros((i, n - i), dtype=np.uint8)
    tail[0, :] = 1
    if n - i >= 2:
        tail[1, :2] = 1
    h = np.hstack([np.eye(i, dtype=np.uint8), tail])
    return FqMatrix(3, h)


def build_parity_family(n: int, i: int, q: int = 3) -> LinearCode:
    """Ternary LCD [n, n-i, 2] code from the parity-check construction."""
    if q != 3:
        raise ValueError("the parity family is ternary only")
    h = parity_family_check_matrix(n, i)
    c = codes.from_generator(gf.nullspace_basis(h))
    if not codes.is_lcd(c):
        raise AssertionError("parity family construction is not LCD")
    if codes.min_weight_at_most(c, 1) or not codes.min_weight_at_most(c, 2):
        raise AssertionError("parity family minimum weight is not 2")
    if n - i >= 2:
        gm = gf.gram(h).arr
        expect = np.zeros((i, i), dtype=np.uint8)
        expect[0, 0] = (n - i + 1) % 3
        expect[0, 1] = expect[1, 0] = 2
        expect[2:, 2:] = np.eye(i - 2, dtype=np.uint8)
        if not np.array_equal(gm, expect):
            raise AssertionError("parity family Gram does not match the block form")
    return c


def binary_weight2_highrate_code(n: int, i: int) -> LinearCode:
    """Binary LCD [n, n-i, 2] code via an identity-plus-ones parity check.

    Starts from a tail of all-ones columns and, when the Gram parity is
    wrong, truncates the last column or swaps the last two for unit
    columns.  Every candidate is verified (LCD, minimum weight exactly 2)
    before being returned, so a wrong parity guess cannot leak out.
    """
    if not 2 <= i <= n - 2:
        raise ValueError(f"need 2 <= i <= n-2, got i={i}, n={n}")
    tails = [np.ones((i, n - i), dtype=np.uint8)]
    for z in range(1, i):
        t = np.ones((i, n - i), dtype=np.uint8)
        t[i - z:, -1] = 0
        tails.append(t)
    if n - i >= 3:
        t = np.ones((i, n - i), dtype=np.uint8)
        t[:, -2:] = 0
        t[0, -2:] = 1
        tails.append(t)
    for tail in tails:
        h = FqMatrix(2, np.hstack([np.eye(i, dtype=np.uint8), tail]))
        c = codes.from_generator(gf.nullspace_basis(h))
        if (codes.is_lcd(c) and not codes.min_weight_at_most(c, 1)
                and codes.min_weight_at_most(c, 2)):
            return c
    raise AssertionError(f"no verified weight-2 construction for n={n}, i={i}")
