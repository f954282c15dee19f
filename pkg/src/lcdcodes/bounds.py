"""Length/distance bookkeeping for linear and LCD codes over GF(2), GF(3).

`griesmer_g` is the largest d whose Griesmer length sum fits in n, and
`lcd_upper_bound` lowers it by one when a parity rule excludes an LCD code
at that distance.  Also hosts the d = 3 sphere-packing ceiling used by the
high-rate searches.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import _check_field

RULE_NONE = "none"
RULE_BINARY_ODD_K_EVEN_D = "binary-odd-k-even-d"
RULE_TERNARY_D_DIV_3 = "ternary-d-div-3"
RULE_BINARY_D_DIV_4 = "binary-d-div-4"


def k_bracket(q: int, k: int) -> int:
    """Number of projective points of PG(k-1, q): (q^k - 1) / (q - 1)."""
    _check_field(q)
    if k < 0:
        raise ValueError("k must be nonnegative")
    return (q ** k - 1) // (q - 1)


def griesmer_sum(q: int, k: int, d: int) -> int:
    """sum_{i=0}^{k-1} ceil(d / q^i)."""
    _check_field(q)
    if k < 1:
        raise ValueError("k must be at least 1")
    if d < 0:
        raise ValueError("d must be nonnegative")
    total = 0
    p = 1
    for _ in range(k):
        total += -(-d // p)
        p *= q
    return total


def griesmer_g(q: int, n: int, k: int) -> int:
    """Largest d >= 0 with griesmer_sum(q, k, d) <= n."""
    _check_field(q)
    if k < 1:
        raise ValueError("k must be at least 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    d = max(0, (n * (q - 1) * q ** (k - 1)) // (q ** k - 1))
    while griesmer_sum(q, k, d + 1) <= n:
        d += 1
    while d > 0 and griesmer_sum(q, k, d) > n:
        d -= 1
    return d


def meets_griesmer(q: int, n: int, k: int, d: int) -> bool:
    return griesmer_sum(q, k, d) == n


@dataclass(frozen=True)
class BoundVerdict:
    g: int
    lcd_upper: int
    rule_fired: str


def lcd_upper_bound(q: int, n: int, k: int, *, binary_mod4_rule: bool = False) -> BoundVerdict:
    """Upper bound on the minimum distance of an LCD [n, k] code.

    Starts from the Griesmer value g and subtracts one when a code meeting
    the Griesmer bound at g is forced to intersect its dual: over GF(2)
    with k odd and g even, or over GF(3) with g divisible by 3.  The
    optional mod-4 rule (off by default) also fires over GF(2) whenever g
    is divisible by 4, regardless of k's parity.
    """
    if n < k or k < 1:
        raise ValueError(f"need n >= k >= 1, got n={n}, k={k}")
    g = griesmer_g(q, n, k)
    if meets_griesmer(q, n, k, g):
        if q == 2 and k % 2 == 1 and g % 2 == 0 and g > 0:
            return BoundVerdict(g, g - 1, RULE_BINARY_ODD_K_EVEN_D)
        if q == 3 and g % 3 == 0 and g > 0:
            return BoundVerdict(g, g - 1, RULE_TERNARY_D_DIV_3)
        if binary_mod4_rule and q == 2 and g % 4 == 0 and g > 0:
            return BoundVerdict(g, g - 1, RULE_BINARY_D_DIV_4)
    return BoundVerdict(g, g, RULE_NONE)


def sphere_packing_max_n(q: int, i: int, d: int = 3) -> int:
    """Longest possible [n, n-i, 3] code over GF(q): the Hamming-bound ceiling."""
    _check_field(q)
    if d != 3:
        raise ValueError("only d = 3 is supported")
    if i < 1:
        raise ValueError("i must be at least 1")
    if q == 2:
        return 2 ** i - 1
    return (3 ** i - 1) // 2


def binary_highrate_two(n: int, i: int) -> bool:
    """True when length alone caps binary [n, n-i] codes at distance 2 (n >= 2^i)."""
    if not 2 <= i < n:
        raise ValueError(f"need 2 <= i < n, got i={i}, n={n}")
    return n >= 2 ** i
