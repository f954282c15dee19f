"""Depth-first kernel for the multiplicity-vector search.

Written once in nopython-compatible style and compiled with numba when
available; the uncompiled function is kept as a reference twin so the two
routes can be cross-checked on small instances and the package still works
without a compiler.

State per node: partial multiplicities m[0..depth], running column mass,
running mass on the constrained support, per-class orthogonal mass, and
the Gram matrix of the partial generator, all updated incrementally.
Sibling values are tried in a precomputed per-column order (balanced
multiplicities first); the order never changes which nodes an exhaustive
run visits, only when a witness is met.
Pruning (all exact, no heuristics):
  - mass window: committed mass plus remaining lo/hi suffix sums must
    bracket n; same for the support target;
  - cap: for any class x, mass on columns orthogonal to x may never
    exceed n - d (else the class weight ends below d);
  - reachability: class weight so far plus the best future nonorthogonal
    mass must reach d.  The future is capped by the remaining total mass
    and, when the support sum is constrained, split into the exact
    remaining support mass and its complement.
A leaf survives iff every class weight is >= d, mass sums hit their
targets exactly, and the Gram has full rank (the LCD test).
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    njit = None
    HAVE_NUMBA = False

STATUS_EXHAUSTED = 0
STATUS_STOPPED = 1
STATUS_BUDGET = 2
STATUS_WITNESS_OVERFLOW = 3


def _gram_rank(gram, k, q):
    a = gram.copy()
    r = 0
    for c in range(k):
        piv = -1
        for i in range(r, k):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(k):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        v = a[r, c]
        if v != 1:
            # inverse of 2 is 2 mod 3; over GF(2) v is always 1
            for j in range(k):
                a[r, j] = (a[r, j] * 2) % q
        for i in range(k):
            if i != r and a[i, c] != 0:
                f = a[i, c]
                for j in range(k):
                    a[i, j] = (a[i, j] - f * a[r, j]) % q
        r += 1
        if r == k:
            break
    return r


def _dfs(P, k, q, lo, hi, n, d, in_support, s_target,
         ol_ptr, ol_dat, sno, sno_sup, vorder,
         suf_lo, suf_hi, suf_slo, suf_shi,
         gram_terms, budget, stop_on_witness, witnesses):
    max_wit = witnesses.shape[0]
    wid = vorder.shape[1]
    cap = n - d
    m = np.zeros(P, np.int64)
    vidx = np.zeros(P, np.int64)
    orth = np.zeros(P, np.int64)
    gram = np.zeros((k, k), np.int64)
    nwit = 0
    nodes = np.int64(0)
    curmass = np.int64(0)
    curs = np.int64(0)
    depth = 0
    status = STATUS_EXHAUSTED
    while depth >= 0:
        j = vidx[depth]
        v = vorder[depth, j] if j < wid else np.int64(-1)
        if v < 0:
            depth -= 1
            if depth >= 0:
                pv = m[depth]
                for idx in range(ol_ptr[depth], ol_ptr[depth + 1]):
                    orth[ol_dat[idx]] -= pv
                curmass -= pv
                if s_target >= 0 and in_support[depth]:
                    curs -= pv
                if pv:
                    for a in range(k):
                        for b in range(k):
                            gram[a, b] = (gram[a, b] - pv * gram_terms[depth, a, b]) % q
            continue
        vidx[depth] = j + 1
        nodes += 1
        if nodes > budget:
            status = STATUS_BUDGET
            break
        nm = curmass + v
        if nm + suf_lo[depth + 1] > n or nm + suf_hi[depth + 1] < n:
            continue
        ns = curs
        if s_target >= 0:
            if in_support[depth]:
                ns = curs + v
            if ns + suf_slo[depth + 1] > s_target or ns + suf_shi[depth + 1] < s_target:
                continue
        ok = True
        for idx in range(ol_ptr[depth], ol_ptr[depth + 1]):
            if orth[ol_dat[idx]] + v > cap:
                ok = False
                break
        if not ok:
            continue
        for idx in range(ol_ptr[depth], ol_ptr[depth + 1]):
            orth[ol_dat[idx]] += v
        rem = n - nm
        if s_target >= 0:
            s_rem = s_target - ns
            o_rem = rem - s_rem
            for x in range(P):
                fs = sno_sup[x, depth + 1]
                if fs > s_rem:
                    fs = s_rem
                fo = sno[x, depth + 1] - sno_sup[x, depth + 1]
                if fo > o_rem:
                    fo = o_rem
                if nm - orth[x] + fs + fo < d:
                    ok = False
                    break
        else:
            for x in range(P):
                future = sno[x, depth + 1]
                if future > rem:
                    future = rem
                if nm - orth[x] + future < d:
                    ok = False
                    break
        if not ok:
            for idx in range(ol_ptr[depth], ol_ptr[depth + 1]):
                orth[ol_dat[idx]] -= v
            continue
        m[depth] = v
        curmass = nm
        curs = ns
        if v:
            for a in range(k):
                for b in range(k):
                    gram[a, b] = (gram[a, b] + v * gram_terms[depth, a, b]) % q
        if depth == P - 1:
            if _gram_rank(gram, k, q) == k:
                if nwit < max_wit:
                    for jj in range(P):
                        witnesses[nwit, jj] = m[jj]
                    nwit += 1
                    if stop_on_witness:
                        status = STATUS_STOPPED
                        break
                else:
                    status = STATUS_WITNESS_OVERFLOW
                    break
            pv = m[depth]
            for idx in range(ol_ptr[depth], ol_ptr[depth + 1]):
                orth[ol_dat[idx]] -= pv
            curmass -= pv
            if s_target >= 0 and in_support[depth]:
                curs -= pv
            if pv:
                for a in range(k):
                    for b in range(k):
                        gram[a, b] = (gram[a, b] - pv * gram_terms[depth, a, b]) % q
        else:
            depth += 1
            vidx[depth] = 0
    return status, nodes, nwit


dfs_python = _dfs

if HAVE_NUMBA:
    _gram_rank = njit(cache=True, nogil=True)(_gram_rank)
    dfs_compiled = njit(cache=True, nogil=True)(_dfs)
else:  # pragma: no cover
    dfs_compiled = _dfs
