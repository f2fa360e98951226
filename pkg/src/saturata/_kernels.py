"""Array kernels over the subset lattice of [n].

Everything here works on plain numpy arrays of length 2**n indexed by mask;
the public modules wrap these in :class:`~saturata.family.SetFamily`.
"""

from __future__ import annotations

import numpy as np


def popcounts(n: int) -> np.ndarray:
    return np.bitwise_count(np.arange(1 << n, dtype=np.int64)).astype(np.int64)


def superset_or(mem: np.ndarray, n: int) -> np.ndarray:
    """Up-closure: out[m] = any(mem[a] for a subset of m)."""
    out = np.array(mem, dtype=bool, copy=True)
    for i in range(n):
        v = out.reshape(-1, 2, 1 << i)
        v[:, 1, :] |= v[:, 0, :]
    return out


def zeta_(arr: np.ndarray, n: int) -> None:
    """In-place sum over subsets along the last axis."""
    lead = arr.shape[:-1]
    for i in range(n):
        v = arr.reshape(*lead, -1, 2, 1 << i)
        v[..., 1, :] += v[..., 0, :]


def mobius_(arr: np.ndarray, n: int) -> None:
    """In-place inverse of :func:`zeta_`."""
    lead = arr.shape[:-1]
    for i in range(n):
        v = arr.reshape(*lead, -1, 2, 1 << i)
        v[..., 1, :] -= v[..., 0, :]


def _ranked_zeta(mem: np.ndarray, pc: np.ndarray, n: int, ranks: np.ndarray) -> np.ndarray:
    out = np.zeros((len(ranks), mem.size), dtype=np.int64)
    for row, k in enumerate(ranks):
        out[row] = mem & (pc == k)
    zeta_(out, n)
    return out


def box_fast(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    """Boolean subset convolution: out[m] iff m = x | y, x & y = 0, a[x], b[y].

    Ranked zeta transforms, pointwise rank convolution, then one Mobius
    inversion per output rank. Counts stay exact in int64: every
    intermediate is a count of rank-consistent pairs, bounded by (n+1)*4**n.
    """
    size = 1 << n
    out = np.zeros(size, dtype=bool)
    if not a.any() or not b.any():
        return out
    pc = popcounts(n)
    ra = np.unique(pc[a])
    rb = np.unique(pc[b])
    za = _ranked_zeta(a, pc, n, ra)
    zb = _ranked_zeta(b, pc, n, rb)
    h = np.empty(size, dtype=np.int64)
    for k in range(int(ra[0] + rb[0]), min(n, int(ra[-1] + rb[-1])) + 1):
        h.fill(0)
        hit = False
        for i, j in enumerate(ra):
            rest = k - j
            pos = np.searchsorted(rb, rest)
            if pos < len(rb) and rb[pos] == rest:
                h += za[i] * zb[pos]
                hit = True
        if not hit:
            continue
        mobius_(h, n)
        layer = pc == k
        out[layer] = h[layer] > 0
    return out


def box_direct(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    """Same product by enumerating member pairs. Quadratic in family sizes."""
    out = np.zeros(1 << n, dtype=bool)
    bs = np.flatnonzero(b)
    if bs.size == 0:
        return out
    for x in np.flatnonzero(a):
        ys = bs[(bs & x) == 0]
        out[ys | x] = True
    return out
