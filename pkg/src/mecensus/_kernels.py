"""Hot inner loop: acyclic orientations of one skeleton, coded by immoralities.

The kernel walks a depth-first tree over edge directions, pruning any
assignment u->v where v already reaches u, and emits one 128-bit
immorality code per surviving complete orientation.  It is written in
numba-compatible numpy and compiled with @njit when available; setting
MECENSUS_NUMBA=0 (or installing without numba) runs the identical source
as plain Python.  benchmarks/bench_kernels.py compares the two paths.
"""

from __future__ import annotations

import os

import numpy as np


def _numba_requested() -> bool:
    flag = os.environ.get("MECENSUS_NUMBA", "1").strip().lower()
    return flag not in ("0", "false", "no", "off")


def _enumerate_codes(n, eu, ev, tstart, tvc, tother, twant, twant_other):
    """Collect the class code of every acyclic orientation.

    eu, ev: edge endpoints (0-based, eu < ev), in assignment order.
    tstart[k]..tstart[k+1] index the immorality sites whose second edge is
    edge k; site t needs edge k directed twant[t] and edge tother[t]
    directed twant_other[t] (1 = low to high).  Returns (hi, lo, count):
    two uint64 halves of each code, sites 0..63 in lo.
    """
    E = eu.shape[0]
    one = np.uint64(1)

    cap = 1024
    out_hi = np.empty(cap, np.uint64)
    out_lo = np.empty(cap, np.uint64)
    cnt = 0

    # reach[d, w]: vertices reachable from w after the first d assignments
    reach = np.zeros((E + 1, n), np.uint64)
    for w in range(n):
        reach[0, w] = one << np.uint64(w)
    dirs = np.zeros(E + 1, np.int64)
    state = np.zeros(E + 1, np.int64)
    code_hi = np.zeros(E + 1, np.uint64)
    code_lo = np.zeros(E + 1, np.uint64)

    d = 0
    while d >= 0:
        if d == E:
            if cnt == cap:
                cap = cap * 2
                grown_hi = np.empty(cap, np.uint64)
                grown_lo = np.empty(cap, np.uint64)
                grown_hi[:cnt] = out_hi[:cnt]
                grown_lo[:cnt] = out_lo[:cnt]
                out_hi = grown_hi
                out_lo = grown_lo
            out_hi[cnt] = code_hi[E]
            out_lo[cnt] = code_lo[E]
            cnt += 1
            d -= 1
            continue
        s = state[d]
        if s >= 2:
            state[d] = 0
            d -= 1
            continue
        state[d] = s + 1
        bit = 1 - s  # low-to-high first
        if bit == 1:
            u = eu[d]
            v = ev[d]
        else:
            u = ev[d]
            v = eu[d]
        if (reach[d, v] >> np.uint64(u)) & one:
            continue  # v reaches u: directing u->v closes a cycle
        ubit = one << np.uint64(u)
        mask_v = reach[d, v]
        for w in range(n):
            if reach[d, w] & ubit:
                reach[d + 1, w] = reach[d, w] | mask_v
            else:
                reach[d + 1, w] = reach[d, w]
        dirs[d] = bit
        hi = code_hi[d]
        lo = code_lo[d]
        for t in range(tstart[d], tstart[d + 1]):
            if bit == twant[t] and dirs[tother[t]] == twant_other[t]:
                site = tvc[t]
                if site < 64:
                    lo |= one << np.uint64(site)
                else:
                    hi |= one << np.uint64(site - 64)
        code_hi[d + 1] = hi
        code_lo[d + 1] = lo
        d += 1

    return out_hi, out_lo, cnt


enumerate_codes_python = _enumerate_codes
enumerate_codes_compiled = None
try:
    from numba import njit
except ImportError:
    njit = None
else:
    enumerate_codes_compiled = njit(cache=True)(_enumerate_codes)

USE_NUMBA = enumerate_codes_compiled is not None and _numba_requested()
enumerate_codes = enumerate_codes_compiled if USE_NUMBA else enumerate_codes_python


def backend_name() -> str:
    return "numba" if USE_NUMBA else "python"
