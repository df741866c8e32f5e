# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled compute kernels.

Twin of coprobber._kernels_py with identical semantics; that module's
docstrings are the contract.  Results are bit-identical between the two.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

import numpy as np

BACKEND_NAME = "cython"


def solve_rank_table(int n, int k, int[::1] indptr, int[::1] nbrs,
                     int[::1] cfg, long long[::1] binom, long long m_configs):
    cdef long long M = m_configs
    cdef long long total = M * n * 2
    cdef int bcols = k + 1

    rank_arr = np.full(total, -1, dtype=np.int32)
    cnt_arr = np.zeros(M * n, dtype=np.int32)
    queue_arr = np.zeros(total, dtype=np.int64)
    cdef int[::1] rank = rank_arr
    cdef int[::1] cnt = cnt_arr
    cdef long long[::1] queue = queue_arr

    cdef long long cfgi, qh, qt, s, ps, rem, prank, cbase, cfg_base
    cdef int j, t, r, r2, rho, turn, x, prev, base_j, deg_j

    for cfgi in range(M):
        cfg_base = cfgi * n
        for r in range(n):
            cnt[cfg_base + r] = indptr[r + 1] - indptr[r]

    qt = 0
    for cfgi in range(M):
        cbase = cfgi * k
        prev = -1
        for j in range(k):
            r = cfg[cbase + j]
            if r == prev:
                continue
            prev = r
            s = (cfgi * n + r) * 2
            rank[s] = 0
            queue[qt] = s
            qt += 1
            rank[s + 1] = 0
            queue[qt] = s + 1
            qt += 1

    cdef int *idx = <int *> malloc(k * sizeof(int))
    cdef int *sorted_buf = <int *> malloc(k * sizeof(int))
    if idx == NULL or sorted_buf == NULL:
        if idx != NULL:
            free(idx)
        if sorted_buf != NULL:
            free(sorted_buf)
        raise MemoryError()

    try:
        qh = 0
        while qh < qt:
            s = queue[qh]
            qh += 1
            rho = rank[s]
            turn = <int> (s & 1)
            rem = s >> 1
            r = <int> (rem % n)
            cfgi = rem // n
            if turn == 1:
                cbase = cfgi * k
                for j in range(k):
                    idx[j] = 0
                while True:
                    for j in range(k):
                        x = nbrs[indptr[cfg[cbase + j]] + idx[j]]
                        t = j
                        while t > 0 and sorted_buf[t - 1] > x:
                            sorted_buf[t] = sorted_buf[t - 1]
                            t -= 1
                        sorted_buf[t] = x
                    prank = 0
                    for j in range(k):
                        prank += binom[(sorted_buf[j] + j) * bcols + j + 1]
                    ps = (prank * n + r) * 2
                    if rank[ps] < 0:
                        rank[ps] = rho + 1
                        queue[qt] = ps
                        qt += 1
                    j = 0
                    while j < k:
                        idx[j] += 1
                        base_j = cfg[cbase + j]
                        deg_j = indptr[base_j + 1] - indptr[base_j]
                        if idx[j] < deg_j:
                            break
                        idx[j] = 0
                        j += 1
                    if j == k:
                        break
            else:
                cfg_base = cfgi * n
                for t in range(indptr[r], indptr[r + 1]):
                    r2 = nbrs[t]
                    ps = (cfg_base + r2) * 2 + 1
                    if rank[ps] < 0:
                        cnt[cfg_base + r2] -= 1
                        if cnt[cfg_base + r2] == 0:
                            rank[ps] = rho + 1
                            queue[qt] = ps
                            qt += 1
    finally:
        free(idx)
        free(sorted_buf)

    return rank_arr


def face_count(int n, int n_edges, int[::1] eu, int[::1] ev, int[::1] sig,
               int[::1] rot_flat, int[::1] rot_ptr, int[::1] pos_u,
               int[::1] pos_v, unsigned char[::1] visited):
    cdef int v, slot, start, e, deg, slot2, f, ndir, head, bit, direction
    cdef long long s0, s, nstates
    cdef long long orbits = 0

    for v in range(n):
        start = rot_ptr[v]
        for slot in range(start, rot_ptr[v + 1]):
            e = rot_flat[slot]
            if eu[e] == v:
                pos_u[e] = slot - start
            else:
                pos_v[e] = slot - start

    nstates = 4 * n_edges
    memset(&visited[0], 0, nstates)

    for s0 in range(nstates):
        if visited[s0]:
            continue
        orbits += 1
        s = s0
        while not visited[s]:
            visited[s] = 1
            bit = <int> (s & 1)
            direction = <int> ((s >> 1) & 1)
            e = <int> (s >> 2)
            if direction == 0:
                head = ev[e]
                slot = pos_v[e]
            else:
                head = eu[e]
                slot = pos_u[e]
            if sig[e] < 0:
                bit ^= 1
            start = rot_ptr[head]
            deg = rot_ptr[head + 1] - start
            if bit:
                slot2 = slot + 1
                if slot2 == deg:
                    slot2 = 0
            else:
                slot2 = slot - 1
                if slot2 < 0:
                    slot2 = deg - 1
            f = rot_flat[start + slot2]
            ndir = 0 if eu[f] == head else 1
            s = (<long long> f << 2) | (ndir << 1) | bit
    return <long long> (orbits // 2)
