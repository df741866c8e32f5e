"""Pure-Python compute kernels.

Fallback twin of the compiled extension module `coprobber._kernels`; both
expose the same two functions with identical semantics and bit-identical
results.  The compiled module is preferred at import time when available.

solve_rank_table runs retrograde analysis over the full cops-and-robber state
space.  States are indexed ((config * n + robber) * 2 + turn) where config is
the colex rank of the sorted cop multiset, turn 0 means cops move next and
turn 1 means the robber moves next.  A state's rank is the number of
half-moves to capture under optimal play; -1 marks states the robber wins.

face_count traces the faces of a signed rotation system.  Trace states are
(edge, direction, orientation bit); a negative edge signature flips the bit,
and the bit decides whether the walk leaves along the successor or the
predecessor in the arrival vertex's rotation.  Every face contributes exactly
two orbits (its two lifts in the orientable double cover), so the number of
faces is half the number of orbits.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def solve_rank_table(n, k, indptr_a, nbrs_a, cfg_a, binom_a, m_configs):
    """Classify every game state; see module docstring for the encoding.

    indptr_a/nbrs_a: CSR of sorted closed neighborhoods.
    cfg_a: flat (M*k) sorted cop tuples in colex order.
    binom_a: flat ((n+k) x (k+1)) binomial table, row-major.
    Returns a numpy int32 array of length M*n*2.
    """
    indptr = indptr_a.tolist()
    nbrs = nbrs_a.tolist()
    cfg = cfg_a.tolist()
    binom = binom_a.tolist()
    bcols = k + 1
    M = m_configs
    total = M * n * 2

    rank = [-1] * total
    cnt = [0] * (M * n)
    for cfgi in range(M):
        base = cfgi * n
        for r in range(n):
            cnt[base + r] = indptr[r + 1] - indptr[r]

    queue = [0] * total
    qt = 0

    # seed: every state whose cop multiset contains the robber is a capture
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

    idx = [0] * k
    sorted_buf = [0] * k

    qh = 0
    while qh < qt:
        s = queue[qh]
        qh += 1
        rho = rank[s]
        turn = s & 1
        rem = s >> 1
        r = rem % n
        cfgi = rem // n
        if turn == 1:
            # cop-turn predecessors: every multiset that can slide onto this one
            cbase = cfgi * k
            for j in range(k):
                idx[j] = 0
            while True:
                for j in range(k):
                    x = nbrs[indptr[cfg[cbase + j]] + idx[j]]
                    # insertion into sorted_buf
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
                    if idx[j] < indptr[base_j + 1] - indptr[base_j]:
                        break
                    idx[j] = 0
                    j += 1
                if j == k:
                    break
        else:
            # robber-turn predecessors: robber could have been at any closed
            # neighbor; it wins unless every one of its moves is losing
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

    return np.array(rank, dtype=np.int32)


def face_count(n, n_edges, eu_a, ev_a, sig_a, rot_flat_a, rot_ptr_a, pos_u_a, pos_v_a, visited_a):
    """Number of faces of a signed rotation system.

    eu/ev: edge endpoints; sig: +1/-1 per edge; rot_flat/rot_ptr: CSR of the
    per-vertex cyclic edge orders.  pos_u, pos_v and visited are scratch
    buffers owned by the caller (contents ignored and overwritten).
    """
    eu = eu_a.tolist()
    ev = ev_a.tolist()
    sig = sig_a.tolist()
    rot_flat = rot_flat_a.tolist()
    rot_ptr = rot_ptr_a.tolist()

    pos_u = [0] * n_edges
    pos_v = [0] * n_edges
    for v in range(n):
        start = rot_ptr[v]
        for slot in range(start, rot_ptr[v + 1]):
            e = rot_flat[slot]
            if eu[e] == v:
                pos_u[e] = slot - start
            else:
                pos_v[e] = slot - start

    nstates = 4 * n_edges
    visited = [False] * nstates
    orbits = 0
    for s0 in range(nstates):
        if visited[s0]:
            continue
        orbits += 1
        s = s0
        while not visited[s]:
            visited[s] = True
            bit = s & 1
            direction = (s >> 1) & 1
            e = s >> 2
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
            s = (f << 2) | (ndir << 1) | bit
    return orbits // 2
