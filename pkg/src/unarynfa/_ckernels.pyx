# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. Mirrors ``_kernels_py`` call for call."""

from libc.string cimport memset


def accepting_lengths(int n, const int[:] indptr, const int[:] indices,
                      int initial, const unsigned char[:] finals, Py_ssize_t upto):
    cdef bytearray out = bytearray(upto + 1)
    cdef unsigned char[:] res = out
    cdef bytearray buf_a = bytearray(n)
    cdef bytearray buf_b = bytearray(n)
    cdef unsigned char[:] cur = buf_a
    cdef unsigned char[:] nxt = buf_b
    cdef unsigned char[:] tmp
    cdef Py_ssize_t x
    cdef int u, k, hit, alive
    cur[initial] = 1
    for x in range(upto + 1):
        hit = 0
        for u in range(n):
            if cur[u] and finals[u]:
                hit = 1
                break
        res[x] = hit
        if x == upto:
            break
        memset(&nxt[0], 0, n)
        alive = 0
        for u in range(n):
            if cur[u]:
                for k in range(indptr[u], indptr[u + 1]):
                    nxt[indices[k]] = 1
                    alive = 1
        if not alive:
            break
        tmp = cur
        cur = nxt
        nxt = tmp
    return out


def closed_walk_lengths(int n, const unsigned char[:] adj, int maxlen):
    cdef bytearray buf_p = bytearray(adj)
    cdef bytearray buf_q = bytearray(n * n)
    cdef unsigned char[:] power = buf_p
    cdef unsigned char[:] nxt = buf_q
    cdef unsigned char[:] tmp
    cdef int length, i, j, k, diag
    found = []
    for length in range(1, maxlen + 1):
        diag = 0
        for i in range(n):
            if power[i * n + i]:
                diag = 1
                break
        if diag:
            found.append(length)
        if length == maxlen:
            break
        memset(&nxt[0], 0, n * n)
        for i in range(n):
            for k in range(n):
                if power[i * n + k]:
                    for j in range(n):
                        if adj[k * n + j]:
                            nxt[i * n + j] = 1
        tmp = power
        power = nxt
        nxt = tmp
    return found
