# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled band scan; drop-in twin of _bandscan_py.emit_letters.

Same contract, same record layout; only the inner loops are C.  Keep the
two modules in lockstep (tests/test_kernels.py enforces equivalence).
"""

import numpy as np

IMPLEMENTATION = "cython"

cdef enum:
    RANK_C = 0
    RANK_B = 1
    RANK_D = 2


cdef inline Py_ssize_t count_lt(const int[::1] seq, long value) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = seq.shape[0], mid
    while lo < hi:
        mid = (lo + hi) // 2
        if seq[mid] < value:
            lo = mid + 1
        else:
            hi = mid
    return lo


cdef inline Py_ssize_t count_le(const int[::1] seq, long value) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = seq.shape[0], mid
    while lo < hi:
        mid = (lo + hi) // 2
        if seq[mid] <= value:
            lo = mid + 1
        else:
            hi = mid
    return lo


cdef inline long at(const int[::1] seq, Py_ssize_t t, long hi_sentinel) noexcept nogil:
    # 1-based access with sentinels 0 below and hi_sentinel above.
    if t <= 0:
        return 0
    if t > seq.shape[0]:
        return hi_sentinel
    return seq[t - 1]


def emit_letters(n_obj, m_obj):
    cdef const int[::1] n = n_obj
    cdef const int[::1] m = m_obj
    cdef Py_ssize_t K = n.shape[0], L = m.shape[0]
    cdef long hi = 0
    if K:
        hi = n[K - 1]
    if L and m[L - 1] > hi:
        hi = m[L - 1]
    hi += 2

    cdef Py_ssize_t cap = 2 * (K + L) + 8
    rank_arr = np.empty(cap, dtype=np.uint8)
    key2_arr = np.empty(cap, dtype=np.int64)
    tie2_arr = np.empty(cap, dtype=np.int64)
    jj_arr = np.empty(cap, dtype=np.int32)
    ii_arr = np.empty(cap, dtype=np.int32)
    cdef unsigned char[::1] rank = rank_arr
    cdef long long[::1] key2 = key2_arr
    cdef long long[::1] tie2 = tie2_arr
    cdef int[::1] jj = jj_arr
    cdef int[::1] ii = ii_arr

    cdef Py_ssize_t count = 0
    cdef Py_ssize_t i, j, c
    cdef long a, b, v

    with nogil:
        # Birth pairs, condition 1: lower run strictly inside an upper gap.
        for i in range(1, L, 2):
            a = m[i - 1]
            b = m[i]
            j = count_lt(n, a)
            if j % 2 == 0 and b < at(n, j + 1, hi):
                rank[count] = RANK_B; key2[count] = 2 * a; tie2[count] = 2 * b
                jj[count] = <int>j; ii[count] = <int>i; count += 1
                rank[count] = RANK_B; key2[count] = 2 * b; tie2[count] = 2 * a
                jj[count] = <int>j; ii[count] = <int>i; count += 1

        # Birth pairs, condition 2: lower gap inside an upper run (split).
        for i in range(0, L + 1, 2):
            a = at(m, i, hi)
            b = at(m, i + 1, hi)
            j = count_le(n, a)
            if j % 2 == 1 and b <= at(n, j + 1, hi):
                rank[count] = RANK_B; key2[count] = 2 * a; tie2[count] = 2 * b
                jj[count] = <int>j; ii[count] = <int>i; count += 1
                rank[count] = RANK_B; key2[count] = 2 * b; tie2[count] = 2 * a
                jj[count] = <int>j; ii[count] = <int>i; count += 1

        # Death pairs, condition 1: upper run strictly inside a lower gap.
        for j in range(1, K, 2):
            a = n[j - 1]
            b = n[j]
            i = count_lt(m, a)
            if i % 2 == 0 and b < at(m, i + 1, hi):
                rank[count] = RANK_D; key2[count] = 2 * a; tie2[count] = 2 * b
                jj[count] = <int>j; ii[count] = <int>i; count += 1
                rank[count] = RANK_D; key2[count] = 2 * b; tie2[count] = 2 * a
                jj[count] = <int>j; ii[count] = <int>i; count += 1

        # Death pairs, condition 2: upper gap inside a lower run (merge).
        for j in range(0, K + 1, 2):
            a = at(n, j, hi)
            b = at(n, j + 1, hi)
            i = count_le(m, a)
            if i % 2 == 1 and b <= at(m, i + 1, hi):
                rank[count] = RANK_D; key2[count] = 2 * a; tie2[count] = 2 * b
                jj[count] = <int>j; ii[count] = <int>i; count += 1
                rank[count] = RANK_D; key2[count] = 2 * b; tie2[count] = 2 * a
                jj[count] = <int>j; ii[count] = <int>i; count += 1

        # Crossings, clause 1: equal switch positions with even index sum.
        # The clauses are mutually exclusive per pairing (equality vs strict
        # order plus index parity), so no dedup set is needed here.
        i = 0
        j = 0
        while j < K and i < L:
            if n[j] < m[i]:
                j += 1
            elif n[j] > m[i]:
                i += 1
            else:
                if (j + i) % 2 == 0:
                    rank[count] = RANK_C; key2[count] = <long long>n[j] + m[i]
                    tie2[count] = 2 * <long long>n[j]
                    jj[count] = <int>(j + 1); ii[count] = <int>(i + 1); count += 1
                j += 1
                i += 1

        # Crossings, clause 2 (both odd): m_{i-1} < n_j < m_i <= n_{j+1}.
        for j in range(1, K + 1, 2):
            v = n[j - 1]
            c = count_lt(m, v)
            if count_le(m, v) == c and c % 2 == 0 and c < L and m[c] <= at(n, j + 1, hi):
                rank[count] = RANK_C; key2[count] = v + <long long>m[c]
                tie2[count] = 2 * v
                jj[count] = <int>j; ii[count] = <int>(c + 1); count += 1

        # Crossings, clause 2, second disjunct: n_{j-1} < m_i < n_j <= m_{i+1}.
        for i in range(1, L + 1, 2):
            v = m[i - 1]
            c = count_lt(n, v)
            if count_le(n, v) == c and c % 2 == 0 and c < K and n[c] <= at(m, i + 1, hi):
                rank[count] = RANK_C; key2[count] = <long long>n[c] + v
                tie2[count] = 2 * <long long>n[c]
                jj[count] = <int>(c + 1); ii[count] = <int>i; count += 1

        # Crossings, clause 3 (both even): m_{i-1} <= n_j < m_i < n_{j+1}.
        for j in range(2, K + 1, 2):
            v = n[j - 1]
            c = count_le(m, v)
            if c % 2 == 1 and c < L and m[c] < at(n, j + 1, hi):
                rank[count] = RANK_C; key2[count] = v + <long long>m[c]
                tie2[count] = 2 * v
                jj[count] = <int>j; ii[count] = <int>(c + 1); count += 1

        # Crossings, clause 3, second disjunct: n_{j-1} <= m_i < n_j < m_{i+1}.
        for i in range(2, L + 1, 2):
            v = m[i - 1]
            c = count_le(n, v)
            if c % 2 == 1 and c < K and n[c] < at(m, i + 1, hi):
                rank[count] = RANK_C; key2[count] = <long long>n[c] + v
                tie2[count] = 2 * <long long>n[c]
                jj[count] = <int>(c + 1); ii[count] = <int>i; count += 1

    return (
        rank_arr[:count],
        key2_arr[:count],
        tie2_arr[:count],
        jj_arr[:count],
        ii_arr[:count],
    )
