"""Pure-Python band scan: letters of the band between two adjacent rows.

Given the switching sequences n (upper row) and m (lower row), emits one
record per band letter.  Letter kinds are encoded as small ranks so that
the rank doubles as the final sort tie-break: 0 = C, 1 = B, 2 = D.

Out-of-range switch indices read as sentinels: 0 below the first entry and
max(entries)+2 above the last, which is equivalent to all-white surroundings
and makes every condition total, including empty rows.

The compiled twin in _bandscan.pyx implements the identical contract; a
randomized equivalence test keeps the two in lockstep.
"""

from bisect import bisect_left, bisect_right

import numpy as np

IMPLEMENTATION = "python"

RANK_C = 0
RANK_B = 1
RANK_D = 2


def emit_letters(n, m):
    """Unsorted letter records for one band.

    n, m: strictly increasing even-length switching sequences (any int
    sequence).  Returns five parallel numpy arrays:

      rank  uint8  kind rank (0=C, 1=B, 2=D)
      key2  int64  2x the letter sort key in column units
      tie2  int64  2x the opposite-end tie-break coordinate
      jj    int32  1-based defining switch index into n (0 when sentinel)
      ii    int32  1-based defining switch index into m
    """
    n = [int(v) for v in n]
    m = [int(v) for v in m]
    K = len(n)
    L = len(m)
    hi = max(n[-1] if K else 0, m[-1] if L else 0) + 2

    def nv(t):
        if t <= 0:
            return 0
        if t > K:
            return hi
        return n[t - 1]

    def mv(t):
        if t <= 0:
            return 0
        if t > L:
            return hi
        return m[t - 1]

    out = []

    # Birth pairs, condition 1: lower run (m_i, m_{i+1}), i odd, strictly
    # inside the upper white gap (n_j, n_{j+1}), j even.
    for i in range(1, L, 2):
        a, b = m[i - 1], m[i]
        j = bisect_left(n, a)
        if j % 2 == 0 and b < nv(j + 1):
            out.append((RANK_B, 2 * a, 2 * b, j, i))
            out.append((RANK_B, 2 * b, 2 * a, j, i))

    # Birth pairs, condition 2: lower white gap (m_i, m_{i+1}), i even,
    # inside the upper black run (n_j, n_{j+1}), j odd (a run splits in two).
    for i in range(0, L + 1, 2):
        a, b = mv(i), mv(i + 1)
        j = bisect_right(n, a)
        if j % 2 == 1 and b <= nv(j + 1):
            out.append((RANK_B, 2 * a, 2 * b, j, i))
            out.append((RANK_B, 2 * b, 2 * a, j, i))

    # Death pairs, condition 1: upper run (n_j, n_{j+1}), j odd, strictly
    # inside the lower white gap (m_i, m_{i+1}), i even.
    for j in range(1, K, 2):
        a, b = n[j - 1], n[j]
        i = bisect_left(m, a)
        if i % 2 == 0 and b < mv(i + 1):
            out.append((RANK_D, 2 * a, 2 * b, j, i))
            out.append((RANK_D, 2 * b, 2 * a, j, i))

    # Death pairs, condition 2: upper white gap (n_j, n_{j+1}), j even,
    # inside the lower black run (m_i, m_{i+1}), i odd (two runs merge).
    for j in range(0, K + 1, 2):
        a, b = nv(j), nv(j + 1)
        i = bisect_right(m, a)
        if i % 2 == 1 and b <= mv(i + 1):
            out.append((RANK_D, 2 * a, 2 * b, j, i))
            out.append((RANK_D, 2 * b, 2 * a, j, i))

    # Crossings.  A single (n_j, m_i) pairing yields exactly one letter even
    # when several clauses would accept it, hence the dedup set.
    seen = set()

    def emit_c(nval, mval, j, i):
        if (j, i) in seen:
            return
        seen.add((j, i))
        out.append((RANK_C, nval + mval, 2 * nval, j, i))

    # Clause 1: equal switch positions with even index sum.
    j = i = 0
    while j < K and i < L:
        if n[j] < m[i]:
            j += 1
        elif n[j] > m[i]:
            i += 1
        else:
            if (j + i) % 2 == 0:  # 1-based indices are j+1 and i+1
                emit_c(n[j], m[i], j + 1, i + 1)
            j += 1
            i += 1

    # Clause 2 (i odd, j odd), first disjunct: m_{i-1} < n_j < m_i <= n_{j+1}.
    for j in range(1, K + 1, 2):
        v = n[j - 1]
        c = bisect_left(m, v)
        if bisect_right(m, v) == c and c % 2 == 0 and c < L and m[c] <= nv(j + 1):
            emit_c(v, m[c], j, c + 1)

    # Clause 2, second disjunct: n_{j-1} < m_i < n_j <= m_{i+1}.
    for i in range(1, L + 1, 2):
        v = m[i - 1]
        c = bisect_left(n, v)
        if bisect_right(n, v) == c and c % 2 == 0 and c < K and n[c] <= mv(i + 1):
            emit_c(n[c], v, c + 1, i)

    # Clause 3 (i even, j even), first disjunct: m_{i-1} <= n_j < m_i < n_{j+1}.
    for j in range(2, K + 1, 2):
        v = n[j - 1]
        c = bisect_right(m, v)
        if c % 2 == 1 and c < L and m[c] < nv(j + 1):
            emit_c(v, m[c], j, c + 1)

    # Clause 3, second disjunct: n_{j-1} <= m_i < n_j < m_{i+1}.
    for i in range(2, L + 1, 2):
        v = m[i - 1]
        c = bisect_right(n, v)
        if c % 2 == 1 and c < K and n[c] < mv(i + 1):
            emit_c(n[c], v, c + 1, i)

    if not out:
        return (
            np.empty(0, dtype=np.uint8),
            np.empty(0, dtype=np.int64),
            np.empty(0, dtype=np.int64),
            np.empty(0, dtype=np.int32),
            np.empty(0, dtype=np.int32),
        )
    rank, key2, tie2, jj, ii = zip(*out)
    return (
        np.asarray(rank, dtype=np.uint8),
        np.asarray(key2, dtype=np.int64),
        np.asarray(tie2, dtype=np.int64),
        np.asarray(jj, dtype=np.int32),
        np.asarray(ii, dtype=np.int32),
    )
