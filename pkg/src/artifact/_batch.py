"""Vectorized internals of the enumeration oracle.

Builds the full table of 132-avoiding permutations of length n as one int8
matrix (rows = permutations) together with their parities, then answers
containment / occurrence-count / statistic questions with column arithmetic.
Only the oracle front-end in :mod:`artifact.patterns` talks to this module.

The matrix is assembled by the same split used by the streaming generator:
everything before the entry n sits above everything after it, and the parity
of a row is parity(left) + parity(right) + (j+1)(n-1-j) mod 2, where j counts
the entries before n — placing n costs exactly that many inversions.
"""

from __future__ import annotations

from itertools import combinations, permutations

import numpy as np

_MATRIX_CACHE: dict = {}


def avoider_matrix(n: int):
    """(matrix, parity) for all 132-avoiders of length n, in a fixed
    deterministic order (split position ascending, left block fastest-last).

    matrix is int8 with values 1..n; parity is uint8 with 0 = even.
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    for m in range(n + 1):
        if m in _MATRIX_CACHE:
            continue
        if m == 0:
            _MATRIX_CACHE[0] = (np.zeros((1, 0), dtype=np.int8),
                                np.zeros(1, dtype=np.uint8))
            continue
        rows = []
        pars = []
        for j in range(m):
            left_m, left_p = _MATRIX_CACHE[j]
            right_m, right_p = _MATRIX_CACHE[m - 1 - j]
            nl, nr = left_m.shape[0], right_m.shape[0]
            left = np.repeat(left_m, nr, axis=0)
            if j:
                left = left + np.int8(m - 1 - j)
            mid = np.full((nl * nr, 1), m, dtype=np.int8)
            right = np.tile(right_m, (nl, 1))
            rows.append(np.hstack([left, mid, right]))
            cross = ((j + 1) * (m - 1 - j)) & 1
            pars.append((np.repeat(left_p, nr) + np.tile(right_p, nl) + cross) % 2)
        _MATRIX_CACHE[m] = (np.vstack(rows),
                            np.concatenate(pars).astype(np.uint8))
    return _MATRIX_CACHE[n]


def parity_counts(n: int):
    """(even, odd) counts over all 132-avoiders of length n."""
    _, par = avoider_matrix(n)
    even = int((par == 0).sum())
    return even, int(par.size) - even


def ones_mask(m: int):
    return np.ones(m, dtype=bool)


def contains_mask(matrix, pattern):
    """Boolean row mask: which rows contain the pattern as a subsequence."""
    rows, n = matrix.shape
    k = len(pattern)
    if k == 0:
        return np.ones(rows, dtype=bool)
    if k > n:
        return np.zeros(rows, dtype=bool)
    if k == 1:
        return np.ones(rows, dtype=bool)
    pairs = list(combinations(range(k), 2))
    want = [pattern[a] > pattern[b] for a, b in pairs]
    out = np.zeros(rows, dtype=bool)
    for cols in combinations(range(n), k):
        m = np.ones(rows, dtype=bool)
        for (a, b), w in zip(pairs, want):
            if w:
                m &= matrix[:, cols[a]] > matrix[:, cols[b]]
            else:
                m &= matrix[:, cols[a]] < matrix[:, cols[b]]
        out |= m
        if out.all():
            break
    return out


def occurrence_counts(matrix, pattern):
    """Per-row number of occurrences of the pattern as a subsequence."""
    rows, n = matrix.shape
    k = len(pattern)
    if k == 0:
        return np.ones(rows, dtype=np.int64)
    if k > n:
        return np.zeros(rows, dtype=np.int64)
    pairs = list(combinations(range(k), 2))
    want = [pattern[a] > pattern[b] for a, b in pairs]
    counts = np.zeros(rows, dtype=np.int64)
    for cols in combinations(range(n), k):
        m = np.ones(rows, dtype=bool)
        for (a, b), w in zip(pairs, want):
            if w:
                m &= matrix[:, cols[a]] > matrix[:, cols[b]]
            else:
                m &= matrix[:, cols[a]] < matrix[:, cols[b]]
        counts += m
    return counts


def inc_counts(matrix, j: int):
    """Per-row number of increasing subsequences of length j (exact int64)."""
    rows, n = matrix.shape
    if j < 0:
        raise ValueError("subsequence length must be nonnegative")
    if j == 0:
        return np.ones(rows, dtype=np.int64)
    if j > n:
        return np.zeros(rows, dtype=np.int64)
    out = np.empty(rows, dtype=np.int64)
    chunk = 1 << 18
    for lo in range(0, rows, chunk):
        block = matrix[lo:lo + chunk]
        f = np.ones(block.shape, dtype=np.int64)
        for _ in range(2, j + 1):
            g = np.zeros(block.shape, dtype=np.int64)
            for i in range(1, n):
                less = block[:, :i] < block[:, i:i + 1]
                g[:, i] = (f[:, :i] * less).sum(axis=1)
            f = g
        out[lo:lo + chunk] = f.sum(axis=1)
    return out


def rlm_vector(matrix):
    """Per-row count of right-to-left maxima."""
    rows, n = matrix.shape
    count = np.zeros(rows, dtype=np.int64)
    best = np.zeros(rows, dtype=matrix.dtype if n else np.int8)
    for i in range(n - 1, -1, -1):
        col = matrix[:, i]
        count += col > best
        best = np.maximum(best, col)
    return count


def containment_table(n: int, max_len: int):
    """(patterns, table, parity): for every 132-avoiding pattern of length
    1..max_len, a boolean column saying which length-n avoiders contain it.

    One pass per position subset classifies the subsequence's pattern by its
    inversion bitmask and scatters into the matching pattern column, so the
    cost is independent of the number of patterns.
    """
    from .patterns import generate_132_avoiders

    matrix, par = avoider_matrix(n)
    rows = matrix.shape[0]
    pattern_list = []
    for k in range(1, max_len + 1):
        pattern_list.extend(generate_132_avoiders(k))
    index = {p: i for i, p in enumerate(pattern_list)}
    total = len(pattern_list)
    table = np.zeros((rows, total + 1), dtype=bool)  # extra dump column
    flat = table.reshape(-1)
    base = np.arange(rows, dtype=np.int64) * (total + 1)
    for k in range(1, max_len + 1):
        if k > n:
            break
        pairs = list(combinations(range(k), 2))
        lut = np.full(1 << len(pairs), total, dtype=np.int64)
        for rho in permutations(range(1, k + 1)):
            pid = 0
            for t, (a, b) in enumerate(pairs):
                if rho[a] > rho[b]:
                    pid |= 1 << t
            if rho in index:
                lut[pid] = index[rho]
        for cols in combinations(range(n), k):
            idvec = np.zeros(rows, dtype=np.int64)
            for t, (a, b) in enumerate(pairs):
                idvec += (matrix[:, cols[a]] > matrix[:, cols[b]]) * (1 << t)
            flat[base + lut[idvec]] = True
    return pattern_list, table[:, :total], par
