"""Permutation patterns: parity, occurrence counting, the block decomposition
driving the avoidance recursions, and the brute-force enumeration oracle.

Permutations are tuples of the integers 1..n in one-line notation.  The empty
permutation is ``()``.  Parity is the parity of the inversion count, so the
empty permutation and all identity permutations are even.

The oracle answers counting questions about 132-avoiding permutations by
explicit enumeration (vectorized internally; see ``_batch``).  It is the
ground truth the generating-function engine is tested against, so nothing in
here knows anything about generating functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

Perm = tuple        # tuple[int, ...] in one-line notation

ORACLE_BOUND = 14   # enumeration refused above this length unless overridden
PATTERN_BOUND = 9   # longest pattern the CLI accepts

_P132 = (1, 3, 2)


def is_permutation(entries: Sequence[int]) -> bool:
    """True when ``entries`` is a permutation of 1..n in one-line notation.

    >>> is_permutation((2, 1, 3))
    True
    >>> is_permutation((1, 1, 2))
    False
    """
    return sorted(entries) == list(range(1, len(entries) + 1))


def validated(entries: Sequence[int]) -> Perm:
    p = tuple(int(v) for v in entries)
    if not is_permutation(p):
        raise ValueError(f"not a permutation in one-line notation: {entries!r}")
    return p


def parse_pattern(text: str) -> Perm:
    """Parse '2,1,3' or compact '213' (compact form only for entries <= 9).

    >>> parse_pattern("2,1,3")
    (2, 1, 3)
    >>> parse_pattern("213")
    (2, 1, 3)
    """
    text = text.strip()
    if not text:
        raise ValueError("empty pattern string")
    if "," in text:
        parts = [s.strip() for s in text.split(",")]
        perm = tuple(int(s) for s in parts)
    else:
        if not text.isdigit():
            raise ValueError(f"cannot parse pattern {text!r}")
        perm = tuple(int(ch) for ch in text)
    return validated(perm)


def format_pattern(p: Perm) -> str:
    return ",".join(str(v) for v in p)


def inversions(p: Perm) -> int:
    """Number of inversions (pairs i < j with p_i > p_j).

    >>> inversions((4, 1, 3, 2))
    4
    """
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def parity(p: Perm) -> int:
    """0 for even, 1 for odd (parity of the inversion count)."""
    return inversions(p) % 2


def sign(p: Perm) -> str:
    """'even' or 'odd'.

    >>> sign((4, 1, 3, 2))
    'even'
    >>> sign(())
    'even'
    """
    return "odd" if parity(p) else "even"


def normalize(segment: Sequence[int]) -> Perm:
    """Pattern of a sequence of distinct integers: replace each entry by its
    rank (1 = smallest).

    >>> normalize((5, 9, 8))
    (1, 3, 2)
    >>> normalize(())
    ()
    """
    order = sorted(segment)
    rank = {v: i + 1 for i, v in enumerate(order)}
    return tuple(rank[v] for v in segment)


def occurrences(p: Perm, tau: Perm) -> int:
    """Number of subsequences of p whose pattern is tau.

    The empty pattern occurs exactly once in anything.

    >>> occurrences((5, 9, 8, 3, 7, 6, 4, 1, 2), (1, 4, 3, 2))
    5
    >>> occurrences((5, 9, 8, 3, 7, 6, 4, 1, 2), (1, 2, 3))
    0
    """
    k = len(tau)
    if k == 0:
        return 1
    n = len(p)
    if k > n:
        return 0

    def count(start: int, chosen: tuple) -> int:
        t = len(chosen)
        if t == k:
            return 1
        total = 0
        for i in range(start, n - (k - t) + 1):
            v = p[i]
            if all((chosen[s] < v) == (tau[s] < tau[t]) for s in range(t)):
                total += count(i + 1, chosen + (v,))
        return total

    return count(0, ())


def contains(p: Perm, tau: Perm) -> bool:
    """True when p has at least one occurrence of tau (early exit)."""
    k = len(tau)
    if k == 0:
        return True
    n = len(p)
    if k > n:
        return False

    def search(start: int, chosen: tuple) -> bool:
        t = len(chosen)
        if t == k:
            return True
        for i in range(start, n - (k - t) + 1):
            v = p[i]
            if all((chosen[s] < v) == (tau[s] < tau[t]) for s in range(t)):
                if search(i + 1, chosen + (v,)):
                    return True
        return False

    return search(0, ())


def avoids(p: Perm, tau: Perm) -> bool:
    return not contains(p, tau)


def rl_maxima(p: Perm) -> tuple:
    """Positions (0-based) of the right-to-left maxima: entries greater than
    everything to their right, reported left to right.

    >>> rl_maxima((4, 1, 3, 2))
    (0, 2, 3)
    """
    out = []
    best = 0
    for i in range(len(p) - 1, -1, -1):
        if p[i] > best:
            out.append(i)
            best = p[i]
    return tuple(reversed(out))


def statistic(p: Perm, which: str, j: Optional[int] = None) -> int:
    """Permutation statistics used by the distribution results.

    * ``'rlm'`` — number of right-to-left maxima.
    * ``'inc'`` — number of increasing subsequences of length ``j``.

    >>> statistic((4, 1, 3, 2), "rlm")
    3
    >>> statistic((2, 3, 1), "inc", j=2)
    1
    """
    if which == "rlm":
        return len(rl_maxima(p))
    if which == "inc":
        if j is None or j < 0:
            raise ValueError("statistic 'inc' needs a subsequence length j >= 0")
        if j == 0:
            return 1
        n = len(p)
        # f[t-1][i]: increasing subsequences of length t ending at position i
        prev = [1] * n
        for _ in range(2, j + 1):
            cur = [0] * n
            for i in range(n):
                cur[i] = sum(prev[h] for h in range(i) if p[h] < p[i])
            prev = cur
        return sum(prev)
    raise ValueError(f"unknown statistic {which!r}")


# ---------------------------------------------------------------------------
# Block decomposition along right-to-left maxima.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CanonicalDecomposition:
    """A 132-avoiding pattern cut at its right-to-left maxima.

    ``blocks`` is ((segment, maximum), ...) in left-to-right order, raw
    (unnormalized) values; ``r`` is the number of blocks minus one.  The
    derived prefix patterns run from index -1 (empty) through r, where
    prefix(0) is the first segment *alone* and prefix(i) for i >= 1 includes
    everything through the i-th maximum; suffix(i) runs from the i-th segment
    to the end, with suffix(r+1) empty.  All derived patterns are normalized.
    """

    tau: Perm
    blocks: tuple
    r: int
    prefixes: tuple = field(repr=False)   # indices -1..r, offset by 1
    suffixes: tuple = field(repr=False)   # indices 0..r+1

    def prefix(self, d: int) -> Perm:
        if not -1 <= d <= self.r:
            raise IndexError(f"prefix index {d} outside -1..{self.r}")
        return self.prefixes[d + 1]

    def suffix(self, d: int) -> Perm:
        if not 0 <= d <= self.r + 1:
            raise IndexError(f"suffix index {d} outside 0..{self.r + 1}")
        return self.suffixes[d]


def canonical_decomposition(tau: Sequence[int]) -> CanonicalDecomposition:
    """Cut a nonempty 132-avoiding pattern at its right-to-left maxima.

    >>> d = canonical_decomposition((3, 4, 1, 2))
    >>> d.blocks
    (((3,), 4), ((1,), 2))
    >>> d.r, d.prefix(0), d.suffix(1)
    (1, (1,), (1, 2))
    """
    tau = validated(tau)
    if not tau:
        raise ValueError("the empty pattern has no block decomposition")
    if contains(tau, _P132):
        raise ValueError(f"{tau!r} does not avoid (1, 3, 2)")
    maxima = rl_maxima(tau)
    blocks = []
    start = 0
    for pos in maxima:
        blocks.append((tau[start:pos], tau[pos]))
        start = pos + 1
    r = len(blocks) - 1
    prefixes = [()]                       # index -1
    prefixes.append(normalize(blocks[0][0]))      # index 0: segment alone
    flat: list = []
    for i, (seg, m) in enumerate(blocks):
        flat.extend(seg)
        flat.append(m)
        if i >= 1:
            prefixes.append(normalize(flat))
    suffixes = []
    tail: list = []
    for seg, m in reversed(blocks):
        tail = list(seg) + [m] + tail
        suffixes.append(normalize(tail))
    suffixes.reverse()
    suffixes.append(())                   # index r+1
    return CanonicalDecomposition(tau=tau, blocks=tuple(blocks), r=r,
                                  prefixes=tuple(prefixes),
                                  suffixes=tuple(suffixes))


# ---------------------------------------------------------------------------
# Enumeration.
# ---------------------------------------------------------------------------


def generate_132_avoiders(n: int) -> Iterator[Perm]:
    """Stream all 132-avoiding permutations of length n.

    Every such permutation splits at the position of n: entries before n all
    exceed entries after n (else a 132 forms through n), and both sides are
    themselves 132-avoiding on their value ranges.

    >>> sorted(generate_132_avoiders(3))
    [(1, 2, 3), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]
    >>> list(generate_132_avoiders(0))
    [()]
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n == 0:
        yield ()
        return
    for j in range(n):  # j entries before the maximum
        for beta in generate_132_avoiders(j):
            left = tuple(b + (n - 1 - j) for b in beta) + (n,)
            for gamma in generate_132_avoiders(n - 1 - j):
                yield left + gamma


# ---------------------------------------------------------------------------
# Oracle queries.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ContainSpec:
    """Require exactly ``count`` occurrences of ``pattern``."""

    pattern: Perm
    count: int


@dataclass(frozen=True)
class OracleQuery:
    """A counting question about 132-avoiding permutations of length n.

    ``avoid`` lists additional forbidden patterns (132 itself is always
    implied).  ``contain`` lists exact-occurrence requirements.  ``statistic``
    optionally requests a distribution: 'rlm', 'inc' (with ``j``), or 'occ'
    (occurrences of ``stat_pattern``).
    """

    n: int
    avoid: tuple = ()
    contain: tuple = ()
    parity: str = "both"            # 'even' | 'odd' | 'both'
    statistic: Optional[str] = None  # 'rlm' | 'inc' | 'occ'
    j: Optional[int] = None
    stat_pattern: Optional[Perm] = None


def oracle_count(query: OracleQuery, bound: int = ORACLE_BOUND) -> dict:
    """Answer an :class:`OracleQuery` by enumeration.

    Returns ``{"n", "even", "odd", "total"}``, plus ``"distribution"`` mapping
    statistic values to the same split when a statistic was requested.

    >>> oracle_count(OracleQuery(n=3, avoid=((1, 2, 3),)))["total"]
    4
    >>> oracle_count(OracleQuery(n=2, avoid=((1, 2),)))["even"]
    0
    >>> q = OracleQuery(n=3, contain=(ContainSpec((1, 2, 3), 1),))
    >>> oracle_count(q)["even"]
    1
    """
    from . import _batch

    if query.n < 0:
        raise ValueError("length must be nonnegative")
    if query.n > bound:
        raise ValueError(
            f"oracle length {query.n} exceeds bound {bound}; "
            "raise the bound explicitly to confirm the cost")
    if query.parity not in ("even", "odd", "both"):
        raise ValueError(f"bad parity selector {query.parity!r}")
    avoid = [validated(p) for p in query.avoid]
    for p in avoid:
        if not p:
            raise ValueError("cannot avoid the empty pattern")
    matrix, par = _batch.avoider_matrix(query.n)
    mask = _batch.ones_mask(len(par))
    for p in avoid:
        if p == _P132:
            continue
        mask &= ~_batch.contains_mask(matrix, p)
    for spec in query.contain:
        pat = validated(spec.pattern)
        if spec.count < 0:
            raise ValueError("occurrence count must be nonnegative")
        mask &= _batch.occurrence_counts(matrix, pat) == spec.count

    result = {"n": query.n}
    even_mask = mask & (par == 0)
    odd_mask = mask & (par == 1)
    result["even"] = int(even_mask.sum())
    result["odd"] = int(odd_mask.sum())
    result["total"] = result["even"] + result["odd"]

    if query.statistic is not None:
        if query.statistic == "rlm":
            values = _batch.rlm_vector(matrix)
        elif query.statistic == "inc":
            if query.j is None:
                raise ValueError("statistic 'inc' needs j")
            values = _batch.inc_counts(matrix, query.j)
        elif query.statistic == "occ":
            if query.stat_pattern is None:
                raise ValueError("statistic 'occ' needs stat_pattern")
            values = _batch.occurrence_counts(matrix, validated(query.stat_pattern))
        else:
            raise ValueError(f"unknown statistic {query.statistic!r}")
        dist = {}
        for value in sorted(set(values[mask].tolist())):
            sel = mask & (values == value)
            e = int((sel & (par == 0)).sum())
            o = int((sel & (par == 1)).sum())
            dist[int(value)] = {"even": e, "odd": o, "total": e + o}
        result["distribution"] = dist
    return result
