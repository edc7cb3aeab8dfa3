"""Recursion engine and closed forms, refined by permutation sign.

Everything in this module produces generating functions over 132-avoiding
permutations split into even and odd by inversion count:

* ``gftriple`` solves the block recursions for an arbitrary extra forbidden
  pattern and returns the total/signed/even/odd generating functions as
  exact rational functions;
* the ``closed_*`` functions build the known closed forms (ratios of
  Chebyshev-type polynomials) for structured pattern families: increasing
  runs, an increasing run with its first two letters swapped, rotated
  blocks, and layered wedge shapes;
* ``contain_once_increasing`` / ``contain_r_increasing`` switch from
  avoidance to exact-occurrence constraints;
* ``rlm_distribution``, ``two_restrictions`` and ``Gk_xy`` cover the
  statistic-marking and double-restriction variants;
* ``verify_containment_equations`` replays the exact-occurrence recursions
  coefficientwise against brute-force enumeration.

The engine solves each recursion by affine extraction: the right-hand side
is affine in the unknown generating function (it is never multiplied by
itself), so evaluating the right-hand side at stand-in values 0 and 1
recovers the affine coefficients, and the unknown follows by linear algebra
over the rational-function field.
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .chebyshev import R, R_sq, _record, cleared_U, cleared_W, u_recip
from .exact_algebra import (
    BiSeries,
    POLY_ONE,
    POLY_X,
    Poly,
    RF_HALF,
    RF_ONE,
    RF_X,
    RF_ZERO,
    RatFunc,
    Series,
    catalan_series,
    series_expand,
    solve_linear_2x2,
    substitute,
)
from .patterns import (
    ORACLE_BOUND,
    Perm,
    avoids,
    canonical_decomposition,
    normalize,
    validated,
)

__all__ = [
    "ContainOnceGF",
    "GFTriple",
    "Gk_xy",
    "Gk_y1",
    "MemoTable",
    "TwoRestrictionPair",
    "F_tau",
    "M_tau",
    "closed_increasing",
    "closed_kd",
    "closed_mmc",
    "closed_unrestricted",
    "closed_213k",
    "contain_once_increasing",
    "contain_r_increasing",
    "gftriple",
    "head_swapped_pattern",
    "increasing_pattern",
    "kd_pattern",
    "odd_wedge",
    "rlm_distribution",
    "two_restrictions",
    "verify_containment_equations",
]


# ---------------------------------------------------------------------------
# Pattern constructors for the structured families.
# ---------------------------------------------------------------------------


def increasing_pattern(k: int) -> Perm:
    """The increasing run 1 2 ... k.

    >>> increasing_pattern(4)
    (1, 2, 3, 4)
    """
    return tuple(range(1, k + 1))


def head_swapped_pattern(k: int) -> Perm:
    """The increasing run of length k with its first two letters swapped.

    >>> head_swapped_pattern(5)
    (2, 1, 3, 4, 5)
    """
    if k < 2:
        raise ValueError("need length at least 2")
    return (2, 1) + tuple(range(3, k + 1))


def kd_pattern(k: int, d: int) -> Perm:
    """The rotated block (d+1, d+2, ..., k, 1, 2, ..., d).

    >>> kd_pattern(4, 1)
    (2, 3, 4, 1)
    >>> kd_pattern(5, 2)
    (3, 4, 5, 1, 2)
    """
    if k < 2 or not 1 <= d <= k - 1:
        raise ValueError("need k >= 2 and 1 <= d <= k-1")
    return tuple(range(d + 1, k + 1)) + tuple(range(1, d + 1))


# ---------------------------------------------------------------------------
# Result containers and the memo table.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GFTriple:
    """Avoidance generating functions: F total, M signed (even minus odd),
    E even, O odd; E = (F+M)/2 and O = (F-M)/2."""

    F: RatFunc
    M: RatFunc
    E: RatFunc
    O: RatFunc


@dataclass(frozen=True)
class ContainOnceGF:
    """Exactly-once containment generating functions: M1 signed, E1 even,
    O1 odd; E1 + O1 is the total count."""

    M1: RatFunc
    E1: RatFunc
    O1: RatFunc


@dataclass(frozen=True)
class TwoRestrictionPair:
    """Closed forms under a pair of simultaneous forbidden patterns.

    ``even_length`` forbids the increasing run of length 2k together with
    its head-swapped variant; ``odd_length`` is the same at length 2k+1.
    """

    even_length: GFTriple
    odd_length: GFTriple


class MemoTable:
    """Thread-safe insert-once cache keyed by normalized pattern.

    The first value stored for a key wins; later puts return the stored
    value unchanged, so entries are immutable once present.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._data: dict[Perm, GFTriple] = {}

    def get(self, key: Perm) -> Optional[GFTriple]:
        with self._lock:
            return self._data.get(key)

    def put(self, key: Perm, value: GFTriple) -> GFTriple:
        with self._lock:
            return self._data.setdefault(key, value)

    def __contains__(self, key: Perm) -> bool:
        with self._lock:
            return key in self._data

    def __len__(self) -> int:
        with self._lock:
            return len(self._data)


_TABLE = MemoTable()


def _triple_from_FM(F: RatFunc, M: RatFunc) -> GFTriple:
    return GFTriple(F=F, M=M, E=(F + M) * RF_HALF, O=(F - M) * RF_HALF)


# ---------------------------------------------------------------------------
# The recursion engine.
# ---------------------------------------------------------------------------


def _sub_F(p: Perm) -> RatFunc:
    """Total avoidance gf of a strictly shorter pattern; 0 for the empty
    pattern (nothing avoids the empty pattern)."""
    return RF_ZERO if not p else gftriple(p).F


def _sub_M(p: Perm) -> RatFunc:
    return RF_ZERO if not p else gftriple(p).M


def _solve_F(dec) -> RatFunc:
    """Solve the total-count recursion.

    Summing over blocks d, the right-hand side is
    1 + x * sum_d (F_prefix(d) - F_prefix(d-1)) * F_suffix(d),
    where prefix(r) (for r >= 1) and suffix(0) are the pattern itself, so
    the unknown appears affinely and never squared.
    """
    r = dec.r

    def rhs(u: RatFunc) -> RatFunc:
        total = RF_ZERO
        for d in range(r + 1):
            fp = u if (d == r and r >= 1) else _sub_F(dec.prefix(d))
            fpm = _sub_F(dec.prefix(d - 1))
            fs = u if d == 0 else _sub_F(dec.suffix(d))
            total = total + (fp - fpm) * fs
        return RF_ONE + RF_X * total

    g0 = rhs(RF_ZERO)
    slope = rhs(RF_ONE) - g0
    denom = RF_ONE - slope
    if denom.is_zero:
        raise ArithmeticError("singular recursion: the linear coefficient vanished")
    return g0 / denom


def _solve_M(tau: Perm, dec) -> RatFunc:
    """Solve the paired signed recursions.

    With A = M(x) and B = M(-x) as joint unknowns, the difference form says
    A - B = x * sum_d [dP(x) S(x) + dP(-x) S(-x)] and the sum form says
    A + B - 2 = x * sum_d [dP(x) S(-x) - dP(-x) S(x)], where dP is the
    prefix difference and S the suffix factor of block d.  Both right-hand
    sides are affine in (A, B); evaluating them at (0,0), (1,0), (0,1)
    recovers the coefficients and a 2x2 solve gives A and B.
    """
    r = dec.r

    def rhs_pair(A: RatFunc, B: RatFunc):
        s1 = RF_ZERO
        s2 = RF_ZERO
        for d in range(r + 1):
            if d == r and r >= 1:
                px, pn = A, B
            else:
                mp = _sub_M(dec.prefix(d))
                px, pn = mp, mp.subs_neg()
            mpm = _sub_M(dec.prefix(d - 1))
            pmx, pmn = mpm, mpm.subs_neg()
            if d == 0:
                sx, sn = A, B
            else:
                ms = _sub_M(dec.suffix(d))
                sx, sn = ms, ms.subs_neg()
            dx = px - pmx
            dn = pn - pmn
            s1 = s1 + dx * sx + dn * sn
            s2 = s2 + dx * sn - dn * sx
        return RF_X * s1, RF_X * s2

    c1, c2 = rhs_pair(RF_ZERO, RF_ZERO)
    a1, a2 = rhs_pair(RF_ONE, RF_ZERO)
    b1, b2 = rhs_pair(RF_ZERO, RF_ONE)
    alpha1, alpha2 = a1 - c1, a2 - c2
    beta1, beta2 = b1 - c1, b2 - c2
    A, B = solve_linear_2x2(
        RF_ONE - alpha1, -RF_ONE - beta1,
        RF_ONE - alpha2, RF_ONE - beta2,
        c1, c2 + 2,
    )
    if substitute(A, "neg") != B:
        raise ArithmeticError(
            "internal consistency: the paired solution is not the sign-flip "
            "of the primary solution")
    return A


def gftriple(tau) -> GFTriple:
    """Total/signed/even/odd avoidance generating functions for a nonempty
    132-avoiding pattern, computed by the block recursions and memoized.

    >>> gftriple((1, 2)).F
    RatFunc(num=(1,), den=(1, -1))
    >>> gftriple((1, 2)).M
    RatFunc(num=(1, 1), den=(1, 0, 1))
    >>> gftriple((1, 2, 3)).M
    RatFunc(num=(1, 1), den=(1,))
    """
    tau = validated(tau)
    if not tau:
        raise ValueError("the pattern must be nonempty")
    cached = _TABLE.get(tau)
    if cached is not None:
        return cached
    dec = canonical_decomposition(tau)
    F = _solve_F(dec)
    M = _solve_M(tau, dec)
    triple = _triple_from_FM(F, M)
    if triple.E + triple.O != F:
        raise ArithmeticError(
            "internal consistency: even and odd parts do not sum to the total")
    return _TABLE.put(tau, triple)


def F_tau(tau) -> RatFunc:
    """Generating function counting all 132-avoiders that also avoid tau.

    >>> F_tau((1, 2, 3))
    RatFunc(num=(1, -1), den=(1, -2))
    """
    return gftriple(tau).F


def M_tau(tau) -> RatFunc:
    """Signed (even minus odd) avoidance generating function.

    >>> M_tau((1,))
    RatFunc(num=(1,), den=(1,))
    """
    return gftriple(tau).M


# ---------------------------------------------------------------------------
# Closed forms: appended-maximum, unrestricted, increasing, swapped-head,
# rotated-block, wedge.
# ---------------------------------------------------------------------------


def closed_mmc(beta) -> RatFunc:
    """Signed gf for the pattern obtained from beta by appending a new
    maximum, written directly in terms of beta's signed gf:
    2 (1 + x Mb(-x)) / ((1 - x Mb(x))^2 + (1 + x Mb(-x))^2).

    >>> closed_mmc((1,))
    RatFunc(num=(1, 1), den=(1, 0, 1))
    >>> closed_mmc(()) == M_tau((1,))
    True
    """
    beta = validated(beta)
    if beta and not avoids(beta, (1, 3, 2)):
        raise ValueError("the base pattern must avoid 132")
    mb = RF_ZERO if not beta else gftriple(beta).M
    one_minus = RF_ONE - RF_X * mb
    one_plus = RF_ONE + RF_X * mb.subs_neg()
    return one_plus * 2 / (one_minus * one_minus + one_plus * one_plus)


def closed_unrestricted(order: int):
    """Truncated series (even, odd) counting all 132-avoiders by sign:
    E = (C(x) + 1)/2 + (x/2) C(x^2) and O = (C(x) - 1)/2 - (x/2) C(x^2),
    with C the Catalan series.  Not rational, hence series-only.

    >>> closed_unrestricted(4)[0].coeffs
    (1, 1, 1, 3, 7)
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    cat = catalan_series(order)
    half = Fraction(1, 2)
    bump = cat.subs_square().shift(1) * half
    even = (cat + 1) * half + bump
    odd = (cat - 1) * half - bump
    return even, odd


def closed_increasing(k: int) -> GFTriple:
    """Closed forms when the extra forbidden pattern is the increasing run
    of length k.  The signed part depends on the parity of k; the total is
    the k-th continued-fraction convergent.

    >>> closed_increasing(3).M
    RatFunc(num=(1, 1), den=(1,))
    >>> closed_increasing(1).M == M_tau((1,))
    True
    """
    if k < 1:
        raise ValueError("the pattern length must be at least 1")
    F = R(k)
    if k % 2:
        M = RF_ONE + RF_X * R_sq((k - 1) // 2)
    else:
        rm = R_sq(k // 2)
        M = (RF_ONE + RF_X * rm) * rm / (RF_ONE + RF_X * RF_X * rm * rm)
    return _triple_from_FM(F, M)


def _rf(*coeffs) -> RatFunc:
    return RatFunc(Poly(coeffs))


def closed_213k(k: int) -> GFTriple:
    """Closed forms when the extra forbidden pattern is the length-k
    increasing run with its first two letters swapped (2 1 3 4 ... k).
    Defined for k >= 3; built from reciprocal-argument Chebyshev ratios.

    >>> closed_213k(3).M == M_tau((2, 1, 3))
    True
    """
    if k < 3:
        raise ValueError("the pattern length must be at least 3")
    F = R(k)
    lead = _rf(1, 2)                      # 1 + 2x
    bump = _rf(-1, 2, 1) / _rf(1, 0, -3)  # (x^2 + 2x - 1) / (1 - 3x^2)
    two_x = _rf(0, 2)
    if k % 2 == 0:
        half_k = k // 2
        num = u_recip(2 * half_k - 1) - u_recip(2 * half_k) + bump
        den = (u_recip(2 * half_k) - two_x * u_recip(2 * half_k + 1)
               + _rf(0, 0, 0, 0, 4) / _rf(1, 0, -3))
    else:
        half_k = (k + 1) // 2
        num = u_recip(2 * half_k - 2) - u_recip(2 * half_k - 1) + bump
        den = (u_recip(2 * half_k - 1) - two_x * u_recip(2 * half_k)
               - two_x * _rf(1, 0, -5) / _rf(1, 0, -3))
    return _triple_from_FM(F, lead * num / den)


def _printed_kd_even_even(k: int, d: int) -> RatFunc:
    """Signed closed form for the rotated block with both parameters even;
    the inner convergents are taken at x^2."""
    m = (k - d - 2) // 2
    rm = R_sq(m)
    rd = R_sq(d // 2)
    x2 = RF_X * RF_X
    x3 = _rf(0, 0, 0, 1)
    num = (RF_ONE - x2 * (rm - rd)) * (RF_ONE - x2 * (rd + rm)
                                       - RF_X * (RF_ONE - x2 * rd * rm))
    den = RF_X + x3 * (RF_ONE + x2 * rd * rd) * (RF_ONE - rm * 2 + x2 * rm * rm)
    return RF_ONE / RF_X - num / den


def _printed_kd_even_odd(k: int, d: int) -> RatFunc:
    """As printed, the signed closed form for the rotated block with even
    length and odd cut.  Known to disagree with enumeration (the verifier
    reports the discrepancy); kept only so the comparison can be replayed.
    """
    m = (k - d - 1) // 2
    rm = R_sq(m)
    rd = R_sq((d - 1) // 2)
    x2 = RF_X * RF_X
    num = (RF_ONE - x2 * (rm + rd) + RF_X * (RF_ONE - x2 * rm * rd)) \
        * (RF_ONE + x2 * rm * rd)
    den = RF_ONE - x2 * (RF_ONE + rm * rm) * (RF_ONE + x2 * rm * rm)
    return num / den


def closed_kd(k: int, d: int) -> GFTriple:
    """Closed forms for the rotated-block pattern (d+1, ..., k, 1, ..., d),
    for k >= 2 and 1 <= d <= k-1.

    Odd k: the signed part is 1 + x R_{(k-1)/2}(x^2), independent of d.
    Even k, even d: the printed closed form (cross-validated).
    Even k, odd d: the printed closed form disagrees with enumeration, so
    the recursion engine's value is returned instead; the verifier records
    the discrepancy.

    >>> closed_kd(3, 1).M == RF_ONE + RF_X * R_sq(1)
    True
    """
    if k < 2 or not 1 <= d <= k - 1:
        raise ValueError("need k >= 2 and 1 <= d <= k-1")
    F = R(k)
    if k % 2:
        M = RF_ONE + RF_X * R_sq((k - 1) // 2)
    elif d % 2 == 0:
        M = _printed_kd_even_even(k, d)
    else:
        M = gftriple(kd_pattern(k, d)).M
    return _triple_from_FM(F, M)


def _odd_wedge_index(tau: Perm) -> Optional[int]:
    """Return k when tau has the layered-wedge shape of odd length 2k+1,
    else None.

    Shape: with s = tau[0] - 1 low values, the high values s+1..n must
    appear in increasing order; scanning left to right, each maximal block
    of low values must be an increasing run of consecutive values forming
    the next complete layer downward (first s, s-1, ... ending just above
    the previously used layer); and after every high-run/low-block pair the
    combined length so far must be odd.
    """
    n = len(tau)
    if n == 0 or n % 2 == 0:
        return None
    if not avoids(tau, (1, 3, 2)):
        return None
    s = tau[0] - 1
    if [v for v in tau if v > s] != list(range(s + 1, n + 1)):
        return None
    expect_top = s
    cum = 0
    i = 0
    while i < n:
        j = i
        while j < n and tau[j] > s:
            j += 1
        if j == i:
            return None
        end = j
        while end < n and tau[end] <= s:
            end += 1
        seg = tau[j:end]
        if seg:
            lo = expect_top - len(seg) + 1
            if seg != tuple(range(lo, expect_top + 1)):
                return None
            expect_top -= len(seg)
        cum += end - i
        if cum % 2 == 0:
            return None
        i = end
    if expect_top != 0:
        return None
    return (n - 1) // 2


def odd_wedge(tau) -> Optional[GFTriple]:
    """Detect the layered-wedge shape of odd length 2k+1 and, when it
    applies, return the closed forms (signed part 1 + x R_k(x^2), total
    part the length-(2k+1) convergent).  Returns None otherwise.

    >>> odd_wedge((2, 3, 1, 4, 5)) is not None
    True
    >>> odd_wedge((1, 2)) is None
    True
    >>> odd_wedge((3, 2, 1)) is None
    True
    """
    tau = validated(tau)
    k = _odd_wedge_index(tau)
    if k is None:
        return None
    F = R(len(tau))
    M = RF_ONE + RF_X * R_sq(k)
    return _triple_from_FM(F, M)


# ---------------------------------------------------------------------------
# Exact-occurrence closed forms.
# ---------------------------------------------------------------------------


def _monomial(e: int) -> RatFunc:
    return RatFunc(POLY_ONE.shift(e))


def contain_once_increasing(k: int) -> ContainOnceGF:
    """Signed/even/odd generating functions for 132-avoiders containing the
    increasing run of length k exactly once.

    >>> contain_once_increasing(1).M1
    RatFunc(num=(0, 1), den=(1,))
    >>> contain_once_increasing(3).M1
    RatFunc(num=(0, 0, 0, 1), den=(1,))
    """
    if k < 1:
        raise ValueError("the pattern length must be at least 1")
    if k % 2:
        m = (k - 1) // 2
        w = RatFunc(cleared_U(m))        # denominator family at x^2
        M1 = _monomial(k) / (w * w)
    else:
        m = (k - 2) // 2
        rr = R_sq(m + 1)
        w = RatFunc(cleared_U(m))
        x2r2 = RF_X * RF_X * rr * rr
        M1 = (_monomial(k) * rr * rr * (RF_ONE + rr * _rf(0, 2) - x2r2)
              / ((RF_ONE + x2r2) ** 2 * w * w))
    total = _monomial(k) / RatFunc(cleared_W(k)) ** 2
    return ContainOnceGF(M1=M1,
                         E1=(total + M1) * RF_HALF,
                         O1=(total - M1) * RF_HALF)


def contain_r_increasing(k: int, r: int) -> RatFunc:
    """Signed generating function for 132-avoiders containing the increasing
    run of length 2k+1 exactly r times, r in {0, 1, 2}.

    >>> contain_r_increasing(1, 0)
    RatFunc(num=(1, 1), den=(1,))
    >>> contain_r_increasing(1, 1)
    RatFunc(num=(0, 0, 0, 1), den=(1,))
    >>> contain_r_increasing(1, 2)
    RatFunc(num=(0, 0, 0, 0, -1, 1), den=(1,))
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if r == 0:
        return RF_ONE + RF_X * R_sq(k)
    w = RatFunc(cleared_U(k))
    if r == 1:
        return _monomial(2 * k + 1) / (w * w)
    if r == 2:
        return _monomial(2 * k + 2) * (RF_X * R_sq(k) - RF_ONE) / (w * w)
    raise ValueError("r must be 0, 1, or 2")


def _contain_r_total(k: int, r: int) -> RatFunc:
    """Companion totals (even plus odd) for contain_r_increasing."""
    if r == 0:
        return R(2 * k + 1)
    if r == 1:
        return _monomial(2 * k + 1) / RatFunc(cleared_W(2 * k + 1)) ** 2
    if r == 2:
        return (RatFunc(cleared_W(2 * k).shift(2 * k + 2))
                / RatFunc(cleared_W(2 * k + 1)) ** 3)
    raise ValueError("r must be 0, 1, or 2")


# ---------------------------------------------------------------------------
# Coefficientwise verification of the exact-occurrence recursions.
# ---------------------------------------------------------------------------


def _component_series(avoid: Optional[Perm], contain: Perm, order: int):
    """(even, odd) count series for 132-avoiders that avoid ``avoid`` (no
    constraint when None, empty class when the empty pattern) and contain
    ``contain`` exactly once (no constraint when empty)."""
    from . import _batch

    even = []
    odd = []
    for n in range(order + 1):
        if avoid == ():
            even.append(0)
            odd.append(0)
            continue
        mat, par = _batch.avoider_matrix(n)
        mask = _batch.ones_mask(mat.shape[0])
        if avoid is not None:
            mask &= ~_batch.contains_mask(mat, avoid)
        if contain:
            mask &= _batch.occurrence_counts(mat, contain) == 1
        even.append(int((mask & (par == 0)).sum()))
        odd.append(int((mask & (par == 1)).sum()))
    return Series(even), Series(odd)


def verify_containment_equations(tau, order: int = 10) -> list[dict]:
    """Replay the exact-occurrence recursions coefficientwise.

    Every component series (avoid one derived pattern, contain another
    exactly once, refined by sign) is computed by brute-force enumeration;
    the six sign-refined identities plus the total-count product recursion
    are then checked through the given order.  Returns one report record
    per equation.

    Writing a permutation that avoids 132 as (left block, new maximum,
    right block), an occurrence of the pattern either uses the new maximum
    (which can only play the pattern's own maximum) or splits across the
    blocks at one of the pattern's block boundaries.  Requiring exactly one
    occurrence overall therefore splits the class into ``r + 2`` disjoint
    shapes, indexed ``d = 0 .. r+1``.  The left factor of shape ``d`` avoids

    * the leading segment for ``d = 0``,
    * the leading segment together with its maximum for ``d = 1``,
    * the prefix through maximum ``d`` for ``2 <= d <= r``,
    * nothing for ``d = r+1`` (when ``r >= 1``),

    while containing the prefix through maximum ``d - 1`` exactly once; the
    right factor avoids the suffix from segment ``d - 1`` (nothing at
    ``d = 0``) and contains the suffix from segment ``d`` exactly once.
    The ``d = 1`` avoidance endpoint is one whole block, not the prefix
    through the next maximum: the configuration it would otherwise permit
    always carries at least two occurrences, so the chain of avoided
    prefixes skips a step there.

    The pattern length must be 1..5; longer patterns exceed the
    enumeration budget.
    """
    tau = validated(tau)
    if not 1 <= len(tau) <= 5:
        raise ValueError(
            "the pattern length must be between 1 and 5 (longer patterns "
            "exceed the enumeration budget)")
    if not 0 <= order <= ORACLE_BOUND:
        raise ValueError("oracle bound exceeded")
    dec = canonical_decomposition(tau)
    first_block = normalize(tuple(dec.blocks[0][0]) + (dec.blocks[0][1],))
    cache: dict = {}

    def component(avoid, contain):
        key = (avoid, contain)
        if key not in cache:
            cache[key] = _component_series(avoid, contain, order)
        return cache[key]

    sides = []
    for d in range(dec.r + 2):
        if d == 0:
            avoid_a = dec.prefix(0)
        elif d == 1:
            avoid_a = first_block
        elif d <= dec.r:
            avoid_a = dec.prefix(d)
        else:
            avoid_a = None
        contain_a = dec.prefix(d - 1)
        avoid_b = dec.suffix(d - 1) if d >= 1 else None
        contain_b = dec.suffix(d)
        sides.append((component(avoid_a, contain_a),
                      component(avoid_b, contain_b)))

    EL, OL = component(None, tau)
    ELn, OLn = EL.subs_neg(), OL.subs_neg()
    ML, MLn = EL - OL, ELn - OLn
    GL = EL + OL

    zero = Series((0,) * (order + 1))
    sums = {name: zero for name in
            ("even-diff", "odd-diff", "even-sum", "odd-sum",
             "signed-diff", "signed-sum", "total")}
    for (EA, OA), (EB, OB) in sides:
        EAn, OAn, EBn, OBn = (s.subs_neg() for s in (EA, OA, EB, OB))
        MA, MAn = EA - OA, EAn - OAn
        MB, MBn = EB - OB, EBn - OBn
        sums["even-diff"] += EA * EB + EAn * EBn + OA * OB + OAn * OBn
        sums["odd-diff"] += EA * OB + EAn * OBn + OA * EB + OAn * EBn
        sums["even-sum"] += ((EA + EAn) * (OB - OBn) + (OA + OAn) * (EB - EBn)
                             + (EA - EAn) * (EB + EBn) + (OA - OAn) * (OB + OBn))
        sums["odd-sum"] += ((EA + EAn) * (EB - EBn) + (OA + OAn) * (OB - OBn)
                            + (EA - EAn) * (OB + OBn) + (OA - OAn) * (EB + EBn))
        sums["signed-diff"] += MA * MB + MAn * MBn
        sums["signed-sum"] += MA * MBn - MAn * MB
        sums["total"] += (EA + OA) * (EB + OB)

    checks = [
        ("even-difference", EL - ELn, sums["even-diff"].shift(1)),
        ("odd-difference", OL - OLn, sums["odd-diff"].shift(1)),
        ("even-sum", (EL + ELn) * 2, sums["even-sum"].shift(1)),
        ("odd-sum", (OL + OLn) * 2, sums["odd-sum"].shift(1)),
        ("signed-difference", ML - MLn, sums["signed-diff"].shift(1)),
        ("signed-sum", ML + MLn, sums["signed-sum"].shift(1)),
        ("total-count", GL, sums["total"].shift(1)),
    ]
    records = []
    for name, lhs, rhs in checks:
        t0 = time.perf_counter()
        records.append(_record(
            "contain-eqs",
            {"tau": tau, "order": order, "equation": name},
            "exact-occurrence recursion, " + name + " form",
            lhs.coeffs, rhs.coeffs, lhs == rhs, t0))
    return records


# ---------------------------------------------------------------------------
# Statistic marking and double restrictions.
# ---------------------------------------------------------------------------


def rlm_distribution(order: int):
    """Bivariate series (even, odd) with x marking length and y marking the
    number of right-to-left maxima, over all 132-avoiders.

    >>> rlm_distribution(2)[0].coefficient(1, 1)
    1
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    cat = catalan_series(order)
    one = BiSeries.from_terms(order, [(0, 0, 1)])
    d1 = [(0, 0, 1)]
    for i in range(order):
        d1.append((i + 1, 1, -cat.coefficient(i)))
    plain = one / BiSeries.from_terms(order, d1)
    num = [(0, 0, 1), (1, 1, 1)]
    den = [(0, 0, 1)]
    for j in range(order):
        e = 2 * j + 2
        if e > order:
            break
        cj = cat.coefficient(j)
        num.append((e, 1, -cj))
        den.append((e, 1, -2 * cj))
        den.append((e, 2, cj))
    signed = (BiSeries.from_terms(order, num)
              / BiSeries.from_terms(order, den))
    half = BiSeries.from_terms(order, [(0, 0, Fraction(1, 2))])
    return (plain + signed) * half, (plain - signed) * half


def _W_pair(m: int) -> RatFunc:
    """Total-count gf under the double restriction at length m, as a ratio
    of convergents."""
    x2 = RF_X * RF_X
    return ((RF_ONE - x2 * R(m - 2) * R(m - 3)) * R(m - 1)
            / (RF_ONE - x2 * R(m - 1) * R(m - 2)))


def two_restrictions(k: int) -> TwoRestrictionPair:
    """Closed forms when both the increasing run and its head-swapped
    variant are forbidden, at lengths 2k (even_length) and 2k+1
    (odd_length); k >= 2.

    >>> two_restrictions(2).even_length.F
    RatFunc(num=(1, -1, -1), den=(1, -2, -1))
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    even_F = _W_pair(2 * k)
    even_M = RF_ONE + RF_X * R_sq(k)
    odd_F = _W_pair(2 * k + 1)
    rk1 = R_sq(k + 1)
    v = (RF_ONE - RF_X * _W_pair(2 * k)) * _W_pair(2 * k + 1)
    y = (((RF_ONE + RF_X * rk1) * 2 - v - RF_X * rk1 * v.subs_neg())
         / (RF_ONE + RF_X * RF_X * rk1 * rk1))
    odd_M = y * rk1
    return TwoRestrictionPair(even_length=_triple_from_FM(even_F, even_M),
                              odd_length=_triple_from_FM(odd_F, odd_M))


# ---------------------------------------------------------------------------
# Occurrence-marking for increasing runs: the bivariate closed form.
# ---------------------------------------------------------------------------


def _G_D(m: int) -> RatFunc:
    """Denominator-family polynomials of the bivariate closed form (the
    division by 1 - 4x^2 is exact, so these normalize to polynomials)."""
    if m == -2:
        return RF_ZERO
    if m == -1:
        return RF_ONE
    if m < -2:
        raise ValueError("index out of range")
    if m % 2 == 0:
        num = cleared_U(m + 1) - cleared_U(m).shift(2) * 2 \
            - POLY_ONE.shift(m + 2) * 2
    else:
        num = cleared_U(m + 2) - cleared_U(m).shift(2) \
            - POLY_ONE.shift(m + 3) * 4
    return RatFunc(num, Poly((1, 0, -4)))


def _G_E(m: int) -> RatFunc:
    return _monomial(m + 1) * (-2) if m % 2 else RF_ZERO


def _G_B(m: int) -> RatFunc:
    if m % 2 == 0:
        return -_monomial(m - 1)
    return -_monomial(m - 1) + _monomial(m) * 2


def Gk_y1(k: int) -> RatFunc:
    """The bivariate closed form specialized at y = 1, as an exact rational
    function: 1 + x (D_{k-1} - x^k) / D_k.  Must agree with the signed
    avoidance gf for the increasing run of length k+1."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return RF_ONE + RF_X * (_G_D(k - 1) - _monomial(k)) / _G_D(k)


def Gk_xy(k: int, order: int) -> BiSeries:
    """Bivariate expansion, through x^order, of the signed generating
    function over 132-avoiders that avoid the increasing run of length k+1,
    with y marking occurrences of the increasing run of length k.

    >>> Gk_xy(2, 3).coefficient(0, 0)
    1
    >>> Gk_xy(2, 3).coefficient(1, 0)
    1
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if not 0 <= order <= ORACLE_BOUND:
        raise ValueError("oracle bound exceeded")

    def lift(f: RatFunc) -> BiSeries:
        s = series_expand(f, order)
        return BiSeries.from_terms(
            order, [(i, 0, c) for i, c in enumerate(s.coeffs) if c])

    one_minus_y = BiSeries.from_terms(order, [(0, 0, 1), (0, 1, -1)])
    x2 = RF_X * RF_X
    numer = (lift(_G_D(k - 1) - _monomial(k))
             + lift(_G_B(k)) * one_minus_y
             + lift(x2 * _G_D(k - 3) - _monomial(k)) * one_minus_y * one_minus_y)
    denom = (lift(_G_D(k))
             + lift(_G_E(k)) * one_minus_y
             + lift(x2 * _G_D(k - 2)) * one_minus_y * one_minus_y)
    one = BiSeries.from_terms(order, [(0, 0, 1)])
    x_mark = BiSeries.from_terms(order, [(1, 0, 1)])
    return one + x_mark * (numer / denom)
