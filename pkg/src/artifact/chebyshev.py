"""Chebyshev-style polynomial families and the continued-fraction rational
functions built from them.

Three intertwined families, all exact:

* ``chebyshev_U(n)`` — the classical second-kind polynomials U_n(t).
* ``cleared_W(n)`` — the denominator-cleared family W_0 = W_1 = 1,
  W_n = W_{n-1} - x W_{n-2}; these satisfy W_n(x^2) = x^n U_n(1/(2x)).
* ``R(k)`` — the continued-fraction convergents R_0 = 0,
  R_k = 1/(1 - x R_{k-1}), which are the avoidance generating functions for
  increasing patterns; equivalently R_k = W_{k-1}/W_k.

``u_recip(n)`` packages x^-cleared U_n(1/(2x)) as an exact RatFunc, with the
standard backward extensions u_recip(-1) = 0 and u_recip(-2) = -1.
"""

from __future__ import annotations

import time
from fractions import Fraction

from .exact_algebra import (POLY_ONE, POLY_X, Poly, RF_ONE, RF_ZERO, RatFunc)

_U_CACHE: list[Poly] = []
_W_CACHE: list[Poly] = []
_R_CACHE: list[RatFunc] = []
_R_SQ_CACHE: dict[int, RatFunc] = {}


def chebyshev_U(n: int) -> Poly:
    """Second-kind Chebyshev polynomial U_n(t) as an exact Poly in t.

    >>> chebyshev_U(2).coeffs
    (-1, 0, 4)
    >>> chebyshev_U(3).coeffs
    (0, -4, 0, 8)
    """
    if n < 0:
        raise ValueError("chebyshev_U is defined here for n >= 0")
    if not _U_CACHE:
        _U_CACHE.append(Poly((1,)))
        _U_CACHE.append(Poly((0, 2)))
    two_t = Poly((0, 2))
    while len(_U_CACHE) <= n:
        _U_CACHE.append(two_t * _U_CACHE[-1] - _U_CACHE[-2])
    return _U_CACHE[n]


def cleared_W(n: int) -> Poly:
    """The cleared family W_0 = W_1 = 1, W_n = W_{n-1} - x W_{n-2}.

    >>> cleared_W(2).coeffs
    (1, -1)
    >>> cleared_W(3).coeffs
    (1, -2)
    >>> cleared_W(5).coeffs
    (1, -4, 3)
    """
    if n < 0:
        raise ValueError("cleared_W is defined here for n >= 0")
    if not _W_CACHE:
        _W_CACHE.append(POLY_ONE)
        _W_CACHE.append(POLY_ONE)
    while len(_W_CACHE) <= n:
        _W_CACHE.append(_W_CACHE[-1] - POLY_X * _W_CACHE[-2])
    return _W_CACHE[n]


def cleared_U(n: int) -> Poly:
    """x^n U_n(1/(2x)) as a polynomial in x; equals cleared_W(n) at x^2.

    >>> cleared_U(2).coeffs
    (1, 0, -1)
    """
    if n < 0:
        raise ValueError("cleared_U is defined here for n >= 0")
    return cleared_W(n).subs_square()


def u_recip(n: int) -> RatFunc:
    """U_n(1/(2x)) as an exact rational function of x.

    Backward extensions used by the closed forms: n = -1 gives 0 and
    n = -2 gives -1 (consistent with the three-term recurrence run in
    reverse).
    """
    if n == -1:
        return RF_ZERO
    if n == -2:
        return -RF_ONE
    if n < -2:
        raise ValueError("u_recip extends back only to n = -2")
    return RatFunc(cleared_U(n), POLY_ONE.shift(n))


def R(k: int) -> RatFunc:
    """Continued-fraction convergent R_k: R_0 = 0, R_k = 1/(1 - x R_{k-1}).

    >>> R(2)
    RatFunc(num=(1,), den=(1, -1))
    >>> R(3)
    RatFunc(num=(1, -1), den=(1, -2))
    """
    if k < 0:
        raise ValueError("R is defined for k >= 0")
    if not _R_CACHE:
        _R_CACHE.append(RF_ZERO)
    while len(_R_CACHE) <= k:
        prev = _R_CACHE[-1]
        _R_CACHE.append(RF_ONE / (RF_ONE - RatFunc(POLY_X) * prev))
    return _R_CACHE[k]


def R_sq(k: int) -> RatFunc:
    """R_k evaluated at x^2 (memoized; used throughout the closed forms)."""
    if k not in _R_SQ_CACHE:
        _R_SQ_CACHE[k] = R(k).subs_square()
    return _R_SQ_CACHE[k]


# ---------------------------------------------------------------------------
# Identity verification.
# ---------------------------------------------------------------------------


def _shorten(text: str, limit: int = 120) -> str:
    return text if len(text) <= limit else text[: limit - 1] + "…"


def _record(family, params, source, expected, observed, ok, t0):
    return {
        "family": family,
        "params": params,
        "source": source,
        "expected": _shorten(repr(expected)),
        "observed": _shorten(repr(observed)),
        "verdict": "pass" if ok else "fail",
        "runtime_ms": round((time.perf_counter() - t0) * 1000, 3),
    }


def _u_recip_from_U(n: int) -> RatFunc:
    """x^n U_n(1/(2x)) computed straight from the U_n(t) coefficients,
    independently of the cleared_W recurrence (dual-route check)."""
    coeffs = chebyshev_U(n).coeffs
    acc = RF_ZERO
    x = RatFunc(POLY_X)
    for j, a in enumerate(coeffs):
        if a:
            # a * t^j at t = 1/(2x), multiplied by x^n: a * x^(n-j) / 2^j
            acc = acc + RatFunc(Poly((Fraction(a, 2 ** j),)).shift(n - j))
    return acc


def verify_identity(which: str, max_k: int = 50, max_pq: int = 20) -> list[dict]:
    """Run one of the exact identity suites; returns a list of check records.

    * ``'rk'``   — R_k (1 - x R_{k-1}) = 1 for 1 <= k <= max_k.
    * ``'drk'``  — R_k = W_{k-1}/W_k for 1 <= k <= max_k, plus the cleared
      form x^n U_n(1/(2x)) = W_n(x^2) recomputed from the U coefficients.
    * ``'irks'`` — the two product/sum quotient identities
      (1 - x^2 R_p(x^2) R_q(x^2)) U_p U_q = U_{p+q} and
      (1 - x^2 (R_p(x^2) + R_q(x^2))) U_p U_q = U_{p+q+1}
      in cleared form, for 0 <= p, q <= max_pq.
    """
    checks: list[dict] = []
    x = RatFunc(POLY_X)
    if which == "rk":
        for k in range(1, max_k + 1):
            t0 = time.perf_counter()
            lhs = R(k) * (RF_ONE - x * R(k - 1))
            checks.append(_record("chebyshev-rk", {"k": k},
                                  "continued-fraction step identity",
                                  RF_ONE, lhs, lhs == RF_ONE, t0))
        return checks
    if which == "drk":
        for k in range(1, max_k + 1):
            t0 = time.perf_counter()
            rhs = RatFunc(cleared_W(k - 1), cleared_W(k))
            lhs = R(k)
            checks.append(_record("chebyshev-drk", {"k": k},
                                  "convergent as cleared-polynomial quotient",
                                  rhs, lhs, lhs == rhs, t0))
        for n in range(0, max_k + 1):
            t0 = time.perf_counter()
            via_U = _u_recip_from_U(n)
            via_W = RatFunc(cleared_U(n))
            checks.append(_record("chebyshev-drk", {"n": n},
                                  "cleared second-kind value, dual route",
                                  via_W, via_U, via_U == via_W, t0))
        return checks
    if which == "irks":
        for p in range(0, max_pq + 1):
            up = RatFunc(cleared_U(p))
            rp = R_sq(p)
            for q in range(0, max_pq + 1):
                uq = RatFunc(cleared_U(q))
                rq = R_sq(q)
                x2 = RatFunc(POLY_ONE.shift(2))
                t0 = time.perf_counter()
                lhs1 = (RF_ONE - x2 * rp * rq) * up * uq
                rhs1 = RatFunc(cleared_U(p + q))
                checks.append(_record("chebyshev-irks", {"p": p, "q": q, "form": "product"},
                                      "cleared product quotient identity",
                                      rhs1, lhs1, lhs1 == rhs1, t0))
                t0 = time.perf_counter()
                lhs2 = (RF_ONE - x2 * (rp + rq)) * up * uq
                rhs2 = RatFunc(cleared_U(p + q + 1))
                checks.append(_record("chebyshev-irks", {"p": p, "q": q, "form": "sum"},
                                      "cleared sum quotient identity",
                                      rhs2, lhs2, lhs2 == rhs2, t0))
        return checks
    raise ValueError(f"unknown identity suite {which!r}")
