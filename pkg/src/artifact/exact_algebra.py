"""Exact arithmetic kernel: integer/rational polynomials, canonical rational
functions, truncated power series, and truncated bivariate series.

Everything here is exact.  Scalars are Python ints or ``fractions.Fraction``;
no floats are ever produced.  ``RatFunc`` keeps a canonical form so that
equality is plain representation equality:

* numerator and denominator are integer polynomials,
* their polynomial gcd is 1,
* the gcd of their integer contents is 1,
* the lowest-degree nonzero coefficient of the denominator is positive.

Polynomials are coefficient tuples in ascending powers with trailing zeros
trimmed; the zero polynomial is the empty tuple and reports degree -inf.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

NEG_INF = float("-inf")


def _as_scalar(value: Scalar) -> Scalar:
    """Coerce to int when an integral Fraction sneaks in."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return value
    if isinstance(value, int):
        return value
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def _trim(coeffs: Sequence[Scalar]) -> tuple:
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(_as_scalar(c) for c in coeffs[:n])


class Poly:
    """Dense univariate polynomial with exact coefficients.

    >>> p = Poly((1, 0, -2))       # 1 - 2x^2
    >>> p.degree
    2
    >>> p(3)
    -17
    >>> (p * Poly((0, 1))).coeffs  # multiply by x
    (0, 1, 0, -2)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Union[Scalar, Sequence[Scalar]] = ()):
        if isinstance(coeffs, (int, Fraction)):
            coeffs = (coeffs,)
        object.__setattr__(self, "coeffs", _trim(tuple(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, k: int) -> Scalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __call__(self, x0: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return _as_scalar(acc)

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly(tuple(c * other for c in self.coeffs))
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative int")
        result = Poly((1,))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return Poly((0,) * k + self.coeffs)

    # -- substitutions ----------------------------------------------------

    def subs_neg(self) -> "Poly":
        """p(x) -> p(-x)."""
        return Poly(tuple(-c if i % 2 else c for i, c in enumerate(self.coeffs)))

    def subs_square(self) -> "Poly":
        """p(x) -> p(x^2)."""
        if self.is_zero:
            return self
        out = [0] * (2 * len(self.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            out[2 * i] = c
        return Poly(out)

    def subs_negsquare(self) -> "Poly":
        """p(x) -> p(-x^2)."""
        if self.is_zero:
            return self
        out = [0] * (2 * len(self.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            out[2 * i] = -c if i % 2 else c
        return Poly(out)

    # -- protocol ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __repr__(self):
        return f"Poly({self.coeffs!r})"


def _coerce_poly(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly((value,))
    return NotImplemented


POLY_ZERO = Poly()
POLY_ONE = Poly((1,))
POLY_X = Poly((0, 1))


# ---------------------------------------------------------------------------
# Integer-polynomial helpers for the canonical form.
# ---------------------------------------------------------------------------


def _content_and_primitive(coeffs: Sequence[Scalar]):
    """Split a nonzero rational polynomial into (positive content, primitive
    integer coefficient tuple).  Signs stay with the primitive part."""
    denom_lcm = 1
    for c in coeffs:
        if isinstance(c, Fraction):
            denom_lcm = denom_lcm * c.denominator // math.gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, abs(c))
    content = Fraction(g, denom_lcm)
    return content, tuple(c // g for c in ints)


def _int_poly_mul_scalar(p: Sequence[int], s: int) -> tuple:
    return tuple(c * s for c in p)


def _int_poly_sub_shifted(a: Sequence[int], b: Sequence[int], s: int, shift: int) -> tuple:
    """a - s * x^shift * b, trimmed (integer tuples)."""
    out = list(a)
    need = shift + len(b)
    if len(out) < need:
        out.extend([0] * (need - len(out)))
    for j, c in enumerate(b):
        out[shift + j] -= s * c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _primitive_int(p: Sequence[int]) -> tuple:
    g = 0
    for c in p:
        g = math.gcd(g, abs(c))
    if g <= 1:
        return tuple(p)
    return tuple(c // g for c in p)


def _int_poly_gcd(a: Sequence[int], b: Sequence[int]) -> tuple:
    """Primitive gcd of integer polynomials via a primitive pseudo-remainder
    sequence.  Result is primitive with positive leading coefficient."""
    a = _primitive_int(_trim(a))
    b = _primitive_int(_trim(b))
    if not a:
        a, b = b, a
    while b:
        # one pseudo-division round: reduce a mod b, multiplying by lc(b)
        # as needed so everything stays integral, then re-primitivize.
        r = a
        lb = b[-1]
        db = len(b) - 1
        while r and len(r) - 1 >= db:
            shift = len(r) - 1 - db
            lr = r[-1]
            r = _int_poly_sub_shifted(_int_poly_mul_scalar(r, lb), b, lr, shift)
        a, b = b, _primitive_int(r)
    if a and a[-1] < 0:
        a = tuple(-c for c in a)
    return a


def _int_poly_divexact(a: Sequence[int], b: Sequence[int]) -> tuple:
    """Exact quotient a / b of integer polynomials (raises if inexact)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lb = Fraction(b[-1])
    db = len(b) - 1
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        shift = len(r) - 1 - db
        factor = r[-1] / lb
        q[shift] = factor
        for j, c in enumerate(b):
            r[shift + j] -= factor * c
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    if not all(f.denominator == 1 for f in q):
        raise ArithmeticError("quotient not integral")
    out = [int(f) for f in q]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _lowest_nonzero(coeffs: Sequence[int]) -> int:
    for c in coeffs:
        if c != 0:
            return c
    return 0


class RatFunc:
    """Rational function in canonical form (see module docstring).

    >>> f = RatFunc(Poly((1,)), Poly((1, -2)))   # 1/(1-2x)
    >>> f.num.coeffs, f.den.coeffs
    ((1,), (1, -2))
    >>> (f - f).is_zero
    True
    >>> RatFunc(Poly((2, 2)), Poly((4,)))        # content reduction
    RatFunc(num=(1, 1), den=(2,))
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None, *, _canonical=False):
        num = _coerce_poly(num)
        if num is NotImplemented:
            raise TypeError("numerator must be Poly, int, or Fraction")
        if den is None:
            den = POLY_ONE
        else:
            den = _coerce_poly(den)
            if den is NotImplemented:
                raise TypeError("denominator must be Poly, int, or Fraction")
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if _canonical:
            object.__setattr__(self, "num", num)
            object.__setattr__(self, "den", den)
            return
        n, d = _canonicalize(num, den)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    # -- field operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise ValueError("exponent must be an int")
        if exponent < 0:
            if self.is_zero:
                raise ZeroDivisionError("zero to a negative power")
            return RatFunc(self.den ** (-exponent), self.num ** (-exponent))
        # powers of a canonical form stay canonical: coprimality and the
        # sign/content rules are preserved by taking powers.
        return RatFunc(self.num ** exponent, self.den ** exponent,
                       _canonical=True)

    # -- substitutions -------------------------------------------------------

    def subs_neg(self) -> "RatFunc":
        return _resign(self.num.subs_neg(), self.den.subs_neg())

    def subs_square(self) -> "RatFunc":
        return _resign(self.num.subs_square(), self.den.subs_square())

    def subs_negsquare(self) -> "RatFunc":
        return _resign(self.num.subs_negsquare(), self.den.subs_negsquare())

    # -- protocol -------------------------------------------------------------

    def __eq__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num.coeffs == other.num.coeffs and self.den.coeffs == other.den.coeffs

    def __hash__(self):
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"RatFunc(num={self.num.coeffs!r}, den={self.den.coeffs!r})"


def _canonicalize(num: Poly, den: Poly):
    if num.is_zero:
        return POLY_ZERO, POLY_ONE
    cn, pn = _content_and_primitive(num.coeffs)
    cd, pd = _content_and_primitive(den.coeffs)
    g = _int_poly_gcd(pn, pd)
    if len(g) > 1 or g != (1,):
        pn = _int_poly_divexact(pn, g)
        pd = _int_poly_divexact(pd, g)
    scale = cn / cd  # positive by construction
    a, b = scale.numerator, scale.denominator
    n = tuple(c * a for c in pn)
    d = tuple(c * b for c in pd)
    if _lowest_nonzero(d) < 0:
        n = tuple(-c for c in n)
        d = tuple(-c for c in d)
    return Poly(n), Poly(d)


def _resign(num: Poly, den: Poly) -> RatFunc:
    """Rebuild canonical form after a substitution, which preserves
    coprimality and contents but may flip the denominator's sign rule."""
    if _lowest_nonzero(den.coeffs) < 0:
        num, den = -num, -den
    return RatFunc(num, den, _canonical=True)


def _coerce_ratfunc(value):
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, (int, Fraction, Poly)):
        return RatFunc(value)
    return NotImplemented


RF_ZERO = RatFunc(0)
RF_ONE = RatFunc(1)
RF_X = RatFunc(POLY_X)
RF_HALF = RatFunc(Fraction(1, 2))


def ratfunc_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    """Dispatch wrapper over the field operations, for the CLI and tests.

    >>> one = RatFunc(1)
    >>> x = RatFunc(Poly((0, 1)))
    >>> ratfunc_arith(one, x, "sub")
    RatFunc(num=(1, -1), den=(1,))
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def substitute(f: RatFunc, kind: str) -> RatFunc:
    """Substitute the variable: kind is 'neg' (x -> -x), 'square' (x -> x^2),
    or 'negsquare' (x -> -x^2)."""
    if kind == "neg":
        return f.subs_neg()
    if kind == "square":
        return f.subs_square()
    if kind == "negsquare":
        return f.subs_negsquare()
    raise ValueError(f"unknown substitution {kind!r}")


def even_odd_part(f: RatFunc):
    """Split f into (even part, odd part): f(x) = e(x) + o(x) with
    e(-x) = e(x), o(-x) = -o(x)."""
    fneg = f.subs_neg()
    even = (f + fneg) * RF_HALF
    return even, f - even


def solve_linear_2x2(a11: RatFunc, a12: RatFunc, a21: RatFunc, a22: RatFunc,
                     b1: RatFunc, b2: RatFunc):
    """Solve the 2x2 linear system over the rational-function field.

    Raises ValueError on a singular system.
    """
    det = a11 * a22 - a12 * a21
    if det.is_zero:
        raise ValueError("singular 2x2 system")
    u = (b1 * a22 - b2 * a12) / det
    v = (a11 * b2 - a21 * b1) / det
    return u, v


# ---------------------------------------------------------------------------
# Truncated univariate power series.
# ---------------------------------------------------------------------------


class Series:
    """Power series truncated at a fixed order: coefficients 0..order.

    Arithmetic between two Series produces the min of the two orders, so a
    result never pretends to more precision than its inputs.

    >>> s = Series((1, 1, 1))
    >>> (s * s).coeffs
    (1, 2, 3)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        coeffs = tuple(_as_scalar(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a Series carries at least the constant term")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> Scalar:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series(self.coeffs[: order + 1])

    # -- arithmetic -----------------------------------------------------------

    def _align(self, other):
        if isinstance(other, (int, Fraction)):
            other = Series((other,) + (0,) * self.order)
        if not isinstance(other, Series):
            return None, None
        n = min(self.order, other.order)
        return self.coeffs[: n + 1], other.coeffs[: n + 1]

    def __add__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return Series(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return Series(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return Series(tuple(x - y for x, y in zip(a, b)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Series):
            return NotImplemented
        a, b = self._align(other)
        n = len(a)
        out = [0] * n
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j in range(n - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return Series(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("series division by zero scalar")
            inv = Fraction(1, 1) / other
            return Series(tuple(c * inv for c in self.coeffs))
        if not isinstance(other, Series):
            return NotImplemented
        a, b = self._align(other)
        if b[0] == 0:
            raise ValueError("series division requires a unit constant term")
        n = len(a)
        out = [0] * n
        for i in range(n):
            acc = a[i]
            for j in range(1, i + 1):
                if b[j]:
                    acc -= b[j] * out[i - j]
            out[i] = Fraction(acc, 1) / b[0]
        return Series(tuple(_as_scalar(c) for c in out))

    # -- variable games ---------------------------------------------------------

    def subs_neg(self) -> "Series":
        return Series(tuple(-c if i % 2 else c for i, c in enumerate(self.coeffs)))

    def subs_square(self) -> "Series":
        """s(x) -> s(x^2), truncated at the same order."""
        out = [0] * (self.order + 1)
        for i, c in enumerate(self.coeffs):
            if 2 * i > self.order:
                break
            out[2 * i] = c
        return Series(out)

    def shift(self, k: int) -> "Series":
        """Multiply by x^k, truncated at the same order."""
        out = (0,) * k + self.coeffs
        return Series(out[: self.order + 1])

    # -- protocol ---------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Series):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("Series", self.coeffs))

    def __repr__(self):
        return f"Series({self.coeffs!r})"


def series_expand(f: RatFunc, order: int) -> Series:
    """Expand a rational function as a power series through x^order.

    Raises ValueError when the denominator vanishes at 0 (no expansion).

    >>> series_expand(RatFunc(Poly((1, -1)), Poly((1, -2))), 3).coeffs
    (1, 1, 2, 4)
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    den = f.den.coeffs
    d0 = den[0] if den else 0
    if d0 == 0:
        raise ValueError("no power-series expansion: denominator vanishes at 0")
    num = f.num.coeffs
    out = [0] * (order + 1)
    for n in range(order + 1):
        acc = num[n] if n < len(num) else 0
        for j in range(1, min(n, len(den) - 1) + 1):
            if den[j]:
                acc -= den[j] * out[n - j]
        out[n] = _as_scalar(Fraction(acc, 1) / d0)
    return Series(out)


def catalan_series(order: int) -> Series:
    """Catalan number series c_0, c_1, ..., c_order via the quadratic
    convolution c_{n} = sum_j c_j c_{n-1-j}.

    >>> catalan_series(5).coeffs
    (1, 1, 2, 5, 14, 42)
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    c = [1]
    for n in range(1, order + 1):
        c.append(sum(c[j] * c[n - 1 - j] for j in range(n)))
    return Series(c)


# ---------------------------------------------------------------------------
# Truncated bivariate series (x truncated, y exact per coefficient).
# ---------------------------------------------------------------------------


class BiSeries:
    """Series in x truncated at ``order``, whose x^n coefficients are exact
    polynomials in a marker variable y (stored as {y-power: scalar} dicts)."""

    __slots__ = ("order", "rows")

    def __init__(self, order: int, rows=None):
        if order < 0:
            raise ValueError("order must be nonnegative")
        object.__setattr__(self, "order", order)
        clean = []
        rows = list(rows) if rows is not None else []
        for n in range(order + 1):
            row = rows[n] if n < len(rows) else {}
            clean.append({j: _as_scalar(c) for j, c in row.items() if c != 0})
        object.__setattr__(self, "rows", tuple(clean))

    def __setattr__(self, name, value):
        raise AttributeError("BiSeries is immutable")

    @classmethod
    def from_terms(cls, order: int, terms) -> "BiSeries":
        """Build from an iterable of (x_power, y_power, coefficient)."""
        rows = [dict() for _ in range(order + 1)]
        for i, j, c in terms:
            if 0 <= i <= order and c != 0:
                rows[i][j] = rows[i].get(j, 0) + c
        return cls(order, rows)

    def coefficient(self, xpow: int, ypow: int) -> Scalar:
        if not 0 <= xpow <= self.order:
            raise IndexError(f"x^{xpow} beyond truncation order {self.order}")
        return self.rows[xpow].get(ypow, 0)

    def terms(self):
        for i, row in enumerate(self.rows):
            for j in sorted(row):
                yield i, j, row[j]

    def subs_y_one(self) -> Series:
        """Specialize y = 1."""
        return Series(tuple(sum(row.values()) if row else 0 for row in self.rows))

    # -- arithmetic ----------------------------------------------------------

    def _align(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiSeries.from_terms(self.order, [(0, 0, other)])
        if not isinstance(other, BiSeries):
            return None
        return other

    def __add__(self, other):
        other = self._align(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        rows = []
        for i in range(n + 1):
            row = dict(self.rows[i])
            for j, c in other.rows[i].items():
                row[j] = row.get(j, 0) + c
            rows.append(row)
        return BiSeries(n, rows)

    __radd__ = __add__

    def __neg__(self):
        return BiSeries(self.order,
                        [{j: -c for j, c in row.items()} for row in self.rows])

    def __sub__(self, other):
        other = self._align(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiSeries(self.order,
                            [{j: c * other for j, c in row.items()}
                             for row in self.rows])
        other = self._align(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        rows = [dict() for _ in range(n + 1)]
        for i1 in range(n + 1):
            r1 = self.rows[i1]
            if not r1:
                continue
            for i2 in range(n + 1 - i1):
                r2 = other.rows[i2]
                if not r2:
                    continue
                tgt = rows[i1 + i2]
                for j1, c1 in r1.items():
                    for j2, c2 in r2.items():
                        key = j1 + j2
                        tgt[key] = tgt.get(key, 0) + c1 * c2
        return BiSeries(n, rows)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._align(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        lead = other.rows[0]
        if set(lead) - {0} or lead.get(0, 0) == 0:
            raise ValueError("bivariate division needs a nonzero constant "
                             "(y-free) leading x^0 coefficient")
        b0 = lead[0]
        rows = [dict() for _ in range(n + 1)]
        for i in range(n + 1):
            acc = dict(self.rows[i])
            for k in range(1, i + 1):
                bk = other.rows[k]
                if not bk:
                    continue
                q = rows[i - k]
                for j1, c1 in bk.items():
                    for j2, c2 in q.items():
                        key = j1 + j2
                        acc[key] = acc.get(key, 0) - c1 * c2
            rows[i] = {j: _as_scalar(Fraction(c, 1) / b0)
                       for j, c in acc.items() if c != 0}
        return BiSeries(n, rows)

    # -- protocol ---------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, BiSeries):
            return self.order == other.order and self.rows == other.rows
        return NotImplemented

    def __repr__(self):
        body = ", ".join(f"x^{i} y^{j}: {c}" for i, j, c in self.terms())
        return f"BiSeries(order={self.order}, {{{body}}})"


def biseries_arith(a: BiSeries, b: BiSeries, op: str) -> BiSeries:
    """Dispatch wrapper mirroring :func:`ratfunc_arith`."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# JSON-friendly encodings (all big integers as decimal strings).
# ---------------------------------------------------------------------------


def _scalar_str(c: Scalar) -> str:
    return str(c)


def poly_to_json(p: Poly):
    if p.is_zero:
        return ["0"]
    return [_scalar_str(c) for c in p.coeffs]


def ratfunc_to_json(f: RatFunc):
    return {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}


def series_to_json(s: Series):
    return [_scalar_str(c) for c in s.coeffs]


def biseries_to_json(b: BiSeries):
    return {
        "order": b.order,
        "terms": [{"x": i, "y": j, "c": _scalar_str(c)} for i, j, c in b.terms()],
    }
