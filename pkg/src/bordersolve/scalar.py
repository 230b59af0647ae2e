"""Exact scalars: rationals, polynomials in ``t`` and reduced rational functions.

Rationals are :class:`fractions.Fraction`. A solve stays in plain fractions
until the first zero pivot is replaced by the symbol ``t``; from then on the
affected quantities are :class:`RationalFunction` values, which mix freely with
``int`` and ``Fraction`` operands through the reflected operators.
"""
from __future__ import annotations

import enum
import operator
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import BadScalar, DivisionByZero, SingularAtZero, ZeroDenominator

__all__ = [
    "Rational",
    "Polynomial",
    "RationalFunction",
    "ScalarMode",
    "T",
    "FLOAT_ZERO_TOL",
    "poly_gcd",
    "rf_reduce",
    "rf_arith",
    "rf_eval_at_zero",
    "eval_at_zero",
    "scalar_is_zero",
    "parse_scalar",
    "format_scalar",
    "to_mode",
]

Rational = Fraction

# relative threshold below which a float pivot counts as zero
FLOAT_ZERO_TOL = 2.0**-40


class ScalarMode(enum.Enum):
    EXACT = "exact"
    F64 = "f64"

    @classmethod
    def parse(cls, value: Union[str, "ScalarMode"]) -> "ScalarMode":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown scalar mode {value!r}") from None


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class Polynomial:
    """Dense polynomial in ``t`` with rational coefficients, lowest power first.

    The zero polynomial is the empty coefficient tuple, so ``degree`` of zero
    is -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(v) for v in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs: tuple = tuple(c)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Polynomial":
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def constant(cls, value) -> "Polynomial":
        return cls((value,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def at_zero(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return Polynomial._raw(tuple(c / lc for c in self.coeffs))

    def scale(self, k) -> "Polynomial":
        k = _frac(k)
        if not k:
            return ZERO
        return Polynomial._raw(tuple(c * k for c in self.coeffs))

    def __neg__(self):
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if not u:
                continue
            for j, v in enumerate(b):
                out[i + j] += u * v
        return Polynomial._raw(tuple(out))

    def __divmod__(self, other: "Polynomial"):
        if not other.coeffs:
            raise ZeroDenominator("polynomial division by zero")
        rem = list(self.coeffs)
        dv = other.coeffs
        dd = len(dv) - 1
        lc = dv[-1]
        if len(rem) <= dd:
            return ZERO, self
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            f = rem[k] / lc
            quot[k - dd] = f
            if f:
                for j in range(dd + 1):
                    rem[k - dd + j] -= f * dv[j]
        return Polynomial(quot), Polynomial(rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.at_zero())
        return hash(("poly", self.coeffs))

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                power = "t" if k == 1 else f"t^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


ZERO = Polynomial._raw(())
ONE = Polynomial._raw((Fraction(1),))


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor; ``poly_gcd(0, 0)`` is the zero polynomial."""
    while q.coeffs:
        p, q = q, p % q
    return p.monic()


class RationalFunction:
    """Reduced quotient ``num / den`` of polynomials in ``t``.

    Canonical form: ``gcd(num, den) == 1`` and ``den`` monic, so two values are
    equal exactly when their representations are.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = num if isinstance(num, Polynomial) else Polynomial.constant(num)
        den = den if isinstance(den, Polynomial) else Polynomial.constant(den)
        self.num, self.den = _canonical(num, den)

    @classmethod
    def _raw(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    def is_zero(self) -> bool:
        return not self.num.coeffs

    def __bool__(self):
        return bool(self.num.coeffs)

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def at_zero(self) -> Fraction:
        return rf_eval_at_zero(self)

    def __call__(self, x):
        d = self.den(x)
        if not d:
            raise SingularAtZero(f"{self} has a pole at t = {x}")
        return self.num(x) / d

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        if not other.num.coeffs:
            raise DivisionByZero("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return other / self

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den.degree == 0 and self.num == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.num.at_zero())
        return hash(("rf", self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num) if self.num.degree <= 0 else f"({self.num})"
        return f"({self.num})/({self.den})"


def _canonical(num: Polynomial, den: Polynomial):
    if not den.coeffs:
        raise ZeroDenominator("rational function with zero denominator")
    if not num.coeffs:
        return ZERO, ONE
    if den.degree > 0:
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
    lc = den.lead
    if lc != 1:
        num = num.scale(1 / lc)
        den = den.monic()
    return num, den


def _lift(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalFunction._raw(Polynomial.constant(x), ONE)
    return NotImplemented


T = RationalFunction._raw(Polynomial._raw((Fraction(0), Fraction(1))), ONE)


def rf_reduce(num: Polynomial, den: Polynomial) -> RationalFunction:
    """Unique reduced, denominator-monic representative of ``num / den``."""
    return RationalFunction(num, den)


_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rf_arith(op: str, a, b) -> RationalFunction:
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(_lift(a), _lift(b))


def rf_eval_at_zero(f: RationalFunction) -> Fraction:
    """Evaluate a reduced rational function at ``t = 0``.

    Raises :class:`SingularAtZero` when the reduced denominator vanishes there.
    """
    d0 = f.den.at_zero()
    if not d0:
        raise SingularAtZero(f"{f} has a pole at t = 0")
    return f.num.at_zero() / d0


def eval_at_zero(s):
    """Substitute ``t = 0`` into any scalar; plain numbers pass through."""
    if isinstance(s, RationalFunction):
        return rf_eval_at_zero(s)
    return s


def scalar_is_zero(s, mode: ScalarMode = ScalarMode.EXACT, scale=1.0,
                   tau: float = FLOAT_ZERO_TOL) -> bool:
    """Zero test used on pivots.

    Exact values are zero only when they are identically zero. A float counts
    as zero when ``|s| <= tau * max(1, scale)``, where ``scale`` is the
    magnitude of the operands that produced ``s``.
    """
    if mode is ScalarMode.EXACT:
        return not s
    return abs(s) <= tau * max(1.0, abs(scale))


_SCALAR_RE = re.compile(r"([+-]?)(\d+)(?:/(\d+)|\.(\d+))?")


def parse_scalar(text: str) -> Fraction:
    """Parse ``"32"``, ``"751/32"`` or ``"-2.2838"`` into an exact fraction."""
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise BadScalar(f"scalar must be a string or integer, got {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    m = _SCALAR_RE.fullmatch(text.strip())
    if m is None:
        raise BadScalar(f"cannot parse scalar {text!r}")
    sign, whole, den, frac = m.groups()
    if den is not None:
        if int(den) == 0:
            raise BadScalar(f"zero denominator in {text!r}")
        value = Fraction(int(whole), int(den))
    elif frac is not None:
        value = Fraction(int(whole + frac), 10 ** len(frac))
    else:
        value = Fraction(int(whole))
    return -value if sign == "-" else value


def format_scalar(s) -> str:
    """Text form of a scalar: ``p`` or ``p/q`` for fractions, shortest repr for floats."""
    if isinstance(s, Fraction):
        return str(s)
    if isinstance(s, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(s, int):
        return str(s)
    if isinstance(s, float):
        return repr(s)
    return str(s)


def to_mode(values: Sequence, mode: ScalarMode) -> list:
    """Convert to the scalar type of ``mode``; rational functions pass through in exact mode."""
    if mode is ScalarMode.F64:
        return [float(v) for v in values]
    return [v if isinstance(v, RationalFunction) else _frac(v) for v in values]
