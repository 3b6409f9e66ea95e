"""Outward-rounded interval arithmetic over the extended reals.

Endpoints are plain floats by default.  Inside ``precision(bits)`` with
``bits > 53`` every interval built through :meth:`Interval.exact`,
:func:`pi_enclosure` or an operation on such intervals carries mpmath
endpoints rounded outward at ``bits`` bits.

Float mode relies on the platform libm being accurate to a couple of ulps
for the transcendental functions; every such result is widened by
``_LIBM_ULPS`` ulps in each direction.  Basic arithmetic is exact-aware:
sums use an error-free transformation and are only widened when inexact.
"""

from __future__ import annotations

import decimal
import math
import os
import sys
from contextlib import contextmanager
from contextvars import ContextVar
from enum import Enum
from fractions import Fraction
from numbers import Rational

import mpmath
from mpmath import mp, mpf

FLOAT_BITS = 53
DEFAULT_HIGH_BITS = 113
PRECISION_ENV = "LOWVOL_PRECISION"

_LIBM_ULPS = 4
_GUARD_BITS = 32
_INF = math.inf

_precision: ContextVar[int] = ContextVar("lowvol_precision", default=FLOAT_BITS)


class DomainError(ValueError):
    """An interval function was called outside its domain."""

    def __init__(self, func: str, x: "Interval", reason: str = ""):
        self.func = func
        self.interval = x
        msg = f"{func} is undefined on {x}"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)


def get_precision() -> int:
    return _precision.get()


def precision_from_env(default: int = FLOAT_BITS) -> int:
    raw = os.environ.get(PRECISION_ENV)
    return int(raw) if raw else default


@contextmanager
def precision(bits: int):
    """Run the enclosed block with ``bits`` of working precision."""
    bits = int(bits)
    if bits < FLOAT_BITS:
        raise ValueError(f"precision must be at least {FLOAT_BITS} bits, got {bits}")
    token = _precision.set(bits)
    try:
        yield bits
    finally:
        _precision.reset(token)


def _mp_bits() -> int:
    bits = _precision.get()
    return bits if bits > FLOAT_BITS else DEFAULT_HIGH_BITS


# ---------------------------------------------------------------------------
# endpoint helpers; rnd is -1 (toward -inf) or +1 (toward +inf)

DOWN = -1
UP = 1


def _is_mp(v) -> bool:
    return isinstance(v, mpf)


def _frac(v) -> Fraction:
    if _is_mp(v):
        if not mpmath.isfinite(v):
            raise OverflowError("infinite endpoint has no rational value")
        sign, man, exp, _ = v._mpf_
        return Fraction(-int(man) if sign else int(man)) * (Fraction(2) ** int(exp))
    return Fraction(v)


def _mp_ulp(v, bits: int):
    if v == 0:
        return mp.ldexp(mpf(1), -bits - 1100)
    return mp.ldexp(mpf(1), int(mp.mag(v)) - bits)


def _step(v, rnd: int, times: int = 1):
    if _is_mp(v):
        if not mpmath.isfinite(v):
            return v
        bits = _mp_bits()
        for _ in range(times):
            v = mp.fadd(v, rnd * _mp_ulp(v, bits), prec=bits, rounding="c" if rnd > 0 else "f")
        return v
    if math.isinf(v) or math.isnan(v):
        return v
    target = _INF if rnd > 0 else -_INF
    for _ in range(times):
        v = math.nextafter(v, target)
    return v


def _neg(v):
    # mpf.__neg__ rounds to the global mpmath precision; fneg(exact=True) does not
    return mp.fneg(v, exact=True) if _is_mp(v) else -v


def _rounding(rnd: int) -> str:
    return "c" if rnd > 0 else "f"


def _promote(a, b):
    if _is_mp(a) or _is_mp(b):
        return (a if _is_mp(a) else mpf(a)), (b if _is_mp(b) else mpf(b)), True
    return a, b, False


def _add(a, b, rnd: int):
    a, b, hp = _promote(a, b)
    if hp:
        return mp.fadd(a, b, prec=_mp_bits(), rounding=_rounding(rnd))
    s = a + b
    if math.isinf(s) or math.isnan(s):
        if math.isnan(s):
            raise ArithmeticError("inf - inf in interval endpoint sum")
        if math.isinf(a) or math.isinf(b) or rnd * s > 0:
            return s
        return math.copysign(sys.float_info.max, s)
    # TwoSum: the exact sum is s + err
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    if err == 0 or rnd * err < 0:
        return s
    return _step(s, rnd)


def _mul(a, b, rnd: int):
    if a == 0 or b == 0:
        return 0.0 if not (_is_mp(a) or _is_mp(b)) else mpf(0)
    a, b, hp = _promote(a, b)
    if hp:
        return mp.fmul(a, b, prec=_mp_bits(), rounding=_rounding(rnd))
    p = a * b
    if math.isinf(a) or math.isinf(b):
        return p
    if math.isinf(p):
        return p if rnd * p > 0 else math.copysign(sys.float_info.max, p)
    return _step(p, rnd)


def _div(a, b, rnd: int):
    if a == 0:
        return 0.0 if not (_is_mp(a) or _is_mp(b)) else mpf(0)
    a, b, hp = _promote(a, b)
    if hp:
        if mpmath.isinf(b):
            return mpf(0) if mpmath.isfinite(a) else a * mp.sign(b)
        return mp.fdiv(a, b, prec=_mp_bits(), rounding=_rounding(rnd))
    if math.isinf(b):
        if math.isinf(a):
            raise ArithmeticError("inf / inf in interval endpoint quotient")
        return 0.0
    q = a / b
    if math.isinf(a):
        return q
    if math.isinf(q):
        return q if rnd * q > 0 else math.copysign(sys.float_info.max, q)
    return _step(q, rnd)


_MATH_FUNCS = {
    "exp": math.exp,
    "log": math.log,
    "sqrt": math.sqrt,
    "sinh": math.sinh,
    "cosh": math.cosh,
    "tanh": math.tanh,
    "asin": math.asin,
    "asinh": math.asinh,
    "acosh": math.acosh,
    "atan": math.atan,
    "cos": math.cos,
    "sin": math.sin,
}

_MP_FUNCS = {
    "exp": mpmath.exp,
    "log": mpmath.log,
    "sqrt": mpmath.sqrt,
    "sinh": mpmath.sinh,
    "cosh": mpmath.cosh,
    "tanh": mpmath.tanh,
    "asin": mpmath.asin,
    "asinh": mpmath.asinh,
    "acosh": mpmath.acosh,
    "atan": mpmath.atan,
    "cos": mpmath.cos,
    "sin": mpmath.sin,
}


def _fn(name: str, v, rnd: int):
    """Directed enclosure endpoint of a scalar elementary function."""
    if _is_mp(v):
        bits = _mp_bits()
        with mp.workprec(bits + _GUARD_BITS):
            y = _MP_FUNCS[name](v)
        if not mpmath.isfinite(y):
            return y
        y = mp.fadd(y, 0, prec=bits, rounding=_rounding(rnd))
        return _step(y, rnd)
    try:
        y = _MATH_FUNCS[name](v)
    except OverflowError:
        big = sys.float_info.max
        if name in ("sinh",) and v < 0:
            return -_INF if rnd < 0 else -big
        return _INF if rnd > 0 else big
    if name == "sqrt":
        # correctly rounded by IEEE 754
        return _step(y, rnd)
    return _step(y, rnd, _LIBM_ULPS)


def _to_endpoint(q: Fraction, rnd: int):
    """Nearest representable endpoint on the safe side of the rational ``q``."""
    if _precision.get() > FLOAT_BITS:
        bits = _mp_bits()
        with mp.workprec(bits):
            v = mp.fdiv(q.numerator, q.denominator, prec=bits, rounding=_rounding(rnd))
        while (_frac(v) > q) if rnd < 0 else (_frac(v) < q):
            v = _step(v, rnd)
        return v
    try:
        v = q.numerator / q.denominator
    except OverflowError:
        return _INF if (rnd > 0) == (q > 0) else math.copysign(sys.float_info.max, q)
    if math.isinf(v):
        return v if rnd * v > 0 else math.copysign(sys.float_info.max, v)
    fv = Fraction(v)
    if rnd < 0 and fv > q:
        v = _step(v, DOWN)
    elif rnd > 0 and fv < q:
        v = _step(v, UP)
    return v


def _num(v):
    if isinstance(v, bool):
        raise TypeError("bool is not an interval endpoint")
    if isinstance(v, float) or _is_mp(v):
        return v
    if isinstance(v, int):
        f = float(v)
        if int(f) != v:
            raise ValueError(f"integer {v} is not exactly representable; use Interval.exact")
        return f
    raise TypeError(f"unsupported endpoint type {type(v).__name__}")


# ---------------------------------------------------------------------------


class Interval:
    """Closed interval ``[lo, hi]`` with ``lo <= hi``."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = _num(lo)
        hi = lo if hi is None else _num(hi)
        if lo != lo or hi != hi:
            raise ValueError("NaN endpoint")
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("Interval is immutable")

    # construction ---------------------------------------------------------

    @classmethod
    def exact(cls, value, hi=None) -> "Interval":
        """Tightest enclosure of a rational value (int, Fraction, decimal str, float)."""
        lo_q = _as_fraction(value)
        hi_q = lo_q if hi is None else _as_fraction(hi)
        if lo_q > hi_q:
            raise ValueError(f"empty interval [{value}, {hi}]")
        return cls(_to_endpoint(lo_q, DOWN), _to_endpoint(hi_q, UP))

    @classmethod
    def truncated(cls, digits: str) -> "Interval":
        """Enclosure of a quantity printed as a truncated decimal ``digits...``.

        ``Interval.truncated("0.853276")`` is ``[0.853276, 0.853277]``.
        """
        lo = Fraction(digits)
        decimals = len(digits.split(".")[1]) if "." in digits else 0
        step = Fraction(1, 10**decimals)
        if lo >= 0:
            return cls.exact(lo, lo + step)
        return cls.exact(lo - step, lo)

    @classmethod
    def entire(cls) -> "Interval":
        return cls(-_INF, _INF)

    # inspection -----------------------------------------------------------

    @property
    def is_high_precision(self) -> bool:
        return _is_mp(self.lo) or _is_mp(self.hi)

    def width(self):
        if self.is_high_precision:
            lo, hi, _ = _promote(self.lo, self.hi)
            return mp.fsub(hi, lo, prec=_mp_bits(), rounding="c")
        return _add(self.hi, _neg(self.lo), UP)

    def mid(self) -> float:
        if math.isinf(float(self.lo)) or math.isinf(float(self.hi)):
            return float(self.lo) if math.isinf(float(self.hi)) else float(self.hi)
        return float((_frac(self.lo) + _frac(self.hi)) / 2)

    def contains(self, value) -> bool:
        """Whether ``value`` (a number, decimal string or Interval) lies inside."""
        if isinstance(value, Interval):
            return self.issuperset(value)
        if isinstance(value, float) or _is_mp(value):
            return self.lo <= value <= self.hi
        q = _as_fraction(value)
        return _le_q(self.lo, q) and _ge_q(self.hi, q)

    __contains__ = contains

    def issuperset(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def issubset(self, other: "Interval") -> bool:
        return other.issuperset(self)

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def hull(self, other: "Interval") -> "Interval":
        other = ival(other)
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def intersect(self, other: "Interval") -> "Interval":
        other = ival(other)
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            raise ValueError(f"{self} and {other} are disjoint")
        return Interval(lo, hi)

    def bisect(self) -> tuple["Interval", "Interval"]:
        if self.is_high_precision:
            lo, hi, _ = _promote(self.lo, self.hi)
            m = mp.ldexp(mp.fadd(lo, hi, prec=_mp_bits()), -1)
        else:
            m = self.lo / 2 + self.hi / 2
            if math.isinf(self.lo) or math.isinf(self.hi):
                raise ValueError("cannot bisect an unbounded interval")
        m = min(max(m, self.lo), self.hi)
        return Interval(self.lo, m), Interval(m, self.hi)

    def certainly_lt(self, other) -> bool:
        return self.hi < ival(other).lo

    def certainly_gt(self, other) -> bool:
        return self.lo > ival(other).hi

    def certainly_positive(self) -> bool:
        return self.lo > 0

    def certainly_negative(self) -> bool:
        return self.hi < 0

    # arithmetic -----------------------------------------------------------

    def __neg__(self):
        return Interval(_neg(self.hi), _neg(self.lo))

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Interval(_add(self.lo, other.lo, DOWN), _add(self.hi, other.hi, UP))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Interval(_add(self.lo, _neg(other.hi), DOWN), _add(self.hi, _neg(other.lo), UP))

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        if a >= 0 and c >= 0:
            return Interval(_mul(a, c, DOWN), _mul(b, d, UP))
        los = [_mul(x, y, DOWN) for x in (a, b) for y in (c, d)]
        his = [_mul(x, y, UP) for x in (a, b) for y in (c, d)]
        return Interval(min(los), max(his))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.lo <= 0 <= other.hi:
            raise DomainError("div", other, "divisor contains 0")
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        los = [_div(x, y, DOWN) for x in (a, b) for y in (c, d)]
        his = [_div(x, y, UP) for x in (a, b) for y in (c, d)]
        return Interval(min(los), max(his))

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, n):
        if not isinstance(n, int) or isinstance(n, bool):
            return NotImplemented
        if n < 0:
            if self.lo <= 0 <= self.hi:
                raise DomainError("pow", self, "negative power of an interval containing 0")
            base = self**-n
            if base.lo <= 0 <= base.hi:
                # the positive power underflowed; the reciprocal is unbounded on that side
                if self.lo > 0 or n % 2 == 0:
                    return Interval(_div(1.0, base.hi, DOWN), _INF)
                return Interval(-_INF, _div(1.0, base.lo, UP))
            return 1 / base
        if n == 0:
            return Interval(1.0)
        if n % 2 == 0:
            m = abs(self)
            lo = max(_pow_endpoint(m.lo, n, DOWN), _zero(self))
            return Interval(lo, _pow_endpoint(m.hi, n, UP))
        return Interval(_pow_endpoint(self.lo, n, DOWN), _pow_endpoint(self.hi, n, UP))

    def __abs__(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        zero = mpf(0) if self.is_high_precision else 0.0
        return Interval(zero, max(_neg(self.lo), self.hi))

    # equality is endpoint identity, not numerical comparison
    def __eq__(self, other):
        if not isinstance(other, Interval):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((float(self.lo), float(self.hi)))

    def __repr__(self):
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __str__(self):
        if self.is_high_precision:
            return f"[{mpmath.nstr(self.lo, 20)}, {mpmath.nstr(self.hi, 20)}]"
        return f"[{self.lo!r}, {self.hi!r}]"

    def to_json(self) -> dict:
        return {"lo": _endpoint_str(self.lo, DOWN), "hi": _endpoint_str(self.hi, UP)}


def _endpoint_str(v, rnd: int) -> str:
    if not _is_mp(v):
        return repr(v)
    if not mpmath.isfinite(v):
        return "inf" if v > 0 else "-inf"
    digits = int(_mp_bits() * 0.30103) + 2
    ctx = decimal.Context(prec=digits, rounding=decimal.ROUND_FLOOR if rnd < 0 else decimal.ROUND_CEILING)
    q = _frac(v)
    return str(ctx.divide(decimal.Decimal(q.numerator), decimal.Decimal(q.denominator)))


def _le_q(v, q: Fraction) -> bool:
    if not (math.isfinite(float(v)) if not _is_mp(v) else mpmath.isfinite(v)):
        return v < 0
    return _frac(v) <= q


def _ge_q(v, q: Fraction) -> bool:
    if not (math.isfinite(float(v)) if not _is_mp(v) else mpmath.isfinite(v)):
        return v > 0
    return _frac(v) >= q


def _pow_endpoint(v, n: int, rnd: int):
    if v < 0:
        # odd n only
        return _neg(_pow_endpoint(_neg(v), n, -rnd))
    out = mpf(1) if _is_mp(v) else 1.0
    for _ in range(n):
        out = _mul(out, v, rnd)
    return out


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a number")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float) or _is_mp(value):
        return _frac(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def _coerce(other):
    if isinstance(other, Interval):
        return other
    if isinstance(other, bool):
        return NotImplemented
    if isinstance(other, float) or _is_mp(other):
        return Interval(other)
    if isinstance(other, (int, Fraction)):
        return Interval.exact(other)
    return NotImplemented


def ival(x) -> Interval:
    """Coerce a number, decimal string or Fraction to an enclosing Interval."""
    if isinstance(x, Interval):
        return x
    if isinstance(x, str):
        return Interval.exact(x)
    out = _coerce(x)
    if out is NotImplemented:
        raise TypeError(f"cannot make an interval from {type(x).__name__}")
    return out


# ---------------------------------------------------------------------------
# elementary functions


def _monotone(name: str, x: Interval) -> Interval:
    return Interval(_fn(name, x.lo, DOWN), _fn(name, x.hi, UP))


def _clamp(x: Interval, lo=None, hi=None) -> Interval:
    a, b = x.lo, x.hi
    if lo is not None:
        a, b = max(a, lo), max(b, lo)
    if hi is not None:
        a, b = min(a, hi), min(b, hi)
    return Interval(a, b)


def _zero(x: Interval):
    return mpf(0) if x.is_high_precision else 0.0


def _one(x: Interval):
    return mpf(1) if x.is_high_precision else 1.0


def exp(x) -> Interval:
    x = ival(x)
    return _clamp(_monotone("exp", x), lo=_zero(x))


def log(x) -> Interval:
    x = ival(x)
    if x.lo < 0 or x.hi == 0:
        raise DomainError("log", x, "requires x > 0")
    lo = -_INF if x.lo == 0 else _fn("log", x.lo, DOWN)
    return Interval(lo, _fn("log", x.hi, UP))


def sqrt(x) -> Interval:
    x = ival(x)
    if x.lo < 0:
        raise DomainError("sqrt", x, "requires x >= 0")
    return _clamp(_monotone("sqrt", x), lo=_zero(x))


def square(x) -> Interval:
    return ival(x) ** 2


def sinh(x) -> Interval:
    return _monotone("sinh", ival(x))


def cosh(x) -> Interval:
    x = ival(x)
    if x.lo >= 0:
        out = _monotone("cosh", x)
    elif x.hi <= 0:
        out = _monotone("cosh", -x)
    else:
        out = Interval(_one(x), _fn("cosh", max(_neg(x.lo), x.hi), UP))
    return _clamp(out, lo=_one(x))


def tanh(x) -> Interval:
    x = ival(x)
    return _clamp(_monotone("tanh", x), lo=-_one(x), hi=_one(x))


def coth(x) -> Interval:
    x = ival(x)
    if x.lo <= 0 <= x.hi:
        raise DomainError("coth", x, "requires 0 not in x")
    t = tanh(x)
    if t.lo <= 0 <= t.hi:
        raise DomainError("coth", x, "argument too close to 0 for this precision")
    return 1 / t


def arcsin(x) -> Interval:
    x = ival(x)
    if x.lo < -1 or x.hi > 1:
        raise DomainError("arcsin", x, "requires x within [-1, 1]")
    return _monotone("asin", x)


def arcsinh(x) -> Interval:
    return _monotone("asinh", ival(x))


def arccosh(x) -> Interval:
    x = ival(x)
    if x.lo < 1:
        raise DomainError("arccosh", x, "requires x >= 1")
    return _clamp(_monotone("acosh", x), lo=_zero(x))


def arctan(x) -> Interval:
    return _monotone("atan", ival(x))


def pi_enclosure() -> Interval:
    """Enclosure of pi at the working precision."""
    if _precision.get() > FLOAT_BITS:
        bits = _mp_bits()
        with mp.workprec(bits + _GUARD_BITS):
            p = +mp.pi
        lo = mp.fadd(p, 0, prec=bits, rounding="f")
        hi = mp.fadd(p, 0, prec=bits, rounding="c")
        return Interval(_step(lo, DOWN), _step(hi, UP))
    with mp.workprec(200):
        q = _frac(+mp.pi)
    # q is within 2**-190 of pi, far below one float ulp
    return Interval(_to_endpoint(q, DOWN), _to_endpoint(q, UP))


def _trig(x: Interval, name: str, offset_half: bool) -> Interval:
    """cos (offset_half False) or sin (True) with interior extrema included."""
    one = _one(x)
    if math.isinf(float(x.lo)) or math.isinf(float(x.hi)):
        return Interval(-one, one)
    pi = pi_enclosure()
    if x.width() >= 2 * pi.lo:
        return Interval(-one, one)
    lo = min(_fn(name, x.lo, DOWN), _fn(name, x.hi, DOWN))
    hi = max(_fn(name, x.lo, UP), _fn(name, x.hi, UP))
    # extrema sit at k*pi (cos) or k*pi + pi/2 (sin), value (-1)**k
    shift = 0.5 if offset_half else 0.0
    k0 = math.floor(float(x.lo) / math.pi - shift) - 1
    k1 = math.ceil(float(x.hi) / math.pi - shift) + 1
    for k in range(k0, k1 + 1):
        crit = pi * Fraction(2 * k + 1, 2) if offset_half else pi * k
        if crit.intersects(x):
            if k % 2 == 0:
                hi = one
            else:
                lo = -one
    return _clamp(Interval(lo, hi), lo=-one, hi=one)


def cos(x) -> Interval:
    return _trig(ival(x), "cos", False)


def sin(x) -> Interval:
    return _trig(ival(x), "sin", True)


_ELEM = {
    "exp": exp,
    "log": log,
    "sqrt": sqrt,
    "sinh": sinh,
    "cosh": cosh,
    "tanh": tanh,
    "coth": coth,
    "arcsin": arcsin,
    "arcsinh": arcsinh,
    "arccosh": arccosh,
    "arctan": arctan,
    "square": square,
    "cos": cos,
    "sin": sin,
}

ELEMENTARY = tuple(_ELEM)


def elem(x, kind: str) -> Interval:
    try:
        fn = _ELEM[kind]
    except KeyError:
        raise ValueError(f"unknown elementary function {kind!r}") from None
    return fn(x)


def arith(a, b, kind: str) -> Interval:
    a, b = ival(a), ival(b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown arithmetic kind {kind!r}")


# ---------------------------------------------------------------------------


class CertifiedBool(Enum):
    PROVEN = "PROVEN"
    UNDECIDED = "UNDECIDED"
    REFUTED = "REFUTED"

    def __bool__(self):
        return self is CertifiedBool.PROVEN


PROVEN = CertifiedBool.PROVEN
UNDECIDED = CertifiedBool.UNDECIDED
REFUTED = CertifiedBool.REFUTED


def certify(x, relation: str, threshold) -> CertifiedBool:
    """PROVEN only if the enclosures are disjoint in the asserted order."""
    x, threshold = ival(x), ival(threshold)
    if relation == "strictly_below":
        ok = x.hi < threshold.lo
    elif relation == "strictly_above":
        ok = x.lo > threshold.hi
    else:
        raise ValueError(f"unknown relation {relation!r}")
    return PROVEN if ok else UNDECIDED
