"""Upper half-space model of hyperbolic 3-space.

Every routine works on two kinds of scalars:

* plain ``float`` / ``complex`` for fast numerical exploration, and
* :class:`~lowvol.interval.Interval` / :class:`ComplexInterval` for
  certified enclosures.

A point of H^3 is ``(x, y, t)`` with height ``t > 0``; its boundary
projection is ``w = x + iy``.  Isometries are ``PSL(2, C)`` matrices acting
by the Poincare extension of linear fractional maps.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from . import interval as I
from .interval import CertifiedBool, DomainError, Interval, ival
from .words import parse_word

# ---------------------------------------------------------------------------
# rectangular complex intervals


class ComplexInterval:
    """``re + i*im`` with both parts Intervals."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0.0):
        object.__setattr__(self, "re", ival(re))
        object.__setattr__(self, "im", ival(im))

    def __setattr__(self, name, value):
        raise AttributeError("ComplexInterval is immutable")

    @classmethod
    def coerce(cls, z) -> "ComplexInterval":
        if isinstance(z, ComplexInterval):
            return z
        if isinstance(z, complex):
            return cls(z.real, z.imag)
        return cls(z, 0.0)

    def __add__(self, other):
        o = _cicoerce(other)
        return NotImplemented if o is None else ComplexInterval(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _cicoerce(other)
        return NotImplemented if o is None else ComplexInterval(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _cicoerce(other)
        return NotImplemented if o is None else o - self

    def __neg__(self):
        return ComplexInterval(-self.re, -self.im)

    def __mul__(self, other):
        o = _cicoerce(other)
        if o is None:
            return NotImplemented
        return ComplexInterval(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _cicoerce(other)
        if o is None:
            return NotImplemented
        den = o.abs2()
        if den.lo <= 0:
            raise DomainError("complex div", den, "divisor may vanish")
        num = self * o.conjugate()
        return ComplexInterval(num.re / den, num.im / den)

    def __rtruediv__(self, other):
        o = _cicoerce(other)
        return NotImplemented if o is None else o / self

    def conjugate(self):
        return ComplexInterval(self.re, -self.im)

    def abs2(self) -> Interval:
        return I.square(self.re) + I.square(self.im)

    def abs(self) -> Interval:
        return I.sqrt(self.abs2())

    def exp(self):
        r = I.exp(self.re)
        return ComplexInterval(r * I.cos(self.im), r * I.sin(self.im))

    def sqrt(self):
        """Principal square root; the argument must avoid the branch cut."""
        r = self.abs()
        if self.re.lo > 0:
            s = I.sqrt(_nonneg((r + self.re) / 2))
            return ComplexInterval(s, self.im / (2 * s))
        if self.im.lo > 0 or self.im.hi < 0:
            s_re = I.sqrt(_nonneg((r + self.re) / 2))
            s_im = I.sqrt(_nonneg((r - self.re) / 2))
            return ComplexInterval(s_re, s_im if self.im.lo > 0 else -s_im)
        raise DomainError("complex sqrt", self.re, "argument may meet the branch cut")

    def is_zero(self) -> bool:
        return self.re.lo == self.re.hi == 0 and self.im.lo == self.im.hi == 0

    def contains(self, z) -> bool:
        z = complex(z)
        return self.re.contains(z.real) and self.im.contains(z.imag)

    def mid(self) -> complex:
        return complex(self.re.mid(), self.im.mid())

    def __repr__(self):
        return f"ComplexInterval({self.re}, {self.im})"


def _nonneg(x: Interval) -> Interval:
    # only for quantities that are >= 0 mathematically
    zero = 0.0 if not x.is_high_precision else x.lo * 0
    return Interval(max(x.lo, zero), max(x.hi, zero))


def _cicoerce(z):
    if isinstance(z, ComplexInterval):
        return z
    if isinstance(z, (Interval, int, float, complex)) and not isinstance(z, bool):
        return ComplexInterval.coerce(z)
    return None


# ---------------------------------------------------------------------------
# scalar dispatch

Real = Union[float, Interval]
Cx = Union[complex, ComplexInterval]


def _is_iv(*zs) -> bool:
    return any(isinstance(z, (Interval, ComplexInterval)) for z in zs)


def _cx(z, force_iv: bool = False):
    if isinstance(z, ComplexInterval):
        return z
    if isinstance(z, Interval) or force_iv:
        return ComplexInterval.coerce(z)
    return complex(z)


def _re(z):
    return z.re if isinstance(z, ComplexInterval) else z.real


def _im(z):
    return z.im if isinstance(z, ComplexInterval) else z.imag


def _cabs(z):
    return z.abs() if isinstance(z, ComplexInterval) else abs(z)


def _cabs2(z):
    if isinstance(z, ComplexInterval):
        return z.abs2()
    return z.real * z.real + z.imag * z.imag


def _cexp(z):
    return z.exp() if isinstance(z, ComplexInterval) else cmath.exp(z)


def _csqrt(z):
    return z.sqrt() if isinstance(z, ComplexInterval) else cmath.sqrt(z)


def _rsqrt(x):
    return I.sqrt(x) if isinstance(x, Interval) else math.sqrt(x)


def _rasinh(x):
    return I.arcsinh(x) if isinstance(x, Interval) else math.asinh(x)


def _racosh_clamped(x):
    """arccosh of a quantity known to be >= 1 mathematically."""
    if isinstance(x, Interval):
        one = 1.0 if not x.is_high_precision else x.lo * 0 + 1
        return I.arccosh(Interval(max(x.lo, one), max(x.hi, one)))
    return math.acosh(max(x, 1.0))


def _rexp(x):
    return I.exp(x) if isinstance(x, Interval) else math.exp(x)


def _rsinh(x):
    return I.sinh(x) if isinstance(x, Interval) else math.sinh(x)


def _pi_like(x):
    return I.pi_enclosure() if isinstance(x, Interval) else math.pi


def _is_exact_zero(z) -> bool:
    if isinstance(z, ComplexInterval):
        return z.is_zero()
    if isinstance(z, Interval):
        return z.lo == z.hi == 0
    return z == 0


def _positive(x, name: str):
    """Check x > 0 (certainly, for intervals)."""
    ok = x.lo > 0 if isinstance(x, Interval) else x > 0
    if not ok:
        raise ValueError(f"{name} must be positive, got {x}")


# ---------------------------------------------------------------------------
# points and boundary points


@dataclass(frozen=True)
class Point3:
    x: Real
    y: Real
    t: Real

    def __post_init__(self):
        t = self.t
        if (t.lo <= 0) if isinstance(t, Interval) else not (t > 0):
            raise ValueError(f"height must be positive, got {t}")

    @property
    def w(self) -> Cx:
        if _is_iv(self.x, self.y):
            return ComplexInterval(self.x, self.y)
        return complex(self.x, self.y)


@dataclass(frozen=True)
class BoundaryPoint:
    """A point of the sphere at infinity; ``value=None`` is infinity itself."""

    value: Cx | None = None

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def __repr__(self):
        return "BoundaryPoint(inf)" if self.value is None else f"BoundaryPoint({self.value!r})"


INFINITY = BoundaryPoint(None)


def boundary(z) -> BoundaryPoint:
    if isinstance(z, BoundaryPoint):
        return z
    if z is None or (isinstance(z, (float, complex)) and cmath.isinf(z)):
        return INFINITY
    return BoundaryPoint(_cx(z))


@dataclass(frozen=True)
class Geodesic:
    p: BoundaryPoint
    q: BoundaryPoint

    def __init__(self, p, q):
        p, q = boundary(p), boundary(q)
        if p.is_infinity and q.is_infinity:
            raise ValueError("geodesic endpoints must be distinct")
        if not (p.is_infinity or q.is_infinity):
            if not _is_iv(p.value, q.value) and p.value == q.value:
                raise ValueError("geodesic endpoints must be distinct")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)


# ---------------------------------------------------------------------------
# Moebius transformations


class ClassificationError(ValueError):
    def __init__(self, kind: str, m=None):
        self.kind = kind
        super().__init__(f"isometry is {kind}, not loxodromic")


class MoebiusTransform:
    """Element of PSL(2, C), stored with determinant 1."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d, *, normalize: bool = True):
        iv = _is_iv(a, b, c, d)
        a, b, c, d = (_cx(e, iv) for e in (a, b, c, d))
        if normalize:
            det = a * d - b * c
            if iv:
                if det.re.lo <= 0 <= det.re.hi and det.im.lo <= 0 <= det.im.hi:
                    raise ValueError("determinant may vanish")
                if not (det.re.lo == det.re.hi == 1 and det.im.lo == det.im.hi == 0):
                    s = det.sqrt()
                    a, b, c, d = a / s, b / s, c / s, d / s
            else:
                if det == 0:
                    raise ValueError("singular matrix")
                if det != 1:
                    s = cmath.sqrt(det)
                    a, b, c, d = a / s, b / s, c / s, d / s
        for name, v in zip("abcd", (a, b, c, d)):
            object.__setattr__(self, name, v)

    def __setattr__(self, name, value):
        raise AttributeError("MoebiusTransform is immutable")

    @classmethod
    def identity(cls) -> "MoebiusTransform":
        return cls(1, 0, 0, 1)

    @classmethod
    def diagonal(cls, z) -> "MoebiusTransform":
        """``diag(e^{z/2}, e^{-z/2})``: translation by Re z along (0, inf)."""
        h = _cexp(_cx(z) / 2)
        return cls(h, 0, 0, 1 / h, normalize=False)

    @classmethod
    def translation(cls, w) -> "MoebiusTransform":
        return cls(1, w, 0, 1, normalize=False)

    @property
    def is_interval(self) -> bool:
        return isinstance(self.a, ComplexInterval)

    def entries(self):
        return self.a, self.b, self.c, self.d

    def trace(self):
        return self.a + self.d

    def det(self):
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "MoebiusTransform") -> "MoebiusTransform":
        a, b, c, d = self.entries()
        e, f, g, h = other.entries()
        return MoebiusTransform(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h,
                                normalize=False)

    def inverse(self) -> "MoebiusTransform":
        return MoebiusTransform(self.d, -self.b, -self.c, self.a, normalize=False)

    def conjugate_by(self, g: "MoebiusTransform") -> "MoebiusTransform":
        return g @ self @ g.inverse()

    def __call__(self, obj):
        return apply(self, obj)

    def projectively_equal(self, other: "MoebiusTransform", rel_tol: float = 1e-9) -> bool:
        """Float-mode test that the two matrices agree up to a scalar."""
        u = [_mid(z) for z in self.entries()]
        v = [_mid(z) for z in other.entries()]
        scale = max(abs(z) for z in u) * max(abs(z) for z in v)
        for i in range(4):
            for j in range(i + 1, 4):
                if abs(u[i] * v[j] - u[j] * v[i]) > rel_tol * scale:
                    return False
        return True

    def is_identity(self, rel_tol: float = 1e-9) -> bool:
        return self.projectively_equal(MoebiusTransform.identity(), rel_tol)

    def classify(self, rel_tol: float = 1e-10) -> str:
        """'identity', 'parabolic', 'elliptic' or 'loxodromic' (float mode)."""
        tr = _mid(self.a) + _mid(self.d)
        tr2 = tr * tr
        tol = rel_tol * max(1.0, abs(tr2))
        if abs(tr2.imag) <= tol and -tol <= tr2.real <= 4 + tol:
            if abs(tr2 - 4) <= tol:
                return "identity" if self.is_identity() else "parabolic"
            return "elliptic"
        return "loxodromic"

    def __repr__(self):
        return f"MoebiusTransform({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"


def _mid(z) -> complex:
    return z.mid() if isinstance(z, ComplexInterval) else complex(z)


def _apply_boundary_raw(a, b, c, d, bp: BoundaryPoint) -> BoundaryPoint:
    if bp.is_infinity:
        return INFINITY if _is_exact_zero(c) else BoundaryPoint(a / c)
    z = bp.value
    den = c * z + d
    if _is_exact_zero(den):
        return INFINITY
    return BoundaryPoint((a * z + b) / den)


def apply(m: MoebiusTransform, obj):
    """Act on a Point3, BoundaryPoint or Geodesic."""
    if isinstance(obj, Point3):
        return _apply_point(m, obj)
    if isinstance(obj, BoundaryPoint):
        return _apply_boundary_raw(*m.entries(), obj)
    if isinstance(obj, Geodesic):
        return Geodesic(apply(m, obj.p), apply(m, obj.q))
    raise TypeError(f"cannot apply a Moebius transformation to {type(obj).__name__}")


def _apply_point(m: MoebiusTransform, p: Point3) -> Point3:
    a, b, c, d = m.entries()
    iv = m.is_interval or _is_iv(p.x, p.y, p.t)
    if iv:
        a, b, c, d = (ComplexInterval.coerce(e) for e in (a, b, c, d))
        z = ComplexInterval(p.x, p.y)
        t = ival(p.t)
    else:
        z, t = p.w, float(p.t)
    czd = c * z + d
    t2 = t * t
    den = _cabs2(czd) + _cabs2(c) * t2
    num = (a * z + b) * czd.conjugate() + a * c.conjugate() * t2
    if iv:
        num = ComplexInterval(num.re / den, num.im / den)
    else:
        num = num / den
    return Point3(_re(num), _im(num), t / den)


# ---------------------------------------------------------------------------
# metric quantities


def dist(p: Point3, q: Point3):
    """Hyperbolic distance: 2 asinh(|p - q| / (2 sqrt(t_p t_q)))."""
    dx, dy, dt = p.x - q.x, p.y - q.y, p.t - q.t
    if _is_iv(dx, dy, dt):
        chord2 = I.square(ival(dx)) + I.square(ival(dy)) + I.square(ival(dt))
        return 2 * I.arcsinh(I.sqrt(chord2) / (2 * I.sqrt(ival(p.t) * ival(q.t))))
    chord = math.sqrt(dx * dx + dy * dy + dt * dt)
    return 2 * math.asinh(chord / (2 * math.sqrt(p.t * q.t)))


def _ellipse_cosh(t):
    """cosh(Re w) for any w with cosh(w) = t: (|t - 1| + |t + 1|) / 2."""
    return (_cabs(t - 1) + _cabs(t + 1)) / 2


def translation_length(m: MoebiusTransform):
    """Real translation length of a loxodromic isometry."""
    t = m.trace() / 2
    arg = _ellipse_cosh(t)
    if isinstance(arg, Interval):
        if not arg.lo > 1:
            raise ClassificationError("not certifiably loxodromic", m)
    else:
        kind = m.classify()
        if kind != "loxodromic":
            raise ClassificationError(kind, m)
    return 2 * _racosh_clamped(arg)


def complex_translation_length(m: MoebiusTransform) -> complex:
    """``lambda`` with ``trace = +-2 cosh(lambda/2)`` and ``Re lambda >= 0`` (float mode)."""
    lam = 2 * cmath.acosh(_mid(m.a + m.d) / 2)
    return -lam if lam.real < 0 else lam


def axis(m: MoebiusTransform) -> Geodesic:
    translation_length(m)
    a, b, c, d = m.entries()
    if _is_exact_zero(c):
        return Geodesic(b / (d - a), INFINITY)
    if isinstance(c, ComplexInterval) and c.re.lo <= 0 <= c.re.hi and c.im.lo <= 0 <= c.im.hi:
        raise ValueError("cannot decide whether the axis passes through infinity")
    s = _csqrt((a + d) * (a + d) - 4)
    return Geodesic((a - d - s) / (2 * c), (a - d + s) / (2 * c))


def _normalizing_map(g: Geodesic):
    """Raw coefficients of a map sending g.p -> 0 and g.q -> inf."""
    p, q = g.p, g.q
    if q.is_infinity:
        return 1, -p.value, 0, 1
    if p.is_infinity:
        return 0, 1, 1, -q.value
    return 1, -p.value, 1, -q.value


def geodesic_distance(g1: Geodesic, g2: Geodesic):
    """Minimum distance between two geodesics (0 if they meet or share an endpoint).

    After sending g1 to the vertical axis over 0, a geodesic with endpoints
    ``a, b`` lies at distance ``arccosh((|a| + |b|) / |a - b|)`` from it.
    """
    coeffs = _normalizing_map(g1)
    ea = _apply_boundary_raw(*coeffs, g2.p)
    eb = _apply_boundary_raw(*coeffs, g2.q)
    iv = any(isinstance(e.value, ComplexInterval) for e in (ea, eb, g1.p, g1.q) if e.value is not None)
    if ea.is_infinity or eb.is_infinity:
        return Interval(0.0) if iv else 0.0
    a, b = ea.value, eb.value
    if _is_exact_zero(a) or _is_exact_zero(b):
        return Interval(0.0) if iv else 0.0
    ratio = (_cabs(a) + _cabs(b)) / _cabs(a - b)
    return _racosh_clamped(ratio)


def tube_volume(L, R):
    """Volume ``pi L sinh^2 R`` of the radius-R tube about a geodesic of length L."""
    if isinstance(L, (int, float)) and not L > 0:
        raise ValueError(f"length must be positive, got {L}")
    if isinstance(L, Interval) or isinstance(R, Interval):
        L, R = ival(L), ival(R)
        return I.pi_enclosure() * L * I.square(I.sinh(R))
    return math.pi * L * math.sinh(R) ** 2


# ---------------------------------------------------------------------------
# the (L, D, R) parametrization of a pair of isometries


def gmt_pair(L, D, R) -> tuple[MoebiusTransform, MoebiusTransform]:
    """Return ``(f, w)``.

    ``f = diag(e^{L/2}, e^{-L/2})`` translates along (0, inf) by Re L and
    ``w = diag(e^{R/2}, e^{-R/2}) H diag(e^{D/2}, e^{-D/2}) H`` with
    ``H = [[1, 1], [1, -1]]``.  The middle factor translates along the
    geodesic (-1, 1) by Re D, so ``w`` moves the axis of ``f`` to a geodesic
    at distance Re D from it; tubes of radius Re D / 2 about the two axes
    touch.
    """
    iv = _is_iv(L, D, R)
    L, D, R = (_cx(z, iv) for z in (L, D, R))
    _positive(_re(L), "Re L")
    _positive(_re(D), "Re D")
    f = MoebiusTransform.diagonal(L)
    h = MoebiusTransform(1, 1, 1, -1, normalize=False)
    middle = h @ MoebiusTransform.diagonal(D) @ h
    raw = MoebiusTransform.diagonal(R) @ middle
    # det(raw) = det(H)^2 = 4 exactly
    w = MoebiusTransform(*(e / 2 for e in raw.entries()), normalize=False)
    return f, w


# ---------------------------------------------------------------------------
# group words


def evaluate_word(word: str, mx: MoebiusTransform, my: MoebiusTransform) -> MoebiusTransform:
    """Matrix product of ``word`` read left to right, with X = mx^-1, Y = my^-1."""
    table = {(0, 1): mx, (0, -1): mx.inverse(), (1, 1): my, (1, -1): my.inverse()}
    out = None
    for letter in parse_word(word):
        g = table[letter]
        out = g if out is None else out @ g
    if out is None:
        iv = mx.is_interval or my.is_interval
        one = ComplexInterval(1.0) if iv else 1
        zero = ComplexInterval(0.0) if iv else 0
        return MoebiusTransform(one, zero, zero, one, normalize=False)
    return out


# ---------------------------------------------------------------------------
# displacement inequalities for free groups


def displacement_sum(gens: Sequence[MoebiusTransform], z: Point3):
    """Sum over generators of ``1 / (1 + exp(dist(z, g z)))``."""
    if not gens:
        raise ValueError("need at least one generator")
    total = None
    for g in gens:
        term = 1 / (1 + _rexp(dist(z, apply(g, z))))
        total = term if total is None else total + term
    return total


def log_2k_minus_1(k: int) -> float:
    return math.log(2 * k - 1)


def strong_margulis_check(xi: MoebiusTransform, eta: MoebiusTransform, z: Point3, lam) -> CertifiedBool:
    """Test ``1/(1+e^{d(xi z, z)}) + 1/(1+e^{d(eta z, z)}) <= 2/(1+e^lam)`` at z."""
    lhs = displacement_sum([xi, eta], z)
    rhs = 2 / (1 + _rexp(lam))
    if isinstance(lhs, Interval) or isinstance(rhs, Interval):
        lhs, rhs = ival(lhs), ival(rhs)
        if lhs.hi <= rhs.lo:
            return I.PROVEN
        if lhs.lo > rhs.hi:
            return I.REFUTED
        return I.UNDECIDED
    return I.PROVEN if lhs <= rhs else I.REFUTED


def isometric_circles(m: MoebiusTransform):
    """((center, radius) of I(m), (center, radius) of I(m^-1)); c must be nonzero."""
    a, b, c, d = m.entries()
    r = 1 / _cabs(c)
    return (-d / c, r), (a / c, r)


def schottky_certificate(gens: Sequence[MoebiusTransform], rel_margin: float = 1e-12) -> CertifiedBool:
    """PROVEN when the isometric circles of all generators and inverses are pairwise disjoint.

    Each generator then maps the outside of its circle onto the inside of its
    inverse's circle, and ping-pong shows the group is free and discrete.
    Float inputs must clear the separation by a relative margin.
    """
    disks = []
    for g in gens:
        c = g.c
        if isinstance(c, ComplexInterval):
            if c.re.lo <= 0 <= c.re.hi and c.im.lo <= 0 <= c.im.hi:
                return I.UNDECIDED
        elif abs(c) <= rel_margin * max(abs(g.a), abs(g.d), 1.0):
            return I.UNDECIDED
        disks.extend(isometric_circles(g))
    for i in range(len(disks)):
        for j in range(i + 1, len(disks)):
            (ci, ri), (cj, rj) = disks[i], disks[j]
            gap = _cabs(ci - cj) - ri - rj
            if isinstance(gap, Interval):
                if not gap.lo > 0:
                    return I.UNDECIDED
            elif not gap > rel_margin * max(ri, rj, abs(ci), abs(cj)):
                return I.UNDECIDED
    return I.PROVEN


def schottky_generator(center: complex, inverse_center: complex, radius: float, twist: float = 0.0) -> MoebiusTransform:
    """The element whose isometric circle is |z - center| = radius and whose
    inverse has isometric circle |z - inverse_center| = radius."""
    c = cmath.exp(1j * twist) / radius
    d = -center * c
    a = inverse_center * c
    b = (a * d - 1) / c
    return MoebiusTransform(a, b, c, d, normalize=False)


def random_schottky_group(rng: random.Random, k: int = 2, spread: float = 4.0,
                          min_gap: float = 0.05) -> list[MoebiusTransform]:
    """k generators whose 2k isometric circles are disjoint by at least ``min_gap``."""
    while True:
        centers = [complex(rng.uniform(-spread, spread), rng.uniform(-spread, spread)) for _ in range(2 * k)]
        sep = min(abs(centers[i] - centers[j]) for i in range(2 * k) for j in range(i + 1, 2 * k))
        if sep <= 2 * min_gap:
            continue
        radii = [rng.uniform(0.2, 1.0) * (sep - min_gap) / 2 for _ in range(k)]
        return [schottky_generator(centers[2 * i], centers[2 * i + 1], radii[i], rng.uniform(0, 2 * math.pi))
                for i in range(k)]


def random_basepoint(rng: random.Random, spread: float = 5.0) -> Point3:
    return Point3(rng.uniform(-spread, spread), rng.uniform(-spread, spread),
                  math.exp(rng.uniform(math.log(0.02), math.log(10.0))))


def points_on_geodesic(g: Geodesic, params: Iterable[float]) -> list[Point3]:
    """Float points on g at signed arclength ``s`` from its top (or from height 1)."""
    out = []
    p, q = g.p, g.q
    for s in params:
        if p.is_infinity or q.is_infinity:
            foot = complex((q if p.is_infinity else p).value)
            out.append(Point3(foot.real, foot.imag, math.exp(s)))
        else:
            a, b = complex(p.value), complex(q.value)
            center, r = (a + b) / 2, abs(b - a) / 2
            u = (b - a) / abs(b - a)
            w = center + u * r * math.tanh(s)
            out.append(Point3(w.real, w.imag, r / math.cosh(s)))
    return out
