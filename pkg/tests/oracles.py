"""Independent reference computations used by the tests.

Nothing here imports lowvol; each oracle recomputes from scratch with
mpmath at high precision, with a brute-force search, or with sympy.
"""

import math

import mpmath
from mpmath import mp

ORACLE_DPS = 60


def hp(fn, *args):
    """Evaluate fn at ORACLE_DPS digits; arguments are str/int/float/mpf."""
    with mp.workdps(ORACLE_DPS):
        return fn(*[mpmath.mpf(a) for a in args])


def contains(iv, value) -> bool:
    """Exact test that an Interval contains an mpf value."""
    with mp.workdps(ORACLE_DPS):
        return mpmath.mpf(iv.lo) <= value <= mpmath.mpf(iv.hi)


# ---------------------------------------------------------------------------
# scalar functions

SCALAR = {
    "exp": mpmath.exp,
    "log": mpmath.log,
    "sqrt": mpmath.sqrt,
    "sinh": mpmath.sinh,
    "cosh": mpmath.cosh,
    "tanh": mpmath.tanh,
    "coth": mpmath.coth,
    "arcsin": mpmath.asin,
    "arcsinh": mpmath.asinh,
    "arccosh": mpmath.acosh,
    "arctan": mpmath.atan,
    "square": lambda x: x * x,
    "cos": mpmath.cos,
    "sin": mpmath.sin,
}


def f_ref(x, density="0.91"):
    def go(x, rho):
        return mpmath.coth(2 * x) ** 3 * (1 + rho / mpmath.cosh(2 * x))
    return hp(go, x, density)


def g_ref(x):
    def go(x):
        return mpmath.asin(1 / (2 * mpmath.cosh(x))) / mpmath.asinh(mpmath.tanh(x) / mpmath.sqrt(3))
    return hp(go, x)


def half_log3_ref():
    with mp.workdps(ORACLE_DPS):
        return mpmath.log(3) / 2


def refined_density_ref():
    with mp.workdps(ORACLE_DPS):
        return mpmath.sinh(mpmath.mpf("0.5495")) * g_ref(half_log3_ref())


def horoball_density_ref():
    """Boroczky's constant sqrt(3) / (2 V_tet), V_tet the regular ideal tetrahedron volume."""
    with mp.workdps(ORACLE_DPS):
        v_tet = 3 * mpmath.clsin(2, 2 * mpmath.pi / 3) / 2
        return mpmath.sqrt(3) / (2 * v_tet)


def adst_ref(volM, L, R):
    def go(v, L, R):
        return mpmath.coth(2 * R) ** 3 * (v + mpmath.pi / 2 * L * mpmath.tanh(R) * mpmath.tanh(2 * R))
    return hp(go, volM, L, R)


# ---------------------------------------------------------------------------
# hyperbolic geometry by brute force


def point_dist(p, q) -> float:
    (x1, y1, t1), (x2, y2, t2) = p, q
    return math.acosh(1 + ((x1 - x2) ** 2 + (y1 - y2) ** 2 + (t1 - t2) ** 2) / (2 * t1 * t2))


def geodesic_point(p, q, s):
    """Point at arclength s along the geodesic from boundary point p to q (None = infinity)."""
    if p is None or q is None:
        foot = complex(q if p is None else p)
        return (foot.real, foot.imag, math.exp(s))
    p, q = complex(p), complex(q)
    c, r = (p + q) / 2, abs(q - p) / 2
    w = c + (q - p) / abs(q - p) * r * math.tanh(s)
    return (w.real, w.imag, r / math.cosh(s))


def _golden_min(fn, lo, hi, iters=200):
    phi = (math.sqrt(5) - 1) / 2
    a, b = lo, hi
    c, d = b - phi * (b - a), a + phi * (b - a)
    fc, fd = fn(c), fn(d)
    for _ in range(iters):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - phi * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + phi * (b - a)
            fd = fn(d)
    return fn((a + b) / 2)


def geodesic_distance_search(g1, g2, span=30.0):
    """Nested golden-section minimization of the (convex) distance function."""
    def inner(s):
        p = geodesic_point(*g1, s)
        return _golden_min(lambda u: point_dist(p, geodesic_point(*g2, u)), -span, span)
    return _golden_min(inner, -span, span)


def _qmul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def _qinv(q):
    n = sum(v * v for v in q)
    return (q[0] / n, -q[1] / n, -q[2] / n, -q[3] / n)


def _qadd(p, q):
    return tuple(u + v for u, v in zip(p, q))


def mobius_apply_point(m, p):
    """(a q + b)(c q + d)^-1 with q = x + y i + t j, for m = [[a, b], [c, d]] with det 1."""
    (a, b), (c, d) = m
    q = (p[0], p[1], p[2], 0.0)

    def cx(z):
        z = complex(z)
        return (z.real, z.imag, 0.0, 0.0)

    num = _qadd(_qmul(cx(a), q), cx(b))
    den = _qadd(_qmul(cx(c), q), cx(d))
    r = _qmul(num, _qinv(den))
    return (r[0], r[1], r[2])
