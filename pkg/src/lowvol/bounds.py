"""Scalar bound functions for drilling and cusp-volume estimates.

All numbers enter as exact decimal strings and are turned into enclosures
on demand, so the working precision in force at the call site applies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Union

from . import interval as I
from .interval import CertifiedBool, DomainError, Interval, ival

TAU = ("0.4779", "1.0756", "1.0527", "1.2599", "1.2521", "1.0239", "1.0239")


@dataclass(frozen=True)
class BoundConstants:
    tube_density: str = "0.91"
    refined_density: str = "0.90817"      # printed value of sinh(0.5495) g((log 3)/2)
    horoball_density: str = "0.853276"    # printed truncation of d(inf)
    drilling_factor: str = "3.0177"
    tau: tuple = TAU
    thebound: str = "1.22"
    theotherbound: str = "1.17"           # a configuration choice, see max_admissible_bounds
    split_point: str = "0.5495"

    def __post_init__(self):
        if len(self.tau) != 7:
            raise ValueError("tau table must have 7 entries")
        from fractions import Fraction
        t, r, h = (Fraction(v) for v in (self.tube_density, self.refined_density, self.horoball_density))
        if not (0 < r < t < 1 and 0 < h < 1):
            raise ValueError("densities must satisfy 0 < refined < tube < 1 and 0 < horoball < 1")

    def iv(self, name: str) -> Interval:
        if name == "horoball_density":
            return Interval.truncated(self.horoball_density)
        return Interval.exact(getattr(self, name))

    def tau_iv(self, k: int) -> Interval:
        return Interval.exact(self.tau[k])


DEFAULT = BoundConstants()


def half_log3() -> Interval:
    return I.log(ival(3)) / 2


def _positive_arg(x, name: str) -> Interval:
    x = ival(x)
    if not x.lo > 0:
        raise DomainError(name, x, "requires x > 0")
    return x


# ---------------------------------------------------------------------------
# the bound functions


def adst_upper_bound(volM, L, R) -> Interval:
    """coth^3(2R) (vol M + (pi/2) L tanh R tanh 2R)."""
    volM, L, R = (_positive_arg(v, "adst_upper_bound") for v in (volM, L, R))
    two_r = 2 * R
    extra = I.pi_enclosure() / 2 * L * I.tanh(R) * I.tanh(two_r)
    return I.coth(two_r) ** 3 * (volM + extra)


def _coth_cubed_factor(x: Interval, density: Interval) -> Interval:
    two_x = 2 * x
    return I.coth(two_x) ** 3 * (1 + density / I.cosh(two_x))


def f(x, constants: BoundConstants = DEFAULT) -> Interval:
    """coth^3(2x) (1 + 0.91 / cosh 2x)."""
    return _coth_cubed_factor(_positive_arg(x, "f"), constants.iv("tube_density"))


def przeworski_g(x) -> Interval:
    """arcsin(1 / (2 cosh x)) / arcsinh(tanh x / sqrt 3)."""
    x = _positive_arg(x, "przeworski_g")
    num = I.arcsin(1 / (2 * I.cosh(x)))
    den = I.arcsinh(I.tanh(x) / I.sqrt(ival(3)))
    return num / den


def refined_density(constants: BoundConstants = DEFAULT) -> Interval:
    """Enclosure of sinh(0.5495) g((log 3)/2), the refined tube density bound."""
    return I.sinh(constants.iv("split_point")) * przeworski_g(half_log3())


def f1(x, density: Union[None, str, Interval] = None, constants: BoundConstants = DEFAULT) -> Interval:
    """coth^3(2x) (1 + rho / cosh 2x) with the refined density rho.

    By default rho is the certified enclosure of sinh(0.5495) g((log 3)/2).
    ``density="printed"`` uses the rounded decimal instead.
    """
    if density is None:
        rho = refined_density(constants)
    elif isinstance(density, str) and density == "printed":
        rho = constants.iv("refined_density")
    else:
        rho = ival(density)
    return _coth_cubed_factor(_positive_arg(x, "f1"), rho)


# ---------------------------------------------------------------------------
# monotonicity certificates

Derivative = Callable[[Interval], Interval]


def _d_coth3_2x(x: Interval) -> Interval:
    s = I.sinh(2 * x)
    return -6 * I.square(I.coth(2 * x)) / I.square(s)


def _d_sech_2x(x: Interval) -> Interval:
    return -2 * I.sinh(2 * x) / I.square(I.cosh(2 * x))


def _d_g_numerator(x: Interval) -> Interval:
    c = I.cosh(x)
    u = 1 / (2 * c)
    return -I.sinh(x) / (2 * I.square(c) * I.sqrt(1 - I.square(u)))


def _d_g_inv_denominator(x: Interval) -> Interval:
    # d/dx 1/arcsinh(tanh x / sqrt 3)
    r3 = I.sqrt(ival(3))
    th = I.tanh(x)
    den = I.arcsinh(th / r3)
    dden = (1 - I.square(th)) / r3 / I.sqrt(1 + I.square(th) / 3)
    return -dden / I.square(den)


def _g_numerator(x):
    return I.arcsin(1 / (2 * I.cosh(x)))


def _g_inv_denominator(x):
    return 1 / I.arcsinh(I.tanh(x) / I.sqrt(ival(3)))


# name -> list of (factor, derivative); the function is the product of
# positive decreasing factors
_FACTORS: dict[str, list[tuple[Callable, Derivative]]] = {
    "coth3_2x": [(lambda x: I.coth(2 * x) ** 3, _d_coth3_2x)],
    "sech_2x": [(lambda x: 1 / I.cosh(2 * x), _d_sech_2x)],
    "g": [(_g_numerator, _d_g_numerator), (_g_inv_denominator, _d_g_inv_denominator)],
}
_FACTORS["f"] = _FACTORS["coth3_2x"] + [(lambda x: 1 + DEFAULT.iv("tube_density") / I.cosh(2 * x), _d_sech_2x)]
_FACTORS["f1"] = _FACTORS["coth3_2x"] + [(lambda x: 1 + refined_density() / I.cosh(2 * x), _d_sech_2x)]

MONOTONE_FUNCTIONS = tuple(_FACTORS)


def _derivative_negative(deriv: Derivative, domain: Interval, max_depth: int, budget: int) -> bool:
    stack = [(domain, 0)]
    evals = 0
    while stack:
        piece, depth = stack.pop()
        evals += 1
        if evals > budget:
            return False
        try:
            d = deriv(piece)
        except DomainError:
            d = None
        if d is not None and d.hi < 0:
            continue
        if d is not None and d.lo >= 0:
            return False
        if depth >= max_depth:
            return False
        left, right = piece.bisect()
        stack.append((right, depth + 1))
        stack.append((left, depth + 1))
    return True


def certify_decreasing(fn: Union[str, Derivative], domain, max_depth: int = 40,
                       budget: int = 100_000) -> CertifiedBool:
    """PROVEN when fn is certified strictly decreasing on domain.

    A named function is split into positive factors, each certified by the
    sign of its derivative over an adaptive subdivision; a product of
    positive decreasing functions is decreasing.  A callable is taken to be
    the derivative itself.
    """
    domain = ival(domain)
    if callable(fn):
        pairs = [(None, fn)]
    else:
        try:
            pairs = _FACTORS[fn]
        except KeyError:
            raise ValueError(f"unknown function {fn!r}; expected one of {MONOTONE_FUNCTIONS}") from None
    for factor, deriv in pairs:
        if factor is not None and len(pairs) > 1:
            try:
                if not factor(domain).lo > 0:
                    return I.UNDECIDED
            except DomainError:
                return I.UNDECIDED
        if not _derivative_negative(deriv, domain, max_depth, budget):
            return I.UNDECIDED
    return I.PROVEN


# ---------------------------------------------------------------------------
# drilling and cusp-volume inequalities


def drilled_volume_factor(R, constants: BoundConstants = DEFAULT) -> Interval:
    """Enclosure of a constant c with vol N < c vol M for tube radius R.

    R >= 0.5495 uses f(0.5495) with density 0.91; (log 3)/2 <= R < 0.5495
    uses f1((log 3)/2) with the refined density.  Both rely on f and f1
    being decreasing.  An R straddling the split gets the hull of both.
    """
    R = ival(R)
    floor = half_log3()
    if R.lo < floor.lo:
        raise ValueError(f"tube radius {R} is below (log 3)/2")
    split = constants.iv("split_point")
    parts = []
    if R.hi >= split.lo:
        parts.append(f(split, constants))
    if R.lo < split.hi:
        parts.append(f1(floor, constants=constants))
    out = parts[0]
    for p in parts[1:]:
        out = out.hull(p)
    return out


class ThresholdCheck(NamedTuple):
    status: CertifiedBool      # REFUTED when the reverse inequality is proven
    lhs: Interval
    rhs: Interval
    slack: Interval            # rhs - lhs


def _compare_below(lhs: Interval, rhs: Interval) -> ThresholdCheck:
    status = I.certify(lhs, "strictly_below", rhs)
    if status is not I.PROVEN and lhs.lo > rhs.hi:
        status = I.REFUTED
    return ThresholdCheck(status, lhs, rhs, rhs - lhs)


def cusp_volume_limit(constants: BoundConstants = DEFAULT) -> Interval:
    """pi / d(inf)."""
    return I.pi_enclosure() / constants.iv("horoball_density")


def cusp_threshold_check(thebound, constants: BoundConstants = DEFAULT) -> ThresholdCheck:
    """Is 3.0177 * thebound < pi / d(inf)?"""
    bound = ival(thebound)
    if not bound.lo > 0:
        raise ValueError("thebound must be positive")
    return _compare_below(constants.iv("drilling_factor") * bound, cusp_volume_limit(constants))


class AdmissibleBounds(NamedTuple):
    max_thebound: Interval
    max_theotherbound: Interval


def _imin(a: Interval, b: Interval) -> Interval:
    return Interval(min(a.lo, b.lo), min(a.hi, b.hi))


def max_admissible_bounds(constants: BoundConstants = DEFAULT) -> AdmissibleBounds:
    density = constants.iv("tube_density")
    cusp = cusp_volume_limit(constants) / constants.iv("drilling_factor")
    return AdmissibleBounds(
        max_thebound=_imin(cusp, constants.tau_iv(3) / density),
        max_theotherbound=constants.tau_iv(1) / density,
    )


def exclusion_ratio(k: int, constants: BoundConstants = DEFAULT) -> Interval:
    return constants.tau_iv(k) / constants.iv("tube_density")


def exceptional_exclusion(bound, constants: BoundConstants = DEFAULT) -> frozenset[int]:
    """The k with tau_k / 0.91 certified above bound."""
    bound = ival(bound)
    if not bound.lo > 0:
        raise ValueError("bound must be positive")
    return frozenset(k for k in range(len(constants.tau))
                     if I.certify(exclusion_ratio(k, constants), "strictly_above", bound) is I.PROVEN)
