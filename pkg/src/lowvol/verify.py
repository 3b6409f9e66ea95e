"""Run every quantitative check and assemble a deterministic report."""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import __version__
from . import bounds as B
from . import geometry as G
from . import groups as GR
from . import interval as I
from .interval import Interval, ival

SCHEMA_VERSION = "1.0"
DEFAULT_SEED = 1729

PROVEN = "PROVEN"
UNDECIDED = "UNDECIDED"
FAILED = "FAILED"

EXIT_OK, EXIT_UNDECIDED, EXIT_FAILED, EXIT_CONFIG = 0, 2, 3, 4

SECTIONS = ("drilling", "cusp", "exceptional", "homology", "geometry")


class ConfigError(ValueError):
    pass


def _positive_decimal(text: str, name: str) -> str:
    try:
        q = Fraction(str(text))
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"{name} must be a decimal number, got {text!r}") from None
    if q <= 0:
        raise ConfigError(f"{name} must be positive, got {text!r}")
    return str(text)


@dataclass(frozen=True)
class Config:
    thebound: str = "1.22"
    theotherbound: str = "1.17"
    precision: int = I.FLOAT_BITS
    seed: int = DEFAULT_SEED
    max_depth: int = 40

    def __post_init__(self):
        _positive_decimal(self.thebound, "thebound")
        _positive_decimal(self.theotherbound, "theotherbound")
        if self.precision < I.FLOAT_BITS:
            raise ConfigError(f"precision must be at least {I.FLOAT_BITS} bits")
        if self.max_depth < 1:
            raise ConfigError("max_depth must be positive")

    def to_json(self) -> dict:
        return {
            "thebound": self.thebound,
            "theotherbound": self.theotherbound,
            "theotherbound_source": "configured, not read from the source text",
            "precision_bits": self.precision,
            "seed": self.seed,
            "max_depth": self.max_depth,
        }


@dataclass
class CheckItem:
    id: str
    claim: str
    status: str = PROVEN
    kind: str = "certified"              # or "sampled" for seeded fuzz checks
    enclosures: dict = field(default_factory=dict)
    slack: Optional[Interval] = None
    details: dict = field(default_factory=dict)

    def require(self, ok, what: str, refuted: bool = False):
        """Record a constituent check; the item is PROVEN only if all are."""
        if ok is True or ok is I.PROVEN:
            return
        self.details.setdefault("unmet", []).append(what)
        if refuted or ok is I.REFUTED:
            self.status = FAILED
        elif self.status == PROVEN:
            self.status = UNDECIDED

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "claim": self.claim,
            "status": self.status,
            "kind": self.kind,
            "enclosures": {k: v.to_json() for k, v in self.enclosures.items()},
            "slack": None if self.slack is None else self.slack.to_json(),
            "details": _jsonable(self.details),
        }


def _jsonable(obj):
    if isinstance(obj, Interval):
        return obj.to_json()
    if isinstance(obj, GR.AbelianStructure):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_jsonable(v) for v in items]
    if isinstance(obj, float):
        return repr(obj)
    return obj


@dataclass
class VerificationReport:
    config: Config
    items: list[CheckItem]
    informational: list[dict]

    @property
    def overall(self) -> str:
        statuses = {it.status for it in self.items}
        if FAILED in statuses:
            return FAILED
        if UNDECIDED in statuses:
            return UNDECIDED
        return PROVEN

    @property
    def exit_code(self) -> int:
        return {PROVEN: EXIT_OK, UNDECIDED: EXIT_UNDECIDED, FAILED: EXIT_FAILED}[self.overall]

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "toolkit_version": __version__,
            "config": self.config.to_json(),
            "items": [it.to_json() for it in self.items],
            "informational": self.informational,
            "overall": self.overall,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    def render_text(self) -> str:
        lines = [f"lowvol {__version__}  thebound={self.config.thebound}  "
                 f"theotherbound={self.config.theotherbound} (configured)  "
                 f"precision={self.config.precision} bits  seed={self.config.seed}"]
        for n, it in enumerate(self.items, 1):
            lines.append(f"{n:2d}. [{it.status:9s}] {it.id}: {it.claim}")
            for name, enc in it.enclosures.items():
                lines.append(f"      {name} in {enc}")
            if it.slack is not None:
                lines.append(f"      slack in {it.slack}")
            for what in it.details.get("unmet", []):
                lines.append(f"      unmet: {what}")
        for info in self.informational:
            lines.append(f"    [INFORMATIONAL] {info['id']}: {info['claim']}")
        lines.append(f"overall: {self.overall}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# helpers shared with the CLI and tests


def homology_bound_from_subgroup(n: int) -> int:
    """If a finite-index subgroup surjects onto a group with dim H_1(;Z_p) <= n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return max(2, n + 1)


PRIME_CLASSES = (2, 3, 5, 7, "other")


def _h1_table() -> dict[int, GR.AbelianStructure]:
    return {e.k: GR.h1_structure(e.presentation) for e in GR.ek_table()}


def _mod_p(s: GR.AbelianStructure, p) -> int:
    if p == "other":
        # a prime dividing no invariant factor
        return s.free_rank
    return GR.mod_p_dimension(s, p)


def exceptional_homology_bounds(bound, constants: B.BoundConstants = B.DEFAULT) -> dict:
    """Bound on dim H_1(M; Z_p) for exceptional M of volume <= bound.

    The k in 1..6 not excluded by the tube-volume arithmetic each contribute
    max(2, n+1) with n = dim H_1(E_k; Z_p).  Vol3 (k = 0) is 2-generator
    and contributes 2.
    """
    bound = ival(bound)
    limit = B.max_admissible_bounds(constants).max_thebound
    if not bound.hi < limit.lo:
        raise ValueError(f"bound {bound} is not below max_admissible_bounds().max_thebound = {limit}")
    surviving = set(range(1, 7)) - B.exceptional_exclusion(bound, constants)
    table = _h1_table()
    out = {}
    for p in PRIME_CLASSES:
        n = max((_mod_p(table[k], p) for k in surviving), default=None)
        out[p] = 2 if n is None else max(2, homology_bound_from_subgroup(n))
    return out


# bounds for non-exceptional manifolds: 3 for every prime, 2 for odd primes
NONEXCEPTIONAL_BOUNDS = {2: 3, 3: 2, 5: 2, 7: 2, "other": 2}


def main_theorem_bounds(bound, constants: B.BoundConstants = B.DEFAULT) -> dict:
    exc = exceptional_homology_bounds(bound, constants)
    return {p: max(exc[p], NONEXCEPTIONAL_BOUNDS[p]) for p in PRIME_CLASSES}


@dataclass(frozen=True)
class KnownManifold:
    name: str
    volume: Optional[str]                # printed truncation, informational
    h1: Optional[GR.AbelianStructure]


def known_examples() -> list[KnownManifold]:
    return [
        KnownManifold("m003(-3,1)", "0.94", GR.AbelianStructure(0, (5, 5))),
        KnownManifold("m007(3,1)", "1.01", GR.AbelianStructure(0, (3, 6))),
        KnownManifold("m003(-2,3)", None, None),
    ]


INFORMATIONAL = [
    {"id": "filling", "claim": "drilling a shortest geodesic and refilling gives a manifold whose "
                               "2-generator subgroups are free or free abelian; cited, not machine-checkable"},
    {"id": "non_exceptional_any_prime", "claim": "non-exceptional manifolds below the volume bound have "
                                                 "dim H_1(M; Z_p) <= 3 for every prime; topological argument"},
    {"id": "non_exceptional_odd_prime", "claim": "non-exceptional manifolds below the volume bound have "
                                                 "dim H_1(M; Z_p) <= 2 for odd p; topological argument"},
    {"id": "exceptional_covers", "claim": "an exceptional manifold other than Vol3 has a finite cover whose "
                                          "fundamental group is a quotient of some E_k; cited region analysis"},
]


# ---------------------------------------------------------------------------
# the checks


def _inside_truncation(x: Interval, digits: str) -> bool:
    return Interval.truncated(digits).issuperset(x)


def _full_domain(c: B.BoundConstants) -> Interval:
    return Interval(B.half_log3().lo, ival(10).hi)


def check_f_at_split(cfg: Config, c: B.BoundConstants) -> CheckItem:
    it = CheckItem("f_at_split", "f(0.5495) = 3.01762... and is below 3.0177")
    v = B.f(c.iv("split_point"), c)
    it.enclosures["f(0.5495)"] = v
    it.require(_inside_truncation(v, "3.01762"), "enclosure lies in [3.01762, 3.01763]")
    lim = c.iv("drilling_factor")
    it.require(I.certify(v, "strictly_below", lim), "f(0.5495) < 3.0177", refuted=v.lo >= lim.hi)
    it.slack = lim - v
    return it


def check_monotonicity(cfg: Config, c: B.BoundConstants) -> CheckItem:
    it = CheckItem("monotonicity", "f, f1, g and the factors coth^3(2x), 1/cosh(2x) decrease on [(log 3)/2, 10]")
    dom = _full_domain(c)
    it.enclosures["domain"] = dom
    for name in ("coth3_2x", "sech_2x", "f", "f1", "g"):
        res = B.certify_decreasing(name, dom, cfg.max_depth)
        it.details[name] = res.value
        it.require(res, f"{name} decreasing")
    return it


def check_refined_density(cfg: Config, c: B.BoundConstants) -> CheckItem:
    it = CheckItem("refined_density", "sinh(0.5495) g((log 3)/2) = 0.90817... and is below 0.91")
    v = B.refined_density(c)
    it.enclosures["sinh(0.5495)*g((log 3)/2)"] = v
    it.require(_inside_truncation(v, "0.90817"), "enclosure lies in [0.90817, 0.90818]")
    it.require(I.certify(v, "strictly_below", c.iv("tube_density")), "refined density < 0.91")
    return it


def check_f1(cfg: Config, c: B.BoundConstants) -> CheckItem:
    it = CheckItem("f1_at_floor", "f1((log 3)/2) = 3.017392... and is below 3.0174")
    x = B.half_log3()
    v = B.f1(x, constants=c)
    printed = B.f1(x, "printed", c)
    it.enclosures["f1((log 3)/2)"] = v
    it.enclosures["f1((log 3)/2) with 0.90817"] = printed
    it.require(_inside_truncation(v, "3.017392"), "enclosure lies in [3.017392, 3.017393]")
    lim = Interval.exact("3.0174")
    it.require(I.certify(v, "strictly_below", lim), "f1((log 3)/2) < 3.0174", refuted=v.lo >= lim.hi)
    it.slack = lim - v
    return it


def check_factor_grid(cfg: Config, c: B.BoundConstants, points: int = 1000) -> CheckItem:
    it = CheckItem("drilling_factor_grid", "the drilled-volume factor stays below 3.0177 for every R >= (log 3)/2")
    lim = c.iv("drilling_factor")
    lo = B.half_log3()
    worst = None
    # (log 3)/2 + j (10 - (log 3)/2) / (points - 1); the last piece covers R up to infinity
    span = ival(10) - lo
    for j in range(points):
        R = lo + span * Fraction(j, points - 1) if 0 < j else lo
        if R.lo < lo.lo:
            R = Interval(lo.lo, R.hi)
        v = B.drilled_volume_factor(R, c)
        worst = v if worst is None else Interval(max(worst.lo, v.lo), max(worst.hi, v.hi))
    whole = B.drilled_volume_factor(Interval(lo.lo, math.inf), c)
    worst = Interval(max(worst.lo, whole.lo), max(worst.hi, whole.hi))
    it.enclosures["max factor"] = worst
    it.details["grid_points"] = points
    it.require(I.certify(worst, "strictly_below", lim), "factor < 3.0177", refuted=worst.lo >= lim.hi)
    it.slack = lim - worst
    return it


def check_cusp(cfg: Config, c: B.BoundConstants) -> CheckItem:
    it = CheckItem("cusp_threshold", f"3.0177 * {cfg.thebound} < pi / d(inf)")
    res = B.cusp_threshold_check(Interval.exact(cfg.thebound), c)
    it.enclosures["3.0177 * thebound"] = res.lhs
    it.enclosures["pi / d(inf)"] = res.rhs
    it.slack = res.slack
    it.require(res.status, "drilling factor times thebound below pi / d(inf)")
    return it


def check_admissible(cfg: Config, c: B.BoundConstants) -> CheckItem:
    it = CheckItem("admissible_bounds", "the configured bounds lie below the largest values the inequalities allow")
    adm = B.max_admissible_bounds(c)
    it.enclosures["max_thebound"] = adm.max_thebound
    it.enclosures["max_theotherbound"] = adm.max_theotherbound
    for name, value, limit in (("thebound", cfg.thebound, adm.max_thebound),
                               ("theotherbound", cfg.theotherbound, adm.max_theotherbound)):
        v = Interval.exact(value)
        it.require(I.certify(v, "strictly_below", limit), f"{name} < max_{name}",
                   refuted=v.lo >= limit.hi)
    it.slack = adm.max_thebound - Interval.exact(cfg.thebound)
    return it


def check_exclusion(cfg: Config, c: B.BoundConstants) -> CheckItem:
    it = CheckItem("exceptional_exclusion", "tau_3 / 0.91 exceeds thebound and tau_1 / 0.91 exceeds theotherbound")
    for k in range(7):
        it.enclosures[f"tau_{k}/0.91"] = B.exclusion_ratio(k, c)
    ex1 = B.exceptional_exclusion(Interval.exact(cfg.thebound), c)
    ex2 = B.exceptional_exclusion(Interval.exact(cfg.theotherbound), c)
    it.details["excluded_at_thebound"] = sorted(ex1)
    it.details["excluded_at_theotherbound"] = sorted(ex2)
    it.details["note"] = "k = 4 is excluded as well; the case analysis keeps it, which only weakens the conclusion"
    it.require(3 in ex1, "k = 3 excluded at thebound", refuted=B.exclusion_ratio(3, c).hi <= Interval.exact(cfg.thebound).lo)
    it.require(1 in ex2, "k = 1 excluded at theotherbound",
               refuted=B.exclusion_ratio(1, c).hi <= Interval.exact(cfg.theotherbound).lo)
    return it


EXPECTED_H1 = {
    0: GR.AbelianStructure(0, (3, 6)),
    1: GR.AbelianStructure(0, (7, 7)),
    2: GR.AbelianStructure(0, (4, 12)),
    4: GR.AbelianStructure(0, (4, 12)),
    5: GR.AbelianStructure(0, (4, 4)),
    6: GR.AbelianStructure(0, (4, 4)),
}


def check_ek_table(cfg: Config, c: B.BoundConstants) -> CheckItem:
    it = CheckItem("ek_homology", "H_1 of E_0 ... E_6 as stated: Z3+Z6, Z7+Z7, Z4+Z12 (k=2,4), Z4+Z4 (k=5,6)")
    it.details["relators_sha256"] = GR.relators_digest()
    it.require(GR.relators_digest() == GR.RELATORS_SHA256, "relator checksum")
    table = _h1_table()
    it.details["h1"] = {k: table[k] for k in sorted(table)}
    for k, want in EXPECTED_H1.items():
        it.require(table[k] == want, f"H_1(E_{k}) = {want}", refuted=table[k] != want)
    return it


def check_mod_p(cfg: Config, c: B.BoundConstants) -> CheckItem:
    it = CheckItem("mod_p_table", "for k in {1,2,4,5,6}: dim H_1(E_k; Z_p) <= 1 for p not 2, 7; <= 2 for p = 2, 7; "
                                  "= 0 for p = 7 and k in {2,4,5,6}")
    table = _h1_table()
    primes = sorted({p for s in table.values() for d in s.invariant_factors
                     for p in range(2, d + 1) if d % p == 0 and GR.is_prime(p)} | {5})
    dims = {k: {p: GR.mod_p_dimension(table[k], p) for p in primes} for k in sorted(table)}
    it.details["dimensions"] = dims
    it.details["primes"] = primes
    for k in (1, 2, 4, 5, 6):
        for p in primes:
            cap = 2 if p in (2, 7) else 1
            it.require(dims[k][p] <= cap, f"dim H_1(E_{k}; Z_{p}) <= {cap}", refuted=True)
        it.require(table[k].free_rank == 0, f"E_{k} has finite abelianization", refuted=True)
    for k in (2, 4, 5, 6):
        it.require(dims[k][7] == 0, f"dim H_1(E_{k}; Z_7) = 0", refuted=True)
    return it


def check_final_bounds(cfg: Config, c: B.BoundConstants) -> CheckItem:
    it = CheckItem("final_bounds", "dim H_1(M; Z_p) <= 2 for p not 2, 7 and <= 3 for p = 2, 7 below thebound; "
                                   "dim H_1(M; Z_7) <= 2 below theotherbound")
    try:
        at1 = main_theorem_bounds(Interval.exact(cfg.thebound), c)
        at2 = main_theorem_bounds(Interval.exact(cfg.theotherbound), c)
    except ValueError as exc:
        it.require(False, str(exc), refuted=True)
        return it
    it.details["at_thebound"] = at1
    it.details["at_theotherbound"] = at2
    it.details["exceptional_at_thebound"] = exceptional_homology_bounds(Interval.exact(cfg.thebound), c)
    it.details["exceptional_at_theotherbound"] = exceptional_homology_bounds(Interval.exact(cfg.theotherbound), c)
    for p in PRIME_CLASSES:
        want = 3 if p in (2, 7) else 2
        it.require(at1[p] <= want, f"p = {p}: bound {at1[p]} <= {want}")
    it.require(at2[7] <= 2, "p = 7: bound <= 2 below theotherbound")

    # cross-check the small examples against the bounds
    examples = []
    table = _h1_table()
    for m in known_examples():
        entry = {"name": m.name, "volume": m.volume, "h1": m.h1}
        if m.h1 is not None and m.volume is not None:
            vol = Interval.truncated(m.volume)
            below = I.certify(vol, "strictly_below", Interval.exact(cfg.thebound))
            dims = {p: GR.mod_p_dimension(m.h1, p) for p in (2, 3, 5, 7)}
            entry["mod_p"] = dims
            ok = below is I.PROVEN and all(dims[p] <= at1[p] for p in dims)
            entry["consistent"] = ok
            it.require(ok or below is not I.PROVEN, f"{m.name} homology within the bounds", refuted=True)
        examples.append(entry)
    vol3 = known_examples()[1]
    it.require(vol3.h1 == table[0], "H_1(m007(3,1)) equals H_1(E_0)", refuted=True)
    it.details["known_examples"] = examples
    return it


def check_gmt_normalization(cfg: Config, c: B.BoundConstants, samples: int = 25) -> CheckItem:
    it = CheckItem("gmt_normalization", "f has translation length Re L; the axes of f and w f w^-1 are Re D apart, "
                                        "so the tube radius is Re D / 2", kind="sampled")
    rng = random.Random(cfg.seed)
    worst_len = worst_sep = 0.0
    for _ in range(samples):
        L = complex(rng.uniform(0.1, 3), rng.uniform(-math.pi, math.pi))
        D = complex(rng.uniform(0.1, 3), rng.uniform(-math.pi, math.pi))
        R = complex(rng.uniform(-2, 2), rng.uniform(-math.pi, math.pi))
        f, w = G.gmt_pair(L, D, R)
        A = G.axis(f)
        worst_len = max(worst_len, abs(G.translation_length(f) - L.real))
        worst_sep = max(worst_sep, abs(G.geodesic_distance(A, G.apply(w, A)) - D.real))
    it.details["max_length_error"] = worst_len
    it.details["max_separation_error"] = worst_sep
    it.require(worst_len < 1e-9, "translation length matches Re L", refuted=worst_len > 1e-6)
    it.require(worst_sep < 1e-8, "axis separation matches Re D", refuted=worst_sep > 1e-6)

    # one certified instance
    f, w = G.gmt_pair(ival(1), ival("0.8"), ival("0.2"))
    A = G.axis(f)
    ell = G.translation_length(f)
    sep = G.geodesic_distance(A, G.apply(w, A))
    it.enclosures["translation_length at (1, 0.8, 0.2)"] = ell
    it.enclosures["axis separation at (1, 0.8, 0.2)"] = sep
    it.enclosures["tube volume pi L sinh^2(Re D / 2)"] = G.tube_volume(ell, sep / 2)
    it.require(ell.contains(1) and sep.contains(Fraction(4, 5)), "interval enclosures contain Re L and Re D")
    return it


def check_displacement(cfg: Config, c: B.BoundConstants, groups: int = 20, points: int = 25) -> CheckItem:
    it = CheckItem("displacement", "for free discrete 2-generator groups, sum 1/(1+e^d_i) <= 1/2 and "
                                   "some d_i >= log 3", kind="sampled")
    rng = random.Random(cfg.seed + 1)
    log3 = math.log(3)
    worst_sum, worst_max_d = 0.0, math.inf
    for _ in range(groups):
        gens = G.random_schottky_group(rng, 2)
        it.require(G.schottky_certificate(gens), "sampled group is Schottky")
        for _ in range(points):
            z = G.random_basepoint(rng)
            worst_sum = max(worst_sum, G.displacement_sum(gens, z))
            worst_max_d = min(worst_max_d, max(G.dist(z, G.apply(g, z)) for g in gens))
    it.details["max_displacement_sum"] = worst_sum
    it.details["min_max_displacement"] = worst_max_d
    it.require(worst_sum <= 0.5 + 1e-9, "displacement sum <= 1/2", refuted=True)
    it.require(worst_max_d >= log3 - 1e-9, "max displacement >= log 3", refuted=True)

    # a certified instance: the float matrices define an actual group
    gens = G.random_schottky_group(random.Random(cfg.seed), 2)
    igens = [G.MoebiusTransform(*(G.ComplexInterval.coerce(e) for e in g.entries())) for g in gens]
    it.require(G.schottky_certificate(igens), "interval Schottky certificate")
    s = G.displacement_sum(igens, G.Point3(ival(0), ival(0), ival(1)))
    it.enclosures["displacement sum at (0, 0, 1)"] = s
    it.require(I.certify(s, "strictly_below", ival("0.5")), "certified displacement sum < 1/2")
    return it


CHECKS: list[tuple[str, str, Callable]] = [
    ("f_at_split", "drilling", check_f_at_split),
    ("monotonicity", "drilling", check_monotonicity),
    ("refined_density", "drilling", check_refined_density),
    ("f1_at_floor", "drilling", check_f1),
    ("drilling_factor_grid", "drilling", check_factor_grid),
    ("cusp_threshold", "cusp", check_cusp),
    ("admissible_bounds", "cusp", check_admissible),
    ("exceptional_exclusion", "exceptional", check_exclusion),
    ("ek_homology", "homology", check_ek_table),
    ("mod_p_table", "homology", check_mod_p),
    ("final_bounds", "exceptional", check_final_bounds),
    ("gmt_normalization", "geometry", check_gmt_normalization),
    ("displacement", "geometry", check_displacement),
]


def run_all(config: Optional[Config] = None, sections=None,
            constants: B.BoundConstants = B.DEFAULT) -> VerificationReport:
    """Run the checks (all, or those in ``sections``) in canonical order."""
    config = config or Config()
    wanted = set(SECTIONS if sections is None else sections)
    unknown = wanted - set(SECTIONS)
    if unknown:
        raise ConfigError(f"unknown sections {sorted(unknown)}")
    items = []
    with I.precision(config.precision):
        for _, section, check in CHECKS:
            if section in wanted:
                items.append(check(config, constants))
    info = INFORMATIONAL if sections is None else []
    return VerificationReport(config, items, info)
