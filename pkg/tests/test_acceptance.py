"""Acceptance gate: one PASS/FAIL line per criterion.

Each test records its verdict line as a user property; conftest echoes the
lines in an "acceptance criteria" section of the terminal summary.  Run with
``pytest tests/test_acceptance.py -s`` to see them inline as well.
"""

import math
import random
from fractions import Fraction

import mpmath
import pytest
from mpmath import mp

from lowvol import bounds as B
from lowvol import geometry as G
from lowvol import groups as GR
from lowvol import interval as I
from lowvol import verify as V
from lowvol.interval import Interval, ival
from oracles import contains, f_ref, geodesic_distance_search, horoball_density_ref, refined_density_ref

SEED = 1729


@pytest.fixture
def verdict(record_property):
    def _verdict(label, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'} {label}: {detail}"
        print(line)
        record_property("acceptance", line)
        assert ok, line
    return _verdict


# 1 --------------------------------------------------------------------------

def test_c01_f_at_split(verdict):
    v = B.f("0.5495")
    ok = (Interval.truncated("3.01762").issuperset(v)
          and v.width() < 1e-4
          and I.certify(v, "strictly_below", ival("3.0177")) is I.PROVEN
          and contains(v, f_ref("0.5495")))
    verdict("1", ok, f"f(0.5495) in {v}, width {v.width():.1e}, certified < 3.0177")


# 2 --------------------------------------------------------------------------

def test_c02_f1_at_floor(verdict):
    v = B.f1(B.half_log3())
    with mp.workdps(60):
        ref = f_ref(mpmath.log(3) / 2, refined_density_ref())
    ok = (Interval.truncated("3.017392").issuperset(v)
          and v.width() < 1e-4
          and I.certify(v, "strictly_below", ival("3.0174")) is I.PROVEN
          and contains(v, ref))
    verdict("2", ok, f"f1((log 3)/2) in {v}, leading digits 3.017392, certified < 3.0174")


# 3 --------------------------------------------------------------------------

def test_c03_refined_density(verdict):
    v = B.refined_density()
    ok = (Interval.truncated("0.90817").issuperset(v) and v.width() < 1e-4
          and contains(v, refined_density_ref()))
    verdict("3", ok, f"sinh(0.5495) g((log 3)/2) in {v}")


# 4 --------------------------------------------------------------------------

def test_c04_monotonicity(verdict):
    dom = Interval(B.half_log3().lo, 10.0)
    res = {name: B.certify_decreasing(name, dom, max_depth=40)
           for name in ("coth3_2x", "sech_2x", "f", "f1", "g")}
    ok = all(r is I.PROVEN for r in res.values())
    verdict("4", ok, ", ".join(f"{k} {r.value}" for k, r in res.items()))


# 5 --------------------------------------------------------------------------

def test_c05_cusp_threshold(verdict):
    res = B.cusp_threshold_check("1.22")
    with mp.workdps(60):
        oracle_slack = mpmath.pi / mpmath.mpf("0.853276") - mpmath.mpf("3.0177") * mpmath.mpf("1.22")
        hd = horoball_density_ref()
    adm = B.max_admissible_bounds()
    ok = (res.status is I.PROVEN and res.slack.lo > 0
          and abs(mpmath.mpf(res.slack.mid()) - oracle_slack) < 1e-5
          and 1.5e-4 < oracle_slack < 2.5e-4
          and contains(res.rhs, mpmath.pi / hd)
          and abs(adm.max_thebound.mid() - 1.2200) < 1e-3
          and abs(adm.max_theotherbound.mid() - 1.18197) < 1e-3
          and adm.max_thebound.width() < 1e-3 and adm.max_theotherbound.width() < 1e-3)
    verdict("5", ok, f"slack {res.slack} (oracle {float(oracle_slack):.4e}); "
                     f"max_thebound {adm.max_thebound}; max_theotherbound {adm.max_theotherbound}")


# 6 --------------------------------------------------------------------------

def test_c06_homology_table(verdict):
    table = {e.k: GR.h1_structure(e.presentation) for e in GR.ek_table()}
    want = {0: (3, 6), 1: (7, 7), 2: (4, 12), 4: (4, 12), 5: (4, 4), 6: (4, 4)}
    ok = all(table[k] == GR.AbelianStructure(0, fs) for k, fs in want.items())
    for k in (1, 2, 4, 5, 6):
        for p in (2, 3, 5, 7, 11, 13):
            cap = 2 if p in (2, 7) else 1
            ok = ok and GR.mod_p_dimension(table[k], p) <= cap
    for k in (2, 4, 5, 6):
        ok = ok and GR.mod_p_dimension(table[k], 7) == 0
    # primes not dividing any invariant factor contribute 0 dimensions
    ok = ok and all(table[k].free_rank == 0 for k in table)
    verdict("6", ok, "; ".join(f"E{k}: {table[k]}" for k in sorted(table)))


# 7 --------------------------------------------------------------------------

def test_c07_exclusion(verdict):
    r3 = Fraction(B.TAU[3]) / Fraction("0.91")
    r1 = Fraction(B.TAU[1]) / Fraction("0.91")
    ok = (r3 > Fraction("1.22") and r1 > Fraction("1.17")
          and I.certify(B.exclusion_ratio(3), "strictly_above", ival("1.22")) is I.PROVEN
          and I.certify(B.exclusion_ratio(1), "strictly_above", ival("1.17")) is I.PROVEN)
    verdict("7", ok, f"tau_3/0.91 = {float(r3):.6f} > 1.22, tau_1/0.91 = {float(r1):.6f} > 1.17")


# 8 --------------------------------------------------------------------------

def test_c08_final_bounds(verdict):
    at1 = V.exceptional_homology_bounds("1.22")
    at2 = V.exceptional_homology_bounds("1.17")
    want1 = {2: 3, 3: 2, 5: 2, 7: 3, "other": 2}
    want2 = {**want1, 7: 2}
    main1 = V.main_theorem_bounds("1.22")
    ok = at1 == want1 and at2 == want2 and main1 == want1
    verdict("8", ok, f"at 1.22 {at1}; at 1.17 {at2}")


# 9 --------------------------------------------------------------------------

def _gmt_samples(n=100):
    rng = random.Random(SEED)
    out = []
    for _ in range(n):
        L = complex(rng.uniform(0.1, 3), rng.uniform(-math.pi, math.pi))
        D = complex(rng.uniform(0.1, 3), rng.uniform(-math.pi, math.pi))
        R = complex(rng.uniform(-2, 2), rng.uniform(-math.pi, math.pi))
        out.append((L, D, R))
    return out


def _ends(g):
    return tuple(None if e.is_infinity else complex(e.value) for e in (g.p, g.q))


@pytest.fixture(scope="module")
def gmt_data():
    rows = []
    for L, D, R in _gmt_samples():
        f, w = G.gmt_pair(L, D, R)
        A = G.axis(f)
        wA = G.apply(w, A)
        rows.append((L, D, G.translation_length(f), G.geodesic_distance(A, wA), A, wA))
    return rows


def test_c09a_translation_length(verdict, gmt_data):
    err = max(abs(ell - L.real) for L, _, ell, *_ in gmt_data)
    verdict("9a", err < 1e-9, f"max |translation_length - Re L| = {err:.2e} over {len(gmt_data)} samples (tol 1e-9)")


def test_c09b_axis_distance_half_re_D(verdict, gmt_data):
    err = max(abs(d - D.real / 2) for _, D, _, d, *_ in gmt_data)
    verdict("9b", err < 1e-8,
            f"max |geodesic_distance - Re D/2| = {err:.2e} (tol 1e-8); "
            f"max |geodesic_distance - Re D| = {max(abs(d - D.real) for _, D, _, d, *_ in gmt_data):.2e}")


def test_c09c_distance_matches_search_oracle(verdict, gmt_data):
    err = max(abs(d - geodesic_distance_search(_ends(A), _ends(wA))) for *_, d, A, wA in gmt_data)
    verdict("9c", err < 1e-6, f"max |closed form - minimization oracle| = {err:.2e} (tol 1e-6)")


# 10 -------------------------------------------------------------------------

def test_c10_displacement(verdict):
    rng = random.Random(SEED)
    worst_sum, worst_max = 0.0, math.inf
    certified = 0
    for _ in range(50):
        gens = G.random_schottky_group(rng, 2)
        certified += G.schottky_certificate(gens) is I.PROVEN
        for _ in range(100):
            z = G.random_basepoint(rng)
            worst_sum = max(worst_sum, G.displacement_sum(gens, z))
            worst_max = min(worst_max, max(G.dist(z, G.apply(g, z)) for g in gens))
    ok = certified == 50 and worst_sum <= 0.5 + 1e-9 and worst_max >= math.log(3) - 1e-9
    verdict("10", ok, f"{certified}/50 groups certified; max sum {worst_sum:.6f}; "
                      f"min max d_i {worst_max:.6f} vs log 3 = {math.log(3):.6f}")


# 11 -------------------------------------------------------------------------

def test_c11_snf_suite(verdict):
    rng = random.Random(SEED)
    bad = 0
    nonsingular = 0
    for _ in range(10_000):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        m = [[rng.randint(-50, 50) for _ in range(c)] for _ in range(r)]
        res = GR.smith_normal_form(m)
        d = res.diagonal
        prod = GR.matmul(GR.matmul(res.left, m), res.right)
        good = (abs(GR.integer_det(res.left)) == 1 and abs(GR.integer_det(res.right)) == 1
                and all(prod[i][j] == (d[i] if i == j else 0) for i in range(r) for j in range(c)))
        nz = [x for x in d if x]
        good = good and d[:len(nz)] == nz and all(x > 0 for x in nz)
        good = good and all(b % a == 0 for a, b in zip(nz, nz[1:]))
        if r == c:
            det = GR.integer_det(m)
            if det:
                nonsingular += 1
                good = good and math.prod(d) == abs(det)
        bad += not good
    verdict("11", bad == 0, f"{bad} failures in 10000 matrices ({nonsingular} nonsingular square)")


# 12 -------------------------------------------------------------------------

def test_c12_tube_volume(verdict):
    v = G.tube_volume(1, math.log(3) / 2)
    iv = G.tube_volume(ival(1), B.half_log3())
    with mp.workdps(60):
        ok = abs(v - math.pi / 3) < 1e-12 and contains(iv, mpmath.pi / 3) and iv.contains(v)
    verdict("12", ok, f"tube_volume(1, (log 3)/2) = {v!r}, pi/3 = {math.pi / 3!r}, enclosure {iv}")
