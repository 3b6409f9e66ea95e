import random

import pytest
import sympy
from hypothesis import given, strategies as st
from sympy.matrices.normalforms import invariant_factors

from lowvol import groups as GR
from lowvol.groups import AbelianStructure, Presentation, h1_structure, smith_normal_form
from lowvol.words import WordError, free_reduce, invert_word, parse_word

EXPECTED_H1 = {
    0: (3, 6),
    1: (7, 7),
    2: (4, 12),
    3: (7, 7),
    4: (4, 12),
    5: (4, 4),
    6: (4, 4),
}


def _random_matrix(rng, rows=None, cols=None, bound=50):
    rows = rows or rng.randint(1, 5)
    cols = cols or rng.randint(1, 5)
    return [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def _check_snf(m):
    res = smith_normal_form(m)
    r, c = len(m), len(m[0])
    d = res.diagonal
    assert len(d) == min(r, c)
    assert all(x >= 0 for x in d)
    nz = [x for x in d if x]
    assert d[:len(nz)] == nz, "zeros come last"
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert abs(GR.integer_det(res.left)) == 1
    assert abs(GR.integer_det(res.right)) == 1
    prod = GR.matmul(GR.matmul(res.left, [list(row) for row in m]), res.right)
    for i in range(r):
        for j in range(c):
            assert prod[i][j] == (d[i] if i == j else 0)
    return res


# ------------------------------------------------------------------ words

def test_parse_word():
    assert parse_word("xYx") == [(0, 1), (1, -1), (0, 1)]
    assert parse_word("") == []
    with pytest.raises(WordError):
        parse_word("xz")


def test_invert_and_reduce():
    assert invert_word("xyY") == "yYX"
    assert free_reduce("xyYX") == ""
    assert free_reduce("xxYyX") == "x"


# -------------------------------------------------------------- examples

def test_exponent_matrix_examples():
    assert Presentation("xy", ("xxYY", "xy")).exponent_matrix() == [[2, -2], [1, 1]]
    ek = GR.ek_table()
    assert ek[0].presentation.exponent_matrix() == [[0, 6], [3, 3]]
    assert ek[1].presentation.exponent_matrix() == [[-7, 0], [0, 7]]


@pytest.mark.parametrize("m,diag", [
    ([[2, 4], [6, 8]], [2, 4]),
    ([[0, 6], [3, 3]], [3, 6]),
    ([[-7, 0], [0, 7]], [7, 7]),
    ([[1, 1]], [1]),
    ([[0, 0], [0, 0]], [0, 0]),
    ([[6], [4]], [2]),
])
def test_snf_examples(m, diag):
    assert _check_snf(m).diagonal == diag


def test_h1_examples():
    assert h1_structure(Presentation("xy", ("xxYY", "xy"))) == AbelianStructure(0, (4,))
    assert h1_structure(Presentation("xy", ())) == AbelianStructure(2)
    assert h1_structure(Presentation("xy", ("xyXY",))) == AbelianStructure(2)
    assert str(AbelianStructure(1, (3, 6))) == "Z/3 + Z/6 + Z"


def test_abelian_structure_validation():
    with pytest.raises(ValueError):
        AbelianStructure(0, (2, 3))
    with pytest.raises(ValueError):
        AbelianStructure(0, (1,))
    with pytest.raises(ValueError):
        AbelianStructure(-1)


# ------------------------------------------------------------------ E_k

def test_relator_checksum():
    assert GR.relators_digest() == GR.RELATORS_SHA256
    assert len(GR.RELATORS) == 7 and all(len(pair) == 2 for pair in GR.RELATORS)
    mutated = list(GR.RELATORS)
    mutated[3] = (mutated[3][0][:-1], mutated[3][1])
    assert GR.relators_digest(mutated) != GR.RELATORS_SHA256


def test_relators_are_cyclically_reduced():
    for pair in GR.RELATORS:
        for r in pair:
            assert free_reduce(r) == r
            assert r[0] != r[-1].swapcase()


@pytest.mark.parametrize("k", range(7))
def test_ek_homology(k):
    entry = GR.ek_table()[k]
    assert entry.presentation.name == f"E{k}"
    assert h1_structure(entry.presentation) == AbelianStructure(0, EXPECTED_H1[k])


@pytest.mark.parametrize("k", range(7))
def test_ek_homology_against_sympy(k):
    m = GR.ek_table()[k].presentation.exponent_matrix()
    facts = [abs(int(v)) for v in invariant_factors(sympy.Matrix(m))]
    assert tuple(v for v in facts if v > 1) == EXPECTED_H1[k]


def test_e5_and_e6_have_same_homology():
    ek = GR.ek_table()
    assert h1_structure(ek[5].presentation) == h1_structure(ek[6].presentation)


def test_mod_p_examples():
    s = AbelianStructure(0, (4, 12))
    assert GR.mod_p_dimension(s, 2) == 2
    assert GR.mod_p_dimension(s, 3) == 1
    assert GR.mod_p_dimension(s, 7) == 0
    assert GR.mod_p_dimension(AbelianStructure(1, (3, 6)), 3) == 3
    with pytest.raises(ValueError):
        GR.mod_p_dimension(s, 4)
    with pytest.raises(ValueError):
        GR.mod_p_dimension(s, 1)


def test_is_prime():
    assert [n for n in range(30) if GR.is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


# ------------------------------------------------------------- properties

def test_snf_random_suite():
    rng = random.Random(20240611)
    for _ in range(10_000):
        m = _random_matrix(rng)
        res = _check_snf(m)
        if len(m) == len(m[0]):
            prod = 1
            for d in res.diagonal:
                prod *= d
            assert prod == abs(GR.integer_det(m))


def test_snf_matches_sympy():
    rng = random.Random(7)
    for _ in range(200):
        m = _random_matrix(rng, bound=20)
        ours = [d for d in smith_normal_form(m).diagonal if d]
        theirs = [abs(int(v)) for v in invariant_factors(sympy.Matrix(m)) if v != 0]
        assert ours == theirs


def test_integer_det_matches_sympy():
    rng = random.Random(8)
    for _ in range(300):
        n = rng.randint(1, 5)
        m = _random_matrix(rng, n, n)
        assert GR.integer_det(m) == sympy.Matrix(m).det()


words = st.text(alphabet="xyXY", min_size=1, max_size=12)


@given(st.lists(words, min_size=1, max_size=3), st.integers(0, 11))
def test_h1_invariant_under_cyclic_permutation(rels, shift):
    base = h1_structure(Presentation("xy", tuple(rels)))
    rotated = tuple(r[shift % len(r):] + r[:shift % len(r)] for r in rels)
    assert h1_structure(Presentation("xy", rotated)) == base


@given(st.lists(words, min_size=1, max_size=3))
def test_h1_invariant_under_inversion_and_swap(rels):
    base = h1_structure(Presentation("xy", tuple(rels)))
    assert h1_structure(Presentation("xy", tuple(invert_word(r) for r in rels))) == base
    swap = str.maketrans("xyXY", "yxYX")
    assert h1_structure(Presentation("xy", tuple(r.translate(swap) for r in rels))) == base


@given(st.lists(words, min_size=1, max_size=3), words)
def test_quotient_has_smaller_homology(rels, extra):
    # adding a relator gives a quotient; each Z/p dimension can only drop
    a = h1_structure(Presentation("xy", tuple(rels)))
    b = h1_structure(Presentation("xy", tuple(rels) + (extra,)))
    assert b.free_rank <= a.free_rank
    for p in (2, 3, 5, 7):
        assert GR.mod_p_dimension(b, p) <= GR.mod_p_dimension(a, p)


@given(st.lists(st.lists(st.integers(-30, 30), min_size=3, max_size=3), min_size=1, max_size=4))
def test_snf_hypothesis(m):
    _check_snf(m)
