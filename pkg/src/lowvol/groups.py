"""Abelianizations of finitely presented groups via Smith normal form."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .words import parse_word

Matrix = list[list[int]]


@dataclass(frozen=True)
class Presentation:
    generators: str = "xy"
    relators: tuple[str, ...] = ()
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(self.relators))
        for r in self.relators:
            parse_word(r, self.generators)

    @property
    def generator_count(self) -> int:
        return len(self.generators)

    def exponent_matrix(self) -> Matrix:
        return exponent_matrix(self)


def exponent_matrix(p: Presentation) -> Matrix:
    """One row per relator, one column per generator: signed letter counts."""
    rows = []
    for r in p.relators:
        row = [0] * p.generator_count
        for idx, sign in parse_word(r, p.generators):
            row[idx] += sign
        rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# Smith normal form


class SNF(NamedTuple):
    diagonal: list[int]
    left: Matrix
    right: Matrix


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(m: Sequence[Sequence[int]]) -> SNF:
    """Return ``(diagonal, left, right)`` with ``left @ m @ right`` diagonal.

    ``left`` and ``right`` are unimodular, the diagonal entries are
    nonnegative and each divides the next.  The pivot is always the entry of
    smallest nonzero absolute value, first in row-major order.
    """
    a = [[int(v) for v in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if any(len(row) != cols for row in a):
        raise ValueError("ragged matrix")
    left, right = _identity(rows), _identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for M in (a, right):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):  # row dst += k * row src
        if k:
            for M in (a, left):
                M[dst] = [x + k * y for x, y in zip(M[dst], M[src])]

    def add_col(dst, src, k):
        if k:
            for M in (a, right):
                for row in M:
                    row[dst] += k * row[src]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    v = abs(a[i][j])
                    if v and (best is None or v < best[0]):
                        best = (v, i, j)
            if best is None:
                break
            _, i, j = best
            swap_rows(t, i)
            swap_cols(t, j)
            p = a[t][t]
            clean = True
            for i in range(t + 1, rows):
                add_row(i, t, -(a[i][t] // p))
                clean = clean and a[i][t] == 0
            for j in range(t + 1, cols):
                add_col(j, t, -(a[t][j] // p))
                clean = clean and a[t][j] == 0
            if not clean:
                continue
            # pivot must divide the rest of the block
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]
    diagonal = [a[i][i] for i in range(min(rows, cols))]
    return SNF(diagonal, left, right)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def integer_det(m: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1] if n else 1


# ---------------------------------------------------------------------------
# abelian groups


@dataclass(frozen=True)
class AbelianStructure:
    """``Z^free_rank`` plus the cyclic factors ``Z/d`` for d in invariant_factors."""

    free_rank: int
    invariant_factors: tuple[int, ...] = field(default=())

    def __post_init__(self):
        fs = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", fs)
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        if any(d < 2 for d in fs):
            raise ValueError("invariant factors must be >= 2")
        if any(b % a for a, b in zip(fs, fs[1:])):
            raise ValueError(f"invariant factors {fs} do not form a divisibility chain")

    def __str__(self):
        parts = [f"Z/{d}" for d in self.invariant_factors] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "invariant_factors": list(self.invariant_factors)}


def h1_structure(p: Presentation) -> AbelianStructure:
    diag = smith_normal_form(exponent_matrix(p)).diagonal if p.relators else []
    rank = sum(1 for d in diag if d)
    return AbelianStructure(p.generator_count - rank, tuple(d for d in diag if d > 1))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def mod_p_dimension(s: AbelianStructure, p: int) -> int:
    """dim of H_1(; Z/p) for a group with abelianization s."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return s.free_rank + sum(1 for d in s.invariant_factors if d % p == 0)


# ---------------------------------------------------------------------------
# the seven two-generator presentations E_0 ... E_6

RELATORS = (
    ("xyXyyXyxyy", "XyxyxYxyxy"),
    ("XXyXYXYxYXYXyXXyy", "XXyyXyxyxYxyxyXyy"),
    ("XyxyxYxxYxyxyXyy", "XXyXXyyXyxyxyXyy"),
    ("XXyxyXXyyXYXyXYxYXYxxYXYxYXyXYXyy", "XXyxyXyxYxyxYYxyxYxyXyxyXXyyXYXyy"),
    ("XXyxyXyxYxyxYxyXyxyXXyyXYXyXYXyy", "XXyxyXyxyXXyyXYXyXYxYXYxYXyXYXyy"),
    ("XyXYXyXyxyxYxyxy", "XyxyxYxYXYxYxyxy"),
    ("XYXyXYxYXyXYXyxy", "XYXyxyXyxYxyXyxy"),
)

RELATORS_SHA256 = "7e1a894659ca409edfc3344c404b0a878638d9a820b84f57499857b8d6256fca"


def relators_digest(relators=RELATORS) -> str:
    text = "\n".join(" ".join(pair) for pair in relators)
    return hashlib.sha256(text.encode("ascii")).hexdigest()


class EkEntry(NamedTuple):
    k: int
    presentation: Presentation
    tau: str


def ek_table() -> list[EkEntry]:
    from .bounds import TAU

    if relators_digest() != RELATORS_SHA256:
        raise RuntimeError("relator table does not match its checksum")
    return [EkEntry(k, Presentation("xy", pair, f"E{k}"), TAU[k]) for k, pair in enumerate(RELATORS)]
