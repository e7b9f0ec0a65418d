"""Mixed Lojasiewicz exponents of monomial ideals.

``a_invariant`` maximizes, over the compact faces of P(J) of a given
dimension, the minimum of the filtration of J over the part of P(I) lying in
the cone over that face.  Divided by M_J these give the exponents when J is
diagonal and I sits in the closure of J, and upper bounds in general.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .errors import InternalError, InvalidInput
from .filtration import FiltrationMap, build_filtration, nu_ideal, nu_region, region_in_cone
from .geometry import Rational, normalize_number
from .newton import MonomialIdeal, in_closure, newton_polyhedron, ray_intersection


class Kind(enum.Enum):
    EXACT = "exact"
    UPPER_BOUND = "upper_bound"
    ABSENT = "absent"


@dataclass(frozen=True)
class Entry:
    value: Rational | None
    kind: Kind


@dataclass(frozen=True)
class LojaReport:
    n: int
    M: int
    a: tuple[Rational, ...]
    c: int
    L: dict[int, Entry]
    inclusion: bool
    diagonal: bool
    notes: tuple[str, ...] = field(default=())

    @property
    def exponent(self) -> Rational:
        return self.L[self.n].value

    @property
    def all_exact(self) -> bool:
        return all(e.kind is Kind.EXACT for e in self.L.values())


def _check_pair(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.num_vars != J.num_vars:
        raise InvalidInput("ideals live in different numbers of variables")
    newton_polyhedron(I).require_convenient()
    newton_polyhedron(J).require_convenient()


def a_invariant(I: MonomialIdeal, J: MonomialIdeal, i: int) -> Rational:
    """Literal face-by-face LP value for index ``i`` (faces of dimension n - i)."""
    _check_pair(I, J)
    n = I.num_vars
    if not 1 <= i <= n:
        raise InvalidInput(f"index {i} outside 1..{n}")
    F = build_filtration(J)
    PI = newton_polyhedron(I)
    faces = F.source.faces_of_dim(n - i)
    if not faces:
        raise InternalError(f"no compact face of dimension {n - i}")
    return max(nu_region(F, region_in_cone(PI, face), face) for face in faces)


def a_vector_literal(I: MonomialIdeal, J: MonomialIdeal) -> tuple[Rational, ...]:
    return tuple(a_invariant(I, J, i) for i in range(1, I.num_vars + 1))


def a_vector_by_order(I: MonomialIdeal) -> tuple[int, ...]:
    """Values for J the maximal ideal: largest order among restrictions to n-i+1 variables."""
    n = I.num_vars
    out = []
    for i in range(1, n + 1):
        out.append(max(_restricted(I, L).order() for L in combinations(range(n), n - i + 1)))
    return tuple(out)


def a_vector_diagonal(I: MonomialIdeal, J: MonomialIdeal) -> tuple[Rational, ...]:
    """Values for diagonal J, computed from restrictions of I to coordinate subspaces."""
    _check_pair(I, J)
    F = build_filtration(J)
    if F.diagonal is None:
        raise InvalidInput("J is not diagonal")
    n = I.num_vars
    out = []
    for i in range(1, n + 1):
        best = None
        for L in combinations(range(n), n - i + 1):
            value = nu_ideal(F, _restricted(I, L).embed(L, n))
            best = value if best is None else max(best, value)
        out.append(best)
    return tuple(out)


def _restricted(I: MonomialIdeal, L) -> MonomialIdeal:
    sub = I.restrict(L)
    if sub.is_zero:
        raise InternalError("finite-colength ideal with a zero restriction")
    return sub


def a_vector(I: MonomialIdeal, J: MonomialIdeal) -> tuple[Rational, ...]:
    _check_pair(I, J)
    F = build_filtration(J)
    if F.is_maximal:
        return a_vector_by_order(I)
    if F.diagonal is not None:
        return a_vector_diagonal(I, J)
    return a_vector_literal(I, J)


def c_invariant(I: MonomialIdeal, J: MonomialIdeal) -> int:
    """Least c making every ray point of P(I) through a vertex of P(J) integral after scaling."""
    _check_pair(I, J)
    PI = newton_polyhedron(I)
    denominators = [Fraction(x).denominator for u in newton_polyhedron(J).vertices for x in ray_intersection(PI, u)]
    return math.lcm(*denominators)


def loja_exponent(I: MonomialIdeal, J: MonomialIdeal) -> Rational:
    return normalize_number(Fraction(a_invariant(I, J, I.num_vars)) / build_filtration(J).M)


def loja_oracle(I: MonomialIdeal, J: MonomialIdeal) -> Rational:
    """Smallest t with t * P(J) inside P(I), checked vertex by vertex."""
    _check_pair(I, J)
    PI = newton_polyhedron(I)
    best = Fraction(0)
    for u in newton_polyhedron(J).vertices:
        for f in PI.positive_facets:
            best = max(best, Fraction(f.offset) / sum(a * b for a, b in zip(f.normal, u)))
    return normalize_number(best)


NON_DIAGONAL_NOTE = (
    "J is not diagonal: index i uses compact faces of dimension n-i, so a_1 comes from "
    "the facet cones and can be smaller than the value at a vertex ray"
)


def loja_sequence(I: MonomialIdeal, J: MonomialIdeal) -> LojaReport:
    _check_pair(I, J)
    n = I.num_vars
    F = build_filtration(J)
    a = a_vector(I, J)
    inclusion = in_closure(I, J)
    diagonal = F.diagonal is not None
    notes = []
    L = {}
    for i in range(1, n + 1):
        value = normalize_number(Fraction(a[i - 1]) / F.M)
        if i == n or (diagonal and inclusion):
            L[i] = Entry(value, Kind.EXACT)
        elif inclusion:
            L[i] = Entry(value, Kind.UPPER_BOUND)
        else:
            L[i] = Entry(None, Kind.ABSENT)
    if not diagonal:
        notes.append(NON_DIAGONAL_NOTE)
    if not inclusion and n > 1:
        notes.append("I is not contained in the closure of J: only the index-n exponent is available")
    if L[n].value != loja_oracle(I, J):
        raise InternalError("exponent disagrees with the containment formula")
    return LojaReport(n, F.M, a, c_invariant(I, J), L, inclusion, diagonal, tuple(notes))


def build_K_ideals(I: MonomialIdeal, J: MonomialIdeal) -> tuple[MonomialIdeal, ...]:
    """Ideals generated by the lattice points of cM * P(I) on the level sets ``phi_J = cM * a_i``."""
    _check_pair(I, J)
    n = I.num_vars
    F = build_filtration(J)
    scale = c_invariant(I, J) * F.M
    PI = newton_polyhedron(I)
    out = []
    for a in a_vector(I, J):
        level = scale * a
        if Fraction(level).denominator != 1:
            raise InternalError("scaled a-invariant is not an integer")
        gens = level_set_points(F, int(level), PI, scale)
        ideal = MonomialIdeal(n, gens)
        if ideal.is_zero:
            raise InternalError(f"empty level set at {level}")
        if nu_ideal(F, ideal) != level:
            raise InternalError("level-set ideal has the wrong filtration value")
        out.append(ideal)
    return tuple(out)


def level_set_points(F: FiltrationMap, level: int, P, scale: Rational) -> list[tuple[int, ...]]:
    """Integer k with ``phi(k) == level`` and ``k / scale`` in P.

    phi is strictly increasing in the last coordinate, so the level set meets
    each vertical line at most once and the last coordinate is solved for.
    """
    n = F.n
    scale = Fraction(scale)
    bounds = [max(level // (p.multiplier * p.normal[j]) for p in F.pieces) for j in range(n)]
    points = []
    for head in product(*(range(b + 1) for b in bounds[:-1])):
        t = max(
            (Fraction(level, p.multiplier) - sum(a * b for a, b in zip(p.normal[:-1], head))) / p.normal[-1]
            for p in F.pieces
        )
        if t < 0 or t.denominator != 1:
            continue
        k = head + (int(t),)
        if F.phi(k) == level and P.contains(tuple(Fraction(c) / scale for c in k)):
            points.append(k)
    return points
