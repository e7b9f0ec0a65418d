"""Newton filtration of a finite-colength monomial ideal J."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import InternalError, InvalidInput
from .geometry import Face, HalfSpace, HPolyhedron, Point, Rational, dot, minimize_linear, normalize_number
from .newton import (
    MonomialIdeal,
    NewtonPolyhedron,
    cone_of_face,
    minimal_lattice_points,
    newton_polyhedron,
)


class _Infinity:
    """Filtration value of the zero ideal.  Compares above every number, supports no arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


INF = _Infinity()


@dataclass(frozen=True)
class Piece:
    normal: tuple[int, ...]
    level: int
    multiplier: int

    def value(self, k: Sequence[Rational]) -> Rational:
        return self.multiplier * dot(self.normal, k)


@dataclass(frozen=True)
class DiagonalData:
    exponents: tuple[int, ...]
    weights: tuple[int, ...]
    w0: int
    v: tuple[int, ...]


@dataclass(frozen=True)
class FiltrationMap:
    source: NewtonPolyhedron
    pieces: tuple[Piece, ...]
    M: int
    diagonal: DiagonalData | None

    @property
    def n(self) -> int:
        return self.source.ambient_dim

    @property
    def is_maximal(self) -> bool:
        return self.diagonal is not None and all(a == 1 for a in self.diagonal.exponents)

    def phi(self, k: Sequence[Rational]) -> Rational:
        if len(k) != self.n or any(c < 0 for c in k):
            raise InvalidInput(f"point {tuple(k)} must be a non-negative vector of length {self.n}")
        return normalize_number(min(p.value(k) for p in self.pieces))

    def active_pieces(self, face: Face) -> tuple[Piece, ...]:
        normals = {h.normal for h in face.normals}
        return tuple(p for p in self.pieces if p.normal in normals)

    def level_set_region(self, r: Rational) -> tuple[HalfSpace, ...]:
        """Half-spaces cutting out ``{k >= 0 : phi(k) >= r}`` (a dilate of the source)."""
        return tuple(HalfSpace(p.normal, normalize_number(Fraction(r) / p.multiplier)) for p in self.pieces) + tuple(
            HalfSpace(tuple(int(i == j) for j in range(self.n)), 0) for i in range(self.n)
        )


@lru_cache(maxsize=1024)
def build_filtration(J: MonomialIdeal) -> FiltrationMap:
    poly = newton_polyhedron(J)
    poly.require_convenient()
    facets = poly.positive_facets
    if any(not all(c > 0 for c in f.normal) for f in facets):
        raise InternalError("convenient polyhedron with a non-compact positive facet")
    M = math.lcm(*(int(f.offset) for f in facets))
    pieces = tuple(Piece(f.normal, int(f.offset), M // int(f.offset)) for f in facets)
    return FiltrationMap(poly, pieces, M, _diagonal_data(poly, M))


def _diagonal_data(poly: NewtonPolyhedron, M: int) -> DiagonalData | None:
    # Diagonal means every vertex sits on a coordinate axis.
    if len(poly.vertices) != poly.ambient_dim:
        return None
    if any(sum(1 for c in v if c) != 1 for v in poly.vertices):
        return None
    exponents = tuple(int(t) for t in poly.axis_intercepts)
    total = math.prod(exponents)
    weights = tuple(total // a for a in exponents)
    w0 = math.gcd(*weights)
    v = tuple(w // w0 for w in weights)
    if total // w0 != M or (len(poly.positive_facets) != 1 or poly.positive_facets[0].normal != v):
        raise InternalError("diagonal data disagrees with the facet description")
    return DiagonalData(exponents, weights, w0, v)


def phi(F: FiltrationMap, k: Sequence[Rational]) -> Rational:
    return F.phi(k)


def nu_ideal(F: FiltrationMap, I: MonomialIdeal):
    """Minimum of the filtration over the generators; ``INF`` for the zero ideal."""
    if I.is_zero:
        return INF
    return min(F.phi(g) for g in I.generators)


def nu_region_with_witness(F: FiltrationMap, region: HPolyhedron, face: Face) -> tuple[Rational, Point]:
    """Minimum of the filtration over a region inside the cone over ``face``."""
    active = F.active_pieces(face)
    if not active:
        raise InvalidInput("face is not a compact face of the filtration's polyhedron")
    first = active[0]
    value, witness = minimize_linear(tuple(first.multiplier * c for c in first.normal), region)
    for p in active[1:]:
        if p.value(witness) != value:
            raise InternalError("filtration is not linear on the cone over the face")
    return value, witness


def nu_region(F: FiltrationMap, region: HPolyhedron, face: Face) -> Rational:
    return nu_region_with_witness(F, region, face)[0]


def region_in_cone(P: NewtonPolyhedron, face: Face) -> HPolyhedron:
    return P.region().intersect(cone_of_face(face).region)


def filtration_ideal(F: FiltrationMap, r: int) -> MonomialIdeal:
    """Monomial generators of ``{h : nu(h) >= r}``."""
    if r < 0 or int(r) != r:
        raise InvalidInput("filtration level must be a non-negative integer")
    if r == 0:
        return MonomialIdeal(F.n, ((0,) * F.n,))
    bounds = [max(math.ceil(Fraction(r) / (p.multiplier * p.normal[j])) for p in F.pieces) for j in range(F.n)]
    return MonomialIdeal(F.n, minimal_lattice_points(F.level_set_region(r), bounds))


def diagonal_ideal_of_weights(w: Sequence[int]) -> MonomialIdeal:
    w = tuple(w)
    if not w or any(int(c) != c or c < 1 for c in w):
        raise InvalidInput(f"weights {w} must be positive integers")
    if math.gcd(*w) != 1:
        raise InvalidInput(f"weights {w} must be primitive")
    total = math.prod(w)
    return MonomialIdeal.pure_powers([total // c for c in w])


def weighted_degree(w: Sequence[int], k: Sequence[int]) -> int:
    return dot(w, k)


def weighted_degree_ideal(w: Sequence[int], I: MonomialIdeal) -> int:
    if I.is_zero:
        raise InvalidInput("weighted degree of the zero ideal")
    return min(dot(w, g) for g in I.generators)
