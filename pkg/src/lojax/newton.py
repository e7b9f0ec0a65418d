"""Monomial ideals and their Newton polyhedra."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import InternalError, InvalidInput, NotFiniteColength
from .geometry import (
    Face,
    HalfSpace,
    HPolyhedron,
    Point,
    Rational,
    as_point,
    check_dim,
    dot,
    enumerate_faces,
    normalize_number,
    nullspace,
    prune_dominated,
    rank,
    signed_primitive,
    upward_hull,
)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, identified with its minimal set of exponent vectors.

    Dominated generators are pruned on construction, so two ideals compare
    equal exactly when they are equal as ideals.  An empty generator set is
    the zero ideal.
    """

    num_vars: int
    generators: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        check_dim(self.num_vars)
        gens = []
        for g in self.generators:
            g = tuple(g)
            if len(g) != self.num_vars:
                raise InvalidInput(f"exponent {g} does not have {self.num_vars} entries")
            if any(int(c) != c or c < 0 for c in g):
                raise InvalidInput(f"exponent {g} must be a non-negative integer vector")
            gens.append(tuple(int(c) for c in g))
        object.__setattr__(self, "generators", tuple(prune_dominated(gens)))
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != self.num_vars or len(set(names)) != len(names):
                raise InvalidInput("variable names must be unique, one per variable")
            object.__setattr__(self, "names", names)

    @classmethod
    def maximal(cls, n: int) -> "MonomialIdeal":
        return cls(n, tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def pure_powers(cls, exponents: Sequence[int]) -> "MonomialIdeal":
        n = len(exponents)
        return cls(n, tuple(tuple(a if j == i else 0 for j in range(n)) for i, a in enumerate(exponents)))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.num_vars,)

    def contains_monomial(self, k: Sequence[int]) -> bool:
        return any(all(a <= b for a, b in zip(g, k)) for g in self.generators)

    def order(self) -> int:
        if self.is_zero:
            raise InvalidInput("order of the zero ideal is infinite")
        return min(sum(g) for g in self.generators)

    def restrict(self, axes: Iterable[int]) -> "MonomialIdeal":
        """Generators supported on ``axes``, with the other coordinates dropped.

        May return the zero ideal.
        """
        axes = sorted(set(axes))
        if not axes:
            raise InvalidInput("restriction to an empty set of variables")
        if any(a < 0 or a >= self.num_vars for a in axes):
            raise InvalidInput(f"axes {axes} out of range")
        outside = [i for i in range(self.num_vars) if i not in axes]
        gens = [tuple(g[i] for i in axes) for g in self.generators if all(g[i] == 0 for i in outside)]
        names = tuple(self.names[i] for i in axes) if self.names else None
        return MonomialIdeal(len(axes), tuple(gens), names)

    def embed(self, axes: Sequence[int], n: int) -> "MonomialIdeal":
        """Inverse of ``restrict``: view an ideal in ``len(axes)`` variables inside ``n`` variables."""
        gens = []
        for g in self.generators:
            full = [0] * n
            for a, c in zip(axes, g):
                full[a] = c
            gens.append(tuple(full))
        return MonomialIdeal(n, tuple(gens))

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_same(other)
        return MonomialIdeal(self.num_vars, self.generators + other.generators, self.names)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_same(other)
        gens = {tuple(a + b for a, b in zip(g, h)) for g in self.generators for h in other.generators}
        return MonomialIdeal(self.num_vars, tuple(gens), self.names)

    def __pow__(self, s: int) -> "MonomialIdeal":
        if not isinstance(s, int) or s < 0:
            raise InvalidInput("ideal powers take non-negative integer exponents")
        out = MonomialIdeal(self.num_vars, ((0,) * self.num_vars,), self.names)
        for _ in range(s):
            out = out * self
        return out

    def _check_same(self, other: "MonomialIdeal") -> None:
        if self.num_vars != other.num_vars:
            raise InvalidInput("ideals live in different numbers of variables")


def maximal_ideal_power(n: int, r: int) -> MonomialIdeal:
    return MonomialIdeal.maximal(n) ** r


# ---------------------------------------------------------------------------
# Newton polyhedra
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SupportedFace:
    """The face where ``<v, .>`` attains its minimum over the polyhedron."""

    value: Rational
    vertices: tuple[Point, ...]
    compact: bool


@dataclass(frozen=True)
class NewtonPolyhedron:
    ambient_dim: int
    vertices: tuple[Point, ...]
    facets: tuple[HalfSpace, ...]

    @classmethod
    def from_points(cls, points: Iterable[Sequence[Rational]]) -> "NewtonPolyhedron":
        points = list(points)
        if not points:
            raise InvalidInput("Newton polyhedron of an empty set (zero ideal)")
        vertices, facets = upward_hull(points)
        return cls(len(vertices[0]), vertices, facets)

    @cached_property
    def compact_faces(self) -> tuple[Face, ...]:
        return enumerate_faces(self.vertices, self.facets)

    def faces_of_dim(self, d: int) -> tuple[Face, ...]:
        return tuple(f for f in self.compact_faces if f.dim == d)

    @cached_property
    def axis_intercepts(self) -> tuple[Rational | None, ...]:
        """Per axis, the least ``t`` with ``t * e_i`` in the polyhedron, or ``None``."""
        out = []
        for i in range(self.ambient_dim):
            t = Fraction(0)
            hit = True
            for f in self.facets:
                if f.normal[i] == 0:
                    if f.offset > 0:
                        hit = False
                        break
                else:
                    t = max(t, Fraction(f.offset) / f.normal[i])
            out.append(normalize_number(t) if hit else None)
        return tuple(out)

    @property
    def convenient(self) -> bool:
        return all(t is not None and t > 0 for t in self.axis_intercepts)

    @property
    def positive_facets(self) -> tuple[HalfSpace, ...]:
        """Facets with positive support value (these are the compact ones when convenient)."""
        return tuple(f for f in self.facets if f.offset > 0)

    @property
    def compact_facets(self) -> tuple[HalfSpace, ...]:
        return tuple(f for f in self.facets if all(c > 0 for c in f.normal))

    def region(self) -> HPolyhedron:
        return HPolyhedron(self.ambient_dim, self.facets)

    def contains(self, k: Sequence[Rational]) -> bool:
        return all(f.contains(k) for f in self.facets)

    def support_value(self, v: Sequence[Rational]) -> Rational:
        _check_direction(v, self.ambient_dim)
        return min(dot(v, p) for p in self.vertices)

    def face(self, v: Sequence[Rational]) -> SupportedFace:
        value = self.support_value(v)
        verts = tuple(p for p in self.vertices if dot(v, p) == value)
        return SupportedFace(value, verts, all(c > 0 for c in v))

    def require_convenient(self) -> None:
        if not self.convenient:
            raise NotFiniteColength("Newton polyhedron does not meet every coordinate axis")


def _check_direction(v: Sequence[Rational], n: int) -> None:
    if len(v) != n or any(c < 0 for c in v) or not any(v):
        raise InvalidInput(f"support direction {tuple(v)} must be non-negative and non-zero")


@lru_cache(maxsize=4096)
def newton_polyhedron(ideal: MonomialIdeal) -> NewtonPolyhedron:
    if ideal.is_zero:
        raise InvalidInput("the zero ideal has an empty Newton polyhedron")
    return NewtonPolyhedron.from_points(ideal.generators)


def contains_scaled(r: Rational, outer_j: NewtonPolyhedron, s: Rational, inner_i: NewtonPolyhedron) -> bool:
    """Whether ``r * P_J`` is contained in ``s * P_I``."""
    if r <= 0 or s <= 0:
        raise InvalidInput("scaling factors must be positive")
    ratio = Fraction(r) / Fraction(s)
    return all(inner_i.contains(tuple(ratio * c for c in u)) for u in outer_j.vertices)


def minkowski_sum(p: NewtonPolyhedron, q: NewtonPolyhedron) -> NewtonPolyhedron:
    if p.ambient_dim != q.ambient_dim:
        raise InvalidInput("Minkowski sum of polyhedra in different dimensions")
    return NewtonPolyhedron.from_points(
        tuple(a + b for a, b in zip(u, w)) for u in p.vertices for w in q.vertices
    )


def dilate(p: NewtonPolyhedron, s: Rational) -> NewtonPolyhedron:
    s = Fraction(s)
    if s <= 0:
        raise InvalidInput("dilation factor must be positive")
    return NewtonPolyhedron(
        p.ambient_dim,
        tuple(as_point(s * c for c in v) for v in p.vertices),
        tuple(HalfSpace(f.normal, normalize_number(s * f.offset)) for f in p.facets),
    )


def ray_intersection(p: NewtonPolyhedron, u: Sequence[int]) -> Point:
    """The point where the half-line through ``u`` enters the polyhedron."""
    _check_direction(u, p.ambient_dim)
    t = Fraction(0)
    for f in p.positive_facets:
        d = dot(f.normal, u)
        if d == 0:
            raise InternalError(f"ray {tuple(u)} never meets the polyhedron (non-convenient?)")
        t = max(t, Fraction(f.offset) / d)
    return as_point(t * c for c in u)


def closure_generators(ideal: MonomialIdeal) -> MonomialIdeal:
    """Minimal generators of the integral closure of a finite-colength monomial ideal."""
    poly = newton_polyhedron(ideal)
    poly.require_convenient()
    bounds = [math.ceil(t) for t in poly.axis_intercepts]
    gens = minimal_lattice_points(poly.facets, bounds)
    return MonomialIdeal(ideal.num_vars, gens, ideal.names)


def minimal_lattice_points(facets: Sequence[HalfSpace], bounds: Sequence[int]) -> tuple[Point, ...]:
    """Minimal integer points of an upward-closed region given by non-negative facets.

    ``bounds`` caps the first n-1 coordinates; every minimal point must lie
    inside the box for the result to be complete.  The last coordinate is
    solved for directly instead of scanned.
    """
    candidates = []
    for head in product(*(range(b + 1) for b in bounds[:-1])):
        last = minimal_last_coordinate(facets, head)
        if last is not None:
            candidates.append(head + (last,))
    return tuple(prune_dominated(candidates))


def minimal_last_coordinate(facets: Sequence[HalfSpace], head: Sequence[int]) -> int | None:
    """Least integer ``t >= 0`` with ``head + (t,)`` satisfying every facet, if any."""
    t = 0
    for f in facets:
        partial = dot(f.normal[:-1], head)
        c = f.normal[-1]
        if c == 0:
            if partial < f.offset:
                return None
        elif c > 0:
            t = max(t, math.ceil(Fraction(f.offset - partial) / c))
        else:
            raise InternalError("Newton facet with a negative normal entry")
    return t


def in_closure(ideal: MonomialIdeal, other: MonomialIdeal) -> bool:
    """Whether ``ideal`` is contained in the integral closure of ``other``."""
    poly = newton_polyhedron(other)
    return all(poly.contains(g) for g in ideal.generators)


def restrict(ideal: MonomialIdeal, axes: Iterable[int]) -> MonomialIdeal:
    return ideal.restrict(axes)


def order(ideal: MonomialIdeal) -> int:
    return ideal.order()


# ---------------------------------------------------------------------------
# cones over compact faces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FaceCone:
    """The cone over a compact face: every half-line from 0 through the face."""

    face: Face
    region: HPolyhedron


def cone_of_face(face: Face) -> FaceCone:
    rays = list(face.vertices)
    n = len(rays[0])
    if any(not any(r) for r in rays):
        raise InvalidInput("cone over a face containing the origin")
    d = rank(rays)
    complement = nullspace(rays, n)
    halfspaces = set()
    for w in complement:
        halfspaces.add(HalfSpace(tuple(w), 0))
        halfspaces.add(HalfSpace(tuple(-c for c in w), 0))
    for subset in combinations(rays, d - 1):
        normals = nullspace(list(subset) + complement, n)
        if len(normals) != 1:
            continue
        w = normals[0]
        vals = [dot(w, r) for r in rays]
        if all(v <= 0 for v in vals):
            w = tuple(-c for c in w)
            vals = [-v for v in vals]
        elif not all(v >= 0 for v in vals):
            continue
        if rank([r for r, v in zip(rays, vals) if v == 0]) == d - 1:
            halfspaces.add(HalfSpace(signed_primitive(w), 0))
    return FaceCone(face, HPolyhedron(n, tuple(sorted(halfspaces))))
