"""Exact rational convex geometry for upward-closed polyhedra.

Everything here works on tuples of ``int``/``Fraction``; there is no floating
point anywhere.  Dual descriptions are computed with the double description
method on small integer cones, which is plenty at the sizes this package
targets (dimension at most ``MAX_DIM``, a few dozen generators).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

from .errors import DimensionLimit, EmptyRegion, InternalError, InvalidInput

Rational = Union[int, Fraction]
Point = tuple  # tuple of Rational

MAX_DIM = 6


# ---------------------------------------------------------------------------
# small exact linear algebra
# ---------------------------------------------------------------------------

def dot(u: Sequence[Rational], v: Sequence[Rational]) -> Rational:
    return sum(a * b for a, b in zip(u, v))


def normalize_number(x: Rational) -> Rational:
    """Collapse integral fractions to ``int`` so points hash and print canonically."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def as_point(coords: Iterable) -> Point:
    return tuple(normalize_number(Fraction(c)) for c in coords)


def check_dim(n: int) -> None:
    if n < 1:
        raise InvalidInput("ambient dimension must be at least 1")
    if n > MAX_DIM:
        raise DimensionLimit(f"dimension {n} exceeds the cap of {MAX_DIM}")


def _lcm_denominators(values: Iterable[Rational]) -> int:
    return reduce(math.lcm, (Fraction(x).denominator for x in values), 1)


def _gcd_all(values: Iterable[int]) -> int:
    return reduce(math.gcd, (abs(x) for x in values), 0)


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide a non-negative integer vector by the gcd of its entries."""
    v = tuple(v)
    if any(int(x) != x or x < 0 for x in v):
        raise InvalidInput(f"primitive() needs a non-negative integer vector, got {v}")
    g = _gcd_all(int(x) for x in v)
    if g == 0:
        raise InvalidInput("primitive() of the zero vector")
    return tuple(int(x) // g for x in v)


def signed_primitive(v: Sequence[Rational]) -> tuple[int, ...]:
    """Smallest integer vector with the same direction as a rational vector."""
    scale = _lcm_denominators(v)
    ints = [int(Fraction(x) * scale) for x in v]
    g = _gcd_all(ints)
    if g == 0:
        raise InternalError("direction of the zero vector")
    return tuple(x // g for x in ints)


def _echelon(rows: Sequence[Sequence[Rational]]) -> list[list[Fraction]]:
    """Row echelon form over the rationals; returns only the non-zero rows."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    out: list[list[Fraction]] = []
    col = 0
    while m and col < ncols:
        pivot = next((r for r in m if r[col] != 0), None)
        if pivot is None:
            col += 1
            continue
        m.remove(pivot)
        rest = []
        for r in m:
            if r[col] != 0:
                f = r[col] / pivot[col]
                r = [a - f * b for a, b in zip(r, pivot)]
            if any(r):
                rest.append(r)
        m = rest
        out.append(pivot)
        col += 1
    return out


def rank(vectors: Sequence[Sequence[Rational]]) -> int:
    return len(_echelon(vectors))


def affine_dim(points: Sequence[Point]) -> int:
    """Dimension of the affine hull; -1 for the empty set."""
    if not points:
        return -1
    p0 = points[0]
    return rank([tuple(a - b for a, b in zip(p, p0)) for p in points[1:]])


def solve(a: Sequence[Sequence[Rational]], b: Sequence[Rational]) -> tuple[Fraction, ...] | None:
    """Solve a square system exactly; ``None`` when singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(rhs)] for row, rhs in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        pr = m[col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col] / pr[col]
                m[r] = [x - f * y for x, y in zip(m[r], pr)]
    return tuple(m[i][n] / m[i][i] for i in range(n))


def determinant(rows: Sequence[Sequence[Rational]]) -> Fraction:
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] / m[col][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


def nullspace(rows: Sequence[Sequence[Rational]], ncols: int) -> list[tuple[int, ...]]:
    """Integer basis of the right null space of ``rows``."""
    ech = _echelon(rows)
    # reduced echelon
    pivots = []
    for r in ech:
        c = next(i for i, x in enumerate(r) if x != 0)
        pivots.append(c)
    red = [list(r) for r in ech]
    for i in range(len(red) - 1, -1, -1):
        c = pivots[i]
        red[i] = [x / red[i][c] for x in red[i]]
        for j in range(i):
            if red[j][c] != 0:
                f = red[j][c]
                red[j] = [x - f * y for x, y in zip(red[j], red[i])]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, c in enumerate(pivots):
            vec[c] = -red[i][fc]
        basis.append(signed_primitive(vec))
    return basis


# ---------------------------------------------------------------------------
# double description
# ---------------------------------------------------------------------------

def _int_row(coeffs: Sequence[Rational]) -> tuple[int, ...]:
    scale = _lcm_denominators(coeffs)
    return tuple(int(Fraction(x) * scale) for x in coeffs)


def extreme_rays(rows: Sequence[Sequence[int]], dim: int) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone ``{x : <r, x> >= 0 for every row r}``.

    Raises ``InternalError`` when the rows do not span, i.e. the cone has a
    non-trivial lineality space.
    """
    rows = sorted(set(tuple(int(x) for x in r) for r in rows if any(r)))
    basis_idx: list[int] = []
    ech: list[list[Fraction]] = []
    for i, r in enumerate(rows):
        if rank(ech + [list(r)]) > len(ech):
            basis_idx.append(i)
            ech = _echelon(ech + [list(r)])
            if len(basis_idx) == dim:
                break
    if len(basis_idx) < dim:
        raise InternalError("cone is not pointed")

    # columns of the inverse of the basis matrix are the initial rays
    rays: list[tuple[int, ...]] = []
    for j in range(dim):
        e = [1 if k == j else 0 for k in range(dim)]
        col = solve([rows[i] for i in basis_idx], e)
        rays.append(signed_primitive(col))
    masks = []
    for ray in rays:
        m = 0
        for i in basis_idx:
            if dot(rows[i], ray) == 0:
                m |= 1 << i
        masks.append(m)

    in_basis = set(basis_idx)
    for idx, h in enumerate(rows):
        if idx in in_basis:
            continue
        bit = 1 << idx
        vals = [dot(h, r) for r in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        new_rays = []
        new_masks = []
        for k, v in enumerate(vals):
            if v > 0:
                new_rays.append(rays[k])
                new_masks.append(masks[k])
            elif v == 0:
                new_rays.append(rays[k])
                new_masks.append(masks[k] | bit)
        for p in pos:
            for q in neg:
                common = masks[p] & masks[q]
                if common.bit_count() < dim - 2:
                    continue
                if any(k != p and k != q and (masks[k] & common) == common for k in range(len(rays))):
                    continue
                combo = [vals[p] * a - vals[q] * b for a, b in zip(rays[q], rays[p])]
                g = _gcd_all(combo)
                new_rays.append(tuple(x // g for x in combo))
                new_masks.append(common | bit)
        rays, masks = new_rays, new_masks
    return sorted(set(rays))


# ---------------------------------------------------------------------------
# half-spaces and upward hulls
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class HalfSpace:
    """``{k : <normal, k> >= offset}``."""

    normal: tuple[int, ...]
    offset: Rational

    def value(self, k: Sequence[Rational]) -> Rational:
        return dot(self.normal, k)

    def contains(self, k: Sequence[Rational]) -> bool:
        return dot(self.normal, k) >= self.offset

    def is_tight(self, k: Sequence[Rational]) -> bool:
        return dot(self.normal, k) == self.offset


@dataclass(frozen=True)
class HPolyhedron:
    ambient_dim: int
    halfspaces: tuple[HalfSpace, ...]

    def __post_init__(self):
        if any(len(h.normal) != self.ambient_dim for h in self.halfspaces):
            raise InvalidInput("half-space dimension does not match the ambient dimension")

    def contains(self, k: Sequence[Rational]) -> bool:
        return all(h.contains(k) for h in self.halfspaces)

    def intersect(self, other: "HPolyhedron") -> "HPolyhedron":
        return HPolyhedron(self.ambient_dim, tuple(sorted(set(self.halfspaces + other.halfspaces))))


def prune_dominated(points: Iterable[Point]) -> list[Point]:
    """Drop points that componentwise dominate another point (they never matter for upward hulls)."""
    pts = sorted(set(points))
    keep = []
    for p in pts:
        if not any(all(a <= b for a, b in zip(q, p)) for q in keep):
            keep.append(p)
    return keep


def upward_hull(points: Iterable[Sequence[Rational]]) -> tuple[tuple[Point, ...], tuple[HalfSpace, ...]]:
    """Vertices and irredundant facets of ``conv(points) + R^n_{>=0}``."""
    pts = [as_point(p) for p in points]
    if not pts:
        raise InvalidInput("upward_hull of an empty point set")
    n = len(pts[0])
    check_dim(n)
    if any(len(p) != n for p in pts):
        raise InvalidInput("points of mixed dimension")
    if any(c < 0 for p in pts for c in p):
        raise InvalidInput("upward_hull expects non-negative points")
    pts = prune_dominated(pts)

    rows = [_int_row(p + (-1,)) for p in pts]
    rows += [tuple(1 if j == i else 0 for j in range(n + 1)) for i in range(n)]
    facets = set()
    for ray in extreme_rays(rows, n + 1):
        v = ray[:n]
        if not any(v):
            continue
        normal = primitive(v)
        offset = min(dot(normal, p) for p in pts)
        facets.add(HalfSpace(normal, normalize_number(Fraction(offset))))
    facets = tuple(sorted(facets))

    vertices = tuple(
        p for p in pts
        if rank([f.normal for f in facets if f.is_tight(p)]) == n
    )
    return vertices, facets


# ---------------------------------------------------------------------------
# faces
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Face:
    """A face given by its vertex set (compact faces are the convex hull of these)."""

    dim: int
    vertices: tuple[Point, ...]
    normals: tuple[HalfSpace, ...] = field(compare=False)

    @property
    def compact(self) -> bool:
        total = [sum(h.normal[i] for h in self.normals) for i in range(len(self.vertices[0]))]
        return all(t > 0 for t in total)


def enumerate_faces(vertices: Sequence[Point], facets: Sequence[HalfSpace]) -> tuple[Face, ...]:
    """All compact faces of an upward-closed polyhedron, sorted by (dim, vertices)."""
    verts = list(vertices)
    full = (1 << len(verts)) - 1
    fmasks = []
    for f in facets:
        m = 0
        for i, v in enumerate(verts):
            if f.is_tight(v):
                m |= 1 << i
        fmasks.append(m)

    def closure(mask: int) -> int:
        out = full
        for fm in fmasks:
            if fm & mask == mask:
                out &= fm
        return out

    seen = set()
    todo = [closure(m) for m in fmasks if m]
    while todo:
        m = todo.pop()
        if m in seen:
            continue
        seen.add(m)
        for fm in fmasks:
            sub = m & fm
            if sub and sub != m:
                c = closure(sub)
                if c not in seen:
                    todo.append(c)

    faces = []
    for m in seen:
        fv = tuple(v for i, v in enumerate(verts) if m >> i & 1)
        active = tuple(f for f, fm in zip(facets, fmasks) if fm & m == m)
        face = Face(affine_dim(list(fv)), fv, active)
        if face.compact:
            faces.append(face)
    return tuple(sorted(faces))


# ---------------------------------------------------------------------------
# H -> V, linear minimization, volume
# ---------------------------------------------------------------------------

def vertices_of(region: HPolyhedron) -> tuple[list[Point], list[tuple[int, ...]]]:
    """Vertices and recession rays of a pointed H-polyhedron (empty lists if infeasible)."""
    n = region.ambient_dim
    rows = [_int_row(h.normal + (-Fraction(h.offset),)) for h in region.halfspaces]
    rows.append(tuple([0] * n + [1]))
    lineality = nullspace(rows, n + 1)
    if lineality:
        rows += [tuple(w) for w in lineality] + [tuple(-x for x in w) for w in lineality]
    rays = extreme_rays(rows, n + 1)
    verts = sorted(set(as_point(Fraction(x, r[n]) for x in r[:n]) for r in rays if r[n] > 0))
    rec = [r[:n] for r in rays if r[n] == 0]
    if lineality and verts:
        raise InternalError("region has a lineality space; no basic feasible point")
    return verts, rec


def minimize_linear(objective: Sequence[Rational], region: HPolyhedron) -> tuple[Rational, Point]:
    """Exact minimum of ``<objective, .>`` over a pointed region and its lexicographically smallest minimizer.

    Raises ``EmptyRegion`` for an infeasible region.
    """
    objective = as_point(objective)
    if len(objective) != region.ambient_dim:
        raise InvalidInput("objective dimension does not match the region")
    verts, rec = vertices_of(region)
    if not verts:
        raise EmptyRegion("linear minimization over an empty region")
    if any(dot(objective, r) < 0 for r in rec):
        raise InternalError("objective unbounded below on the region")
    best = min(dot(objective, v) for v in verts)
    witness = min(v for v in verts if dot(objective, v) == best)
    return normalize_number(Fraction(best)), witness


def polytope_facets(points: Sequence[Point]) -> tuple[HalfSpace, ...]:
    """Facets of a full-dimensional bounded polytope (normals may be signed)."""
    n = len(points[0])
    rows = [_int_row(tuple(p) + (-1,)) for p in points]
    facets = set()
    for ray in extreme_rays(rows, n + 1):
        v = ray[:n]
        if not any(v):
            continue
        g = _gcd_all(v)
        normal = tuple(x // g for x in v)
        facets.add(HalfSpace(normal, normalize_number(Fraction(min(dot(normal, p) for p in points)))))
    return tuple(sorted(facets))


def polytope_volume(points: Iterable[Sequence[Rational]]) -> Rational:
    """Exact volume via a pulling triangulation from the lexicographically smallest vertex."""
    pts = sorted(set(as_point(p) for p in points))
    if not pts:
        return 0
    n = len(pts[0])
    if affine_dim(pts) < n:
        return 0
    facets = polytope_facets(pts)
    verts = [p for p in pts if rank([f.normal for f in facets if f.is_tight(p)]) == n]
    fmasks = []
    for f in facets:
        m = 0
        for i, v in enumerate(verts):
            if f.is_tight(v):
                m |= 1 << i
        fmasks.append(m)

    def members(mask: int) -> list[Point]:
        return [v for i, v in enumerate(verts) if mask >> i & 1]

    memo: dict[int, list[list[int]]] = {}

    def triangulate(mask: int, k: int) -> list[list[int]]:
        if mask in memo:
            return memo[mask]
        idx = [i for i in range(len(verts)) if mask >> i & 1]
        if k == 0:
            memo[mask] = [[idx[0]]]
            return memo[mask]
        apex = min(idx, key=lambda i: verts[i])
        subfaces = set()
        for fm in fmasks:
            sub = mask & fm
            if sub != mask and not (sub >> apex & 1) and affine_dim(members(sub)) == k - 1:
                subfaces.add(sub)
        out = []
        for sub in sorted(subfaces):
            for simplex in triangulate(sub, k - 1):
                out.append(simplex + [apex])
        memo[mask] = out
        return out

    total = Fraction(0)
    for simplex in triangulate((1 << len(verts)) - 1, n):
        base = verts[simplex[0]]
        rows = [tuple(a - b for a, b in zip(verts[i], base)) for i in simplex[1:]]
        total += abs(determinant(rows))
    return normalize_number(total / math.factorial(n))


def box(dim: int, upper: Rational) -> list[HalfSpace]:
    """Half-spaces of ``[0, upper]^dim``."""
    out = []
    for i in range(dim):
        e = tuple(1 if j == i else 0 for j in range(dim))
        out.append(HalfSpace(e, 0))
        out.append(HalfSpace(tuple(-x for x in e), normalize_number(-Fraction(upper))))
    return out

