"""Covolumes, Samuel and mixed multiplicities, Rees mixed multiplicities, colength."""

from __future__ import annotations

import math
import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from .errors import InternalError, InvalidInput, NotStabilized
from .geometry import HPolyhedron, Rational, box, normalize_number, polytope_volume, solve, vertices_of
from .newton import MonomialIdeal, NewtonPolyhedron, dilate, minkowski_sum, newton_polyhedron

DEFAULT_SIGMA_CAP = 64


def covolume(P: NewtonPolyhedron) -> Rational:
    """Volume of the orthant minus the polyhedron."""
    P.require_convenient()
    n = P.ambient_dim
    top = max(P.axis_intercepts)
    region = HPolyhedron(n, tuple(sorted(set(P.facets) | set(box(n, top)))))
    verts, rays = vertices_of(region)
    if rays:
        raise InternalError("box-clipped polyhedron is unbounded")
    return normalize_number(Fraction(top) ** n - polytope_volume(verts))


@lru_cache(maxsize=4096)
def _covolume_of_combination(terms: tuple[tuple[MonomialIdeal, int], ...]) -> Rational:
    poly = None
    for ideal, count in terms:
        piece = dilate(newton_polyhedron(ideal), count) if count != 1 else newton_polyhedron(ideal)
        poly = piece if poly is None else minkowski_sum(poly, piece)
    return covolume(poly)


def covolume_of_combination(terms: Sequence[tuple[MonomialIdeal, int]]) -> Rational:
    """Covolume of ``sum count * P(ideal)``, with zero counts dropped."""
    key = tuple(sorted(((i, c) for i, c in terms if c), key=lambda t: (t[0].generators, t[1])))
    if not key:
        raise InvalidInput("empty Minkowski combination")
    return _covolume_of_combination(key)


def _integral(value: Rational, what: str) -> int:
    if Fraction(value).denominator != 1:
        raise InternalError(f"{what} is not an integer: {value}")
    return int(value)


def samuel_multiplicity(I: MonomialIdeal) -> int:
    P = newton_polyhedron(I)
    P.require_convenient()
    return _integral(math.factorial(I.num_vars) * covolume(P), "multiplicity")


def mixed_multiplicity(ideals: Sequence[MonomialIdeal]) -> int:
    """Mixed multiplicity of n finite-colength ideals by polarization of covolumes.

    Identical ideals are grouped, so a subset is described by how many copies
    of each distinct ideal it takes.
    """
    ideals = list(ideals)
    if not ideals:
        raise InvalidInput("mixed multiplicity of an empty tuple")
    n = ideals[0].num_vars
    if len(ideals) != n or any(i.num_vars != n for i in ideals):
        raise InvalidInput(f"mixed multiplicity needs exactly {n} ideals in {n} variables")
    for i in ideals:
        newton_polyhedron(i).require_convenient()
    groups = sorted(Counter(ideals).items(), key=lambda t: t[0].generators)
    total = Fraction(0)
    for counts in product(*(range(m + 1) for _, m in groups)):
        size = sum(counts)
        if size == 0:
            continue
        weight = math.prod(math.comb(m, k) for (_, m), k in zip(groups, counts))
        sign = -1 if (n - size) % 2 else 1
        total += sign * weight * Fraction(covolume_of_combination([(g, k) for (g, _), k in zip(groups, counts)]))
    value = _integral(total, "mixed multiplicity")
    if value <= 0:
        raise InternalError(f"non-positive mixed multiplicity {value}")
    return value


@dataclass(frozen=True)
class MultiplicityTable:
    n: int
    e_I: int
    e_J: int
    mixed: tuple[int, ...]
    covolumes: tuple[tuple[tuple[int, int], Rational], ...]


def mixed_sequence(I: MonomialIdeal, J: MonomialIdeal, cross_check: bool = False) -> MultiplicityTable:
    """``e_i(I, J)`` for i = 0..n, where I is repeated i times.

    With ``cross_check`` the sequence is recomputed by fitting the covolume
    polynomial of ``lam * P(I) + mu * P(J)`` and the two must match.
    """
    if I.num_vars != J.num_vars:
        raise InvalidInput("ideals live in different numbers of variables")
    n = I.num_vars
    mixed = tuple(mixed_multiplicity([I] * i + [J] * (n - i)) for i in range(n + 1))
    covols = tuple(
        ((a, b), covolume_of_combination([(I, a), (J, b)]))
        for a in range(n + 1)
        for b in range(n + 1 - a)
        if a + b
    )
    if mixed[0] != samuel_multiplicity(J) or mixed[n] != samuel_multiplicity(I):
        raise InternalError("mixed sequence endpoints disagree with Samuel multiplicities")
    if cross_check:
        fitted = fitted_mixed_sequence(I, J)
        if fitted != mixed:
            raise InternalError(f"polarization {mixed} and polynomial fit {fitted} disagree")
    return MultiplicityTable(n, mixed[n], mixed[0], mixed, covols)


def fitted_mixed_sequence(I: MonomialIdeal, J: MonomialIdeal) -> tuple[int, ...]:
    """Mixed sequence read off the homogeneous covolume polynomial in (lam, mu)."""
    n = I.num_vars
    samples = [(lam, mu) for lam in range(1, n + 2) for mu in range(1, n + 3 - lam)]
    values = {s: Fraction(covolume_of_combination([(I, s[0]), (J, s[1])])) for s in samples}
    basis = [(lam, 1) for lam in range(1, n + 2)]
    rows = [[Fraction(lam) ** i for i in range(n + 1)] for lam, _ in basis]
    coeffs = solve(rows, [values[s] for s in basis])
    if coeffs is None:
        raise InternalError("singular Vandermonde system")
    for lam, mu in samples:
        predicted = sum(c * Fraction(lam) ** i * Fraction(mu) ** (n - i) for i, c in enumerate(coeffs))
        if predicted != values[(lam, mu)]:
            raise InternalError("covolume is not a homogeneous polynomial of degree n")
    out = []
    for i, c in enumerate(coeffs):
        out.append(_integral(math.factorial(n) * c / math.comb(n, i), "fitted mixed multiplicity"))
    return tuple(out)


def sigma_cap() -> int:
    raw = os.environ.get("LOJAX_SIGMA_CAP")
    if raw is None:
        return DEFAULT_SIGMA_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InvalidInput(f"LOJAX_SIGMA_CAP must be a positive integer, got {raw!r}") from None
    if cap < 1:
        raise InvalidInput(f"LOJAX_SIGMA_CAP must be a positive integer, got {raw!r}")
    return cap


def rees_sigma(ideals: Sequence[MonomialIdeal], cap: int | None = None) -> int:
    """Rees mixed multiplicity: ``e(I_1 + m^r, ..., I_n + m^r)`` once it stops growing.

    The stopping rule is two equal consecutive values of r, starting at the
    largest exponent appearing in any generator.  Raises ``NotStabilized``
    after ``cap`` further steps.
    """
    ideals = list(ideals)
    if not ideals:
        raise InvalidInput("sigma of an empty tuple")
    n = ideals[0].num_vars
    if len(ideals) != n or any(i.num_vars != n for i in ideals):
        raise InvalidInput(f"sigma needs exactly {n} ideals in {n} variables")
    if any(i.is_zero for i in ideals):
        raise InvalidInput("sigma of a tuple containing the zero ideal")
    if all(newton_polyhedron(i).convenient for i in ideals):
        return mixed_multiplicity(ideals)
    cap = sigma_cap() if cap is None else cap
    r0 = max(1, max(max(g) for i in ideals for g in i.generators))
    previous = None
    for r in range(r0, r0 + cap + 1):
        powers = MonomialIdeal.pure_powers([r] * n)
        value = mixed_multiplicity([i + powers for i in ideals])
        if previous is not None:
            if value < previous:
                raise InternalError("Rees mixed multiplicity sequence decreased")
            if value == previous:
                return value
        previous = value
    raise NotStabilized(f"no stabilization for r in [{r0}, {r0 + cap}]; sigma may be infinite")


def colength(I: MonomialIdeal) -> int:
    """Number of monomials outside I."""
    n = I.num_vars
    P = newton_polyhedron(I)
    P.require_convenient()
    powers = []
    for axis in range(n):
        hits = [g[axis] for g in I.generators if all(c == 0 for j, c in enumerate(g) if j != axis)]
        if not hits:
            raise InternalError("convenient monomial ideal without a pure power")
        powers.append(min(hits))
    total = 0
    for head in product(*(range(a) for a in powers[:-1])):
        total += min(g[-1] for g in I.generators if all(a <= b for a, b in zip(g[:-1], head)))
    return total
