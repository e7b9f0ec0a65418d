"""Checks tying multiplicities to exponents: lower bounds, Hickel equality, product chains."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidInput, NotStabilized
from .filtration import INF, build_filtration, nu_ideal
from .geometry import Rational, normalize_number
from .lojasiewicz import Kind, LojaReport, loja_oracle, loja_sequence
from .multiplicity import MultiplicityTable, mixed_sequence, rees_sigma, samuel_multiplicity
from .newton import MonomialIdeal


class Verdict(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNDECIDED = "undecided"


def mixed_lower_bound(ideals: Sequence[MonomialIdeal], J: MonomialIdeal) -> Rational:
    """``prod nu_J(I_k) / M_J^n * e(J)``, the lower bound for sigma."""
    F = build_filtration(J)
    values = []
    for ideal in ideals:
        v = nu_ideal(F, ideal)
        if v is INF:
            raise InvalidInput("filtration value of the zero ideal is infinite")
        values.append(Fraction(v))
    return normalize_number(math.prod(values) / Fraction(F.M) ** len(values) * samuel_multiplicity(J))


@dataclass(frozen=True)
class NondegeneracyCheck:
    verdict: Verdict
    sigma: int | None
    bound: Rational


def check_nondegenerate(ideals: Sequence[MonomialIdeal], J: MonomialIdeal, cap: int | None = None) -> NondegeneracyCheck:
    bound = mixed_lower_bound(ideals, J)
    try:
        sigma = rees_sigma(ideals, cap=cap)
    except NotStabilized:
        return NondegeneracyCheck(Verdict.UNDECIDED, None, bound)
    return NondegeneracyCheck(Verdict.TRUE if sigma == bound else Verdict.FALSE, sigma, bound)


def nondegenerate_tuple(ideals: Sequence[MonomialIdeal], J: MonomialIdeal, cap: int | None = None) -> Verdict:
    return check_nondegenerate(ideals, J, cap).verdict


@dataclass(frozen=True)
class IndexCheck:
    i: int
    ratio: Rational
    L: Rational | None
    kind: Kind
    satisfied: bool | None
    equality: bool | None


@dataclass(frozen=True)
class HickelReport:
    ratio_e: Rational
    product_L: Rational | None
    product_a: Rational
    is_hickel: Verdict
    per_i: tuple[IndexCheck, ...]
    equality_58: bool
    gap: Rational | None
    table: MultiplicityTable
    loja: LojaReport


def _ratio(a, b) -> Rational:
    return normalize_number(Fraction(a) / Fraction(b))


def hickel_report(I: MonomialIdeal, J: MonomialIdeal, cross_check: bool = False) -> HickelReport:
    table = mixed_sequence(I, J, cross_check=cross_check)
    loja = loja_sequence(I, J)
    n = table.n
    ratio_e = _ratio(table.e_I, table.e_J)
    product_a = normalize_number(math.prod(Fraction(a) for a in loja.a) / Fraction(loja.M) ** n)
    product_L = None
    if loja.all_exact:
        product_L = normalize_number(math.prod(Fraction(loja.L[i].value) for i in range(1, n + 1)))
    per_i = []
    for i in range(1, n + 1):
        ratio = _ratio(table.mixed[i], table.mixed[i - 1])
        entry = loja.L[i]
        if entry.kind is Kind.ABSENT:
            per_i.append(IndexCheck(i, ratio, None, entry.kind, None, None))
            continue
        equality = ratio == entry.value if entry.kind is Kind.EXACT else None
        per_i.append(IndexCheck(i, ratio, entry.value, entry.kind, ratio <= entry.value, equality))
    if product_L is None:
        verdict, gap = Verdict.UNDECIDED, None
    else:
        verdict = Verdict.TRUE if ratio_e == product_L else Verdict.FALSE
        gap = normalize_number(Fraction(product_L) - Fraction(ratio_e))
    return HickelReport(ratio_e, product_L, product_a, verdict, tuple(per_i), ratio_e == product_a, gap, table, loja)


@dataclass(frozen=True)
class Check:
    name: str
    lhs: Rational
    rhs: Rational
    relation: str
    passed: bool


def _le(name: str, lhs, rhs) -> Check:
    return Check(name, normalize_number(Fraction(lhs)), normalize_number(Fraction(rhs)), "<=", lhs <= rhs)


def _eq(name: str, lhs, rhs) -> Check:
    return Check(name, normalize_number(Fraction(lhs)), normalize_number(Fraction(rhs)), "==", lhs == rhs)


def inequality_suite(I: MonomialIdeal, J: MonomialIdeal, cross_check: bool = False) -> tuple[Check, ...]:
    """Every relation that applies to the pair, each with both sides recorded."""
    report = hickel_report(I, J, cross_check=cross_check)
    table, loja = report.table, report.loja
    n = table.n
    M = Fraction(loja.M)
    checks = []

    nu_I = Fraction(nu_ideal(build_filtration(J), I))
    for i in range(n + 1):
        bound = nu_I**i * M ** (n - i) / M**n * table.e_J
        checks.append(_le(f"mixed lower bound e_{i}", bound, table.mixed[i]))

    checks.append(_le("e(I)/e(J) <= prod a / M^n", report.ratio_e, report.product_a))

    for i in range(1, n):
        checks.append(_le(f"a_{i} <= a_{i + 1}", loja.a[i - 1], loja.a[i]))

    checks.append(_eq("L_n equals containment exponent", loja.L[n].value, loja_oracle(I, J)))

    exact = {i: e.value for i, e in loja.L.items() if e.kind is Kind.EXACT}
    if loja.inclusion:
        known = {i: e.value for i, e in loja.L.items() if e.kind is not Kind.ABSENT}
        for i in range(1, n):
            if i in exact and i + 1 in exact:
                checks.append(_le(f"L_{i} <= L_{i + 1}", exact[i], exact[i + 1]))
        checks.append(_le("L_n >= 1", 1, loja.L[n].value))
        for c in report.per_i:
            if c.L is not None:
                checks.append(_le(f"e_{c.i}/e_{c.i - 1} <= L_{c.i}", c.ratio, c.L))
        running = Fraction(1)
        for i in range(1, n + 1):
            running *= Fraction(known[i])
            checks.append(_le(f"e_{i}/e(J) <= L_1...L_{i}", _ratio(table.mixed[i], table.e_J), running))
        if report.product_L is not None:
            checks.append(_le("e(I)/e(J) <= prod L", report.ratio_e, report.product_L))
            checks.append(_le("prod L <= prod a / M^n", report.product_L, report.product_a))
    else:
        c = report.per_i[-1]
        checks.append(_le(f"e_{n}/e_{n - 1} <= L_{n}", c.ratio, c.L))
    return tuple(checks)


def failures(checks: Sequence[Check]) -> list[Check]:
    return [c for c in checks if not c.passed]
