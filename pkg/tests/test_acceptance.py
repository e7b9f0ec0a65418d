"""Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines, or
``python tests/test_acceptance.py``.
"""

import random
from fractions import Fraction

from lojax.filtration import build_filtration
from lojax.lojasiewicz import (
    Kind,
    a_vector_by_order,
    a_vector_diagonal,
    a_vector_literal,
    build_K_ideals,
    loja_exponent,
    loja_oracle,
    loja_sequence,
)
from lojax.multiplicity import (
    fitted_mixed_sequence,
    mixed_multiplicity,
    mixed_sequence,
    rees_sigma,
    samuel_multiplicity,
)
from lojax.newton import MonomialIdeal, closure_generators
from lojax.relations import Verdict, failures, hickel_report, inequality_suite, nondegenerate_tuple

from generators import random_diagonal_pair, random_ideal, random_pair

F = Fraction
M2 = MonomialIdeal.maximal(2)
A = MonomialIdeal(2, ((2, 0), (0, 3)))


def verdict(number, title, problems):
    status = "PASS" if not problems else "FAIL"
    line = f"[{status}] criterion {number}: {title}"
    if problems:
        line += f" ({len(problems)} problem(s); first: {problems[0]})"
    print(line)
    assert not problems, line


def expect(problems, label, got, want):
    if got != want:
        problems.append(f"{label}: got {got!r}, want {want!r}")


# the randomized pair families reused by the suite check
def loja_pairs():
    rng = random.Random(20240501)
    return [random_pair(rng, rng.choice([2, 3]), 10, 6) for _ in range(200)]


def multiplicity_pairs():
    rng = random.Random(7)
    return [random_pair(rng, rng.choice([2, 3]), 7, 5) for _ in range(100)]


def K_pairs():
    rng = random.Random(31)
    return [random_pair(rng, 2, 5, 4) for _ in range(50)]


def diagonal_pairs():
    rng = random.Random(42)
    out = []
    for _ in range(50):
        a, b = random_diagonal_pair(rng, rng.randint(2, 4), 9)
        out.append((MonomialIdeal.pure_powers(b), MonomialIdeal.pure_powers(a), a, b))
    return out


def test_criterion_1_two_variable_example():
    p = []
    I = MonomialIdeal(2, ((5, 0), (0, 5)))
    J = MonomialIdeal(2, ((4, 0), (1, 1), (0, 4)))
    KH = closure_generators(MonomialIdeal(2, ((5, 0), (2, 1), (1, 2), (0, 5))))
    Fj = build_filtration(J)
    expect(p, "M_J", Fj.M, 4)
    expect(p, "phi(5/2,5/2)", Fj.phi((F(5, 2), F(5, 2))), 10)
    expect(p, "phi(3/2,3/2)", Fj.phi((F(3, 2), F(3, 2))), 6)
    expect(p, "L(I)", loja_exponent(I, J), F(5, 2))
    expect(p, "L(K_H)", loja_exponent(KH, J), F(3, 2))
    r = loja_sequence(I, J)
    expect(p, "a-vector", r.a, (5, 10))
    expect(p, "a_1 warning present", any("a_1" in note for note in r.notes), True)
    expect(p, "L(1) kind", r.L[1].kind, Kind.UPPER_BOUND)
    verdict(1, "two-variable example (M_J, phi, L, L(K_H), a-vector warning)", p)


def test_criterion_2_maximal_reference():
    p = []
    expect(p, "e(A)", samuel_multiplicity(A), 6)
    r = loja_sequence(A, M2)
    expect(p, "L", {i: (e.value, e.kind) for i, e in r.L.items()}, {1: (2, Kind.EXACT), 2: (3, Kind.EXACT)})
    h = hickel_report(A, M2, cross_check=True)
    expect(p, "is_hickel", h.is_hickel, Verdict.TRUE)
    expect(p, "6 = 2*3", (h.ratio_e, h.product_L), (6, 6))
    verdict(2, "<x^2, y^3> against the maximal ideal", p)


def test_criterion_3_three_variable_instance():
    p = []
    I = MonomialIdeal(3, ((5, 0, 0), (0, 5, 0), (0, 0, 5), (1, 1, 1)))
    J = MonomialIdeal.pure_powers([2, 3, 4])
    r = loja_sequence(I, J)
    expect(p, "L", {i: e.value for i, e in r.L.items()}, {3: F(5, 2), 2: F(5, 3), 1: F(13, 12)})
    expect(p, "all exact", r.all_exact, True)
    expect(p, "e(I)", samuel_multiplicity(I), 75)
    expect(p, "e(J)", samuel_multiplicity(J), 24)
    h = hickel_report(I, J, cross_check=True)
    expect(p, "is_hickel", h.is_hickel, Verdict.FALSE)
    expect(p, "gap", h.gap, F(325, 72) - F(225, 72))
    verdict(3, "three-variable diagonal instance (2,3,4,5,1)", p)


def test_criterion_4_diagonal_pairs():
    p = []
    for I, J, a, b in diagonal_pairs():
        ratios = sorted(F(bj, aj) for aj, bj in zip(a, b))
        r = loja_sequence(I, J)
        got = [(r.L[i].value, r.L[i].kind) for i in range(1, len(a) + 1)]
        expect(p, f"L for a={a} b={b}", got, [(x, Kind.EXACT) for x in ratios])
        expect(p, f"hickel for a={a} b={b}", hickel_report(I, J).is_hickel, Verdict.TRUE)
    verdict(4, "50 random diagonal pairs: L^(i) is the i-th smallest ratio, Hickel", p)


def test_criterion_5_oracle_equivalence():
    p = []
    for I, J in loja_pairs():
        expect(p, f"{I.generators} vs {J.generators}", loja_exponent(I, J), loja_oracle(I, J))
    verdict(5, "exponent equals containment oracle on 200 random pairs", p)


def test_criterion_6_multiplicity_cross_checks():
    p = []
    for I, J in multiplicity_pairs():
        expect(p, f"mixed {I.generators} {J.generators}", mixed_sequence(I, J).mixed, fitted_mixed_sequence(I, J))
        for s in (1, 2, 3):
            expect(p, f"e(I^{s})", samuel_multiplicity(I**s), s**I.num_vars * samuel_multiplicity(I))
    expect(p, "e_1(A, m)", mixed_multiplicity([A, M2]), 2)
    expect(p, "e_1(A, m) via sequence", mixed_sequence(A, M2).mixed[1], 2)
    verdict(6, "polarization = polynomial fit on 100 pairs, power scaling, e_1(A, m) = 2", p)


def test_criterion_7_level_set_tuples():
    p = []
    K1 = MonomialIdeal(2, ((2, 0),))
    K2 = MonomialIdeal(2, ((3, 0), (2, 1), (1, 2), (0, 3)))
    expect(p, "K tuple of (A, m)", build_K_ideals(A, M2), (K1, K2))
    expect(p, "sigma(K1, K2)", rees_sigma([K1, K2]), 6)
    for I, J in K_pairs():
        expect(p, f"{I.generators} vs {J.generators}", nondegenerate_tuple(build_K_ideals(I, J), J), Verdict.TRUE)
    verdict(7, "level-set tuples are non-degenerate on 50 random pairs", p)


def test_criterion_8_inequality_suites():
    p = []
    runs = loja_pairs() + multiplicity_pairs() + K_pairs() + [(I, J) for I, J, _, _ in diagonal_pairs()]
    for I, J in runs:
        for c in failures(inequality_suite(I, J, cross_check=True)):
            p.append(f"{c.name} on {I.generators} vs {J.generators}: {c.lhs} {c.relation} {c.rhs}")
    verdict(8, f"inequality suites report zero failures over {len(runs)} pairs", p)


def test_criterion_9_shortcut_agreement():
    p = []
    rng = random.Random(99)
    for _ in range(100):
        n = rng.choice([2, 3])
        I = random_ideal(rng, n, 8, 5)
        expect(p, f"order path {I.generators}", a_vector_by_order(I), a_vector_literal(I, MonomialIdeal.maximal(n)))
        J = MonomialIdeal.pure_powers([rng.randint(1, 6) for _ in range(n)])
        expect(p, f"diagonal path {I.generators} vs {J.generators}", a_vector_diagonal(I, J), a_vector_literal(I, J))
    verdict(9, "literal a-vector matches the maximal and diagonal shortcuts on 100 ideals", p)


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
