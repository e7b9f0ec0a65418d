from fractions import Fraction

from hypothesis import given, settings

from lojax.lojasiewicz import a_vector_by_order, build_K_ideals
from lojax.newton import MonomialIdeal
from lojax.relations import (
    Verdict,
    check_nondegenerate,
    failures,
    hickel_report,
    inequality_suite,
    nondegenerate_tuple,
)

from generators import diagonal_ideals, ideals, included_pairs, pairs

F = Fraction
A = MonomialIdeal(2, ((2, 0), (0, 3)))
M2 = MonomialIdeal.maximal(2)
JT = MonomialIdeal(2, ((4, 0), (1, 1), (0, 4)))
IT = MonomialIdeal(2, ((5, 0), (0, 5)))


def test_K_tuple_is_nondegenerate():
    check = check_nondegenerate(build_K_ideals(A, M2), M2)
    assert check.verdict is Verdict.TRUE and check.sigma == 6 and check.bound == 6


def test_ideal_repeated_is_nondegenerate():
    assert nondegenerate_tuple([JT, JT], JT) is Verdict.TRUE


def test_degenerate_tuple():
    # sigma(A, A) = e(A) = 6 but the bound is 2 * 2 * e(m) = 4
    check = check_nondegenerate([A, A], M2)
    assert check.verdict is Verdict.FALSE and check.sigma == 6 and check.bound == 4
    # the mixed multiplicity of these two triangles is 4, matching the bound
    B = MonomialIdeal(2, ((3, 0), (0, 2)))
    assert nondegenerate_tuple([A, B], M2) is Verdict.TRUE


def test_undecided_when_sigma_does_not_settle():
    x = MonomialIdeal(2, ((1, 0),))
    assert nondegenerate_tuple([x, x], M2, cap=5) is Verdict.UNDECIDED


def test_hickel_diagonal_pair():
    h = hickel_report(MonomialIdeal.pure_powers([4, 4]), A)
    assert h.ratio_e == F(8, 3) and h.product_L == F(8, 3)
    assert h.is_hickel is Verdict.TRUE and h.gap == 0


def test_hickel_three_variable_instance():
    I = MonomialIdeal(3, ((5, 0, 0), (0, 5, 0), (0, 0, 5), (1, 1, 1)))
    J = MonomialIdeal.pure_powers([2, 3, 4])
    h = hickel_report(I, J)
    assert h.ratio_e == F(25, 8)
    assert h.product_L == F(325, 72)
    assert h.is_hickel is Verdict.FALSE
    assert h.gap == F(325, 72) - F(225, 72)


def test_hickel_maximal():
    h = hickel_report(A, M2)
    assert h.ratio_e == 6 and h.product_L == 6 and h.is_hickel is Verdict.TRUE
    assert all(c.equality for c in h.per_i)


def test_hickel_undecided_for_bounds():
    h = hickel_report(IT, JT)
    assert h.is_hickel is Verdict.UNDECIDED and h.product_L is None
    # e(J) = 8 here, so the a-bound is attained
    assert h.ratio_e == F(25, 8) == h.product_a and h.equality_58


def test_example_pair_suite_passes():
    checks = inequality_suite(IT, JT)
    assert not failures(checks)
    assert any(c.name.startswith("e(I)/e(J) <= prod a") for c in checks)


@settings(max_examples=40, deadline=None)
@given(pairs(max_exp=6, max_extra=2))
def test_suite_has_no_failures(pair):
    assert not failures(inequality_suite(*pair))


@settings(max_examples=30, deadline=None)
@given(included_pairs(max_exp=4, max_extra=2))
def test_suite_has_no_failures_with_inclusion(pair):
    assert not failures(inequality_suite(*pair))


@settings(max_examples=30, deadline=None)
@given(diagonal_ideals(max_exp=5), diagonal_ideals(max_exp=4))
def test_diagonal_included_pairs_are_hickel(J, H):
    if J.num_vars != H.num_vars:
        return
    # pure powers with exponents b_i = a_i + c_i - 1 >= a_i
    a = [max(g) for g in sorted(J.generators, reverse=True)]
    c = [max(g) for g in sorted(H.generators, reverse=True)]
    I = MonomialIdeal.pure_powers([x + y - 1 for x, y in zip(a, c)])
    h = hickel_report(I, J)
    assert h.is_hickel is Verdict.TRUE
    assert h.ratio_e == h.product_L == h.product_a


@settings(max_examples=30, deadline=None)
@given(ideals())
def test_maximal_reference_uses_orders(I):
    h = hickel_report(I, MonomialIdeal.maximal(I.num_vars))
    assert tuple(h.loja.L[i].value for i in range(1, I.num_vars + 1)) == a_vector_by_order(I)
    assert h.is_hickel is not Verdict.UNDECIDED
