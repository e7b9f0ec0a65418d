"""Walk through <x^5, y^5> against <x^4, xy, y^4>: filtration, exponents, level-set ideals."""

from fractions import Fraction

from lojax.cli import format_monomial, q
from lojax.filtration import build_filtration
from lojax.lojasiewicz import build_K_ideals, loja_exponent, loja_sequence
from lojax.newton import MonomialIdeal, closure_generators
from lojax.relations import check_nondegenerate, hickel_report

I = MonomialIdeal(2, ((5, 0), (0, 5)))
J = MonomialIdeal(2, ((4, 0), (1, 1), (0, 4)))
KH = closure_generators(MonomialIdeal(2, ((5, 0), (2, 1), (1, 2), (0, 5))))


def ideal_text(K):
    return ", ".join(format_monomial(g, ("x", "y")) for g in sorted(K.generators, reverse=True))


def main():
    Fj = build_filtration(J)
    print("M_J =", Fj.M)
    for piece in Fj.pieces:
        print(f"  piece {piece.multiplier} * <{piece.normal}, k>")
    for k in [(Fraction(5, 2), Fraction(5, 2)), (Fraction(3, 2), Fraction(3, 2))]:
        print(f"phi_J({', '.join(q(c) for c in k)}) = {q(Fj.phi(k))}")
    print("L_J(I) =", q(loja_exponent(I, J)))
    print("L_J(K_H) =", q(loja_exponent(KH, J)), "with K_H =", ideal_text(KH))
    r = loja_sequence(I, J)
    print(f"a = ({', '.join(q(x) for x in r.a)})  c = {r.c}")
    for i in range(r.n, 0, -1):
        print(f"  L({i}) = {q(r.L[i].value)} [{r.L[i].kind.value}]")
    for note in r.notes:
        print("  note:", note)
    h = hickel_report(I, J)
    print("e(I)/e(J) =", q(h.ratio_e), " prod a / M^n =", q(h.product_a), " equality:", h.equality_58)
    K = build_K_ideals(I, J)
    for i, Ki in enumerate(K, 1):
        print(f"K_{i}: {len(Ki.generators)} generators, first {ideal_text(Ki)[:60]}")
    check = check_nondegenerate(K, J)
    print("sigma =", q(check.sigma), " bound =", q(check.bound), " verdict:", check.verdict.value)


if __name__ == "__main__":
    main()
