"""The family I = <x^d, y^d, z^d, (xyz)^e> against J = <x^a, y^b, z^c>.

Prints the exact mixed exponents, the multiplicity ratio and the Hickel gap
for a handful of parameter choices.
"""

import argparse

from lojax.cli import q
from lojax.lojasiewicz import loja_sequence
from lojax.newton import MonomialIdeal
from lojax.relations import hickel_report


def family(a, b, c, d, e):
    I = MonomialIdeal(3, ((d, 0, 0), (0, d, 0), (0, 0, d), (e, e, e)))
    return I, MonomialIdeal.pure_powers([a, b, c])


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("params", nargs="*", type=int, help="a b c d e (default: a small sweep)")
    args = parser.parse_args()
    if args.params:
        cases = [tuple(args.params)]
    else:
        cases = [(2, 3, 4, 5, 1), (2, 2, 2, 5, 1), (1, 2, 3, 6, 1), (3, 4, 5, 9, 2)]
    for params in cases:
        I, J = family(*params)
        r = loja_sequence(I, J)
        h = hickel_report(I, J)
        L = ", ".join(f"{i}: {q(r.L[i].value)}" for i in range(3, 0, -1))
        print(f"{params}: L = ({L})  e(I)/e(J) = {q(h.ratio_e)}  gap = {q(h.gap)}  hickel = {h.is_hickel.value}")


if __name__ == "__main__":
    main()
