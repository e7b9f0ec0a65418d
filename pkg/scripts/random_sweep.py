"""Random sweep over ideal pairs: run the inequality suite and count kinds of entries."""

import argparse
import random
import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from generators import random_pair  # noqa: E402

from lojax.lojasiewicz import loja_sequence  # noqa: E402
from lojax.relations import failures, inequality_suite  # noqa: E402


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=100)
    parser.add_argument("--dims", type=int, nargs="+", default=[2, 3])
    parser.add_argument("--max-exp", type=int, default=8)
    parser.add_argument("--max-gens", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    kinds, bad = Counter(), 0
    for _ in range(args.count):
        I, J = random_pair(rng, rng.choice(args.dims), args.max_exp, args.max_gens)
        kinds.update(e.kind.value for e in loja_sequence(I, J).L.values())
        for c in failures(inequality_suite(I, J, cross_check=True)):
            bad += 1
            print(f"FAIL {c.name}: {I.generators} vs {J.generators}: {c.lhs} {c.relation} {c.rhs}")
    print(f"{args.count} pairs, {bad} failures, entry kinds {dict(sorted(kinds.items()))}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
