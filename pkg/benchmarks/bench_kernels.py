"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import timeit

from csl.kernels import backends
from csl.semigroup import random_semigroups


def cases():
    tables = random_semigroups(12, 200, seed=1)
    return {
        "associativity check (200 tables, n=12)": lambda k: [k.find_nonassociative(t) for t in tables],
        "regular witnesses (200 tables, n=12)": lambda k: [k.regular_witnesses(t) for t in tables],
        "maximal subgroups (200 tables, n=12)": lambda k: [
            [k.maximal_subgroup(t, e) for e in k.idempotents(t)] for t in tables
        ],
        "enumerate commutative tables n=4": lambda k: k.enumerate_commutative_semigroups(4),
        "reduced forms, 2000 discriminants": lambda k: [k.reduced_form_count(-4 * n - 3) for n in range(2000, 4000)],
    }


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    bks = backends()
    names = sorted(bks)
    print(f"{'kernel':44s}" + "".join(f"{n:>12s}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, fn in cases().items():
        times = {n: min(timeit.repeat(lambda: fn(bks[n]), number=1, repeat=args.repeat)) for n in names}
        row = f"{label:44s}" + "".join(f"{times[n]:11.4f}s" for n in names)
        if len(names) > 1:
            row += f"{times['python'] / times['cython']:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
