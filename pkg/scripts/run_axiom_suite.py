#!/usr/bin/env python3
"""Run the full axiom suite over a family of structurally different algebras.

Prints one canonical-JSON report per check per algebra and exits nonzero
if anything fails or is inconclusive.  Useful as a desk experiment:
every green run certifies, for those instances, that the pure
paraunitary group is the structure group of the invariant-subspace
lattice.
"""

import argparse
import sys

import numpy as np

import paraunitary as pu
from paraunitary import axioms
from paraunitary.jsonio import canonical_dumps


def build_algebras(seed):
    rng = np.random.default_rng([seed, 7])

    def rand(n):
        return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))

    x = rand(2)
    doubled = np.zeros((4, 4), dtype=complex)
    doubled[:2, :2] = x
    doubled[2:, 2:] = x
    block = np.zeros((5, 5), dtype=complex)
    block[:2, :2] = rand(2)
    block[2:, 2:] = rand(3)
    return {
        "scalars_c2": pu.generate_algebra(2, []),
        "diagonal_c3": pu.generate_algebra(3, [np.diag([1.0, 2.0, 3.0])]),
        "full_m3": pu.generate_algebra(3, [rand(3)]),
        "block_2_3": pu.generate_algebra(5, [block]),
        "doubled_m2": pu.generate_algebra(4, [doubled]),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=60)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    failures = 0
    for name, algebra in build_algebras(args.seed).items():
        print(f"# {name}: linear_dim={algebra.linear_dim}, "
              f"commutant_dim={algebra.commutant.linear_dim}")
        for report in axioms.run_suite(algebra, samples=args.samples, seed=args.seed):
            print(canonical_dumps(report.to_json()))
            if not report.passed or report.inconclusive:
                failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
