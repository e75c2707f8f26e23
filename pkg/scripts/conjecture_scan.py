#!/usr/bin/env python3
"""Scan power-free monomial spans for the generic-restriction property.

For every span of k power-free monomials on the grid, restricts by
random linear forms and verifies that some restriction stays power-free,
except for the known exceptional shape x_a^(d-1) * {other variables} at
n = k + 1.  Exact for k <= 2.
"""

import argparse
import sys

from stablesq.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", default="3..4")
    parser.add_argument("--d", default="3..5")
    parser.add_argument("--k", default="1..2")
    parser.add_argument("--trials", type=int, default=4)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    return cli_main(
        [
            "conjecture",
            "--n", args.n,
            "--d", args.d,
            "--k", args.k,
            "--trials", str(args.trials),
            "--seed", str(args.seed),
        ]
    )


if __name__ == "__main__":
    sys.exit(main())
