#!/usr/bin/env python3
"""Recompute the bundled m(n, d, k) reference table and diff it.

Equivalent to `stablesq table --n 3..6 --d 2..9 --k 1..9 --diff-paper`;
flags below adjust the grid or add worker processes.
"""

import argparse
import sys

from stablesq.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", default="3..6")
    parser.add_argument("--d", default="2..9")
    parser.add_argument("--k", default="1..9")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--format", choices=("text", "csv", "json"), default="text")
    args = parser.parse_args()
    return cli_main(
        [
            "table",
            "--n", args.n,
            "--d", args.d,
            "--k", args.k,
            "--threads", str(args.threads),
            "--format", args.format,
            "--diff-paper",
        ]
    )


if __name__ == "__main__":
    sys.exit(main())
