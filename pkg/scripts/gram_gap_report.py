#!/usr/bin/env python3
"""Report the dimension gap between singular and non-singular faces.

For each n in the requested range, prints the corank-k face bound for
non-singular forms, the face dimension reached with base points, and
their difference.
"""

import argparse
import sys

from stablesq.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", default="5..10")
    parser.add_argument("--d", default="4")
    parser.add_argument("--k", default="2")
    parser.add_argument("--format", choices=("text", "csv", "json"), default="text")
    args = parser.parse_args()
    return cli_main(
        ["gram", "--n", args.n, "--d", args.d, "--k", args.k, "--format", args.format]
    )


if __name__ == "__main__":
    sys.exit(main())
