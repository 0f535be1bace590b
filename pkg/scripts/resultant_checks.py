"""Run every numeric property suite on a problem file and summarize.

    python3 scripts/resultant_checks.py data/example.json [--seed 0]
"""

import argparse
from pathlib import Path

from hybres.checks import SUITES, run_suite
from hybres.core import ResultantOptions
from hybres.io import load_problem


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("problem")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    prob = load_problem(Path(args.problem).read_text())
    opts = ResultantOptions(prob.vertex)
    for suite in SUITES:
        rep = run_suite(suite, prob.support, None, args.seed, opts)
        print(f"{suite:>9}: {rep.passed}/{rep.total} {'OK' if rep.ok else 'FAILED'}")


if __name__ == "__main__":
    main()
