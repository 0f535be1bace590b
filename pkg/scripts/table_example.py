"""Print the hybrid matrix for the six-point example and its resultant.

    python3 scripts/table_example.py [--vertex X,Y] [--seed N]
"""

import argparse

from hybres.core import ResultantOptions, assemble, random_coefficients, resultant_value, setup
from hybres.geometry import example_support
from hybres.io import parse_vertex


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--vertex", default=None)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    support = example_support()
    opts = ResultantOptions(parse_vertex(args.vertex))
    s = setup(support, opts)
    hm = assemble(s.support, s.polygon, s.partition)
    print(f"vertex p = {s.partition.vertex_p!r}, R1={list(s.partition.R1)} R2={list(s.partition.R2)} R3={list(s.partition.R3)}")
    width = max(len(c) for row in hm.render() for c in row)
    print(" " * 8 + " ".join(c.rjust(width) for c in hm.col_labels))
    for label, row in zip(hm.row_labels, hm.render()):
        print(label.rjust(8) + " ".join(c.rjust(width) for c in row))
    coeffs = random_coefficients(len(support), args.seed)
    print(f"\nresultant at seed {args.seed}: {resultant_value(support, coeffs, opts)}")


if __name__ == "__main__":
    main()
