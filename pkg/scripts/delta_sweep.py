"""Sweep random saturated supports and every vertex choice through the exterior check.

    python3 scripts/delta_sweep.py [--supports 60] [--max-points 12] [--seed 0]
"""

import argparse
import random
import time

from hybres.core import ResultantOptions, setup
from hybres.exterior import delta_relation, element_m, j0_element, mu_partition
from hybres.sampling import random_saturated_support


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--supports", type=int, default=60)
    ap.add_argument("--max-points", type=int, default=12)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    t0 = time.perf_counter()
    checks = failures = refined = 0
    for _ in range(args.supports):
        support = random_saturated_support(rng, args.max_points)
        for v in setup(support).polygon.vertices:
            s = setup(support, ResultantOptions(v))
            refined += s.partition.refined is not None
            j0 = j0_element(s.support, s.polygon, mu_partition(s.support, s.polygon, s.partition))
            checks += 1
            if j0.wedge(element_m(s.support)) != 0:
                failures += 1
                print(f"J0 ^ m != 0 on {list(support.points)} at vertex {v!r}")
            for alpha in support.points:
                checks += 1
                d = delta_relation(s.support, s.polygon, s.partition, alpha, j0)
                if not d.ok:
                    failures += 1
                    print(f"relation fails on {list(support.points)} vertex {v!r} alpha {alpha!r}")
    dt = time.perf_counter() - t0
    print(f"{checks} checks, {failures} failures, {refined} refined fans, {dt:.1f}s")


if __name__ == "__main__":
    main()
