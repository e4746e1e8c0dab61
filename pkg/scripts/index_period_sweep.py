"""Compare the max/lcm prediction with direct iteration on many random systems."""
import argparse
import random
from collections import Counter

from gsbrace.catalog import RandomSystemConfig, random_system
from gsbrace.sslattice import build_solution, predicted_index_period
from gsbrace.ybesol import index_period


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-semilattice", type=int, default=4)
    ap.add_argument("--max-payload", type=int, default=5)
    args = ap.parse_args()
    rnd = random.Random(args.seed)
    cfg = RandomSystemConfig(args.max_semilattice, args.max_payload)
    seen, mismatches = Counter(), 0
    for _ in range(args.count):
        sys_ = random_system(rnd, cfg)
        direct = index_period(build_solution(sys_))
        mismatches += direct != predicted_index_period(sys_)
        seen[direct] += 1
    for ip, k in sorted(seen.items()):
        print(f"{ip}: {k}")
    print(f"mismatches: {mismatches} of {args.count}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
