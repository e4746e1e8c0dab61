"""Census of completely regular tables: which sum-free semi-braces give solutions."""
import argparse

from gsbrace.search import completely_regular
from gsbrace.semibrace import associated_solution, build_leftzero_semibrace, build_rightzero_semibrace
from gsbrace.finalg import is_clifford
from gsbrace.ybesol import (
    check_left_cryptogroup_criterion,
    check_right_cryptogroup_criterion,
    classify,
    is_solution,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=4)
    args = ap.parse_args()
    print("n  cr  clifford  right_crit  rz_solution  rz_idempotent  left_crit  lz_solution")
    for n in range(1, args.max_order + 1):
        row = [0] * 7
        for c in completely_regular(n):
            rz = associated_solution(build_rightzero_semibrace(c))
            lz = associated_solution(build_leftzero_semibrace(c))
            rz_ok = bool(is_solution(rz))
            row[0] += 1
            row[1] += is_clifford(c)
            row[2] += bool(check_right_cryptogroup_criterion(c))
            row[3] += rz_ok
            row[4] += rz_ok and classify(rz).idempotent
            row[5] += bool(check_left_cryptogroup_criterion(c))
            row[6] += bool(is_solution(lz))
        print(f"{n}  " + "  ".join(str(x) for x in row))


if __name__ == "__main__":
    main()
