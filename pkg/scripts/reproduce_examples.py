"""Rebuild the three worked semilattice systems and the semi-brace fixtures and print their invariants."""
import argparse

from gsbrace.catalog import WORKED_EXAMPLES, mixed_period_system, semibrace_fixtures, twist_over_constant
from gsbrace.sslattice import build_solution, composed_index_period, semibrace_semilattice_solution
from gsbrace.ybesol import classify


def row(name, r, ip):
    p = classify(r)
    print(f"{name:<22} |X|={r.order:<3} index,period={ip}  r^3=r:{p.cubic!s:<5}  r^3=r^2:{p.r3_is_r2!s:<5}")


def main():
    argparse.ArgumentParser(description=__doc__).parse_args()
    for name, (make, _) in sorted(WORKED_EXAMPLES.items()):
        sys_ = make()
        row(name, build_solution(sys_), composed_index_period(sys_))
    for name, sys_ in [("twist_over_constant/2", twist_over_constant(n_top=2)),
                       ("mixed_period", mixed_period_system())]:
        row(name, build_solution(sys_), composed_index_period(sys_))
    for name, sys_ in sorted(semibrace_fixtures().items()):
        row(name, semibrace_semilattice_solution(sys_), composed_index_period(sys_))


if __name__ == "__main__":
    main()
