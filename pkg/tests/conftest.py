import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from gsbrace.catalog import random_system
from gsbrace.groups import SMALL_GROUPS, named_group
from gsbrace.search import semigroup_tables

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

SEMIGROUPS_LE3 = [t for n in (1, 2, 3) for t in semigroup_tables(n)]
GROUP_NAMES = [name for k in sorted(SMALL_GROUPS) for name in SMALL_GROUPS[k]]


def tables(max_order=4):
    """Arbitrary square tables, mostly not associative."""
    return st.integers(1, max_order).flatmap(
        lambda n: st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
                           min_size=n, max_size=n))


semigroups = st.sampled_from(SEMIGROUPS_LE3)
groups = st.sampled_from(GROUP_NAMES).map(named_group)
systems = st.integers(0, 10**6).map(lambda seed: random_system(random.Random(seed)))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", None)
    if lines:
        terminalreporter.section("acceptance")
        for line in sorted(lines, key=lambda s: int(s.split()[2])):
            terminalreporter.write_line(line)
