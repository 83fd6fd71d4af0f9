from fractions import Fraction

import pytest
from hypothesis import strategies as st

from grand_antiprism.golden import GoldenNumber
from grand_antiprism.quaternion import GoldenQuaternion
from grand_antiprism.verify import Context


@pytest.fixture(scope="session")
def ctx():
    """One shared build of the groups, vertices, facets and dual."""
    return Context(threads=1)


fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)
goldens = st.builds(GoldenNumber, fractions, fractions)
nonzero_goldens = goldens.filter(bool)
quaternions = st.builds(GoldenQuaternion, goldens, goldens, goldens, goldens)


def half(*xs) -> GoldenQuaternion:
    """``½(x0 + x1 e1 + x2 e2 + x3 e3)``."""
    return GoldenQuaternion(*(GoldenNumber(0) + x * Fraction(1, 2) for x in xs))


# ---------------------------------------------------------------- acceptance report

_CRITERIA: dict[int, list] = {}


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    n, title = mark.args
    ok = call.excinfo is None
    detail = "" if ok else str(call.excinfo.value).splitlines()[0][:160]
    _CRITERIA.setdefault(n, []).append((title, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        entries = _CRITERIA[n]
        ok = all(e[1] for e in entries)
        title = entries[0][0]
        why = "; ".join(e[2] for e in entries if not e[1])
        tr.write_line(f"criterion {n:>2} {'PASS' if ok else 'FAIL'}  {title}" + (f"  ({why})" if why else ""))
