import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lace.poly import Poly

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# lines appended by the acceptance suite, repeated at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

small_ints = st.integers(min_value=-20, max_value=20)
rationals = st.fractions(min_value=-10, max_value=10, max_denominator=7)


@st.composite
def polys(draw, max_degree=6, elements=small_ints):
    return Poly(draw(st.lists(elements, max_size=max_degree + 1)))


@st.composite
def bounded(draw, n_max=6, elements=small_ints):
    """(p, n) with deg p <= n."""
    n = draw(st.integers(0, n_max))
    cs = draw(st.lists(elements, min_size=n + 1, max_size=n + 1))
    return Poly(cs), n


@st.composite
def nonneg_h(draw, n_max=5, hi=9):
    n = draw(st.integers(1, n_max))
    cs = draw(st.lists(st.integers(0, hi), min_size=n + 1, max_size=n + 1))
    return Poly(cs), n
