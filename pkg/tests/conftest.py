import pytest
from hypothesis import HealthCheck, settings

from kummerlab.cyclo import make_context

settings.register_profile(
    "default", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

SMALL_PRIMES = (3, 5, 7, 11, 13)


@pytest.fixture(params=SMALL_PRIMES, ids=lambda p: f"p{p}")
def ctx(request):
    return make_context(request.param, 4)


def elements(ctx, unit=False):
    """Hypothesis strategy for ring elements (optionally units) of ``ctx``."""
    from hypothesis import strategies as st

    coeff = st.integers(min_value=0, max_value=ctx.modulus - 1)
    base = st.lists(coeff, min_size=ctx.n, max_size=ctx.n).map(ctx.elem)
    if unit:
        return base.filter(lambda x: x.is_unit())
    return base


ACCEPTANCE_LINES: list[tuple[int, str]] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
