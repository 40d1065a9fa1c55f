from fractions import Fraction

import pytest
from hypothesis import strategies as st

from germlab.parsing import bundled_corpus
from germlab.polyring import Polynomial


def exponents(n, max_deg=4):
    return st.lists(st.integers(0, max_deg), min_size=n, max_size=n).map(tuple)


coefficients = st.one_of(
    st.integers(-5, 5),
    st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4)),
)


@st.composite
def polynomials(draw, n=None, max_terms=5, max_deg=4, min_order=0):
    if n is None:
        n = draw(st.integers(1, 3))
    terms = draw(st.dictionaries(exponents(n, max_deg), coefficients, max_size=max_terms))
    terms = {e: c for e, c in terms.items() if sum(e) >= min_order}
    return Polynomial(terms, n)


@pytest.fixture(scope="session")
def corpus():
    return bundled_corpus()


@pytest.fixture(scope="session")
def corpus_polys(corpus):
    return [(spec, spec.parse()) for spec in corpus]


_VERDICTS = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_VERDICTS] = []


@pytest.fixture
def verdict(request):
    """Record one acceptance line; returns ``ok`` so it can be asserted."""
    lines = request.config.stash[_VERDICTS]

    def record(number, ok, detail):
        lines.append(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_VERDICTS, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
