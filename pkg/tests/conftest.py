from __future__ import annotations

from collections import OrderedDict
from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from dpdembed.algebra import UniPoly

settings.register_profile("default", deadline=None)
settings.load_profile("default")

CRITERIA = OrderedDict(
    (f"A{i}", text)
    for i, text in enumerate(
        [
            "DG family: F, weights, degree, dehomogenization vs golden files",
            "hypersurface oracles over the d, e+, e-, k, Q grid",
            "positive-weight variant with minimal alpha",
            "normality certificates, toric replacement, smoothness",
            "plane embeddings of the nontoric family",
            "ring structure of 20 random pairs",
            "invariant monomial counts",
            "z elimination and universal cover",
            "negative controls",
            "CLI round trip, determinism, exit codes",
        ],
        start=1,
    )
)

_outcomes: dict[str, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(name): acceptance criterion covered by the test")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for name in getattr(report, "acceptance", ()):
        _outcomes.setdefault(name, []).append(report.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    rep.acceptance = tuple(m.args[0] for m in item.iter_markers("acceptance"))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name, text in CRITERIA.items():
        runs = _outcomes.get(name)
        if runs is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(runs) else "FAIL"
        terminalreporter.write_line(f"{name} {status:7s} {text} ({len(runs or [])} tests)")


# -- strategies --------------------------------------------------------

small_fraction = st.builds(
    Fraction, st.integers(-6, 6), st.integers(1, 4)
)


@st.composite
def unipolys(draw, max_degree: int = 4):
    coeffs = draw(st.lists(small_fraction, max_size=max_degree + 1))
    return UniPoly(coeffs)


@st.composite
def monic_unipolys(draw, min_degree: int = 1, max_degree: int = 3):
    n = draw(st.integers(min_degree, max_degree))
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n))
    return UniPoly(coeffs + [1])
