from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from diocount.qpoly import IntPoly, QuasiPoly

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# 3x5 unimodular matrix with columns e1, e2, e3, e1+e2, e1+e3
UNI_A = [[1, 0, 0, 1, 1], [0, 1, 0, 1, 0], [0, 0, 1, 0, 1]]
UNI_M = [QuasiPoly.poly([0, -1, 2]), QuasiPoly.poly([5, 0, 2]), QuasiPoly.poly([0, 10, 1])]
QUARTIC = (1, 4, "-115/2", 9, "3/2")  # ascending


def P(*coeffs):
    return QuasiPoly.poly(list(coeffs))


# Example matrix of the 2x3 family and its right-hand side
EX_2X3_A = [[P(1, 2), P(1, 3), P(0, 0, 1)], [P(2), P(3), P(1, 1)]]
EX_2X3_M = [P(1, 0, 0, 3), P(-1, 1, 3)]


def int_polys(max_degree=3, bound=12, nonzero=False):
    coeffs = st.lists(st.integers(-bound, bound), min_size=1, max_size=max_degree + 1)
    s = coeffs.map(lambda c: IntPoly(tuple(c)))
    return s.filter(lambda p: not p.is_zero()) if nonzero else s


@st.composite
def quasipolys(draw, max_period=3, max_degree=2, bound=9):
    T = draw(st.integers(1, max_period))
    cons = [draw(int_polys(max_degree, bound)) for _ in range(T)]
    return QuasiPoly(T, cons)


@st.composite
def positive_quasipolys(draw, max_period=2, max_degree=2, bound=9):
    """Every constituent has a positive leading coefficient."""
    T = draw(st.integers(1, max_period))
    cons = []
    for _ in range(T):
        c = draw(st.lists(st.integers(-bound, bound), min_size=0, max_size=max_degree))
        cons.append(IntPoly(tuple(c) + (draw(st.integers(1, bound)),)))
    return QuasiPoly(T, cons)


@pytest.fixture
def uni_matrix():
    return [row[:] for row in UNI_A]


@st.composite
def gcd_families(draw, size=(2, 3)):
    """Lists of quasi-polynomials sharing a random factor; small leading coefficients keep periods small."""
    k = draw(st.integers(*size))
    h_const = draw(st.integers(1, 3))
    h = QuasiPoly.poly([draw(st.integers(0, 3)), 1]) if draw(st.booleans()) else QuasiPoly.const(h_const)
    out = []
    for _ in range(k):
        T = draw(st.integers(1, 2))
        cons = []
        for _ in range(T):
            deg = draw(st.integers(0, 1))
            c = [draw(st.integers(-3, 3)) for _ in range(deg)] + [draw(st.integers(1, 2))]
            cons.append(IntPoly(tuple(c)))
        out.append(h * QuasiPoly(T, cons))
    return out


F = Fraction

# Fitted vector partition function on each chamber of UNI_A, keyed by a strict
# membership test for the chamber; exponents are over (a, b, c).
UNI_PHI = [
    (lambda a, b, c: a > b + c and b > 0 and c > 0,
     {(0, 1, 1): 1, (0, 1, 0): 1, (0, 0, 1): 1, (0, 0, 0): 1}),
    (lambda a, b, c: min(b, c) > a > 0,
     {(2, 0, 0): F(1, 2), (1, 0, 0): F(3, 2), (0, 0, 0): 1}),
    (lambda a, b, c: c > a > b > 0,
     {(1, 1, 0): 1, (0, 2, 0): F(-1, 2), (0, 1, 0): F(1, 2), (1, 0, 0): 1, (0, 0, 0): 1}),
    (lambda a, b, c: b > a > c > 0,
     {(1, 0, 1): 1, (0, 0, 2): F(-1, 2), (0, 0, 1): F(1, 2), (1, 0, 0): 1, (0, 0, 0): 1}),
    (lambda a, b, c: b + c > a > max(b, c),
     {(1, 1, 0): 1, (1, 0, 1): 1, (2, 0, 0): F(-1, 2), (0, 2, 0): F(-1, 2), (0, 0, 2): F(-1, 2),
      (1, 0, 0): F(1, 2), (0, 1, 0): F(1, 2), (0, 0, 1): F(1, 2), (0, 0, 0): 1}),
]

DEDEKIND_TUPLES = [(2, 3), (3, 4), (2, 5), (2, 3, 5), (3, 4, 5), (2, 3, 7), (5, 7, 9)]


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
