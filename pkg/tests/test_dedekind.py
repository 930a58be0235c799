import cmath
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from diocount.cyclo import CycloElement, inverse_one_minus
from diocount.dedekind import (
    denumerant_closed_form,
    fd_sum,
    fd_sum_trace,
    polynomial_part,
    polynomial_part_laurent,
    verify_recursion,
)
from diocount.errors import ArityError, CoprimalityError
from diocount.oracle import count_solutions, denumerant_dp

from conftest import DEDEKIND_TUPLES


def _numeric_fd(a_list, a, n):
    total = 0
    for k in range(1, a):
        xi = cmath.exp(2j * cmath.pi * k / a)
        den = 1
        for b in a_list:
            den *= 1 - xi ** b
        total += xi ** (-n) / den
    return total / a


class TestFdSum:
    def test_modulus_two(self):
        assert fd_sum([3], 2, 0) == fd_sum([3], 2, 4) == Fraction(1, 4)
        assert fd_sum([3], 2, 1) == Fraction(-1, 4)

    def test_empty_sum(self):
        assert fd_sum([2, 3], 1, 7) == 0

    def test_forced_value(self):
        assert fd_sum([2], 3, 0) == Fraction(1, 3)

    def test_not_coprime(self):
        with pytest.raises(CoprimalityError):
            fd_sum([2], 4, 1)

    @pytest.mark.parametrize("a_list,a", [((3,), 2), ((2,), 5), ((3, 4), 5), ((5, 7), 9), ((2, 3), 7)])
    def test_matches_floating_evaluation(self, a_list, a):
        for n in range(2 * a):
            assert abs(float(fd_sum(a_list, a, n)) - _numeric_fd(a_list, a, n)) < 1e-9

    @pytest.mark.parametrize("a_list,a", [((3,), 2), ((3, 4), 5), ((5, 7), 9), ((2, 3), 7)])
    def test_trace_route_agrees(self, a_list, a):
        for n in range(-a, 2 * a):
            assert fd_sum(a_list, a, n) == fd_sum_trace(a_list, a, n)

    @given(st.sampled_from(DEDEKIND_TUPLES), st.integers(-50, 200))
    def test_periodic(self, parts, n):
        head, a = parts[:-1], parts[-1]
        assert fd_sum(head, a, n) == fd_sum(head, a, n + a)

    @pytest.mark.parametrize("parts", DEDEKIND_TUPLES)
    def test_mean_zero(self, parts):
        for i, a in enumerate(parts):
            rest = parts[:i] + parts[i + 1:]
            assert sum(fd_sum(rest, a, n) for n in range(a)) == 0


class TestCyclo:
    @pytest.mark.parametrize("a,b", [(5, 2), (7, 3), (9, 4), (2, 1)])
    def test_inverse_one_minus(self, a, b):
        x = CycloElement.one(a) - CycloElement.monomial(a, b)
        assert x * inverse_one_minus(a, b) == CycloElement.one(a) - CycloElement.trivial_idempotent(a)

    def test_galois_sum_is_rational(self):
        x = CycloElement.monomial(7, 3, 2)
        total = CycloElement.zero(7)
        for k in range(1, 7):
            total = total + x.galois(k)
        assert total.rational_value() == -2


class TestPolynomialPart:
    def test_examples(self):
        assert polynomial_part([2, 3]) == (Fraction(5, 12), Fraction(1, 6))
        assert polynomial_part([1]) == (1,)
        assert polynomial_part([1, 1]) == (1, 1)

    def test_rejects_common_factor(self):
        with pytest.raises(CoprimalityError):
            polynomial_part([2, 4])

    @pytest.mark.parametrize("parts", DEDEKIND_TUPLES + [(1,), (1, 2), (3, 5, 7, 11)])
    def test_laurent_route_agrees(self, parts):
        assert polynomial_part(parts) == polynomial_part_laurent(parts)

    @pytest.mark.parametrize("parts", DEDEKIND_TUPLES)
    def test_degree(self, parts):
        coeffs = polynomial_part(parts)
        assert len(coeffs) == len(parts) and coeffs[-1] != 0


class TestClosedForm:
    def test_examples(self):
        assert denumerant_closed_form([2, 3], 7) == 1
        assert denumerant_closed_form([1], 5) == 1
        assert denumerant_closed_form([2, 3, 5], 10) == 4

    @pytest.mark.parametrize("parts", DEDEKIND_TUPLES)
    def test_matches_oracle(self, parts):
        table = denumerant_dp(parts, 120)
        for n in range(121):
            assert denumerant_closed_form(parts, n) == table[n]
        for n in (0, 17, 59):
            assert table[n] == count_solutions([list(parts)], [n])


class TestRecursion:
    def test_example(self):
        ok, lhs, rhs = verify_recursion([2, 3, 5], 20)
        assert ok and lhs == rhs

    def test_unit_last_part(self):
        for n in range(20):
            ok, lhs, _ = verify_recursion([2, 3, 1], n)
            assert ok and lhs == 0

    def test_sweep(self):
        assert all(verify_recursion([3, 4, 7], n)[0] for n in range(51))

    def test_arity(self):
        with pytest.raises(ArityError):
            verify_recursion([5], 3)

    @pytest.mark.parametrize("parts", DEDEKIND_TUPLES)
    def test_oracle_convolution(self, parts):
        if len(parts) < 2:
            return
        full, head = denumerant_dp(parts, 200), denumerant_dp(parts[:-1], 200)
        a = parts[-1]
        for n in range(201):
            assert full[n] == sum(head[n - a * t] for t in range(n // a + 1))
