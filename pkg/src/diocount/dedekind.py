"""Fourier-Dedekind sums and the closed-form denumerant for pairwise coprime parts.

    s_{-n}(a_1..a_{s-1}; a) = (1/a) sum_{k=1}^{a-1} xi^{-kn} / prod_j (1 - xi^{k a_j})

The sum is evaluated in Q[Z/a]: with X = g^{-n} (1 - e_0) prod_j (1 - g^{a_j})^{-1},
the sum over k is the image in Q(xi_a) of W = sum_k sigma_k(X), which is Galois
invariant and therefore rational.  ``fd_sum_trace`` reads the same value off
the identity coordinate of X instead.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from math import comb, gcd, lcm
from typing import Sequence

from .cyclo import CycloElement, inverse_one_minus
from .errors import ArityError, ConsistencyError, CoprimalityError
from .oracle import denumerant_dp
from .qpoly import interpolate, poly_add, poly_compose_linear, poly_eval, poly_mul, poly_scale


def _check_pairwise_coprime(a_list: Sequence[int]) -> None:
    if any(a < 1 for a in a_list):
        raise CoprimalityError(f"parts must be positive integers: {list(a_list)}")
    for i in range(len(a_list)):
        for j in range(i + 1, len(a_list)):
            if gcd(a_list[i], a_list[j]) != 1:
                raise CoprimalityError(f"{a_list[i]} and {a_list[j]} are not coprime")


@lru_cache(maxsize=None)
def _kernel(a_list: tuple[int, ...], modulus: int) -> CycloElement:
    x = CycloElement.one(modulus) - CycloElement.trivial_idempotent(modulus)
    for b in a_list:
        x = x * inverse_one_minus(modulus, b)
    return x


@lru_cache(maxsize=None)
def fd_table(a_list: tuple[int, ...], modulus: int) -> tuple[Fraction, ...]:
    """s_{-n}(a_list; modulus) for n = 0..modulus-1."""
    if modulus < 1:
        raise CoprimalityError("modulus must be positive")
    for b in a_list:
        if gcd(b, modulus) != 1:
            raise CoprimalityError(f"{b} is not coprime to {modulus}")
    if modulus == 1:
        return (Fraction(0),)
    X = _kernel(a_list, modulus)
    out = []
    for n in range(modulus):
        Xn = X.shift(-n)
        W = CycloElement.zero(modulus)
        for k in range(1, modulus):
            W = W + Xn.galois(k)
        out.append(W.rational_value() / modulus)
    return tuple(out)


def fd_sum(a_list: Sequence[int], modulus: int, n: int) -> Fraction:
    return fd_table(tuple(a_list), modulus)[n % modulus]


def fd_sum_trace(a_list: Sequence[int], modulus: int, n: int) -> Fraction:
    """Same value via the identity coordinate: sum_k chi_k(X) = a * X[0] when chi_0(X) = 0."""
    for b in a_list:
        if gcd(b, modulus) != 1:
            raise CoprimalityError(f"{b} is not coprime to {modulus}")
    if modulus == 1:
        return Fraction(0)
    return _kernel(tuple(a_list), modulus).shift(-n).coords[0]


# ---------------------------------------------------------------------------
# polynomial part
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _polynomial_part(a_list: tuple[int, ...]) -> tuple[Fraction, ...]:
    s = len(a_list)
    L = reduce(lcm, a_list, 1)
    table = denumerant_dp(a_list, L * (s + 1))
    total: tuple = ()
    for i in range(L):
        ms = list(range(s))
        in_m = interpolate(ms, [table[L * m + i] for m in ms])
        # n = L*m + i  =>  m = (n - i)/L
        total = poly_add(total, poly_compose_linear(in_m, Fraction(1, L), Fraction(-i, L)))
        if table[L * s + i] != poly_eval(in_m, s):
            raise ConsistencyError("denumerant is not a quasi-polynomial on this class")
    return tuple(Fraction(c) for c in poly_scale(total, Fraction(1, L)))


def polynomial_part(a_list: Sequence[int]) -> tuple[Fraction, ...]:
    """Coefficients (ascending in n) of the degree s-1 polynomial part B of p_A(n).

    Every Fourier-Dedekind term has zero mean over its period, so B is the
    average of the constituents of p_A over one full period lcm(a_i).
    """
    _check_pairwise_coprime(a_list)
    return _polynomial_part(tuple(a_list))


def _series_inverse(c: Sequence[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * order
    out[0] = 1 / Fraction(c[0])
    for k in range(1, order):
        acc = sum((c[j] * out[k - j] for j in range(1, min(k, len(c) - 1) + 1)), Fraction(0))
        out[k] = -acc / c[0]
    return out


def polynomial_part_laurent(a_list: Sequence[int]) -> tuple[Fraction, ...]:
    """B(n) = -Res_{z=1} z^{-n-1} / prod (1 - z^{a_j}), expanded in t = z - 1.

    1 - (1+t)^a = -t * u_a(t) with u_a(t) = sum_{r>=1} C(a, r) t^{r-1}, and the
    coefficient of t^k in (1+t)^{-n-1} is (-1)^k C(n+k, k).
    """
    _check_pairwise_coprime(a_list)
    s = len(a_list)
    E = [Fraction(1)] + [Fraction(0)] * (s - 1)
    for a in a_list:
        u = [Fraction(comb(a, r)) for r in range(1, a + 1)]
        E = poly_mul(E, _series_inverse(u, s))
        E = list(E[:s]) + [Fraction(0)] * (s - len(E[:s]))
    residue: tuple = ()
    for k in range(s):
        # C(n+k, k) as a polynomial in n
        binom: tuple = (Fraction(1),)
        for j in range(1, k + 1):
            binom = poly_mul(binom, (Fraction(j, j), Fraction(1, j)))
        residue = poly_add(residue, poly_scale(binom, (-1) ** k * E[s - 1 - k]))
    return tuple(Fraction(c) for c in poly_scale(residue, -((-1) ** s)))


def eval_poly_part(a_list: Sequence[int], n) -> Fraction:
    return Fraction(poly_eval(polynomial_part(a_list), n))


def denumerant_closed_form(a_list: Sequence[int], n: int) -> int:
    """p_A(n) = B(n) + sum_i s_{-n}(A without a_i; a_i)."""
    _check_pairwise_coprime(a_list)
    total = eval_poly_part(a_list, n)
    for i, a in enumerate(a_list):
        rest = tuple(a_list[:i]) + tuple(a_list[i + 1:])
        total += fd_sum(rest, a, n)
    if total.denominator != 1 or total < 0:
        raise ConsistencyError(f"closed form gave {total} for A={list(a_list)}, n={n}")
    return int(total)


def verify_recursion(a_list: Sequence[int], n: int) -> tuple[bool, Fraction, Fraction]:
    """Check s_{-n}(a_1..a_{s-1}; a_s) = B' - B - sum_i s_{-(n - a_s(r_i + 1))}(A without a_i; a_i).

    Here r_i = floor(n/a_s) mod a_i, B is the polynomial part of p_A at n, and
    B' sums the polynomial part of p_(a_1..a_{s-1}) at n - a_s t for
    t = 0..floor(n/a_s).
    """
    s = len(a_list)
    if s < 2:
        raise ArityError("the recursion needs at least two parts")
    _check_pairwise_coprime(a_list)
    a = tuple(a_list)
    a_s = a[-1]
    head = a[:-1]
    lhs = fd_sum(head, a_s, n)
    q = n // a_s
    B = eval_poly_part(a, n)
    head_part = polynomial_part(head)
    B_prime = sum((Fraction(poly_eval(head_part, n - a_s * t)) for t in range(q + 1)), Fraction(0))
    rhs = B_prime - B
    for i in range(s - 1):
        r_i = q % a[i]
        rest = a[:i] + a[i + 1:]
        rhs -= fd_sum(rest, a[i], n - a_s * (r_i + 1))
    return lhs == rhs, lhs, rhs
