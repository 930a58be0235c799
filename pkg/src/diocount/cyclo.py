"""Exact arithmetic in the rational group algebra Q[Z/a].

An element is a vector of ``a`` rationals, the coefficients of g^0..g^{a-1}
for a generator g.  Evaluating g at a primitive a-th root of unity xi maps the
algebra onto Q(xi); that image is computed by reducing modulo the cyclotomic
polynomial, which is how rationality of a Galois-invariant element is checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import ConsistencyError, CoprimalityError
from .qpoly import poly_divmod, poly_mul


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, ascending."""
    num = (-1,) + (0,) * (n - 1) + (1,)
    den: tuple = (1,)
    for d in range(1, n):
        if n % d == 0:
            den = poly_mul(den, cyclotomic_poly(d))
    q, r = poly_divmod(num, den)
    assert not r
    return tuple(int(c) for c in q)


@dataclass(frozen=True)
class CycloElement:
    modulus: int
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != self.modulus:
            raise ValueError("coordinate vector must have length equal to the modulus")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @classmethod
    def zero(cls, a: int) -> CycloElement:
        return cls(a, (Fraction(0),) * a)

    @classmethod
    def monomial(cls, a: int, j: int, c=1) -> CycloElement:
        coords = [Fraction(0)] * a
        coords[j % a] = Fraction(c)
        return cls(a, tuple(coords))

    @classmethod
    def one(cls, a: int) -> CycloElement:
        return cls.monomial(a, 0)

    @classmethod
    def trivial_idempotent(cls, a: int) -> CycloElement:
        """(1/a) * sum of all group elements; projects onto the trivial character."""
        return cls(a, (Fraction(1, a),) * a)

    def __add__(self, other: CycloElement) -> CycloElement:
        return CycloElement(self.modulus, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: CycloElement) -> CycloElement:
        return CycloElement(self.modulus, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __mul__(self, other: CycloElement) -> CycloElement:
        a = self.modulus
        out = [Fraction(0)] * a
        for i, x in enumerate(self.coords):
            if x:
                for j, y in enumerate(other.coords):
                    if y:
                        out[(i + j) % a] += x * y
        return CycloElement(a, tuple(out))

    def scale(self, c) -> CycloElement:
        return CycloElement(self.modulus, tuple(c * x for x in self.coords))

    def shift(self, j: int) -> CycloElement:
        """Multiply by g^j."""
        a = self.modulus
        return CycloElement(a, tuple(self.coords[(i - j) % a] for i in range(a)))

    def galois(self, k: int) -> CycloElement:
        """Image under the algebra map g -> g^k."""
        a = self.modulus
        out = [Fraction(0)] * a
        for j, x in enumerate(self.coords):
            out[(j * k) % a] += x
        return CycloElement(a, tuple(out))

    def field_coords(self) -> tuple[Fraction, ...]:
        """Coordinates of the image in Q(xi_a) on the power basis 1, xi, ..., xi^(phi(a)-1)."""
        phi = cyclotomic_poly(self.modulus)
        _, r = poly_divmod(self.coords, phi)
        r = list(r) + [Fraction(0)] * (len(phi) - 1 - len(r))
        return tuple(r)

    def rational_value(self) -> Fraction:
        """The image in Q(xi_a), which must lie on the rational line."""
        c = self.field_coords()
        if any(c[1:]):
            raise ConsistencyError("element is not rational in the cyclotomic field")
        return c[0] if c else Fraction(0)


def inverse_one_minus(a: int, b: int) -> CycloElement:
    """Inverse of 1 - g^b inside the ideal where the trivial character vanishes.

    With h = g^b (a generator when gcd(a, b) = 1) the inverse is
    sum_j ((a-1)/(2a) - j/a) h^j; its product with 1 - g^b is 1 - e_0.
    """
    if gcd(a, b) != 1:
        raise CoprimalityError(f"1 - g^{b} is not invertible modulo {a}")
    out = [Fraction(0)] * a
    for j in range(a):
        out[(j * b) % a] += Fraction(a - 1, 2 * a) - Fraction(j, a)
    return CycloElement(a, tuple(out))
