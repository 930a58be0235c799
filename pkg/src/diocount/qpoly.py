"""The ring R of integer-valued quasi-polynomials.

A quasi-polynomial is stored as ``(T, [f_0, ..., f_{T-1}])`` where each
constituent ``f_i`` has integer coefficients and the value at ``n = T*m + i``
is ``f_i(m)``.  Values are always kept in canonical form (minimal period among
integer-coefficient representations), so structural equality is functional
equality.

Example:
    >>> q = QuasiPoly(2, [[0, 2], [1, 2]])   # 2m, 2m+1
    >>> q
    QuasiPoly(1, [[0, 1]])
    >>> q(12)
    12
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

from .errors import InvalidRepresentation, NoThresholdError

Number = Union[int, Fraction]


# ---------------------------------------------------------------------------
# Dense univariate polynomials over Z or Q, coefficients in ascending order
# ---------------------------------------------------------------------------

def _strip(coeffs: Iterable[Number]) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(p: Sequence[Number], q: Sequence[Number]) -> tuple:
    n = max(len(p), len(q))
    return _strip((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def poly_neg(p: Sequence[Number]) -> tuple:
    return tuple(-c for c in p)


def poly_sub(p: Sequence[Number], q: Sequence[Number]) -> tuple:
    return poly_add(p, poly_neg(q))


def poly_scale(p: Sequence[Number], c: Number) -> tuple:
    return _strip(c * x for x in p)


def poly_mul(p: Sequence[Number], q: Sequence[Number]) -> tuple:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _strip(out)


def poly_eval(p: Sequence[Number], x: Number) -> Number:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_compose_linear(p: Sequence[Number], a: Number, b: Number) -> tuple:
    """Coefficients of ``p(a*x + b)``."""
    acc: tuple = ()
    lin = _strip((b, a))
    for c in reversed(p):
        acc = poly_add(poly_mul(acc, lin), (c,))
    return acc


def poly_divmod(f: Sequence[Number], g: Sequence[Number]) -> tuple[tuple, tuple]:
    """Long division over Q: returns (q, s) with f = q*g + s and deg s < deg g."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in f]
    lead = Fraction(g[-1])
    dg = len(g) - 1
    quo = [Fraction(0)] * max(len(f) - dg, 0)
    for k in range(len(f) - 1 - dg, -1, -1):
        c = rem[k + dg] / lead
        quo[k] = c
        if c:
            for j, gj in enumerate(g):
                rem[k + j] -= c * gj
    return _strip(quo), _strip(rem[:dg])


def root_bound(p: Sequence[Number]) -> int:
    """Integer B such that p has the sign of its leading coefficient for every x > B (Cauchy bound)."""
    if len(p) <= 1:
        return 0
    lead = abs(Fraction(p[-1]))
    return math.ceil(1 + max(abs(Fraction(c)) for c in p[:-1]) / lead)


def is_integral(p: Sequence[Number]) -> bool:
    return all(Fraction(c).denominator == 1 for c in p)


def denominator_lcm(p: Sequence[Number]) -> int:
    return reduce(math.lcm, (Fraction(c).denominator for c in p), 1)


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


# ---------------------------------------------------------------------------
# IntPoly
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, ascending coefficients, no trailing zeros."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = _strip(self.coeffs)
        for x in c:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise InvalidRepresentation(f"non-integer coefficient {x}")
            elif not isinstance(x, int):
                raise InvalidRepresentation(f"coefficient {x!r} is not an integer")
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @property
    def degree(self) -> float | int:
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __call__(self, x):
        return poly_eval(self.coeffs, x)

    def __add__(self, other: IntPoly) -> IntPoly:
        return IntPoly(poly_add(self.coeffs, other.coeffs))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return IntPoly(poly_sub(self.coeffs, other.coeffs))

    def __mul__(self, other: IntPoly) -> IntPoly:
        return IntPoly(poly_mul(self.coeffs, other.coeffs))

    def __neg__(self) -> IntPoly:
        return IntPoly(poly_neg(self.coeffs))

    def compose_linear(self, a: int, b: int) -> IntPoly:
        return IntPoly(poly_compose_linear(self.coeffs, a, b))

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


def _as_intpoly(p) -> IntPoly:
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, int):
        return IntPoly((p,))
    return IntPoly(tuple(p))


# ---------------------------------------------------------------------------
# QuasiPoly
# ---------------------------------------------------------------------------

class SignClass(enum.Enum):
    ZERO = "Zero"
    NONNEGATIVE = "Nonnegative"
    STRICTLY_POSITIVE = "StrictlyPositive"
    STRICTLY_NEGATIVE = "StrictlyNegative"
    MIXED = "Mixed"


def _coarsen(period: int, constituents: Sequence[Sequence[Number]], integral: bool):
    """Smallest period representing the same function, with the constituents at that period."""
    for small in _divisors(period):
        d = period // small
        cand = []
        for i in range(small):
            h = poly_compose_linear(constituents[i], Fraction(1, d), 0)
            if integral and not is_integral(h):
                break
            if any(poly_compose_linear(h, d, q) != _strip(Fraction(c) for c in constituents[small * q + i])
                   for q in range(1, d)):
                break
            cand.append(h)
        else:
            return small, cand
    raise AssertionError("period itself always works")


@dataclass(frozen=True, eq=True)
class QuasiPoly:
    """Integer-valued quasi-polynomial in canonical (minimal-period) form.

    ``QuasiPoly(T, constituents)`` accepts IntPoly values, coefficient lists or
    plain integers, and canonicalizes on construction.
    """

    period: int
    constituents: tuple[IntPoly, ...]

    def __post_init__(self):
        T = self.period
        if isinstance(T, bool) or not isinstance(T, int) or T < 1:
            raise InvalidRepresentation(f"period must be a positive integer, got {T!r}")
        cons = [_as_intpoly(c) for c in self.constituents]
        if len(cons) != T:
            raise InvalidRepresentation(f"period {T} needs {T} constituents, got {len(cons)}")
        small, reduced = _coarsen(T, [c.coeffs for c in cons], integral=True)
        object.__setattr__(self, "period", small)
        object.__setattr__(self, "constituents", tuple(IntPoly(tuple(int(x) for x in h)) for h in reduced))

    # -- construction helpers -------------------------------------------------

    @classmethod
    def const(cls, c: int) -> QuasiPoly:
        return cls(1, [IntPoly((c,))])

    @classmethod
    def poly(cls, coeffs: Sequence[int]) -> QuasiPoly:
        """Period-1 quasi-polynomial from integer coefficients in n."""
        return cls(1, [IntPoly(tuple(coeffs))])

    @classmethod
    def from_rational(cls, period: int, constituents: Sequence[Sequence[Number]]) -> QuasiPoly:
        """Integer-coefficient form of a quasi-polynomial with rational constituents.

        Each constituent must be integer valued on N; the period is expanded by
        the lcm of the coefficient denominators, which always suffices.
        """
        if len(constituents) != period:
            raise InvalidRepresentation("constituent count does not match period")
        L = reduce(math.lcm, (denominator_lcm(c) for c in constituents), 1)
        out = []
        for j in range(L):
            for i in range(period):
                g = poly_compose_linear([Fraction(c) for c in constituents[i]], L, j)
                if not is_integral(g):
                    raise InvalidRepresentation("constituent is not integer valued")
                out.append(IntPoly(tuple(int(x) for x in g)))
        return cls(period * L, out)

    # -- basic queries --------------------------------------------------------

    @property
    def degree(self):
        return max(c.degree for c in self.constituents)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.constituents)

    def is_constant(self) -> bool:
        """True if every constituent has degree <= 0 (possibly periodic)."""
        return all(c.is_constant() for c in self.constituents)

    def __call__(self, n: int) -> int:
        m, i = divmod(n, self.period)
        return self.constituents[i](m)

    def expand(self, period: int) -> list[IntPoly]:
        """Constituents of the (non-canonical) representation with a multiple of the period."""
        if period % self.period:
            raise InvalidRepresentation(f"{period} is not a multiple of {self.period}")
        d = period // self.period
        out = []
        for j in range(period):
            q, i = divmod(j, self.period)
            out.append(self.constituents[i].compose_linear(d, q))
        return out

    def substitute(self, a: int, b: int) -> IntPoly:
        """Polynomial x -> self(a*x + b); requires the period to divide a."""
        if a % self.period:
            raise InvalidRepresentation(f"step {a} is not a multiple of period {self.period}")
        q, i = divmod(b, self.period)
        return self.constituents[i].compose_linear(a // self.period, q)

    def rational_form(self) -> tuple[int, list[tuple[Fraction, ...]]]:
        """Minimal period when constituents may carry rational coefficients.

        ``3/2 n^4 + ...`` needs period 2 with integer coefficients but is a
        period-1 polynomial in this view.
        """
        T, cons = _coarsen(self.period, [c.coeffs for c in self.constituents], integral=False)
        return T, [tuple(Fraction(x) for x in c) for c in cons]

    # -- ring operations ------------------------------------------------------

    def _binary(self, other, op) -> QuasiPoly:
        if isinstance(other, int):
            other = QuasiPoly.const(other)
        if not isinstance(other, QuasiPoly):
            return NotImplemented
        T = math.lcm(self.period, other.period)
        return QuasiPoly(T, [op(a, b) for a, b in zip(self.expand(T), other.expand(T))])

    def __add__(self, other):
        return self._binary(other, IntPoly.__add__)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, IntPoly.__sub__)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        return self._binary(other, IntPoly.__mul__)

    __rmul__ = __mul__

    def __neg__(self) -> QuasiPoly:
        return QuasiPoly(self.period, [-c for c in self.constituents])

    def scale(self, c: int) -> QuasiPoly:
        return QuasiPoly(self.period, [IntPoly(poly_scale(f.coeffs, c)) for f in self.constituents])

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {"period": self.period, "constituents": [list(c.coeffs) for c in self.constituents]}

    @classmethod
    def from_json(cls, obj) -> QuasiPoly:
        """Accepts the {"period", "constituents"} form, a bare coefficient list, or an integer."""
        if isinstance(obj, bool):
            raise InvalidRepresentation("boolean is not a quasi-polynomial")
        if isinstance(obj, int):
            return cls.const(obj)
        if isinstance(obj, list):
            return cls.poly(obj)
        if isinstance(obj, dict) and set(obj) >= {"period", "constituents"}:
            cons = obj["constituents"]
            if not isinstance(cons, list) or not cons:
                raise InvalidRepresentation("empty constituent list")
            return cls(obj["period"], [_as_intpoly(c) for c in cons])
        raise InvalidRepresentation(f"cannot read quasi-polynomial from {obj!r}")

    def __repr__(self) -> str:
        return f"QuasiPoly({self.period}, {[list(c.coeffs) for c in self.constituents]})"


ONE = QuasiPoly.const(1)
ZERO = QuasiPoly.const(0)


def make_quasipoly(period: int, constituents: Sequence) -> QuasiPoly:
    if not constituents:
        raise InvalidRepresentation("empty constituent list")
    return QuasiPoly(period, list(constituents))


def evaluate(q: QuasiPoly, n: int) -> int:
    return q(n)


def sign_class(q: QuasiPoly) -> SignClass:
    leads = [c.lead for c in q.constituents]
    if all(x == 0 for x in leads):
        return SignClass.ZERO
    if all(x > 0 for x in leads):
        return SignClass.STRICTLY_POSITIVE
    if all(x >= 0 for x in leads):
        return SignClass.NONNEGATIVE
    if all(x < 0 for x in leads):
        return SignClass.STRICTLY_NEGATIVE
    return SignClass.MIXED


def is_nonnegative(q: QuasiPoly) -> bool:
    """q >= 0 in the eventual order."""
    return sign_class(q) in (SignClass.ZERO, SignClass.NONNEGATIVE, SignClass.STRICTLY_POSITIVE)


def is_strictly_positive(q: QuasiPoly) -> bool:
    return sign_class(q) is SignClass.STRICTLY_POSITIVE


def abs_qp(q: QuasiPoly) -> QuasiPoly:
    return QuasiPoly(q.period, [-c if c.lead < 0 else c for c in q.constituents])


def sign_unit(q: QuasiPoly) -> QuasiPoly:
    """The +-1 unit e with e*q == abs_qp(q)."""
    return QuasiPoly(q.period, [IntPoly((-1 if c.lead < 0 else 1,)) for c in q.constituents])


def positivity_threshold(q: QuasiPoly) -> int:
    """Smallest C >= 0 with q(n) >= 0 for every n > C."""
    if not is_nonnegative(q):
        raise NoThresholdError(f"{q!r} is not eventually nonnegative")
    T = q.period
    last_negative = 0
    for i, c in enumerate(q.constituents):
        for m in range(root_bound(c.coeffs) + 1, -1, -1):
            if c(m) < 0:
                last_negative = max(last_negative, T * m + i)
                break
    return last_negative


def is_unit(q: QuasiPoly) -> bool:
    return all(c.coeffs in ((1,), (-1,)) for c in q.constituents)


def interpolate(xs: Sequence[Number], ys: Sequence[Number]) -> tuple[Fraction, ...]:
    """Exact coefficients (ascending) of the unique polynomial of degree < len(xs) through the points."""
    if len(xs) != len(ys) or len(set(xs)) != len(xs):
        raise ValueError("need distinct abscissae, one value each")
    xs = [Fraction(x) for x in xs]
    coef = [Fraction(y) for y in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out: tuple = ()
    for i in range(n - 1, -1, -1):
        out = poly_add(poly_mul(out, (-xs[i], Fraction(1))), (coef[i],))
    return out
