"""Generalized Euclidean division and GCD in Z[x] and in the ring of quasi-polynomials.

For f, g in Z[x] with g != 0 there are unique P, r in R with f = P*g + r and
0 <= r < |g| in the eventual order; pointwise this is integer floor division
for all large n.  Division in R works per residue class, and successive
division gives a gcd with Bezout cofactors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Sequence

from .errors import (
    ConsistencyError,
    DivisionByZero,
    HypothesisViolation,
    NoInverse,
    PreconditionError,
    UndefinedGcd,
)
from .qpoly import (
    ONE,
    ZERO,
    IntPoly,
    QuasiPoly,
    abs_qp,
    denominator_lcm,
    interpolate,
    is_integral,
    is_nonnegative,
    is_strictly_positive,
    poly_compose_linear,
    poly_divmod,
    positivity_threshold,
    root_bound,
    sign_unit,
)

MAX_EUCLID_STEPS = 10_000


@dataclass(frozen=True)
class DivisionResult:
    quotient: QuasiPoly
    remainder: QuasiPoly
    threshold: int

    def to_json(self) -> dict:
        return {
            "quotient": self.quotient.to_json(),
            "remainder": self.remainder.to_json(),
            "threshold": self.threshold,
        }


def _as_intpoly(p) -> IntPoly:
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, QuasiPoly):
        if p.period != 1:
            raise PreconditionError("expected a polynomial (period 1)")
        return p.constituents[0]
    return IntPoly(tuple(p))


def _remainder_threshold(g: IntPoly | QuasiPoly, r: QuasiPoly) -> int:
    absg = abs_qp(g if isinstance(g, QuasiPoly) else QuasiPoly(1, [g]))
    if not is_nonnegative(r) or not is_strictly_positive(absg - r):
        raise ConsistencyError(f"remainder condition fails for r={r!r}, |g|={absg!r}")
    return max(positivity_threshold(r), positivity_threshold(absg - r - 1))


def div_zx(f, g) -> DivisionResult:
    """Generalized Euclidean division of f by g in Z[x].

    The quotient is built from rational long division: with f = q*G + s over
    Q (G = |g|) and L the lcm of the denominators of q, the constituent of P on
    the class n = L*m + i is q(L*m + i) with its constant term floored, minus
    one when q(i) is integral and s/G is eventually negative.
    """
    f, g = _as_intpoly(f), _as_intpoly(g)
    if g.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    sgn = 1 if g.lead > 0 else -1
    G = g if sgn > 0 else -g
    q, s = poly_divmod(f.coeffs, G.coeffs)
    s_negative = bool(s) and s[-1] < 0
    L = denominator_lcm(q)
    cons = []
    for i in range(L):
        qi = list(poly_compose_linear(q, L, i)) or [Fraction(0)]
        c0 = qi[0]
        fl = math.floor(c0)
        if fl == c0 and s_negative:
            fl -= 1
        qi[0] = Fraction(fl)
        cons.append(IntPoly(tuple(int(x) for x in qi)))
    P = QuasiPoly(L, cons).scale(sgn)
    r = QuasiPoly(1, [f]) - P * QuasiPoly(1, [g])
    return DivisionResult(P, r, max(_remainder_threshold(g, r), positivity_threshold(QuasiPoly(1, [G]))))


def _pointwise_quotient(f: IntPoly, g: IntPoly, n: int) -> int:
    fn, gn = f(n), g(n)
    return fn // gn if gn > 0 else -(fn // -gn)


def div_zx_by_fit(f, g, max_attempts: int = 12) -> DivisionResult:
    """Independent route to div_zx: interpolate quotient constituents from exact floor values.

    The period is seeded from the quotient denominators of rational long
    division; samples start above the root bound of g and move up on failure,
    and the result is accepted only once the remainder condition verifies.
    """
    f, g = _as_intpoly(f), _as_intpoly(g)
    if g.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    q, _ = poly_divmod(f.coeffs, g.coeffs)
    T = denominator_lcm(q)
    deg = max(len(q) - 1, 0)
    start = root_bound(g.coeffs) + 1
    for attempt in range(max_attempts):
        cons = []
        for i in range(T):
            ms = [start + j for j in range(deg + 1)]
            ys = [_pointwise_quotient(f, g, T * m + i) for m in ms]
            c = interpolate(ms, ys)
            if not is_integral(c):
                break
            cons.append(IntPoly(tuple(int(x) for x in c)))
        else:
            P = QuasiPoly(T, cons)
            r = QuasiPoly(1, [f]) - P * QuasiPoly(1, [g])
            absg = abs_qp(QuasiPoly(1, [g]))
            if is_nonnegative(r) and is_strictly_positive(absg - r):
                return DivisionResult(P, r, max(_remainder_threshold(g, r), positivity_threshold(absg)))
        start = 2 * start + 1
        if attempt % 4 == 3:
            T *= 2
    raise ConsistencyError("fit-and-verify division did not converge")


def div_r(f: QuasiPoly, g: QuasiPoly) -> DivisionResult:
    """Division in R, constituent by constituent at the common period.

    Where a constituent of g vanishes the quotient constituent is 0 and the
    remainder constituent is the one of f.
    """
    T0 = math.lcm(f.period, g.period)
    fs, gs = f.expand(T0), g.expand(T0)
    parts = []
    for fi, gi in zip(fs, gs):
        if gi.is_zero():
            parts.append((ZERO, QuasiPoly(1, [fi]), 0))
        else:
            res = div_zx(fi, gi)
            parts.append((res.quotient, res.remainder, res.threshold))
    L = 1
    for P, r, _ in parts:
        L = math.lcm(L, P.period, r.period)
    Pc, rc = [], []
    for rho in range(T0 * L):
        q, i = divmod(rho, T0)
        P, r, _ = parts[i]
        Pc.append(P.substitute(L, q))
        rc.append(r.substitute(L, q))
    threshold = max(T0 * c + i for i, (_, _, c) in enumerate(parts))
    return DivisionResult(QuasiPoly(T0 * L, Pc), QuasiPoly(T0 * L, rc), threshold)


def quo(f: QuasiPoly, g: QuasiPoly) -> QuasiPoly:
    return div_r(f, g).quotient


def rem(f: QuasiPoly, g: QuasiPoly) -> QuasiPoly:
    return div_r(f, g).remainder


def _has_natural_root(p: IntPoly) -> bool:
    if p.is_zero():
        return True
    return any(p(m) == 0 for m in range(root_bound(p.coeffs) + 1))


def divides(g: QuasiPoly, f: QuasiPoly) -> bool:
    """g | f in R; g must not vanish at any n."""
    if any(_has_natural_root(c) for c in g.constituents):
        raise PreconditionError(f"{g!r} vanishes at some natural number")
    return div_r(f, g).remainder.is_zero()


@dataclass(frozen=True)
class GcdCertificate:
    gcd: QuasiPoly
    cofactors: tuple[QuasiPoly, ...]
    inputs: tuple[QuasiPoly, ...] = field(default=(), repr=False)

    @property
    def threshold(self) -> int:
        """Beyond this n the gcd agrees with the pointwise integer gcd."""
        return positivity_threshold(self.gcd)

    def check(self) -> bool:
        total = ZERO
        for f, u in zip(self.inputs, self.cofactors):
            total = total + f * u
        return total == self.gcd

    def to_json(self) -> dict:
        return {"gcd": self.gcd.to_json(), "cofactors": [u.to_json() for u in self.cofactors]}


def interleave(parts: Sequence[QuasiPoly]) -> QuasiPoly:
    """The quasi-polynomial equal to parts[j]((n - j) / L) on the class n = j mod L, L = len(parts)."""
    L = len(parts)
    T = math.lcm(*(p.period for p in parts))
    cons = [None] * (L * T)
    for j, p in enumerate(parts):
        for k, c in enumerate(p.expand(T)):
            cons[L * k + j] = c
    return QuasiPoly(L * T, cons)


def _leaf(p: IntPoly):
    s = -1 if (not p.is_zero() and p.lead < 0) else 1
    return QuasiPoly(1, [p if s > 0 else -p]), QuasiPoly.const(s)


@lru_cache(maxsize=4096)
def _gcd_zx(f: IntPoly, g: IntPoly, depth: int = 0):
    """(d, u, v) in R with u*f + v*g = d >= 0 for polynomials f, g.

    One division step, then the remainder is split by residue class and each
    class recurses on its own; results are interleaved back together.
    """
    if depth > MAX_EUCLID_STEPS:
        raise ConsistencyError("Euclidean algorithm did not terminate")
    if g.is_zero():
        d, s = _leaf(f)
        return d, s, ZERO
    res = div_zx(f, g)
    P, r = res.quotient, res.remainder
    L = math.lcm(P.period, r.period)
    ds, us, vs = [], [], []
    for j in range(L):
        gj, rj, Pj = g.compose_linear(L, j), r.substitute(L, j), QuasiPoly(1, [P.substitute(L, j)])
        if rj.is_zero():
            d, s = _leaf(gj)
            dj, uj, vj = d, ZERO, s
        else:
            # d = a*g + b*r = b*f + (a - b*P)*g
            dj, a, b = _gcd_zx(gj, rj, depth + 1)
            uj, vj = b, a - b * Pj
        ds.append(dj)
        us.append(uj)
        vs.append(vj)
    return interleave(ds), interleave(us), interleave(vs)


def _ggcd2(f: QuasiPoly, g: QuasiPoly):
    """Euclid in R with Bezout tracking, class by class; returns (d, u, v) with u*f + v*g = d."""
    T = math.lcm(f.period, g.period)
    parts = [_gcd_zx(fi, gi) for fi, gi in zip(f.expand(T), g.expand(T))]
    return tuple(interleave([p[k] for p in parts]) for k in range(3))


def ggcd_bezout(fs: Sequence[QuasiPoly]) -> GcdCertificate:
    fs = tuple(fs)
    if not fs:
        raise UndefinedGcd("gcd of an empty list")
    if all(f.is_zero() for f in fs):
        raise UndefinedGcd("gcd of zeros is undefined")
    d = fs[0]
    cofs = [ONE]
    for f in fs[1:]:
        d, u, v = _ggcd2(d, f)
        cofs = [c * u for c in cofs] + [v]
    e = sign_unit(d)
    return GcdCertificate(e * d, tuple(e * c for c in cofs), fs)


def ggcd(*fs: QuasiPoly) -> QuasiPoly:
    return ggcd_bezout(fs).gcd


def inverse_mod(a1: QuasiPoly, a2: QuasiPoly) -> tuple[QuasiPoly, QuasiPoly]:
    """(u1, u2) with a1*u1 + a2*u2 = 1; u1 is an inverse of a1 modulo a2."""
    cert = ggcd_bezout([a1, a2])
    if cert.gcd != ONE:
        raise NoInverse(f"ggcd is {cert.gcd!r}, not 1")
    return cert.cofactors[0], cert.cofactors[1]


# ---------------------------------------------------------------------------
# strong coprimality
# ---------------------------------------------------------------------------

Vector = tuple[QuasiPoly, ...]


@dataclass
class CoprimeTree:
    levels: list[list[Vector]]
    h: int
    strongly_coprime: bool
    failures: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "h": self.h,
            "strongly_coprime": self.strongly_coprime,
            "levels": [[[q.to_json() for q in v] for v in level] for level in self.levels],
            "failures": self.failures,
        }


def is_constant_vector(v: Vector) -> bool:
    return all(q.is_constant() for q in v)


def _pairwise_coprime(v: Vector) -> tuple[int, int] | None:
    for i in range(len(v)):
        for j in range(i + 1, len(v)):
            if v[i].is_zero() and v[j].is_zero():
                return i, j
            if ggcd(v[i], v[j]) != ONE:
                return i, j
    return None


def _children(v: Vector) -> list[Vector]:
    out = []
    for j, pivot in enumerate(v):
        out.append(tuple(pivot if i == j else rem(a, pivot) for i, a in enumerate(v)))
    return out


def strongly_coprime(A: Sequence[QuasiPoly], max_vectors: int = 10_000) -> CoprimeTree:
    """Build the remainder tree A^(0), A^(1), ... and test pairwise coprimality.

    A vector already seen is not revisited, so a level that produces no new
    nonconstant vector ends the construction; h is its index.
    """
    A = tuple(A)
    for k, a in enumerate(A):
        if not is_strictly_positive(a):
            raise HypothesisViolation(f"entry {k} = {a!r} does not have positive leading coefficients")
    seen = {A}
    levels = [[A]]
    while True:
        new = []
        for v in levels[-1]:
            for child in _children(v):
                if not is_constant_vector(child) and child not in seen:
                    seen.add(child)
                    new.append(child)
        if not new:
            break
        if len(seen) > max_vectors:
            raise ConsistencyError("remainder tree exceeded the vector budget")
        levels.append(new)
    failures = []
    for k, level in enumerate(levels):
        for v in level:
            bad = _pairwise_coprime(v)
            if bad is not None:
                failures.append({"level": k, "vector": [q.to_json() for q in v], "pair": list(bad)})
    return CoprimeTree(levels, len(levels), not failures, failures)
