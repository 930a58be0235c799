"""Vector partition functions t(m|A) for k x s systems.

Unimodular systems are polynomial on each chamber of the common refinement of
the simplicial cones pos(A_sigma); the chamber polynomials are recovered by
exact interpolation against the counting oracle.  For 2 x 3 matrices whose
maximal minors are coprime there is a closed formula in fractional parts.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cmp_to_key, reduce
from itertools import combinations, product
from typing import Callable, Mapping, Optional, Sequence

from .errors import (
    AmbiguousChamber,
    ConjectureCandidate,
    ConsistencyError,
    DegenerateMatrix,
    EnvelopeError,
    InfiniteCount,
    InvalidRepresentation,
    NonPolynomialEvidence,
    NotOnePrime,
    PreconditionError,
    RankError,
)
from .gdiv import ggcd
from .linalg import adjugate, columns, det, find_feasible, maximal_minors, normal_vector, positive_certificate, rank, solve
from .oracle import QPFitResult, count_solutions, fit_quasipolynomial, worker_count
from .qpoly import ONE, QuasiPoly, SignClass, abs_qp, is_nonnegative, positivity_threshold, sign_class

MAX_ROWS = 3
MAX_COLS = 8

IntVec = tuple[int, ...]


def _as_matrix(A) -> list[list[int]]:
    M = [[int(x) for x in row] for row in A]
    if not M or not M[0] or any(len(r) != len(M[0]) for r in M):
        raise InvalidRepresentation("matrix must be a nonempty rectangular integer array")
    return M


def _dot(h, v):
    return sum(a * b for a, b in zip(h, v))


def _primitive(v: Sequence[int]) -> IntVec:
    g = reduce(math.gcd, (abs(int(x)) for x in v), 0)
    return tuple(int(x) // g for x in v) if g else tuple(int(x) for x in v)


def _canonical(v: Sequence[int]) -> IntVec:
    p = _primitive(v)
    lead = next((x for x in p if x), 0)
    return tuple(-x for x in p) if lead < 0 else p


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------

def finiteness_check(A) -> bool:
    """True iff Ker(A) meets the nonnegative orthant only at 0."""
    M = _as_matrix(A)
    s = len(M[0])
    return find_feasible(M + [[1] * s], [0] * len(M) + [1]) is None


def unimodularity_check(A) -> bool:
    """All maximal minors in {0, 1, -1}; A must have full row rank."""
    M = _as_matrix(A)
    if rank(M) < len(M):
        raise RankError("matrix does not have full row rank")
    return all(abs(D) <= 1 for _, D in maximal_minors(M))


# ---------------------------------------------------------------------------
# multivariate polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MPoly:
    """Polynomial in u_1..u_k with rational coefficients, stored as sorted (exponents, coeff) pairs."""

    nvars: int
    terms: tuple[tuple[IntVec, Fraction], ...]

    def __post_init__(self):
        acc: dict[IntVec, Fraction] = {}
        for e, c in self.terms:
            e = tuple(int(x) for x in e)
            if len(e) != self.nvars:
                raise InvalidRepresentation("exponent length does not match nvars")
            acc[e] = acc.get(e, Fraction(0)) + Fraction(c)
        object.__setattr__(self, "terms", tuple(sorted((e, c) for e, c in acc.items() if c)))

    @classmethod
    def from_dict(cls, nvars: int, coeffs: Mapping[IntVec, Fraction]) -> MPoly:
        return cls(nvars, tuple(coeffs.items()))

    def as_dict(self) -> dict[IntVec, Fraction]:
        return dict(self.terms)

    @property
    def degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=-1)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.as_dict().get(tuple(exps), Fraction(0))

    def __call__(self, *u) -> Fraction:
        if len(u) == 1 and isinstance(u[0], (list, tuple)):
            u = tuple(u[0])
        return sum((c * math.prod(Fraction(x) ** k for x, k in zip(u, e)) for e, c in self.terms), Fraction(0))

    def compose(self, m: Sequence[QuasiPoly]) -> QuasiPoly:
        """The quasi-polynomial n -> self(m(n)); must be integer valued."""
        if len(m) != self.nvars:
            raise InvalidRepresentation("argument count does not match nvars")
        T = reduce(math.lcm, (q.period for q in m), 1)
        cons = []
        for i in range(T):
            parts = [q.expand(T)[i].coeffs for q in m]
            total: list[Fraction] = [Fraction(0)]
            for e, c in self.terms:
                term = [Fraction(c)]
                for p, k in zip(parts, e):
                    for _ in range(k):
                        term = _pmul(term, p)
                total = _padd(total, term)
            cons.append(total)
        return QuasiPoly.from_rational(T, cons)

    def to_json(self) -> dict:
        return {"nvars": self.nvars, "terms": [{"exponents": list(e), "coeff": _fs(c)} for e, c in self.terms]}

    @classmethod
    def from_json(cls, obj) -> MPoly:
        return cls(int(obj["nvars"]), tuple((tuple(t["exponents"]), Fraction(t["coeff"])) for t in obj["terms"]))

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        names = list(names or [f"u{i + 1}" for i in range(self.nvars)])
        if not self.terms:
            return "0"
        out = []
        for e, c in sorted(self.terms, key=lambda t: (-sum(t[0]), [-x for x in t[0]])):
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            if not mono:
                out.append(_fs(c))
            elif c == 1:
                out.append(mono)
            elif c == -1:
                out.append("-" + mono)
            else:
                out.append(f"({_fs(c)})*{mono}")
        return " + ".join(out).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.format()


def _fs(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _padd(p, q):
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]


def _pmul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


# ---------------------------------------------------------------------------
# chamber complex
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Chamber:
    inequalities: tuple[IntVec, ...]
    basis_index: tuple[IntVec, ...]
    interior_point: IntVec
    fitted_poly: Optional[MPoly] = None

    def contains(self, u: Sequence, strict: bool = False) -> bool:
        vals = [_dot(h, u) for h in self.inequalities]
        return all(v > 0 for v in vals) if strict else all(v >= 0 for v in vals)

    def to_json(self, names: Optional[Sequence[str]] = None) -> dict:
        out = {
            "inequalities": [list(h) for h in self.inequalities],
            "basis_index": [list(b) for b in self.basis_index],
            "interior_point": list(self.interior_point),
            "fitted_poly": None,
        }
        if self.fitted_poly is not None:
            out["fitted_poly"] = self.fitted_poly.to_json()
            out["formula"] = self.fitted_poly.format(names)
        return out


def cone_inequalities(A, sigma: Sequence[int]) -> list[IntVec]:
    """Primitive integer rows h with pos(A_sigma) = {u : h.u >= 0}."""
    B = columns(A, sigma)
    D = det(B)
    if D == 0:
        raise DegenerateMatrix(f"columns {tuple(sigma)} are not a basis")
    sgn = 1 if D > 0 else -1
    return [_primitive([sgn * x for x in row]) for row in adjugate(B)]


def _dedupe(points):
    out = []
    for p in points:
        if not out or out[-1] != p:
            out.append(p)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def _split(poly, h):
    """Cut a convex cell by h.u = 0; None when h does not cross its interior."""
    vals = [_dot(h, v) for v in poly]
    if min(vals) >= 0 or max(vals) <= 0:
        return None
    pos, neg = [], []
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        vp, vq = vals[i], vals[(i + 1) % n]
        if vp >= 0:
            pos.append(p)
        if vp <= 0:
            neg.append(p)
        if vp * vq < 0:
            t = vp / (vp - vq)
            x = tuple(a + t * (b - a) for a, b in zip(p, q))
            pos.append(x)
            neg.append(x)
    return _dedupe(pos), _dedupe(neg)


def _clip(poly, h):
    """Part of a convex cell with h.u >= 0."""
    if min(_dot(h, v) for v in poly) >= 0:
        return poly
    cut = _split(poly, h)
    if cut is None:
        return []
    return cut[0]


def _centroid(poly):
    n = len(poly)
    return tuple(sum((p[i] for p in poly), Fraction(0)) / n for i in range(len(poly[0])))


def _integer_ray(v) -> IntVec:
    L = reduce(math.lcm, (Fraction(x).denominator for x in v), 1)
    return _primitive([int(Fraction(x) * L) for x in v])


def chamber_complex(A) -> list[Chamber]:
    """Full-dimensional chambers of the common refinement of all simplicial cones pos(A_sigma).

    Work happens on the section y.u = 1 of pos(A) for a certificate y with
    y^T A >= 1; each basis simplex is cut by every hyperplane spanned by k-1
    columns, and cells are grouped by the set of bases whose cone contains them.
    """
    M = _as_matrix(A)
    k, s = len(M), len(M[0])
    if k > MAX_ROWS or s > MAX_COLS:
        raise EnvelopeError(f"chamber construction supports k <= {MAX_ROWS}, s <= {MAX_COLS}; got {k}x{s}")
    if rank(M) < k:
        raise RankError("matrix does not have full row rank")
    y = positive_certificate(M)
    if y is None:
        raise InfiniteCount("Ker(A) meets the nonnegative orthant")
    cols = [tuple(M[i][j] for i in range(k)) for j in range(s)]
    bases = [sigma for sigma, D in maximal_minors(M) if D != 0]
    cones = {sigma: cone_inequalities(M, sigma) for sigma in bases}

    hyperplanes: set[IntVec] = set()
    if k > 1:
        for tau in combinations(range(s), k - 1):
            nv = normal_vector([cols[j] for j in tau])
            if any(nv):
                hyperplanes.add(_canonical(nv))
    hyperplanes_sorted = sorted(hyperplanes)

    groups: dict[tuple[IntVec, ...], None] = {}
    for sigma in bases:
        cells = [[tuple(Fraction(x) / _dot(y, cols[j]) for x in cols[j]) for j in sigma]]
        for h in hyperplanes_sorted:
            nxt = []
            for c in cells:
                cut = _split(c, h)
                nxt.extend(cut if cut else [c])
            cells = nxt
        for c in cells:
            p = _centroid(c)
            delta = tuple(t for t in bases if all(_dot(h, p) > 0 for h in cones[t]))
            groups.setdefault(delta, None)

    chambers = []
    for delta in sorted(groups):
        rows = sorted({h for t in delta for h in cones[t]})
        first = delta[0]
        poly = [tuple(Fraction(x) / _dot(y, cols[j]) for x in cols[j]) for j in first]
        for h in rows:
            poly = _clip(poly, h)
        if k == 1:
            facets = rows
        else:
            facets = [h for h in rows if sum(1 for v in poly if _dot(h, v) == 0) >= k - 1]
        chambers.append(Chamber(tuple(facets), delta, _integer_ray(_centroid(poly))))
    return chambers


# ---------------------------------------------------------------------------
# chamber polynomials
# ---------------------------------------------------------------------------

def _monomials(k: int, d: int) -> list[IntVec]:
    return [e for e in product(range(d + 1), repeat=k) if sum(e) <= d]


def _scale_for(chamber: Chamber, radius: int) -> int:
    """N such that N*p + v lies strictly inside the chamber whenever |v|_1 <= radius."""
    p = chamber.interior_point
    N = 1
    for h in chamber.inequalities:
        hp = _dot(h, p)
        N = max(N, -(-max(abs(x) for x in h) * radius // hp) + 1)
    return N


def _counts(A, points: Sequence[Sequence[int]], workers: Optional[int] = None) -> list[int]:
    workers = worker_count() if workers is None else workers
    if workers > 1 and len(points) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(count_solutions, [A] * len(points), [list(p) for p in points]))
    return [count_solutions(A, list(p)) for p in points]


def vpf_polynomial(A, chamber: Chamber, holdout: int = 20, seed: int = 0) -> MPoly:
    """Degree s-k polynomial agreeing with t(u|A) on the chamber, by exact interpolation.

    Training points form the simplex grid {N p + v : v >= 0, |v| <= s-k} around a
    scaled interior point p; ``holdout`` further random interior lattice points
    must match as well.
    """
    M = _as_matrix(A)
    k, s = len(M), len(M[0])
    if not unimodularity_check(M):
        raise PreconditionError("matrix is not unimodular")
    if not finiteness_check(M):
        raise InfiniteCount("Ker(A) meets the nonnegative orthant")
    d = s - k
    monos = _monomials(k, d)
    p = chamber.interior_point
    N = _scale_for(chamber, d)
    train = [tuple(N * pi + vi for pi, vi in zip(p, v)) for v in monos]
    radius = d + 2
    rng = random.Random(seed)
    N2 = _scale_for(chamber, k * radius)
    hold = []
    for j in range(holdout):
        v = [rng.randint(-radius, radius) for _ in range(k)]
        hold.append(tuple((N2 + 1 + j) * pi + vi for pi, vi in zip(p, v)))
    if not all(chamber.contains(u, strict=True) for u in train + hold):
        raise ConsistencyError("sample grid left the chamber")
    values = _counts(M, train + hold)
    rows = [[math.prod(x ** a for x, a in zip(u, e)) for e in monos] for u in train]
    coeffs = solve(rows, values[: len(train)])
    poly = MPoly(k, tuple(zip(monos, coeffs)))
    for u, v in zip(hold, values[len(train):]):
        if poly(u) != v:
            raise NonPolynomialEvidence(f"interpolant disagrees with the count at {list(u)}: {poly(u)} != {v}")
    if poly.degree != d:
        raise NonPolynomialEvidence(f"interpolant has degree {poly.degree}, expected {d}")
    return poly


def fit_chambers(A, chambers: Optional[Sequence[Chamber]] = None) -> list[Chamber]:
    chambers = chamber_complex(A) if chambers is None else chambers
    return [replace(c, fitted_poly=c.fitted_poly or vpf_polynomial(A, c)) for c in chambers]


# ---------------------------------------------------------------------------
# parametric right-hand sides
# ---------------------------------------------------------------------------

def _linear_form(h: Sequence[int], m: Sequence[QuasiPoly]) -> QuasiPoly:
    total = QuasiPoly.const(0)
    for c, q in zip(h, m):
        if c:
            total = total + q.scale(c)
    return total


@dataclass(frozen=True)
class Location:
    index: int
    threshold: int
    candidates: tuple[int, ...]


def locate_chamber(chambers: Sequence[Chamber], m: Sequence[QuasiPoly]) -> Location:
    """Chamber whose closure contains m(n) for every n above the returned threshold."""
    hits = []
    for idx, c in enumerate(chambers):
        forms = [_linear_form(h, m) for h in c.inequalities]
        if all(is_nonnegative(f) for f in forms):
            hits.append((idx, max((positivity_threshold(f) for f in forms), default=0)))
    if not hits:
        raise AmbiguousChamber("m(n) is not eventually inside any closed chamber", [])
    if len(hits) > 1 and all(chambers[i].fitted_poly is not None for i, _ in hits):
        comps = {i: chambers[i].fitted_poly.compose(m) for i, _ in hits}
        if len(set(comps.values())) > 1:
            raise AmbiguousChamber("m(n) lies on a boundary between chambers with different counts",
                                   [{"index": i, "inequalities": [list(h) for h in chambers[i].inequalities],
                                     "composed": comps[i].to_json()} for i, _ in hits])
    idx, thr = hits[0]
    return Location(idx, thr, tuple(i for i, _ in hits))


@dataclass
class ParamCount:
    formula: QuasiPoly
    threshold: int
    chamber_index: int
    chamber: Chamber
    certified: list[tuple[int, int]] = field(default_factory=list)

    def to_json(self) -> dict:
        T, cons = self.formula.rational_form()
        return {
            "formula": self.formula.to_json(),
            "rational_form": {"period": T, "constituents": [[_fs(c) for c in p] for p in cons]},
            "threshold": self.threshold,
            "chamber_index": self.chamber_index,
            "chamber": self.chamber.to_json(),
            "certified": [{"n": n, "count": c} for n, c in self.certified],
        }


def t_param_unimodular(A, m: Sequence[QuasiPoly], certify: int = 5) -> ParamCount:
    """t(m(n)|A) as a polynomial in n for unimodular A, certified against the oracle."""
    M = _as_matrix(A)
    if len(m) != len(M):
        raise InvalidRepresentation("right-hand side length must equal the number of rows")
    if not unimodularity_check(M):
        raise PreconditionError("matrix is not unimodular")
    chambers = chamber_complex(M)
    loc = locate_chamber(chambers, m)
    fitted = {i: vpf_polynomial(M, chambers[i]) for i in loc.candidates}
    chambers = [replace(c, fitted_poly=fitted.get(i)) for i, c in enumerate(chambers)]
    loc = locate_chamber(chambers, m)
    formula = chambers[loc.index].fitted_poly.compose(m)
    certified = []
    for n in range(loc.threshold + 1, loc.threshold + 1 + certify):
        c = count_solutions(M, [q(n) for q in m])
        if formula(n) != c:
            raise NonPolynomialEvidence(f"composed formula gives {formula(n)} at n={n}, oracle gives {c}")
        certified.append((n, c))
    return ParamCount(formula, loc.threshold, loc.index, chambers[loc.index], certified)


# ---------------------------------------------------------------------------
# 2 x 3 matrices with coprime maximal minors
# ---------------------------------------------------------------------------

def _det2(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _frac(x: Fraction) -> Fraction:
    return x - math.floor(x)


def _bezout_pair(P: int, Q: int, Y: int) -> tuple[int, int]:
    """Smallest max-norm (f, g) with gcd(f*P + g*Q, Y) = 1."""
    for r in range(Y + 1):
        ring = [(f, g) for f in range(-r, r + 1) for g in range(-r, r + 1) if max(abs(f), abs(g)) == r]
        ring.sort(key=lambda fg: (abs(fg[0]) + abs(fg[1]), -fg[0], -fg[1]))
        for f, g in ring:
            if math.gcd(f * P + g * Q, Y) == 1:
                return f, g
    raise NotOnePrime(f"no (f, g) makes f*{P} + g*{Q} a unit modulo {Y}")


def _inv(a: int, Y: int) -> int:
    return pow(a % Y, -1, Y) if Y > 1 else 0


@dataclass(frozen=True)
class TwoByThree:
    """A pointed 2 x 3 integer matrix with columns sorted counterclockwise."""

    columns: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]
    order: tuple[int, int, int]
    Y12: int
    Y13: int
    Y23: int
    bezout_pairs: tuple[int, int, int, int, int, int]
    inverses: tuple[int, int, int]

    @classmethod
    def from_matrix(cls, A) -> TwoByThree:
        M = _as_matrix(A)
        if len(M) != 2 or len(M[0]) != 3:
            raise InvalidRepresentation("expected a 2 x 3 matrix")
        cols = [(M[0][j], M[1][j]) for j in range(3)]
        if all(_det2(cols[i], cols[j]) == 0 for i, j in combinations(range(3), 2)):
            raise DegenerateMatrix("all maximal minors vanish")
        if positive_certificate(M) is None:
            raise InfiniteCount("Ker(A) meets the nonnegative orthant")
        for i, j in combinations(range(3), 2):
            if _det2(cols[i], cols[j]) == 0:
                raise DegenerateMatrix(f"columns {i + 1} and {j + 1} are parallel")
        order = sorted(range(3), key=cmp_to_key(lambda i, j: -1 if _det2(cols[i], cols[j]) > 0 else 1))
        a1, a2, a3 = (cols[j] for j in order)
        Y12, Y13, Y23 = _det2(a1, a2), _det2(a1, a3), _det2(a2, a3)
        if math.gcd(Y12, Y13, Y23) != 1:
            raise NotOnePrime(f"gcd of the maximal minors {Y12}, {Y13}, {Y23} is not 1")
        f12, g12 = _bezout_pair(Y13, Y23, Y12)
        f13, g13 = _bezout_pair(Y12, Y23, Y13)
        f23, g23 = _bezout_pair(Y13, Y12, Y23)
        inverses = (_inv(f12 * Y13 + g12 * Y23, Y12), _inv(f13 * Y12 + g13 * Y23, Y13),
                    _inv(f23 * Y13 + g23 * Y12, Y23))
        return cls((a1, a2, a3), tuple(order), Y12, Y13, Y23, (f12, g12, f13, g13, f23, g23), inverses)

    @property
    def matrix(self) -> list[list[int]]:
        return [[c[0] for c in self.columns], [c[1] for c in self.columns]]

    def region(self, m: Sequence[int]) -> str:
        """'outside', 'omega1', 'omega2' or 'boundary' (the middle ray)."""
        a1, a2, a3 = self.columns
        if _det2(a1, m) < 0 or _det2(m, a3) < 0:
            return "outside"
        side = _det2(a2, m)
        return "omega1" if side < 0 else "omega2" if side > 0 else "boundary"

    def to_json(self) -> dict:
        return {
            "columns": [list(c) for c in self.columns],
            "order": list(self.order),
            "Y12": self.Y12, "Y13": self.Y13, "Y23": self.Y23,
            "bezout_pairs": list(self.bezout_pairs),
            "inverses": list(self.inverses),
        }


def _omega1(M: TwoByThree, m) -> Fraction:
    (x1, y1), (x2, y2), (x3, y3) = M.columns
    f12, g12, f13, g13, _, _ = M.bezout_pairs
    i12, i13, _ = M.inverses
    m1, m2 = m
    lead = Fraction(m2 * x1 - m1 * y1, M.Y12 * M.Y13)
    t12 = _frac(Fraction(i12 * (m2 * (f12 * x1 + g12 * x2) - m1 * (f12 * y1 + g12 * y2)), M.Y12))
    t13 = _frac(Fraction(i13 * (m2 * (f13 * x1 - g13 * x3) - m1 * (f13 * y1 - g13 * y3)), M.Y13))
    return lead - t12 - t13 + 1


def _num_minor(m1, m2, x3, y3):
    return m1 * y3 - m2 * x3


def _num_as_displayed(m1, m2, x3, y3):
    return m1 * y3 - m2 * y3


def _num_negated(m1, m2, x3, y3):
    return m2 * x3 - m1 * y3


OMEGA2_NUMERATORS: dict[str, Callable[[int, int, int, int], int]] = {
    "m1*y3 - m2*x3": _num_minor,
    "m1*y3 - m2*y3": _num_as_displayed,
    "m2*x3 - m1*y3": _num_negated,
}
OMEGA2_NUMERATOR = "m1*y3 - m2*x3"


def _omega2(M: TwoByThree, m, numerator: str = OMEGA2_NUMERATOR) -> Fraction:
    (x1, y1), (x2, y2), (x3, y3) = M.columns
    _, _, f13, g13, f23, g23 = M.bezout_pairs
    _, i13, i23 = M.inverses
    m1, m2 = m
    lead = Fraction(OMEGA2_NUMERATORS[numerator](m1, m2, x3, y3), M.Y23 * M.Y13)
    t23 = _frac(Fraction(i23 * (m1 * (f23 * y3 + g23 * y2) - m2 * (f23 * x3 + g23 * x2)), M.Y23))
    t13 = _frac(Fraction(i13 * (m1 * (g13 * y3 - f13 * y1) - m2 * (g13 * x3 - f13 * x1)), M.Y13))
    return lead - t23 - t13 + 1


def popoviciu_2x3(M, m: Sequence[int], numerator: str = OMEGA2_NUMERATOR) -> int:
    """Closed-form t(m|A) for m in the closed cone pos(A)."""
    M = M if isinstance(M, TwoByThree) else TwoByThree.from_matrix(M)
    m = (int(m[0]), int(m[1]))
    region = M.region(m)
    if region == "outside":
        raise PreconditionError(f"{list(m)} is not in pos(A)")
    vals = []
    if region in ("omega1", "boundary"):
        vals.append(_omega1(M, m))
    if region in ("omega2", "boundary"):
        vals.append(_omega2(M, m, numerator))
    if len(vals) == 2 and vals[0] != vals[1]:
        raise ConsistencyError(f"chamber formulas disagree on the middle ray: {vals[0]} != {vals[1]}")
    v = vals[0]
    if v.denominator != 1 or v < 0:
        raise ConsistencyError(f"closed form gave {v} at m={list(m)}")
    return int(v)


def count_2x3(M, m: Sequence[int]) -> int:
    """popoviciu_2x3, extended by 0 outside pos(A)."""
    M = M if isinstance(M, TwoByThree) else TwoByThree.from_matrix(M)
    return 0 if M.region(m) == "outside" else popoviciu_2x3(M, m)


def calibrate_omega2(matrices: Sequence, box: int = 30) -> dict[str, int]:
    """Mismatches against the oracle for each candidate second-chamber numerator.

    Every lattice point of the closed second chamber inside [0, box]^2 is tried.
    """
    bad = {name: 0 for name in OMEGA2_NUMERATORS}
    for A in matrices:
        M = TwoByThree.from_matrix(A)
        for m in product(range(box + 1), repeat=2):
            if M.region(m) not in ("omega2", "boundary"):
                continue
            t = count_solutions(M.matrix, list(m))
            for name in OMEGA2_NUMERATORS:
                if _omega2(M, m, name) != t:
                    bad[name] += 1
    return bad


def _minors(A: Sequence[Sequence[QuasiPoly]]):
    cols = [(A[0][j], A[1][j]) for j in range(3)]
    return {(i, j): cols[i][0] * cols[j][1] - cols[i][1] * cols[j][0] for i, j in combinations(range(3), 2)}


def _as_param(A) -> list[list[QuasiPoly]]:
    return [[q if isinstance(q, QuasiPoly) else QuasiPoly.from_json(q) for q in row] for row in A]


def is_1prime(A) -> bool:
    """ggcd of the absolute maximal minors equals 1 in the quasi-polynomial ring."""
    A = _as_param(A)
    if len(A) != 2 or any(len(r) != 3 for r in A):
        raise InvalidRepresentation("expected a 2 x 3 matrix")
    minors = [abs_qp(Y) for Y in _minors(A).values()]
    if all(Y.is_zero() for Y in minors):
        raise DegenerateMatrix("all maximal minors vanish")
    return ggcd(*minors) == ONE


@dataclass
class TwoByThreeResult:
    formula: QuasiPoly
    threshold: int
    chamber: str
    fit: QPFitResult
    window: tuple[int, int]
    certified: list[tuple[int, int]] = field(default_factory=list)

    def to_json(self) -> dict:
        T, cons = self.formula.rational_form()
        return {
            "formula": self.formula.to_json(),
            "rational_form": {"period": T, "constituents": [[_fs(c) for c in p] for p in cons]},
            "threshold": self.threshold,
            "chamber": self.chamber,
            "window": list(self.window),
            "certified": [{"n": n, "count": c} for n, c in self.certified],
            "fit": self.fit.to_json(),
        }


def _eventual_chamber(A: Sequence[Sequence[QuasiPoly]], m: Sequence[QuasiPoly]) -> tuple[str, int]:
    """Chamber name for large n and a threshold beyond which column order and chamber are fixed."""
    cols = [(A[0][j], A[1][j]) for j in range(3)]
    minors = _minors(A)
    signs = {}
    thr = 0
    for key, Y in minors.items():
        sc = sign_class(Y)
        if sc is SignClass.STRICTLY_POSITIVE:
            signs[key] = 1
        elif sc is SignClass.STRICTLY_NEGATIVE:
            signs[key] = -1
            Y = -Y
        else:
            raise PreconditionError(f"minor Y{key[0] + 1}{key[1] + 1} has no eventual strict sign")
        thr = max(thr, positivity_threshold(Y - 1))

    def cmp(i, j):
        return -signs[(i, j)] if i < j else signs[(j, i)]

    order = sorted(range(3), key=cmp_to_key(cmp))
    a1, a2, a3 = (cols[j] for j in order)
    lower = a1[0] * m[1] - a1[1] * m[0]
    upper = m[0] * a3[1] - m[1] * a3[0]
    side = a2[0] * m[1] - a2[1] * m[0]
    if not (is_nonnegative(lower) and is_nonnegative(upper)):
        return "outside", thr
    thr = max(thr, positivity_threshold(lower), positivity_threshold(upper))
    sc = sign_class(side)
    if sc is SignClass.ZERO:
        return "boundary", thr
    if is_nonnegative(side):
        return "omega2", max(thr, positivity_threshold(side))
    if is_nonnegative(-side):
        return "omega1", max(thr, positivity_threshold(-side))
    return "mixed", thr


def t_param_2x3(A, m: Sequence[QuasiPoly], window: int = 48, max_period: int = 12, max_degree: int = 6,
                attempts: int = 4, certify: int = 5) -> TwoByThreeResult:
    """Quasi-polynomial t(m(n)|A(n)) by fit-and-verify over closed-form counts.

    The fit uses the upper half of a window above the eventual-order threshold
    and is then extended downward as far as it keeps matching.  Window and
    period bound double on each failed attempt.
    """
    A = _as_param(A)
    m = [q if isinstance(q, QuasiPoly) else QuasiPoly.from_json(q) for q in m]
    if not is_1prime(A):
        raise NotOnePrime("the ggcd of the maximal minors is not 1")
    chamber, n0 = _eventual_chamber(A, m)
    n0 += 1
    cache: dict[int, int] = {}

    def value(n):
        if n not in cache:
            An = [[q(n) for q in row] for row in A]
            cache[n] = count_2x3(An, [q(n) for q in m])
        return cache[n]

    report = {"chamber": chamber, "start": n0, "attempts": []}
    W, P = window, max_period
    for _ in range(attempts):
        hi = n0 + W
        mid = n0 + W // 2
        samples = {n: value(n) for n in range(mid, hi + 1)}
        fit = fit_quasipolynomial(samples, P, max_degree)
        report["attempts"].append({"window": [n0, hi], "max_period": P, "fit": fit.to_json()})
        if fit.validated:
            start = mid
            while start - 1 >= n0 and fit.fitted(start - 1) == value(start - 1):
                start -= 1
            certified = []
            for n in range(hi - certify + 1, hi + 1):
                An = [[q(n) for q in row] for row in A]
                c = count_solutions(An, [q(n) for q in m])
                if c != value(n):
                    raise ConsistencyError(f"closed form {value(n)} differs from the oracle {c} at n={n}")
                certified.append((n, c))
            return TwoByThreeResult(fit.fitted, start - 1, chamber, fit, (n0, hi), certified)
        W, P = 2 * W, 2 * P
    raise ConjectureCandidate("no quasi-polynomial fit validated on any window", report)
