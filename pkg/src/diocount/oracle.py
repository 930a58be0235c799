"""Ground truth for every closed formula in the package.

``count_solutions`` enumerates nonnegative integer solutions of A x = m.  A
rational y with y^T A >= 1 (it exists exactly when the count is finite) bounds
every coordinate by y^T m; the free variables of a column basis are enumerated
and the last one is counted in closed form as an arithmetic progression.
``denumerant_dp`` is an independent dynamic program for one equation.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence

from .errors import InfiniteCount, InvalidRepresentation
from .linalg import adjugate, columns, det, independent_rows, positive_certificate, rank
from .qpoly import QuasiPoly, interpolate, poly_eval


@dataclass(frozen=True)
class CountQuery:
    matrix: tuple[tuple[int, ...], ...]
    rhs: tuple[int, ...]

    def __post_init__(self):
        M = tuple(tuple(int(x) for x in row) for row in self.matrix)
        b = tuple(int(x) for x in self.rhs)
        if not M or not M[0] or any(len(row) != len(M[0]) for row in M):
            raise InvalidRepresentation("matrix must be a nonempty rectangular integer array")
        if len(b) != len(M):
            raise InvalidRepresentation("rhs length must equal the number of rows")
        object.__setattr__(self, "matrix", M)
        object.__setattr__(self, "rhs", b)


def _progression(w: int, c: int, M: int):
    """Solutions t of t*w = c (mod M) as (t0, step), or None."""
    g = math.gcd(w, M)
    if c % g:
        return None
    step = M // g
    if step == 1:
        return 0, 1
    return (c // g) * pow(w // g, -1, step) % step, step


def _merge(p, q):
    """Intersect two arithmetic progressions t0 + k*step."""
    (a, m), (b, n) = p, q
    g = math.gcd(m, n)
    if (b - a) % g:
        return None
    l = m // g * n
    if l == 1:
        return 0, 1
    k = ((b - a) // g) * pow(m // g, -1, n // g) % (n // g) if n // g > 1 else 0
    return (a + m * k) % l, l


def _count_in(lo: int, hi: int, t0: int, step: int) -> int:
    if hi < lo:
        return 0
    first = lo + (t0 - lo) % step
    return 0 if first > hi else (hi - first) // step + 1


def count_solutions(matrix, rhs=None) -> int:
    """#{x in Z_{>=0}^s : A x = m}."""
    q = matrix if isinstance(matrix, CountQuery) else CountQuery(matrix, rhs)
    A, m = [list(r) for r in q.matrix], list(q.rhs)
    s = len(A[0])
    y = positive_certificate(A)
    if y is None:
        raise InfiniteCount("Ker(A) meets the nonnegative orthant; the count is infinite")
    if rank([row + [b] for row, b in zip(A, m)]) > rank(A):
        return 0
    rows = independent_rows(A)
    A = [A[i] for i in rows]
    m = [m[i] for i in rows]
    r = len(A)
    ya = [sum(yi * A[i][j] for i, yi in enumerate(y)) for j in range(s)]
    ym = sum(yi * mi for yi, mi in zip(y, m))
    if ym < 0:
        return 0
    bounds = [math.floor(ym / ya[j]) for j in range(s)]

    best = None
    for sigma in combinations(range(s), r):
        D = det(columns(A, sigma))
        if D == 0:
            continue
        free = [j for j in range(s) if j not in sigma]
        free.sort(key=lambda j: bounds[j])
        cost = math.prod(bounds[j] + 1 for j in free[:-1])
        key = (cost, abs(D))
        if best is None or key < best[0]:
            best = (key, sigma, free, D)
    _, sigma, free, D = best
    adj = adjugate(columns(A, sigma))
    sgn = 1 if D > 0 else -1
    absD = abs(D)

    def matvec(v):
        return [sgn * sum(adj[i][j] * v[j] for j in range(r)) for i in range(r)]

    num0 = matvec(m)
    ws = [matvec([A[i][j] for i in range(r)]) for j in free]
    cs = [ya[j] for j in free]

    def leaf(num, yrem):
        if not free:
            return int(all(x >= 0 and x % absD == 0 for x in num))
        w, c = ws[-1], cs[-1]
        lo, hi = 0, math.floor(yrem / c)
        prog = (0, 1)
        for Ni, Wi in zip(num, w):
            if Wi > 0:
                hi = min(hi, Ni // Wi)
            elif Wi < 0:
                lo = max(lo, -(Ni // -Wi))
            elif Ni < 0:
                return 0
            if absD > 1 and prog is not None:
                p = _progression(Wi % absD, Ni % absD, absD)
                prog = None if p is None else _merge(prog, p)
        if prog is None:
            return 0
        return _count_in(lo, hi, *prog)

    def dfs(depth, num, yrem):
        if depth >= len(free) - 1:
            return leaf(num, yrem)
        w, c = ws[depth], cs[depth]
        total = 0
        t = 0
        while yrem >= 0:
            total += dfs(depth + 1, num, yrem)
            num = [a - b for a, b in zip(num, w)]
            yrem -= c
            t += 1
        return total

    return dfs(0, num0, ym)


def denumerant_dp(a_list: Sequence[int], N: int) -> list[int]:
    """p_A(n) for n = 0..N by the coin-change recurrence; all parts positive."""
    if any(a <= 0 for a in a_list):
        raise InvalidRepresentation("parts must be positive")
    table = [1] + [0] * N
    for a in a_list:
        for n in range(a, N + 1):
            table[n] += table[n - a]
    return table


def denumerant(a_list: Sequence[int], n: int) -> int:
    return denumerant_dp(a_list, n)[n] if n >= 0 else 0


# ---------------------------------------------------------------------------
# quasi-polynomial fitting
# ---------------------------------------------------------------------------

@dataclass
class FitConfig:
    max_period: int = 12
    max_degree: int = 6
    n_min: Optional[int] = None
    holdout_fraction: float = 0.25


@dataclass
class QPFitResult:
    validated: bool
    fitted: Optional[QuasiPoly] = None
    period: Optional[int] = None
    degree: Optional[int] = None
    constituents: list[tuple[Fraction, ...]] = field(default_factory=list)
    n_min: int = 0
    validity_start: Optional[int] = None
    trained_range: tuple[int, int] = (0, -1)
    holdout_range: tuple[int, int] = (0, -1)
    message: str = ""

    def to_json(self) -> dict:
        return {
            "validated": self.validated,
            "fitted": self.fitted.to_json() if self.fitted else None,
            "period": self.period,
            "degree": self.degree,
            "constituents": [[_frac_str(c) for c in p] for p in self.constituents],
            "n_min": self.n_min,
            "validity_start": self.validity_start,
            "trained_range": list(self.trained_range),
            "holdout_range": list(self.holdout_range),
            "message": self.message,
        }


def _frac_str(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _try_fit(train, hold, T, d):
    if len({n % T for n, _ in hold}) < T:
        return None  # every residue class must be checked on held-out data
    cons = []
    for i in range(T):
        tr = [(n, v) for n, v in train if n % T == i]
        ho = [(n, v) for n, v in hold if n % T == i]
        if len(tr) < d + 1:
            return None
        base = tr[: d + 1]
        c = interpolate([n // T for n, _ in base], [v for _, v in base])
        if any(poly_eval(c, n // T) != v for n, v in tr[d + 1:] + ho):
            return None
        cons.append(c)
    return cons


def _fit_from(samples, ns, max_period, max_degree, holdout_fraction) -> QPFitResult:
    n_hold = max(1, math.ceil(len(ns) * holdout_fraction))
    if n_hold >= len(ns):
        return QPFitResult(False, n_min=ns[0], message="too few samples for a holdout")
    train = [(n, samples[n]) for n in ns[:-n_hold]]
    hold = [(n, samples[n]) for n in ns[-n_hold:]]
    result = QPFitResult(False, n_min=ns[0], trained_range=(train[0][0], train[-1][0]),
                         holdout_range=(hold[0][0], hold[-1][0]))
    for T in range(1, max_period + 1):
        for d in range(max_degree + 1):
            cons = _try_fit(train, hold, T, d)
            if cons is None:
                continue
            try:
                fitted = QuasiPoly.from_rational(T, cons)
            except InvalidRepresentation:
                continue
            result.validated = True
            result.fitted = fitted
            result.period = T
            result.degree = max((len(c) - 1 for c in cons), default=0)
            result.constituents = [tuple(Fraction(x) for x in c) for c in cons]
            return result
    result.message = f"no quasi-polynomial with period <= {max_period} and degree <= {max_degree} fits"
    return result


def fit_quasipolynomial(samples: Mapping[int, int], max_period: int = 12, max_degree: int = 6,
                        n_min: Optional[int] = None, holdout_fraction: float = 0.25) -> QPFitResult:
    """Smallest (period, degree) quasi-polynomial matching the training samples and all holdout samples.

    The top ``holdout_fraction`` of the sample range is never used for fitting,
    and it must hit every residue class of the candidate period.  Without
    ``n_min`` the start of the range is moved up (keeping at least half of the
    samples) until a fit validates, since the counts are only expected to be
    quasi-polynomial eventually.  Periods and degrees are reported in the
    rational-coefficient sense; ``fitted`` is the equivalent integer-coefficient
    QuasiPoly.
    """
    ns = sorted(n for n in samples if n_min is None or n >= n_min)
    if not ns:
        return QPFitResult(False, message="no samples")
    starts = range(1) if n_min is not None else range(len(ns) - (len(ns) + 1) // 2 + 1)
    first = None
    for k in starts:
        result = _fit_from(samples, ns[k:], max_period, max_degree, holdout_fraction)
        first = first or result
        if result.validated:
            start = ns[-1]
            for n in reversed(ns):
                if result.fitted(n) != samples[n]:
                    break
                start = n
            result.validity_start = start
            return result
    first.n_min = ns[0]
    return first


# ---------------------------------------------------------------------------
# conjecture probe
# ---------------------------------------------------------------------------

def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("DIOCOUNT_THREADS", "1")))
    except ValueError:
        return 1


def _count_at(args):
    n, A, m = args
    try:
        return n, count_solutions(A, m), None
    except InfiniteCount as exc:
        return n, None, str(exc)


def instantiate(A_param: Sequence[Sequence[QuasiPoly]], m_param: Sequence[QuasiPoly], n: int):
    return [[a(n) for a in row] for row in A_param], [b(n) for b in m_param]


def count_sweep(A_param, m_param, ns: Iterable[int], workers: Optional[int] = None):
    """[(n, count or None, error or None)] in n order; parallel when workers > 1."""
    jobs = [(n, *instantiate(A_param, m_param, n)) for n in ns]
    workers = worker_count() if workers is None else workers
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(_count_at, jobs))
    return [_count_at(j) for j in jobs]


@dataclass
class ProbeReport:
    counts: dict[int, int]
    failures: list[dict]
    fit: QPFitResult
    config: FitConfig

    @property
    def validated(self) -> bool:
        return self.fit.validated

    def to_json(self) -> dict:
        return {
            "counts": [{"n": n, "count": c} for n, c in sorted(self.counts.items())],
            "failures": self.failures,
            "fit": self.fit.to_json(),
            "validated": self.validated,
            "config": asdict(self.config),
        }


def conjecture_probe(A_param, m_param, n_range: Iterable[int], config: FitConfig | None = None,
                     workers: Optional[int] = None) -> ProbeReport:
    """Count t(m(n)|A(n)) over a range of n and fit a quasi-polynomial to the counts."""
    config = config or FitConfig()
    rows = count_sweep(A_param, m_param, n_range, workers)
    counts = {n: c for n, c, _ in rows if c is not None}
    failures = [{"n": n, "error": e} for n, c, e in rows if c is None]
    fit = fit_quasipolynomial(counts, config.max_period, config.max_degree, config.n_min,
                              config.holdout_fraction)
    return ProbeReport(counts, failures, fit, config)
