"""Command-line front end: one subcommand per library operation, JSON in and out.

Exit codes: 0 success, 1 malformed input, 2 domain error (JSON error object on
stdout), 64 unknown subcommand.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional, Sequence

from . import dedekind, gdiv, oracle, vpart
from .errors import DiocountError, InvalidRepresentation
from .qpoly import QuasiPoly

EXIT_OK, EXIT_MALFORMED, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2, 64


class MalformedInput(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise MalformedInput(f"{self.prog}: {message}")


def _fs(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _load(text: str):
    """Inline JSON, or @path to a JSON file."""
    try:
        if text.startswith("@"):
            return json.loads(Path(text[1:]).read_text())
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInput(f"cannot parse JSON argument {text!r}: {exc}") from exc


def _qp(obj) -> QuasiPoly:
    return QuasiPoly.from_json(obj)


def _qp_list(obj) -> list[QuasiPoly]:
    if not isinstance(obj, list):
        raise MalformedInput("expected a JSON list of quasi-polynomials")
    return [_qp(x) for x in obj]


def _int_list(obj) -> list[int]:
    if not isinstance(obj, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in obj):
        raise MalformedInput("expected a JSON list of integers")
    return obj


def _int_matrix(obj) -> list[list[int]]:
    if not isinstance(obj, list) or not obj:
        raise MalformedInput("expected a row-major JSON matrix")
    return [_int_list(row) for row in obj]


def _is_constant_matrix(obj) -> bool:
    return isinstance(obj, list) and all(
        isinstance(row, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in row) for row in obj)


def _param_matrix(obj) -> list[list[QuasiPoly]]:
    if not isinstance(obj, list) or not obj or not all(isinstance(r, list) for r in obj):
        raise MalformedInput("expected a row-major JSON matrix")
    return [[_qp(x) for x in row] for row in obj]


def _n_range(text: str) -> range:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError as exc:
        raise MalformedInput(f"n-range must look like LO:HI, got {text!r}") from exc
    if hi < lo:
        raise MalformedInput("n-range is empty")
    return range(lo, hi + 1)


def _rows_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "value"])
    for n, v in rows:
        w.writerow([n, "" if v is None else _fs(v)])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# subcommands: each returns a JSON-able object, or a list of (n, value) rows for sweeps
# ---------------------------------------------------------------------------

class Sweep(list):
    """Per-n rows (n, value); rendered as CSV on request."""

    def __init__(self, rows, payload):
        super().__init__(rows)
        self.payload = payload


def cmd_divide(a):
    f, g = _qp(_load(a.f)), _qp(_load(a.g))
    if a.method == "fit":
        return gdiv.div_zx_by_fit(f, g).to_json()
    if f.period == 1 and g.period == 1:
        return gdiv.div_zx(f, g).to_json()
    return gdiv.div_r(f, g).to_json()


def cmd_ggcd(a):
    cert = gdiv.ggcd_bezout(_qp_list(_load(a.inputs)))
    out = cert.to_json()
    out["threshold"] = cert.threshold
    out["bezout_holds"] = cert.check()
    return out


def cmd_strongly_coprime(a):
    return gdiv.strongly_coprime(_qp_list(_load(a.inputs))).to_json()


def cmd_dedekind(a):
    parts = _int_list(_load(a.parts))
    fn = dedekind.fd_sum_trace if a.route == "trace" else dedekind.fd_sum
    if a.n is not None:
        return {"parts": parts, "modulus": a.modulus, "n": a.n, "value": _fs(fn(parts, a.modulus, a.n))}
    rows = [(n, fn(parts, a.modulus, n)) for n in _n_range(a.n_range)]
    return Sweep(rows, {"parts": parts, "modulus": a.modulus,
                        "values": [{"n": n, "value": _fs(v)} for n, v in rows]})


def cmd_denumerant(a):
    parts = _int_list(_load(a.parts))
    ns = range(a.n, a.n + 1) if a.n is not None else _n_range(a.n_range)
    fn = dedekind.denumerant_closed_form if a.closed_form else oracle.denumerant
    rows = [(n, fn(parts, n)) for n in ns]
    payload = {"parts": parts, "method": "closed-form" if a.closed_form else "dp",
               "values": [{"n": n, "value": v} for n, v in rows]}
    if a.closed_form:
        payload["polynomial_part"] = [_fs(c) for c in dedekind.polynomial_part(parts)]
    return Sweep(rows, payload)


def cmd_chambers(a):
    A = _int_matrix(_load(a.matrix))
    chambers = vpart.chamber_complex(A)
    unimodular = vpart.unimodularity_check(A)
    if unimodular and not a.no_fit:
        chambers = vpart.fit_chambers(A, chambers)
    return {"unimodular": unimodular, "finite": True, "chambers": [c.to_json() for c in chambers]}


def cmd_count_unimodular(a):
    A = _int_matrix(_load(a.matrix))
    m = _qp_list(_load(a.rhs))
    return vpart.t_param_unimodular(A, m).to_json()


def cmd_count_2x3(a):
    A_obj, m_obj = _load(a.matrix), _load(a.rhs)
    if _is_constant_matrix(A_obj) and all(isinstance(x, int) for x in _as_list(m_obj)):
        M = vpart.TwoByThree.from_matrix(_int_matrix(A_obj))
        return {"count": vpart.popoviciu_2x3(M, _int_list(m_obj)), "region": M.region(m_obj),
                "matrix": M.to_json()}
    A, m = _param_matrix(A_obj), _qp_list(m_obj)
    if a.n is not None:
        An = [[q(a.n) for q in row] for row in A]
        mn = [q(a.n) for q in m]
        return {"n": a.n, "count": vpart.count_2x3(An, mn)}
    return vpart.t_param_2x3(A, m).to_json()


def _as_list(obj):
    if not isinstance(obj, list):
        raise MalformedInput("expected a JSON list")
    return obj


def cmd_count(a):
    A_obj, m_obj = _load(a.matrix), _load(a.rhs)
    if a.n_range is None:
        return {"count": oracle.count_solutions(_int_matrix(A_obj), _int_list(m_obj))}
    rows = oracle.count_sweep(_param_matrix(A_obj), _qp_list(m_obj), _n_range(a.n_range))
    return Sweep([(n, c) for n, c, _ in rows],
                 {"values": [{"n": n, "count": c, "error": e} for n, c, e in rows]})


def cmd_probe(a):
    cfg = oracle.FitConfig(max_period=a.max_period, max_degree=a.max_degree, n_min=a.n_min)
    rep = oracle.conjecture_probe(_param_matrix(_load(a.matrix)), _qp_list(_load(a.rhs)),
                                  _n_range(a.n_range), cfg)
    return Sweep(sorted(rep.counts.items()), rep.to_json())


def _build() -> dict[str, tuple[_Parser, Callable]]:
    table = {}

    def sub(name, fn, help_):
        p = _Parser(prog=f"diocount {name}", description=help_)
        p.add_argument("--format", choices=["json", "csv"], default="json")
        table[name] = (p, fn)
        return p

    p = sub("divide", cmd_divide, "generalized Euclidean division f = P*g + r")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--method", choices=["symbolic", "fit"], default="symbolic")

    p = sub("ggcd", cmd_ggcd, "gcd with Bezout cofactors in the quasi-polynomial ring")
    p.add_argument("--inputs", required=True)

    p = sub("strongly-coprime", cmd_strongly_coprime, "remainder-tree coprimality test")
    p.add_argument("--inputs", required=True)

    p = sub("dedekind", cmd_dedekind, "Fourier-Dedekind sum s_{-n}(parts; modulus)")
    p.add_argument("--parts", required=True)
    p.add_argument("--modulus", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--n-range")
    p.add_argument("--route", choices=["galois", "trace"], default="galois")

    p = sub("denumerant", cmd_denumerant, "number of representations of n by the parts")
    p.add_argument("--parts", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--n-range")
    p.add_argument("--closed-form", action="store_true")

    p = sub("chambers", cmd_chambers, "chamber complex with fitted polynomials for unimodular input")
    p.add_argument("--matrix", required=True)
    p.add_argument("--no-fit", action="store_true")

    p = sub("count-unimodular", cmd_count_unimodular, "t(m(n)|A) for unimodular A as a polynomial in n")
    p.add_argument("--matrix", required=True)
    p.add_argument("--rhs", required=True)

    p = sub("count-2x3", cmd_count_2x3, "closed-form count for 2x3 matrices with coprime minors")
    p.add_argument("--matrix", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--n", type=int)

    p = sub("count", cmd_count, "oracle count of nonnegative solutions of A x = m")
    p.add_argument("--matrix", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--n-range")

    p = sub("probe", cmd_probe, "count over an n-range and fit a quasi-polynomial")
    p.add_argument("--matrix", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--n-range", required=True)
    p.add_argument("--max-period", type=int, default=12)
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--n-min", type=int)
    return table


def usage(table) -> str:
    lines = ["usage: diocount <subcommand> [options]", "", "subcommands:"]
    for name, (p, _) in table.items():
        lines.append(f"  {name:<18} {p.description}")
    lines.append("")
    lines.append("run 'diocount <subcommand> --help' for options")
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    err = err or sys.stderr
    table = _build()
    if argv and argv[0] in ("-h", "--help"):
        print(usage(table), file=out)
        return EXIT_OK
    if not argv or argv[0] not in table:
        print(usage(table), file=err)
        return EXIT_USAGE
    parser, fn = table[argv[0]]
    try:
        args = parser.parse_args(argv[1:])
        result = fn(args)
        if args.format == "csv":
            if not isinstance(result, Sweep):
                raise MalformedInput("csv output is only available for per-n sweeps")
            out.write(_rows_csv(result))
        else:
            payload = result.payload if isinstance(result, Sweep) else result
            print(json.dumps(payload), file=out)
        return EXIT_OK
    except SystemExit as exc:  # --help inside a subcommand
        return EXIT_OK if not exc.code else EXIT_MALFORMED
    except (MalformedInput, InvalidRepresentation) as exc:
        print(json.dumps({"error": "malformed-input", "message": str(exc)}), file=err)
        return EXIT_MALFORMED
    except DiocountError as exc:
        print(json.dumps(exc.to_json()), file=out)
        return EXIT_DOMAIN
    except (TypeError, ValueError, KeyError) as exc:
        print(json.dumps({"error": "malformed-input", "message": str(exc)}), file=err)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
