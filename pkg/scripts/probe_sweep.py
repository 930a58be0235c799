"""Run the conjecture probe on a parametric system over growing n-ranges and
report where a quasi-polynomial fit first validates."""

import argparse
import json
from dataclasses import asdict, dataclass, field

from diocount.oracle import FitConfig, conjecture_probe
from diocount.qpoly import QuasiPoly


@dataclass
class Config:
    matrix: list = field(default_factory=lambda: [[[1, 2], [1, 3], [0, 0, 1]], [2, 3, [1, 1]]])
    rhs: list = field(default_factory=lambda: [[1, 0, 0, 3], [-1, 1, 3]])
    n_lo: int = 2
    n_hi: list = field(default_factory=lambda: [14, 20, 30, 40, 60])
    fit: FitConfig = field(default_factory=FitConfig)


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--matrix", type=json.loads)
    p.add_argument("--rhs", type=json.loads)
    p.add_argument("--n-lo", type=int)
    p.add_argument("--n-hi", type=int, nargs="+")
    p.add_argument("--max-period", type=int)
    p.add_argument("--max-degree", type=int)
    args = p.parse_args()
    cfg = Config()
    for key in ("matrix", "rhs", "n_lo", "n_hi"):
        if getattr(args, key) is not None:
            setattr(cfg, key, getattr(args, key))
    if args.max_period:
        cfg.fit.max_period = args.max_period
    if args.max_degree:
        cfg.fit.max_degree = args.max_degree
    A = [[QuasiPoly.from_json(x) for x in row] for row in cfg.matrix]
    m = [QuasiPoly.from_json(x) for x in cfg.rhs]
    rows = []
    for hi in cfg.n_hi:
        rep = conjecture_probe(A, m, range(cfg.n_lo, hi + 1), cfg.fit)
        f = rep.fit
        rows.append({"range": [cfg.n_lo, hi], "validated": f.validated, "period": f.period, "degree": f.degree,
                     "validity_start": f.validity_start, "fitted": f.fitted.to_json() if f.fitted else None,
                     "message": f.message})
    print(json.dumps({"config": asdict(cfg), "sweep": rows}, indent=2))


if __name__ == "__main__":
    main()
