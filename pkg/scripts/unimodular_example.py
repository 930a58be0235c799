"""Chamber complex and per-chamber counting polynomials of a unimodular matrix,
followed by the parametric count for a polynomial right-hand side."""

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from diocount.qpoly import QuasiPoly
from diocount.vpart import fit_chambers, t_param_unimodular


@dataclass
class Config:
    matrix: list = field(default_factory=lambda: [[1, 0, 0, 1, 1], [0, 1, 0, 1, 0], [0, 0, 1, 0, 1]])
    rhs: list = field(default_factory=lambda: [[0, -1, 2], [5, 0, 2], [0, 10, 1]])
    names: list = field(default_factory=lambda: ["a", "b", "c"])


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--matrix", type=json.loads, default=None)
    p.add_argument("--rhs", type=json.loads, default=None)
    args = p.parse_args()
    cfg = Config()
    if args.matrix is not None:
        cfg.matrix = args.matrix
        cfg.names = [f"u{i + 1}" for i in range(len(cfg.matrix))]
    if args.rhs is not None:
        cfg.rhs = args.rhs
    t0 = time.perf_counter()
    chambers = fit_chambers(cfg.matrix)
    t1 = time.perf_counter()
    res = t_param_unimodular(cfg.matrix, [QuasiPoly.from_json(q) for q in cfg.rhs])
    t2 = time.perf_counter()
    print(json.dumps({
        "config": asdict(cfg),
        "chambers": [c.to_json(cfg.names) for c in chambers],
        "parametric": res.to_json(),
        "seconds": {"chambers": round(t1 - t0, 3), "parametric": round(t2 - t1, 3)},
    }, indent=2))


if __name__ == "__main__":
    main()
