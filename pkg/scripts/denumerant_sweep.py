"""Closed-form denumerant against the oracle, with the recursion identity, over a set of coin tuples."""

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from diocount.dedekind import denumerant_closed_form, polynomial_part, verify_recursion
from diocount.oracle import denumerant_dp


@dataclass
class Config:
    tuples: list = field(default_factory=lambda: [[2, 3], [3, 4], [2, 5], [2, 3, 5], [3, 4, 5], [2, 3, 7],
                                                  [5, 7, 9]])
    n_max: int = 200
    recursion_n_max: int = 100


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--tuples", type=json.loads)
    p.add_argument("--n-max", type=int)
    args = p.parse_args()
    cfg = Config()
    if args.tuples:
        cfg.tuples = args.tuples
    if args.n_max is not None:
        cfg.n_max = args.n_max
    out = []
    for parts in cfg.tuples:
        t0 = time.perf_counter()
        table = denumerant_dp(parts, cfg.n_max)
        bad = [n for n in range(cfg.n_max + 1) if denumerant_closed_form(parts, n) != table[n]]
        rec = [n for n in range(cfg.recursion_n_max + 1) if len(parts) > 1 and not verify_recursion(parts, n)[0]]
        out.append({"parts": parts, "polynomial_part": [str(c) for c in polynomial_part(parts)],
                    "closed_form_mismatches": bad, "recursion_failures": rec,
                    "seconds": round(time.perf_counter() - t0, 3)})
    print(json.dumps({"config": asdict(cfg), "results": out}, indent=2))


if __name__ == "__main__":
    main()
