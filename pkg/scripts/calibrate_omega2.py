"""Compare candidate second-chamber numerators of the 2x3 closed form against the oracle.

Random pointed 2x3 matrices with coprime maximal minors are drawn, and every
lattice point of the closed second chamber inside a box is counted both ways.
"""

import argparse
import json
import random
from dataclasses import asdict, dataclass

from diocount.errors import DiocountError
from diocount.vpart import OMEGA2_NUMERATOR, TwoByThree, calibrate_omega2


@dataclass
class Config:
    matrices: int = 12
    entry_max: int = 9
    box: int = 40
    seed: int = 0


def draw_matrices(cfg: Config) -> list[list[list[int]]]:
    rng = random.Random(cfg.seed)
    out = []
    while len(out) < cfg.matrices:
        A = [[rng.randint(1, cfg.entry_max) for _ in range(3)] for _ in range(2)]
        try:
            TwoByThree.from_matrix(A)
        except DiocountError:
            continue
        out.append(A)
    return out


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    for name, default in asdict(Config()).items():
        p.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = Config(**vars(p.parse_args()))
    mats = draw_matrices(cfg)
    bad = calibrate_omega2(mats, cfg.box)
    print(json.dumps({"config": asdict(cfg), "matrices": mats, "mismatches": bad,
                      "selected": OMEGA2_NUMERATOR}, indent=2))


if __name__ == "__main__":
    main()
