"""Run each realizer builder over seeded random representations and report
failure counts, the largest realizer seen, and wall time."""

import time
from dataclasses import dataclass
from fractions import Fraction

from _config import parse_config
from intorder.builders import realizer_multi_length, realizer_unit_oc, realizer_zero_one
from intorder.instances import random_representation
from intorder.intervals import poset_from_representation
from intorder.poset import verify_realizer


@dataclass
class Config:
    trials: int = 1000
    max_n: int = 40
    seed: int = 0


FAMILIES = [
    ("unit OC", realizer_unit_oc, [1], "oc"),
    ("unit mixed", realizer_unit_oc, [1], "mixed"),
    ("lengths {0,1}", realizer_zero_one, [0, 1], "all_closed"),
    ("lengths {0,7/3}", realizer_zero_one, [0, Fraction(7, 3)], "all_closed"),
    ("lengths {1,2}", realizer_multi_length, [1, 2], "all_closed"),
    ("lengths {0,1,2}", realizer_multi_length, [0, 1, 2], "all_closed"),
]


def main(cfg: Config):
    print(f"{'family':<18} {'trials':>6} {'failures':>8} {'max |R|':>7} {'seconds':>8}")
    for fam, (label, builder, lengths, policy) in enumerate(FAMILIES):
        start = time.perf_counter()
        failures = worst = 0
        for k in range(cfg.trials):
            rep = random_representation(
                1 + k % cfg.max_n, lengths, policy, grid=1 + k % 4, seed=cfg.seed * 100 + fam, index=k
            )
            P = poset_from_representation(rep)
            R = builder(P, rep)
            worst = max(worst, len(R))
            failures += not verify_realizer(P, R)[0]
        print(f"{label:<18} {cfg.trials:>6} {failures:>8} {worst:>7} {time.perf_counter() - start:>8.2f}")


if __name__ == "__main__":
    main(parse_config(Config, __doc__))
