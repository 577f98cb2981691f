"""Tabulate the exact dimension of the canonical interval order I[n]."""

import time
from dataclasses import dataclass

from _config import parse_config
from intorder.dimension import exact_dimension
from intorder.instances import canonical_interval_order


@dataclass
class Config:
    max_n: int = 6
    max_size: int = 21


def main(cfg: Config):
    print(f"{'n':>3} {'|I[n]|':>7} {'dim':>4} {'nodes':>8} {'seconds':>8}")
    for n in range(1, cfg.max_n + 1):
        P, _ = canonical_interval_order(n)
        start = time.perf_counter()
        res = exact_dimension(P, max_size=cfg.max_size)
        print(f"{n:>3} {len(P):>7} {res.dimension:>4} {res.nodes_explored:>8} {time.perf_counter() - start:>8.3f}")


if __name__ == "__main__":
    main(parse_config(Config, __doc__))
