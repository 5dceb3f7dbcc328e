"""Print dim Delta(k) and minimal generator counts side by side for several k.

    python scripts/tabulate_delta.py --k-max 3 --s-max 3 --d-max 16
"""
import argparse
from dataclasses import dataclass

from deltak.delta0 import eta
from deltak.freeness import minimal_generators


@dataclass
class TabulateConfig:
    k_max: int = 3
    s_max: int = 3
    d_max: int = 16


def table(title, s_max, d_max, value):
    print(title)
    print("s\\d " + " ".join(f"{d:>4}" for d in range(d_max + 1)))
    for s in range(1, s_max + 1):
        print(f"{s:>3} " + " ".join(f"{value(s, d):>4}" for d in range(d_max + 1)))
    print()


def run(cfg: TabulateConfig):
    for k in range(cfg.k_max + 1):
        gens = minimal_generators(k, cfg.s_max, cfg.d_max)
        dims, counts = gens.dims(), gens.counts()
        table(f"dim Delta({k})", cfg.s_max, cfg.d_max, lambda s, d: dims[s, d])
        table(f"minimal generators of Delta({k})", cfg.s_max, cfg.d_max, lambda s, d: counts[s, d])
        if k == 0:
            off = [(s, d) for s in range(1, cfg.s_max + 1) for d in range(cfg.d_max + 1) if counts[s, d] != eta(s, d)]
            print("generator counts equal eta everywhere" if not off else f"counts differ from eta at {off}")
            print()


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--k-max", type=int, default=3)
    p.add_argument("--s-max", type=int, default=3)
    p.add_argument("--d-max", type=int, default=16)
    a = p.parse_args()
    run(TabulateConfig(a.k_max, a.s_max, a.d_max))
