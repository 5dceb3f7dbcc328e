"""Run the freeness certificate for k = 0..k_max and report timing per level.

Writes one JSON report per k into --out-dir when given.
"""
import argparse
import logging
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Optional, Tuple

from deltak.freeness import certify_free

log = logging.getLogger("certify_sweep")


@dataclass
class SweepConfig:
    # k -> (s_max, d_max); defaults are the desk-scale ranges
    ranges: Dict[int, Tuple[int, int]] = field(default_factory=lambda: {0: (4, 17), 1: (3, 14), 2: (3, 12), 3: (3, 16)})
    out_dir: Optional[Path] = None


def sweep(cfg: SweepConfig) -> bool:
    ok = True
    for k, (s_max, d_max) in sorted(cfg.ranges.items()):
        t0 = time.perf_counter()
        report = certify_free(k, s_max, d_max)
        elapsed = time.perf_counter() - t0
        gens = sum(c.g for c in report.cells)
        status = "PASS" if report.passed else "FAIL"
        print(f"{status} k={k} s<={s_max} d<={d_max}: {len(report.cells)} cells, {gens} generators, {elapsed:.2f}s")
        if not report.passed:
            bad = report.first_failure()
            print(f"  first failing cell (s,d)=({bad.s},{bad.d}) dim={bad.dim} f={bad.f}")
            ok = False
        if cfg.out_dir is not None:
            cfg.out_dir.mkdir(parents=True, exist_ok=True)
            path = cfg.out_dir / f"certify_k{k}.json"
            path.write_text(report.to_json())
            log.info("wrote %s", path)
    return ok


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--k-max", type=int, default=3)
    p.add_argument("--s-max", type=int, help="override s_max for every k")
    p.add_argument("--d-max", type=int, help="override d_max for every k")
    p.add_argument("--out-dir", type=Path)
    a = p.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    cfg = SweepConfig(out_dir=a.out_dir)
    cfg.ranges = {
        k: (a.s_max or cfg.ranges.get(k, (3, 12))[0], a.d_max or cfg.ranges.get(k, (3, 12))[1])
        for k in range(a.k_max + 1)
    }
    raise SystemExit(0 if sweep(cfg) else 1)
