#!/usr/bin/env python3
"""Run the standard verification sweeps and write a JSON summary.

    python scripts/run_sweeps.py [--jobs 4] [--out results/sweeps.json]
"""

import argparse
import dataclasses
import json
import sys
import time
from pathlib import Path

from symhooks.verify import STANDARD_SWEEPS


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", type=Path, default=Path("results/sweeps.json"))
    args = ap.parse_args()

    summary = []
    for cfg in STANDARD_SWEEPS:
        cfg = dataclasses.replace(cfg, jobs=args.jobs)
        t0 = time.perf_counter()
        reports = cfg.run()
        elapsed = time.perf_counter() - t0
        failed = [r.to_json() for r in reports if not r.passed]
        print(f"{cfg.suite:8s} {len(reports):6d} instances  {len(failed)} failed  {elapsed:6.1f} s")
        summary.append({"config": dataclasses.asdict(cfg), "instances": len(reports),
                        "failed": failed, "seconds": round(elapsed, 2)})

    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(summary, indent=1) + "\n")
    return 1 if any(s["failed"] for s in summary) else 0


if __name__ == "__main__":
    sys.exit(main())
