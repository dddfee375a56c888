#!/usr/bin/env python3
"""Print every worked example, or write them to a directory as text and JSON.

    python scripts/reproduce_examples.py [--out results/examples]
"""

import argparse
import json
from pathlib import Path

from symhooks.worked_examples import EXAMPLE_IDS, render_text, run_example, to_json


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()
    for eid in EXAMPLE_IDS:
        items = run_example(eid)
        if args.out:
            args.out.mkdir(parents=True, exist_ok=True)
            (args.out / f"example_{eid}.txt").write_text(render_text(items))
            (args.out / f"example_{eid}.json").write_text(json.dumps(to_json(items), indent=2) + "\n")
        else:
            print(f"== example {eid}")
            print(render_text(items))


if __name__ == "__main__":
    main()
