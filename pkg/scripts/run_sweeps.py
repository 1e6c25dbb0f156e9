"""Run the sweep manifest and write one JSON report per line.

    python scripts/run_sweeps.py                      # bundled manifest
    python scripts/run_sweeps.py --manifest my.json --out reports.jsonl --only theorem3
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from dataclasses import dataclass

from cyclecliques.sweeps import load_manifest, run_manifest


@dataclass
class SweepConfig:
    manifest: str | None = None
    out: str = "sweep_reports.jsonl"
    jobs: int = 1
    only: tuple[str, ...] = ()


def run(cfg: SweepConfig) -> int:
    manifest = load_manifest(cfg.manifest)
    if cfg.only:
        manifest = {**manifest, "sweeps": [s for s in manifest["sweeps"] if s["check"] in cfg.only]}
    verdicts: Counter = Counter()
    with open(cfg.out, "w") as fh:
        for report in run_manifest(manifest, jobs=cfg.jobs):
            fh.write(json.dumps(report.payload(), sort_keys=True) + "\n")
            verdicts[(report.theorem, report.verdict)] += 1
            if report.verdict == "fail":
                print(report.summary(), file=sys.stderr)
    for (check, verdict), count in sorted(verdicts.items()):
        print(f"{check:12s} {verdict:8s} {count}")
    return 1 if any(v == "fail" for _, v in verdicts) else 0


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--manifest")
    p.add_argument("--out", default=SweepConfig.out)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--only", nargs="*", default=[])
    a = p.parse_args()
    sys.exit(run(SweepConfig(a.manifest, a.out, a.jobs, tuple(a.only))))


if __name__ == "__main__":
    main()
