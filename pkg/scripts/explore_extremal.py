"""Tabulate exhaustive maxima against the closed forms and list who attains them.

For each n and each c (or k), print max N_s over the relevant class, the
formula value, and how many non-isomorphic graphs attain it. With --show,
the extremal graphs are printed as graph6.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from cyclecliques.cliques import g_formula, h_formula
from cyclecliques.graph6 import emit_graph6
from cyclecliques.verify import connected_records


@dataclass
class ExploreConfig:
    n_min: int = 5
    n_max: int = 8
    s: int = 3
    family: str = "circumference"  # or "short-edge"
    show: bool = False


def explore(cfg: ExploreConfig) -> None:
    print(f"{'n':>3} {'c/k':>4} {'max':>6} {'formula':>8} {'#extremal':>10}")
    for n in range(cfg.n_min, cfg.n_max + 1):
        records = connected_records(n)
        for param in range(4, n):
            if cfg.family == "circumference":
                pool = [r for r in records if r.circumference <= param]
                bound = h_formula(n, param, cfg.s)
            else:
                pool = [r for r in records if r.two_connected and r.short_edges(param)]
                bound = g_formula(n, param, cfg.s)
            if not pool or cfg.s > param:
                continue
            best = max(r.n_s(cfg.s) for r in pool)
            winners = [r for r in pool if r.n_s(cfg.s) == best]
            flag = "" if best == bound else "  <-- differs"
            print(f"{n:>3} {param:>4} {best:>6} {bound:>8} {len(winners):>10}{flag}")
            if cfg.show:
                for r in winners:
                    print(f"{'':>10}{emit_graph6(r.graph)}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-min", type=int, default=5)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--s", type=int, default=3)
    p.add_argument("--family", choices=["circumference", "short-edge"], default="circumference")
    p.add_argument("--show", action="store_true")
    a = p.parse_args()
    explore(ExploreConfig(a.n_min, a.n_max, a.s, a.family, a.show))


if __name__ == "__main__":
    main()
