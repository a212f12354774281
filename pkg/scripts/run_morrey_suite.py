"""Morrey-norm checks: bounded ratios for invariant functions, Hoelder
products over random draws, and translation seminorms under refinement.

    python scripts/run_morrey_suite.py
"""
import argparse
import json
from pathlib import Path

import numpy as np

from equivym.morrey import (
    GridFunction,
    MorreyParams,
    axis_shifts,
    check_invariance_bound,
    check_product,
    translation_seminorm,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--draws", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="results/morrey")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    res = {}

    for n, d in [(2, 1), (3, 2), (2, 2)]:
        rep = check_invariance_bound(d, n, (32, 64, 128))
        res[f"invariance_n{n}_d{d}"] = rep.to_dict()
        print(f"n={n} d={d}: bounded {rep.bounded}  generic grows {rep.generic_grows}  max {rep.observed_max:.4f}")

    rng = np.random.default_rng(args.seed)
    gaps = []
    for _ in range(args.draws):
        p, q = rng.uniform(2, 8, size=2)
        r = 1 / (1 / p + 1 / q)
        f = GridFunction((32, 32), rng.normal(size=(32, 32)))
        g = GridFunction((32, 32), rng.normal(size=(32, 32)))
        rep = check_product(f, g, p, q, r, MorreyParams(r, 1.0))
        gaps.append(rep.lhs / rep.rhs)
    res["holder"] = {"draws": args.draws, "max_ratio": max(gaps), "all_hold": max(gaps) <= 1 + 1e-12}
    print(f"Hoelder: max lhs/rhs over {args.draws} draws = {max(gaps):.4f}")

    semi = {}
    for m in (16, 32, 64, 128):
        f = GridFunction.sample(lambda x, y: np.sin(2 * np.pi * x), (m, m))
        semi[m] = translation_seminorm(f, 2, 1, 0.5, axis_shifts(2, [1 / m, 2 / m, 4 / m]))
    res["seminorm_sin"] = semi
    print("seminorm of sin(2 pi x) by resolution:", {k: round(v, 4) for k, v in semi.items()})
    (out / "morrey.json").write_text(json.dumps(res, indent=1))


if __name__ == "__main__":
    main()
