"""String-method saddle estimates between the flux-0 sector and sectors 1..K.

    python scripts/run_saddle.py --kmax 3 --iterations 300
"""
import argparse
import json
import time
from pathlib import Path

from equivym.ymh import StringConfig, saddle_search
from equivym.ymh.io import write_history


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--kmax", type=int, default=3)
    ap.add_argument("--nt", type=int, default=32)
    ap.add_argument("--nph", type=int, default=64)
    ap.add_argument("--images", type=int, default=16)
    ap.add_argument("--iterations", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="results/saddle")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    cfg = StringConfig(nt=args.nt, nph=args.nph, images=args.images, iterations=args.iterations, seed=args.seed)

    reports = {}
    for k in range(1, args.kmax + 1):
        t0 = time.perf_counter()
        r = saddle_search(0, k, config=cfg)
        write_history(r.history, out / f"history_0_{k}.csv")
        reports[f"0,{k}"] = r.to_dict()
        print(f"(0,{k}) estimate {r.estimate:.6f}  top image {r.top_image}  |grad| {r.grad_norm:.3e}"
              f"  collapsed {r.collapsed}  {time.perf_counter() - t0:.0f} s")
    (out / "saddles.json").write_text(json.dumps(reports, indent=1))


if __name__ == "__main__":
    main()
