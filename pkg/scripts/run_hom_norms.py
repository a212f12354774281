"""Killing norms of su(2) -> su(N) for every partition of N, and the chain
identities for small cyclic groups.

    python scripts/run_hom_norms.py --nmax 10
"""
import argparse
import csv
from pathlib import Path

from equivym.homnorm import check_chain_identity, norm_spectrum_su2_to_sun, standard_modules


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--nmax", type=int, default=10)
    ap.add_argument("--out", default="results/homnorm")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    with open(out / "norms.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["N", "partition", "norm_squared", "norm"])
        for n in range(2, args.nmax + 1):
            spec = norm_spectrum_su2_to_sun(n)
            for parts, v in spec.items():
                w.writerow([n, "+".join(map(str, parts)), v.render(), f"{v.value:.12g}"])
            print(f"N={n}: {len(spec)} partitions, {len({v.squared for v in spec.values()})} distinct norms")

    for order in range(1, 9):
        oks = {name: check_chain_identity(m).ok for name, m in standard_modules(order).items()}
        print(f"Z/{order}: " + "  ".join(f"{k} {'ok' if v else 'FAIL'}" for k, v in oks.items()))


if __name__ == "__main__":
    main()
