"""Index/nullity table for the reducible labels plus the Chern-number sweep.

    python scripts/run_index_table.py --out results/index
"""
import argparse
import csv
import json
from pathlib import Path

from equivym.equivlifts import parse_label
from equivym.hessian import certify_corollary2, index_nullity, normal_spectrum

LABELS = ["tau:0,2", "tau:2,0", "tau:1,2", "tau:2,1", "tau:3,4", "tau:2,2", "tau:3,1", "tau:0,0", "omega"]


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--out", default="results/index")
    ap.add_argument("--dmax", type=int, default=200)
    ap.add_argument("--cutoff", type=int, default=40, help="spectrum window written per label")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    with open(out / "index_table.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["label", "index", "nullity"])
        for s in LABELS:
            r = index_nullity(parse_label(s))
            w.writerow([s, r.index, r.nullity])
            print(f"{s:10s} index {r.index}  nullity {r.nullity}")

    with open(out / "normal_spectra.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["label", "eigenvalue", "multiplicity", "stage"])
        for s in LABELS:
            for e, m in normal_spectrum(parse_label(s), args.cutoff).lines.items():
                w.writerow([s, e, m, "normal"])

    certs = {d: certify_corollary2(d).to_dict() for d in range(-args.dmax, args.dmax + 1, 2)}
    (out / "certificates.json").write_text(json.dumps(certs, indent=1, default=str))
    refused = [d for d, c in certs.items() if not c["certified"]]
    print(f"certified {len(certs) - len(refused)} of {len(certs)} even Chern numbers; refused at {refused}")


if __name__ == "__main__":
    main()
