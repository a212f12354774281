"""Command-line front end: ``equivym <command> [options]``.

Every command builds a report ``{"tool", "version", "command", "config",
"stage", "result", "rows"}``.  With ``--out FILE`` the report is written there
in the chosen ``--format`` and a plain table goes to stdout; without it the
report goes to stdout and the table to stderr.

Exit status: 0 success, 1 validated refusal or failed check, 2 invalid input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Optional

import numpy as np

from . import __version__

EXIT_OK, EXIT_REFUSED, EXIT_INVALID = 0, 1, 2


class InvalidInput(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    params: dict
    format: str = "json"
    out: Optional[str] = None
    seed: int = 0
    threads: int = 1


@dataclass
class Outcome:
    result: Any
    rows: list = field(default_factory=list)
    stage: str = ""
    status: int = EXIT_OK
    table: Optional[str] = None


# ---------------------------------------------------------------------------
# commands


def _label(text: str):
    from .equivlifts import parse_label
    try:
        return parse_label(text)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from exc


def cmd_lifts(a) -> Outcome:
    from .equivlifts import enumerate_lifts
    if a.wmax < 0:
        raise InvalidInput("--wmax must be nonnegative")
    lifts = enumerate_lifts(a.chern, a.wmax)
    rows = [{"w_plus": w.w_plus, "w_minus": w.w_minus, "chern": w.chern} for w in lifts]
    return Outcome({"count": len(rows)}, rows, "lifts")


def cmd_reducibles(a) -> Outcome:
    from .equivlifts import WeightPair, reducible_orbits
    try:
        w = WeightPair(a.wplus, a.wminus)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from exc
    orbits = [str(o) for o in reducible_orbits(w)]
    return Outcome({"weights": [a.wplus, a.wminus], "chern": w.chern, "orbits": orbits},
                   [{"orbit": o} for o in orbits], "reducibles")


def cmd_spectrum(a) -> Outcome:
    from .hessian import STAGES, spectrum
    if a.stage not in STAGES:
        raise InvalidInput(f"--stage must be one of {STAGES}")
    label = _label(a.label)
    if a.stage == "full" and not hasattr(label, "p"):
        raise InvalidInput("the full spectrum is defined for tau labels only")
    spec = spectrum(label, a.stage, a.cutoff, a.threads)
    rows = [{"label": str(label), "eigenvalue": e, "multiplicity": m, "stage": a.stage}
            for e, m in spec.lines.items()]
    return Outcome({"label": str(label), "cutoff": a.cutoff, "lines": len(rows), "total": spec.total()},
                   rows, a.stage)


def cmd_index(a) -> Outcome:
    from .hessian import index_nullity
    label = _label(a.label)
    res = index_nullity(label, a.threads)
    row = {"label": str(label), "index": res.index, "nullity": res.nullity}
    return Outcome(row, [row], "normal", table=f"{label}: index {res.index}, nullity {res.nullity}")


def cmd_certify(a) -> Outcome:
    from .hessian import certify_corollary2
    if a.chern % 2:
        raise InvalidInput("second Chern number must be even")
    cert = certify_corollary2(a.chern)
    rows = [{"chern": a.chern, "certified": cert.certified,
             "orbits": " ".join(str(o) for o in cert.orbits)}]
    return Outcome(cert.to_dict(), rows, "normal", EXIT_OK if cert.certified else EXIT_REFUSED,
                   table=("certified: " if cert.certified else "refused: ") + cert.statement)


def cmd_splittings(a) -> Outcome:
    from .equivlifts import SequenceSpec, splitting_count
    try:
        spec = SequenceSpec(a.kernel, a.quotient)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from exc
    n = splitting_count(spec)
    row = {"kernel": a.kernel, "quotient": a.quotient, "count": str(n)}
    return Outcome(row, [row], "splittings", table=str(n))


def cmd_morrey_norm(a) -> Outcome:
    from .morrey import MorreyParams, lp_norm, morrey_norm, read_grid, sup_terms
    try:
        f = read_grid(a.input)
        mp = MorreyParams(a.p, a.d, tuple(a.radii) if a.radii else None, a.stride)
    except (OSError, ValueError) as exc:
        raise InvalidInput(str(exc)) from exc
    sups = sup_terms(f, mp)
    res = {"dims": list(f.dims), "domain": f.domain, "p": a.p, "d": a.d,
           "lp_norm": lp_norm(f, a.p), "morrey_norm": morrey_norm(f, mp),
           "radii": list(mp.radii_for(f))}
    rows = [{"radius": r, "sup_term": s} for r, s in sups.items()]
    return Outcome(res, rows, "morrey")


def cmd_morrey_check(a) -> Outcome:
    from .morrey import GridFunction, MorreyParams, check_invariance_bound, check_product
    if a.which == "invariance":
        if a.dim_d != int(a.dim_d) or not 1 <= a.dim_d <= a.n <= 4:
            raise InvalidInput("need an integer d with 1 <= d <= n <= 4")
        rep = check_invariance_bound(int(a.dim_d), a.n, a.resolutions, a.p)
        rows = []
        for kind, fams in (("invariant", rep.invariant), ("generic", rep.generic)):
            for name, vals in fams.items():
                for m, v in zip(rep.resolutions, vals):
                    rows.append({"family": kind, "function": name, "resolution": m, "ratio": v})
        return Outcome(rep.to_dict(), rows, "morrey", EXIT_OK if rep.ok else EXIT_REFUSED)
    rng = np.random.default_rng(a.seed)
    rows, ok = [], True
    for i in range(a.draws):
        p = float(rng.uniform(2, 8))
        q = float(rng.uniform(2, 8))
        r = 1 / (1 / p + 1 / q)
        dims = (a.resolution,) * 2
        f = GridFunction(dims, rng.choice([-1.0, 1.0], size=dims) * rng.uniform(0.5, 2, size=dims))
        g = GridFunction(dims, rng.choice([-1.0, 1.0], size=dims) * rng.uniform(0.5, 2, size=dims))
        rep = check_product(f, g, p, q, r, MorreyParams(r, a.dim_d))
        ok &= rep.holds
        rows.append({"draw": i, **rep.to_dict()})
    return Outcome({"draws": a.draws, "all_hold": ok}, rows, "morrey", EXIT_OK if ok else EXIT_REFUSED)


def cmd_hom_norms(a) -> Outcome:
    from .homnorm import norm_spectrum_su2_to_sun
    if not 2 <= a.n <= 10:
        raise InvalidInput("--n must be between 2 and 10")
    spec = norm_spectrum_su2_to_sun(a.n)
    rows = [{"partition": "[" + ",".join(map(str, k)) + "]", "squared": v.render(), "norm": v.value}
            for k, v in spec.items()]
    values = sorted({v.squared for v in spec.values()})
    res = {"n": a.n, "norms": {r["partition"]: r["squared"] for r in rows},
           "distinct_values": [f"{v.numerator}/{v.denominator}" for v in values],
           "nontrivial": sum(1 for k in spec if max(k) >= 2)}
    return Outcome(res, rows, "hom-norms")


def cmd_chain(a) -> Outcome:
    from .homnorm import check_chain_identity, standard_modules
    if not 1 <= a.order <= 8:
        raise InvalidInput("--order must be between 1 and 8")
    rows, ok = [], True
    for name, mod in standard_modules(a.order).items():
        rep = check_chain_identity(mod)
        ok &= rep.ok
        rows.append({"module": name, "dim": rep.module_dim, "delta_squared_zero": rep.delta_squared_zero,
                     "homotopy_q1": rep.homotopy_identity[1], "homotopy_q2": rep.homotopy_identity[2],
                     "s1_delta1": rep.s1_delta1, "h0": rep.cohomology[0], "h1": rep.cohomology.get(1),
                     "h2": rep.cohomology.get(2)})
    return Outcome({"order": a.order, "all_hold": ok}, rows, "chain", EXIT_OK if ok else EXIT_REFUSED)


def cmd_ymh(a) -> Outcome:
    from .ymh import abelian_minimize, saddle_search
    from .ymh.io import write_history
    from .ymh.saddle import StringConfig
    if a.ymh_cmd == "minimize":
        if a.grid < 64:
            raise InvalidInput("--grid must be at least 64")
        rep = abelian_minimize(a.k, a.grid)
        if a.history:
            write_history(rep.history, a.history)
        rows = [{"iteration": i, "energy": e, "grad_norm": g} for i, e, g in rep.history]
        return Outcome(rep.to_dict(), rows, "ymh-minimize", EXIT_OK if rep.converged else EXIT_REFUSED,
                       table=f"k={a.k} energy {rep.energy:.3e} |h-k/2| {rep.extra['h_max_dev']:.3e} "
                             f"iterations {rep.iterations}")
    if a.images < 3:
        raise InvalidInput("--images must be at least 3")
    cfg = StringConfig(nt=a.nt, nph=a.nph, images=a.images, iterations=a.iterations, seed=a.seed)
    rep = saddle_search(a.k0, a.k1, config=cfg)
    if a.history:
        write_history(rep.history, a.history)
    rows = [{"image": i, "energy": e} for i, e in enumerate(rep.energies)]
    return Outcome(rep.to_dict(), rows, "ymh-saddle", EXIT_REFUSED if rep.collapsed else EXIT_OK,
                   table=f"({a.k0},{a.k1}) saddle estimate {rep.estimate:.6f} at image {rep.top_image}, "
                         f"gradient norm {rep.grad_norm:.3e}")


# ---------------------------------------------------------------------------
# parser and emission


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _common(p):
    p.add_argument("--format", choices=("json", "csv", "tsv"), default="json")
    p.add_argument("--out", default=None, help="write the structured report here")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads (default: EQUIVYM_THREADS or all cores)")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="equivym", description=__doc__.split("\n")[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("lifts", help="weight pairs with a given Chern number")
    p.add_argument("--chern", type=int, required=True)
    p.add_argument("--wmax", type=int, required=True)
    p.set_defaults(fn=cmd_lifts)

    p = sub.add_parser("reducibles", help="reducible orbits over a lift")
    p.add_argument("--wplus", type=int, required=True)
    p.add_argument("--wminus", type=int, required=True)
    p.set_defaults(fn=cmd_reducibles)

    p = sub.add_parser("spectrum", help="Hessian spectrum at a reducible connection")
    p.add_argument("--label", required=True)
    p.add_argument("--stage", default="normal")
    p.add_argument("--lambda", dest="cutoff", type=int, default=20)
    p.set_defaults(fn=cmd_spectrum)

    p = sub.add_parser("index", help="index and nullity on the normal bundle")
    p.add_argument("--label", required=True)
    p.set_defaults(fn=cmd_index)

    p = sub.add_parser("certify-cor2", help="certify a non-self-dual connection for a Chern number")
    p.add_argument("--chern", type=int, required=True)
    p.set_defaults(fn=cmd_certify)

    p = sub.add_parser("splittings", help="conjugacy classes of splittings of a product sequence")
    p.add_argument("--kernel", required=True)
    p.add_argument("--quotient", required=True)
    p.set_defaults(fn=cmd_splittings)

    p = sub.add_parser("morrey-norm", help="Morrey norm of a sampled function")
    p.add_argument("--input", required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--radii", type=float, nargs="*")
    p.add_argument("--stride", type=int, default=1)
    p.set_defaults(fn=cmd_morrey_norm)

    p = sub.add_parser("morrey-check", help="grid-level checks of Morrey norm bounds")
    p.add_argument("which", choices=("invariance", "product"))
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--d", dest="dim_d", type=float, default=1)
    p.add_argument("--p", type=float, default=2.0)
    p.add_argument("--resolutions", type=int, nargs="+", default=[32, 64, 128])
    p.add_argument("--resolution", type=int, default=32)
    p.add_argument("--draws", type=int, default=200)
    p.set_defaults(fn=cmd_morrey_check)

    p = sub.add_parser("hom-norms", help="norms of su(2) -> su(N) by partition")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_hom_norms)

    p = sub.add_parser("chain-check", help="cochain homotopy identities for Z/m")
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(fn=cmd_chain)

    p = sub.add_parser("ymh", help="Yang-Mills-Higgs numerics on S^2")
    ysub = p.add_subparsers(dest="ymh_cmd", required=True, parser_class=_Parser)
    m = ysub.add_parser("minimize", help="abelian gradient flow in sector k")
    m.add_argument("--k", type=int, required=True)
    m.add_argument("--grid", type=int, default=256)
    m.add_argument("--history", default=None, help="CSV energy history")
    _common(m)
    s = ysub.add_parser("saddle", help="string-method saddle search between sectors")
    s.add_argument("--from", dest="k0", type=int, required=True)
    s.add_argument("--to", dest="k1", type=int, required=True)
    s.add_argument("--images", type=int, default=16)
    s.add_argument("--nt", type=int, default=32)
    s.add_argument("--nph", type=int, default=64)
    s.add_argument("--iterations", type=int, default=300)
    s.add_argument("--history", default=None, help="CSV energy history")
    _common(s)
    p.set_defaults(fn=cmd_ymh)

    for name, sp in sub.choices.items():
        if name != "ymh":
            _common(sp)
    return ap


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating,)):
        return float(x)
    if isinstance(x, np.bool_):
        return bool(x)
    if isinstance(x, float) and not np.isfinite(x):
        return str(x)
    return x


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_jsonable(report), indent=2, sort_keys=True) + "\n"
    rows = report.get("rows")
    if not rows:
        rows = [report["result"]] if isinstance(report["result"], dict) else []
    rows = [_jsonable(r) for r in rows]
    cols = []
    for r in rows:
        cols += [k for k in r if k not in cols]
    buf = io.StringIO()
    w = csv.writer(buf, delimiter="," if fmt == "csv" else "\t", lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        w.writerow([json.dumps(r.get(c)) if isinstance(r.get(c), (list, dict)) else r.get(c) for c in cols])
    return buf.getvalue()


def table(rows: list) -> str:
    if not rows:
        return "(no rows)"
    rows = [_jsonable(r) for r in rows]
    cols = []
    for r in rows:
        cols += [k for k in r if k not in cols]
    cells = [[str(c) for c in cols]] + [[str(r.get(c, "")) for c in cols] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(cols))]
    return "\n".join("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_INVALID
    threads = args.threads or int(os.environ.get("EQUIVYM_THREADS", 0) or 0) or (os.cpu_count() or 1)
    if threads < 1:
        print("equivym: --threads must be positive", file=sys.stderr)
        return EXIT_INVALID
    args.threads = threads
    os.environ["EQUIVYM_THREADS"] = str(threads)
    skip = {"fn", "format", "out", "seed", "threads", "command"}
    params = {k: v for k, v in sorted(vars(args).items()) if k not in skip}
    command = args.command if args.command != "ymh" else f"ymh {args.ymh_cmd}"
    # the thread count changes nothing in the output, so it stays out of the report
    cfg = RunConfig(command, params, args.format, args.out, args.seed, threads)
    try:
        outcome = args.fn(args)
    except InvalidInput as exc:
        print(f"equivym: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    resolved = {k: v for k, v in asdict(cfg).items() if k != "threads"}
    report = {"tool": "equivym", "version": __version__, "command": command, "config": resolved,
              "stage": outcome.stage, "status": outcome.status, "result": outcome.result,
              "rows": outcome.rows}
    text = render(report, args.format)
    human = outcome.table or table(outcome.rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(human)
    else:
        sys.stdout.write(text)
        print(human, file=sys.stderr)
    return outcome.status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
