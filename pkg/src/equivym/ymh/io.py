"""Checkpoints of lattice fields and CSV energy histories."""
from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .lattice import Geometry, LatticeField, from_matrix, to_matrix


def _links_to_reals(q: np.ndarray) -> np.ndarray:
    # row-major 2x2 complex matrix as 8 reals: re, im per entry
    m = to_matrix(q.reshape(-1, 4))
    return np.stack([m.real, m.imag], axis=-1).reshape(-1, 8)


def _reals_to_links(r: np.ndarray) -> np.ndarray:
    r = r.reshape(-1, 2, 2, 2)
    return from_matrix(r[..., 0] + 1j * r[..., 1])


def save_checkpoint(F: LatticeField, path, sector: str = "", meta: dict | None = None) -> None:
    g = F.geom
    links = np.concatenate([_links_to_reals(F.uphi), _links_to_reals(F.uth)])
    np.savez(
        Path(path),
        dims=np.array([g.nt, g.nph]),
        links=links,
        higgs=F.higgs.reshape(-1, 3),
        sector=np.array(sector),
        meta=np.array(json.dumps(meta or {}, sort_keys=True)),
    )


def load_checkpoint(path) -> tuple[LatticeField, str, dict]:
    with np.load(Path(path)) as z:
        nt, nph = (int(x) for x in z["dims"])
        g = Geometry(nt, nph)
        links = _reals_to_links(z["links"])
        n_phi = nt * nph
        uphi = links[:n_phi].reshape(nt, nph, 4)
        uth = links[n_phi:].reshape(nt - 1, nph, 4)
        higgs = z["higgs"].reshape(nt, nph, 3)
        return LatticeField(g, uphi, uth, higgs), str(z["sector"]), json.loads(str(z["meta"]))


def write_history(history, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["iteration", "energy", "grad_norm"])
        for it, e, g in history:
            w.writerow([it, repr(float(e)), repr(float(g))])


def read_history(path) -> list[tuple[int, float, float]]:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    return [(int(r["iteration"]), float(r["energy"]), float(r["grad_norm"])) for r in rows]
