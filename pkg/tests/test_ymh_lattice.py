import numpy as np
import pytest

from equivym.ymh import (
    AbelianProfile,
    BranchError,
    Geometry,
    LatticeField,
    Tangent,
    abelian_energy,
    directional_check,
    discrete_minimizer,
    embed_abelian,
    lattice_energy,
    lattice_gradient,
    regular_gauge,
    retract,
)
from equivym.ymh.io import load_checkpoint, read_history, save_checkpoint, write_history
from equivym.ymh.lattice import from_matrix, qmul, random_su2, to_matrix


def random_field(geom, rng, scale=0.3):
    F = LatticeField.trivial(geom)
    v = Tangent.random(geom, rng)
    return retract(F, v, scale)


def test_geometry_areas():
    g = Geometry(8, 16)
    assert g.total_area() == pytest.approx(4 * np.pi, rel=1e-13)
    assert g.quad_area.sum() + sum(g.cap_area) == pytest.approx(4 * np.pi, rel=1e-13)


def test_quaternion_matrix_round_trip():
    rng = np.random.default_rng(0)
    q = random_su2(rng, (50,))
    m = to_matrix(q)
    assert np.allclose(np.linalg.det(m), 1.0, atol=1e-13)
    assert np.allclose(m @ np.conj(np.swapaxes(m, -1, -2)), np.eye(2), atol=1e-13)
    assert np.allclose(from_matrix(m), q, atol=1e-14)
    # product agrees with the matrix product
    p = random_su2(rng, (50,))
    assert np.allclose(to_matrix(qmul(q, p, np)), m @ to_matrix(p), atol=1e-13)


def test_trivial_field():
    g = Geometry(8, 16)
    F = LatticeField.trivial(g)
    assert lattice_energy(F) == 0.0
    assert lattice_gradient(F).norm() == 0.0


def test_perturbation_is_positive():
    g = Geometry(8, 16)
    F = random_field(g, np.random.default_rng(1), 0.05)
    assert lattice_energy(F) > 0
    assert F.unitarity_defect() <= 1e-12


def test_gauge_invariance():
    g = Geometry(8, 16)
    rng = np.random.default_rng(2)
    F = random_field(g, rng)
    G = F.gauge_transform(random_su2(rng, (g.nt, g.nph)))
    assert abs(lattice_energy(G) - lattice_energy(F)) <= 1e-10


def test_directional_derivatives():
    g = Geometry(8, 16)
    rng = np.random.default_rng(3)
    F = random_field(g, rng)
    for _ in range(20):
        an, fd = directional_check(F, Tangent.random(g, rng))
        assert abs(an - fd) <= 1e-5 * max(abs(an), abs(fd))


def test_embedded_minimizer_converges():
    out = []
    for nt in (8, 16, 32):
        g = Geometry(nt, 2 * nt)
        F = embed_abelian(discrete_minimizer(1, 2 * nt), g)
        out.append((lattice_energy(F), lattice_gradient(F).norm(g.metric)))
    es, gs = zip(*out)
    assert es[0] > es[1] > es[2]
    assert gs[0] > gs[1] > gs[2]
    assert gs[-1] <= 1e-3


def test_embedded_energy_64():
    g = Geometry(64, 128)
    F = embed_abelian(discrete_minimizer(1, 128), g)
    assert lattice_energy(F) <= 1e-4


def test_embedded_tracks_abelian_energy():
    # a non-minimal profile: lattice and reduced energies agree as the grid refines
    rel = []
    for nt in (16, 32):
        p = AbelianProfile.closed_form(2, 2 * nt)
        p = AbelianProfile(2, p.a, 0.8 * p.h)
        g = Geometry(nt, 2 * nt)
        rel.append(abs(lattice_energy(embed_abelian(p, g)) / abelian_energy(p) - 1))
    assert rel[1] < rel[0] < 0.2


def test_regular_gauge_smooths_links():
    g = Geometry(16, 32)
    F = embed_abelian(discrete_minimizer(2, 32), g)
    G = F.gauge_transform(regular_gauge(g, 2))
    assert G.max_link_angle() < 2 * g.dtheta
    assert lattice_energy(G) == pytest.approx(lattice_energy(F), abs=1e-10)


def test_branch_guard():
    g = Geometry(4, 8)
    F = LatticeField.trivial(g)
    # two quarter turns around one plaquette give holonomy -1, angle pi
    uth = F.uth.copy()
    uth[0, 0] = [0.0, 0.0, 0.0, 1.0]
    uth[0, 1] = [0.0, 0.0, 0.0, -1.0]
    G = F.replace(uth=uth)
    with pytest.raises(BranchError):
        lattice_energy(G)


def test_embed_size_mismatch():
    with pytest.raises(ValueError):
        embed_abelian(discrete_minimizer(1, 64), Geometry(16, 32))


def test_checkpoint_round_trip(tmp_path):
    g = Geometry(6, 12)
    F = random_field(g, np.random.default_rng(4))
    path = tmp_path / "field.npz"
    save_checkpoint(F, path, "k=1", {"seed": 4})
    G, sector, meta = load_checkpoint(path)
    assert sector == "k=1" and meta == {"seed": 4}
    # quaternions and their negatives are different links; the round trip keeps the sign
    assert np.allclose(G.uphi, F.uphi, atol=1e-15) and np.allclose(G.uth, F.uth, atol=1e-15)
    assert np.array_equal(G.higgs, F.higgs)
    with np.load(path) as z:
        assert z["links"].shape == (6 * 12 + 5 * 12, 8)


def test_history_round_trip(tmp_path):
    hist = [(0, 1.5, 0.25), (1, 1.25, 0.125)]
    write_history(hist, tmp_path / "h.csv")
    assert read_history(tmp_path / "h.csv") == hist
    assert (tmp_path / "h.csv").read_text().splitlines()[0] == "iteration,energy,grad_norm"
