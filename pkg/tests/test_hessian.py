from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from equivym.equivlifts import Omega, TauPQ
from equivym.hessian import (
    Spectrum,
    SpectrumContainmentError,
    certify_corollary2,
    full_spectrum,
    index_nullity,
    invariant_spectrum,
    invariant_table_spectrum,
    normal_spectrum,
    normal_table_spectrum,
    orbit_spectrum,
    scalar_invariant_spectrum,
    spectrum,
    tail_certificate,
)

small = st.integers(-8, 8)


def brute_full(p, q, cutoff):
    """Six families enumerated over a generous box, no monotonicity shortcuts."""
    s = p * p + q * q
    fams = [(1, 0, 0), (0, 1, 0), (abs(p - 1), abs(q), s), (abs(p + 1), abs(q), s),
            (abs(p), abs(q - 1), s), (abs(p), abs(q + 1), s)]
    out = Counter()
    box = 40
    for k0, l0, shift in fams:
        for k in range(k0, box):
            for l in range(l0, box):
                ev = k * k + k + l * l + l - shift
                if ev <= cutoff:
                    out[ev] += 2 * (2 * k + 1) * (2 * l + 1)
    return dict(out)


# -- Spectrum container -------------------------------------------------------

def test_spectrum_merges_and_truncates():
    s = Spectrum.from_pairs([(1, 2), (1, 3), (4, 1)], 5)
    assert s.lines == {1: 5, 4: 1}
    assert s.truncate(3).lines == {1: 5}
    with pytest.raises(ValueError):
        Spectrum({7: 1}, 5)


def test_spectrum_subtraction_requires_containment():
    a = Spectrum({1: 3, 2: 1}, 5)
    assert (a - Spectrum({1: 1}, 5)).lines == {1: 2, 2: 1}
    with pytest.raises(SpectrumContainmentError):
        a - Spectrum({3: 1}, 5)


def test_spectrum_compares_below_smaller_cutoff():
    assert Spectrum({1: 1, 9: 2}, 10) == Spectrum({1: 1}, 5)


# -- full spectrum ------------------------------------------------------------

def test_full_spectrum_examples():
    # regression value computed by the brute-force enumeration below
    assert full_spectrum(0, 0, 2).lines == {2: 36}
    assert full_spectrum(1, 0, -1).lines == {-1: 2}
    assert full_spectrum(1, 0, -2).lines == {}


@given(small, small, st.integers(-10, 60))
def test_full_spectrum_matches_brute_force(p, q, cutoff):
    assert full_spectrum(p, q, cutoff).lines == brute_full(p, q, cutoff)


@given(small, small)
def test_full_spectrum_pq_symmetry(p, q):
    assert full_spectrum(p, q, 80) == full_spectrum(q, p, 80)


def test_parallel_merge_is_identical():
    assert full_spectrum(3, 2, 150, threads=4).lines == full_spectrum(3, 2, 150, threads=1).lines
    assert invariant_spectrum(TauPQ(3, 2), 150, threads=3).lines == invariant_spectrum(TauPQ(3, 2), 150).lines


# -- invariant / scalar / orbit / normal ---------------------------------------

def test_invariant_examples():
    assert invariant_spectrum(TauPQ(0, 0), 4).lines == {4: 12}
    assert invariant_spectrum(Omega(), 2).lines == {2: 4}
    assert invariant_spectrum(TauPQ(3, 1), 5).lines == {2: 2, 4: 4}


def test_scalar_and_orbit_examples():
    assert scalar_invariant_spectrum(TauPQ(0, 0), 0).lines == {0: 3}
    assert scalar_invariant_spectrum(TauPQ(1, 0), 0).lines == {0: 1}
    assert scalar_invariant_spectrum(Omega(), 1).lines == {}
    assert orbit_spectrum(TauPQ(0, 0), 4).lines == {4: 3}
    assert orbit_spectrum(Omega(), 2).lines == {2: 2}
    assert orbit_spectrum(TauPQ(1, 0), 3).lines == {3: 2}


def test_normal_examples():
    assert normal_spectrum(Omega(), 2).lines == {2: 2}
    assert normal_spectrum(TauPQ(2, 1), 0).lines == {-1: 2}
    assert normal_spectrum(TauPQ(2, 0), 0).lines == {0: 2}


@given(small, small)
def test_cg_pipeline_equals_closed_form(p, q):
    label = TauPQ(p, q)
    assert invariant_spectrum(label, 120) == invariant_table_spectrum(label, 120)
    assert normal_spectrum(label, 120) == normal_table_spectrum(label, 120)
    assert invariant_spectrum(label, 120).contains(orbit_spectrum(label, 120))


def test_omega_pipeline_equals_closed_form():
    assert invariant_spectrum(Omega(), 200) == invariant_table_spectrum(Omega(), 200)
    assert normal_spectrum(Omega(), 200) == normal_table_spectrum(Omega(), 200)


def test_stage_dispatch():
    assert spectrum(TauPQ(0, 0), "invariant", 4).lines == {4: 12}
    with pytest.raises(ValueError):
        spectrum(TauPQ(0, 0), "bogus", 4)


# -- index / nullity ------------------------------------------------------------

INDEX_TABLE = {
    TauPQ(0, 2): (0, 2), TauPQ(2, 0): (0, 2), TauPQ(1, 2): (2, 0), TauPQ(2, 1): (2, 0),
    TauPQ(3, 4): (2, 0), TauPQ(2, 2): (0, 0), TauPQ(3, 1): (0, 0), TauPQ(0, 0): (0, 0), Omega(): (0, 0),
}


@pytest.mark.parametrize("label", list(INDEX_TABLE), ids=str)
def test_index_nullity_table(label):
    assert index_nullity(label).as_tuple() == INDEX_TABLE[label]


def test_sign_census():
    for p in range(-12, 13):
        for q in range(-12, 13):
            idx, nul = index_nullity(TauPQ(p, q)).as_tuple()
            if idx:
                assert abs(abs(p) - abs(q)) == 1
            if nul:
                assert {abs(p), abs(q)} == {2, 0}


def test_index_does_not_depend_on_window():
    # the certificate's first positive point bounds every family; a wide window agrees
    for label in INDEX_TABLE:
        tails = tail_certificate(label)
        assert tails
        wide = normal_spectrum(label, 400)
        assert sum(m for e, m in wide.lines.items() if e < 0) == index_nullity(label).index
        assert wide.multiplicity(0) == index_nullity(label).nullity


# -- certificate ----------------------------------------------------------------

def test_certificate_examples():
    c = certify_corollary2(6)
    assert c.certified and c.weights.as_tuple() == (4, 2)
    assert c.orbits == [TauPQ(3, 1), TauPQ(1, 3)]
    assert [x.as_tuple() for x in c.index_nullity] == [(0, 0), (0, 0)]
    c = certify_corollary2(0)
    assert c.certified and c.weights.as_tuple() == (3, 3)
    assert c.orbits == [TauPQ(3, 0), TauPQ(0, 3)]


@pytest.mark.parametrize("d", [-4, -2, 2, 4])
def test_certificate_refuses(d):
    c = certify_corollary2(d)
    assert not c.certified
    assert c.transcript  # the exhaustive search is recorded
    assert not any(step.get("accepted") for step in c.transcript)


def test_certificate_odd_is_error():
    with pytest.raises(ValueError):
        certify_corollary2(3)
