import pytest
from hypothesis import given
from hypothesis import strategies as st

from equivlifts_helpers import brute_lifts
from equivym.equivlifts import (
    INFINITE,
    Omega,
    SequenceSpec,
    TauPQ,
    WeightPair,
    chern_of_weights,
    enumerate_lifts,
    parse_label,
    reducible_orbits,
    splitting_count,
    weights_of_tau,
)


def test_chern_examples():
    assert chern_of_weights(WeightPair(1, 1)) == 0
    assert chern_of_weights(WeightPair(4, 2)) == 6
    assert chern_of_weights(WeightPair(0, 0)) == 0


def test_weight_pair_validation():
    with pytest.raises(ValueError):
        WeightPair(1, 2)
    with pytest.raises(ValueError):
        WeightPair(-2, 0)


def test_weights_of_tau_examples():
    assert weights_of_tau(1, 0) == WeightPair(1, 1)
    assert weights_of_tau(0, 0) == WeightPair(0, 0)
    w = weights_of_tau(2, 1)
    assert w == WeightPair(3, 1) and w.chern == 4


def test_enumerate_lifts_examples():
    assert enumerate_lifts(6, 10) == [WeightPair(4, 2)]
    assert enumerate_lifts(0, 3) == [WeightPair(i, i) for i in range(4)]
    assert enumerate_lifts(1, 20) == []


@given(st.integers(-60, 60), st.integers(0, 25))
def test_enumerate_lifts_matches_brute_force(d, w_max):
    got = enumerate_lifts(d, w_max)
    assert [w.as_tuple() for w in got] == brute_lifts(d, w_max)
    assert all(w.chern == d for w in got)


def test_reducible_orbit_examples():
    assert reducible_orbits(WeightPair(1, 1)) == [TauPQ(1, 0), TauPQ(0, 1), Omega()]
    assert reducible_orbits(WeightPair(4, 2)) == [TauPQ(3, 1), TauPQ(1, 3)]
    assert reducible_orbits(WeightPair(0, 0)) == [TauPQ(0, 0)]
    assert reducible_orbits(WeightPair(4, 0)) == [TauPQ(2, 2)]
    assert reducible_orbits(WeightPair(0, 4)) == [TauPQ(2, -2)]


def test_reducible_orbit_census():
    for wp in range(31):
        for wm in range(wp % 2, 31, 2):
            w = WeightPair(wp, wm)
            orbits = reducible_orbits(w)
            assert len(orbits) in (1, 2, 3)
            assert (len(orbits) == 3) == (w.as_tuple() == (1, 1))
            for o in orbits:
                if isinstance(o, TauPQ):
                    assert weights_of_tau(o.p, o.q) == w
                    assert 2 * o.p * o.q == w.chern


@given(st.integers(-15, 15), st.integers(-15, 15))
def test_round_trip(p, q):
    assert TauPQ(p, q) in reducible_orbits(weights_of_tau(p, q))


def test_canonical_sign():
    assert TauPQ(-1, 2) == TauPQ(1, -2)
    assert TauPQ(0, -3) == TauPQ(0, 3)
    assert TauPQ(2, 1) != TauPQ(1, 2)
    assert str(TauPQ(-2, -1)) == "tau:2,1"


def test_parse_label():
    assert parse_label("tau:2,1") == TauPQ(2, 1)
    assert parse_label("τ:0,-2") == TauPQ(0, 2)
    assert parse_label("ω") == Omega() == parse_label("omega")
    with pytest.raises(ValueError):
        parse_label("sigma:1,2")


def test_splitting_counts():
    assert splitting_count(SequenceSpec("SU2", "Spin4")) == 3
    assert splitting_count(SequenceSpec("U1", "Spin3")) == 1
    assert splitting_count(SequenceSpec("SU2", "Spin3")) == 2
    assert splitting_count(SequenceSpec("SU2", "SO2")) is INFINITE
    assert splitting_count(SequenceSpec("U1", "Spin4")) == 1
    assert splitting_count(SequenceSpec("U1", "SO2")) is INFINITE
    assert str(INFINITE) == "Infinite"


def test_unsupported_sequence_names_pair():
    with pytest.raises(ValueError, match="SO3"):
        SequenceSpec("SU2", "SO3")
