import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import exact_state
from hadamard_walk.errors import DomainError, ResourceError
from hadamard_walk.exact import (ExactAmplitude, StepOrder, WalkState, evolve, evolve_float,
                                 float_total_probability, path_sum_amplitude, path_sum_engine_sign,
                                 probability, state_from_json, state_to_csv, state_to_json, step)

FLIP, MOVE = StepOrder.FLIP_THEN_MOVE, StepOrder.MOVE_THEN_FLIP
HALF = ExactAmplitude(1, 2)


def test_one_step_flip_then_move():
    s = evolve(1)
    assert s.amplitude(1) == (ExactAmplitude(0, 1), ExactAmplitude(1, 1))
    assert s.amplitude(-1) == (ExactAmplitude(1, 1), ExactAmplitude(0, 1))
    assert s.sites() == [-1, 1]


def test_two_steps_flip_then_move():
    s = evolve(2)
    assert s.amplitude(2)[1] == HALF
    assert s.amplitude(0) == (HALF, HALF)
    assert s.amplitude(-2)[0] == -HALF


def test_one_step_move_then_flip():
    s = evolve(1, MOVE)
    assert s.amplitude(1) == (ExactAmplitude(1, 1), ExactAmplitude(1, 1))
    assert s.sites() == [1]


def test_initial_state():
    s = evolve(0)
    assert s.amplitude(0) == (ExactAmplitude(0, 0), ExactAmplitude(1, 0))
    assert probability(s) == {0: 1}


def test_t2_distribution():
    assert probability(evolve(2)) == {-2: Fraction(1, 4), 0: Fraction(1, 2), 2: Fraction(1, 4)}


def test_peaks_near_ballistic_front():
    p = probability(exact_state(100))
    right = max((n for n in p if n > 0), key=p.get)
    left = max((n for n in p if n < 0), key=p.get)
    assert abs(right - 100 / math.sqrt(2)) <= 4
    assert abs(left + 100 / math.sqrt(2)) <= 4


@pytest.mark.parametrize("t", [0, 1, 7, 64, 150])
def test_exact_normalization(t):
    for conv in (FLIP, MOVE):
        s = evolve(t, conv)
        assert s.norm_numerator() == 2**t
        assert sum(probability(s).values()) == 1


def test_support_and_parity():
    for t in range(1, 40):
        s = exact_state(t)
        assert all(-t <= n <= t and (n - t) % 2 == 0 for n in s.sites())


def test_move_then_flip_is_shifted_flip_then_move():
    for t in range(1, 61):
        shifted = {n + 1: p for n, p in probability(exact_state(t - 1)).items()}
        assert probability(evolve(t, MOVE)) == shifted


def test_right_bias():
    s = evolve(1)
    for t in range(2, 201):
        s = step(s)
        p = probability(s)
        assert sum(v for n, v in p.items() if n > 0) >= sum(v for n, v in p.items() if n < 0)


def test_path_sum_hand_values():
    ps = path_sum_amplitude(0, 2)
    assert (ps.psi_L, ps.psi_R) == (-HALF, -HALF)
    ps = path_sum_amplitude(-2, 2)
    assert ps.psi_L == -HALF and ps.psi_R.numerator == 0
    assert not path_sum_amplitude(0, 2).endpoint
    assert path_sum_amplitude(2, 2).endpoint


def test_path_sum_parity_error():
    with pytest.raises(DomainError):
        path_sum_amplitude(1, 2)
    with pytest.raises(DomainError):
        path_sum_amplitude(5, 3)


def test_path_sum_matches_engine_with_sign():
    for t in range(2, 61):
        s = exact_state(t)
        for n in range(-t, t, 2):
            ps = path_sum_amplitude(n, t)
            sign = path_sum_engine_sign(n, t)
            left, right = s.amplitude(n)
            assert ps.psi_L.numerator * sign == left.numerator
            assert ps.psi_R.numerator * sign == right.numerator


def test_path_sum_misses_right_endpoint():
    # the sums give psi_R = 0 at n = t although the walk puts weight there
    for t in range(1, 12):
        assert path_sum_amplitude(t, t).psi_R.numerator == 0
        assert exact_state(t).amplitude(t)[1].numerator != 0


@given(st.integers(-(10**30), 10**30), st.integers(0, 200))
def test_amplitude_canonical_form(num, halfpow):
    a = ExactAmplitude(num, halfpow)
    b = ExactAmplitude(num * 2, halfpow + 2)
    assert a == b and hash(a) == hash(b)
    assert math.isclose(float(a), float(b), rel_tol=1e-15)
    assert a.square() == Fraction(num * num, 2**halfpow)


def test_float_conversion_of_huge_numerators():
    s = evolve(1200)
    total = math.fsum(a * a + b * b for a, b in (s.as_float(n) for n in s.sites()))
    assert abs(total - 1) < 1e-12


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 120), st.sampled_from([FLIP, MOVE]))
def test_float_path_matches_exact(t, conv):
    sites, left, right = evolve_float(t, conv)
    _, l2, r2 = evolve(t, conv).dense()
    assert list(sites) == list(range(-t, t + 1))
    assert max(abs(left - l2).max(), abs(right - r2).max()) < 1e-13


def test_float_path_unitary_at_1000():
    assert abs(float_total_probability(1000) - 1) <= 1e-12


def test_budget():
    with pytest.raises(ResourceError):
        evolve(11, budget=10)
    with pytest.raises(ResourceError):
        step(evolve(5), budget=5)
    with pytest.raises(DomainError):
        evolve(-1)


def test_csv_export():
    text = state_to_csv(evolve(2))
    assert text.splitlines() == [
        "n,psi_L_num,psi_R_num,halfpow,p_exact_num,p_exact_den",
        "-2,-1,0,2,1,4",
        "0,1,1,2,1,2",
        "2,0,1,2,1,4",
    ]


def test_json_round_trip():
    s = evolve(70, MOVE)
    back = state_from_json(state_to_json(s))
    assert back == WalkState(s.t, dict(s.numerators), s.convention)
    doc = json.loads(state_to_json(s))
    assert [r["n"] for r in doc["sites"]] == sorted(r["n"] for r in doc["sites"])
