# -*- coding: utf-8 -*-
import galois
import numpy as np
import pytest

from core.decode_classical import (
    circulant,
    evaluate_poly,
    gabidulin_decode,
    gabidulin_decode_with_trace,
    gabidulin_spec,
    hamming_weight,
    interpolate_poly,
    random_rs_error,
    rs_decode,
    rs_encode,
    rs_field,
    welch_berlekamp_decode,
)
from core.errors import CofactorSearchExhausted, DecodingFailure, LengthMismatch
from core.rmcode import encode, random_message
from core.skew import evaluate_at_points, random_rank_error

RS_Q, RS_K, RS_T = 16, 7, 4


def _gabidulin_received(tower, k, t, rng):
    spec = gabidulin_spec(tower, k)
    C, y = encode(spec, random_message(spec, rng))
    E = random_rank_error(tower, t, rng)
    return spec, C, E, [a + b for a, b in zip(y, evaluate_at_points(E))]


def test_gabidulin_parameters(gf128):
    spec = gabidulin_spec(gf128, 3)
    assert (spec.N, spec.k, spec.d, spec.radius) == (7, 3, 5, 2)


def test_gabidulin_windows_shift_up(gf128, rng):
    _, C, E, received = _gabidulin_received(gf128, 3, 2, rng)
    result = gabidulin_decode_with_trace(gf128, 3, received)
    assert [w.rows for w in result.windows] == [(4, 5, 6), (3, 4, 5), (2, 3, 4)]
    assert all(w.cols == (0, 1, 2) for w in result.windows)
    assert [w.target for w in result.windows] == [2, 1, 0]
    assert result.C == C
    assert result.E == E


@pytest.mark.parametrize("seed", range(5))
def test_gabidulin_decode(gf128, seed):
    rng = np.random.default_rng(seed)
    for t in range(3):
        _, C, E, received = _gabidulin_received(gf128, 3, t, rng)
        decoded, error = gabidulin_decode(gf128, 3, received)
        assert decoded == C
        assert error == E


def test_window_cost_grows_with_rank(gf128, rng):
    costs = {}
    for t in (1, 3):
        _, _, _, received = _gabidulin_received(gf128, 1, t, rng)
        result = gabidulin_decode_with_trace(gf128, 1, received)
        assert result.t == t
        costs[t] = result.window_ops
    assert costs[3] > costs[1]


def test_gabidulin_requires_cyclic_tower(gf64):
    with pytest.raises(DecodingFailure):
        gabidulin_spec(gf64, 2)


def test_circulant_examples():
    GF = galois.GF(16)
    assert np.array_equal(circulant([1, 0, 0, 0], GF), GF.Identity(4))
    shift = circulant([0, 1, 0, 0], GF)
    for i in range(4):
        for j in range(4):
            assert shift[i, j] == (1 if (i - j) % 4 == 1 else 0)


def test_circulant_rank_is_evaluation_weight(rng):
    GF, _, points = rs_field(RS_Q)
    n = RS_Q - 1
    for weight in range(n + 1):
        e = random_rs_error(RS_Q, weight, rng)
        coeffs = interpolate_poly(e, points)
        assert hamming_weight(e) == weight
        assert np.array_equal(evaluate_poly(coeffs, points), e)
        assert np.linalg.matrix_rank(circulant(coeffs)) == weight


def test_rs_decode_without_error(rng):
    GF, _, _ = rs_field(RS_Q)
    c = rs_encode(RS_Q, RS_K, GF(rng.integers(0, RS_Q, size=RS_K)))
    decoded, error = rs_decode(RS_Q, RS_K, c)
    assert np.array_equal(decoded, c)
    assert hamming_weight(error) == 0


def test_rs_decode_agrees_with_welch_berlekamp():
    GF, _, _ = rs_field(RS_Q)
    successes = 0
    for seed in range(10):
        rng = np.random.default_rng(seed)
        c = rs_encode(RS_Q, RS_K, GF(rng.integers(0, RS_Q, size=RS_K)))
        e = random_rs_error(RS_Q, RS_T, rng)
        y = c + e
        reference, _ = welch_berlekamp_decode(RS_Q, RS_K, y)
        assert np.array_equal(reference, c)
        try:
            decoded, error = rs_decode(RS_Q, RS_K, y)
        except CofactorSearchExhausted:
            continue
        successes += 1
        assert np.array_equal(decoded, c)
        assert np.array_equal(error, e)
    assert successes >= 1


def test_rs_length_checks():
    GF, _, _ = rs_field(RS_Q)
    with pytest.raises(LengthMismatch):
        rs_encode(RS_Q, RS_K, GF([1, 2]))
    with pytest.raises(LengthMismatch):
        rs_decode(RS_Q, RS_K, GF.Zeros(RS_Q - 2))


@pytest.mark.slow
def test_gabidulin_many_trials(gf128):
    rng = np.random.default_rng(77)
    for trial in range(200):
        _, C, E, received = _gabidulin_received(gf128, 3, trial % 3, rng)
        result = gabidulin_decode_with_trace(gf128, 3, received)
        assert result.C == C
        assert result.E == E
        if result.t == 2:
            assert [w.target for w in result.windows] == [2, 1, 0]


@pytest.mark.slow
def test_rs_many_trials_match_welch_berlekamp():
    GF, _, _ = rs_field(RS_Q)
    for seed in range(200):
        rng = np.random.default_rng(seed)
        c = rs_encode(RS_Q, RS_K, GF(rng.integers(0, RS_Q, size=RS_K)))
        e = random_rs_error(RS_Q, RS_T, rng)
        y = c + e
        reference, reference_error = welch_berlekamp_decode(RS_Q, RS_K, y)
        decoded, error = rs_decode(RS_Q, RS_K, y)
        assert np.array_equal(decoded, c)
        assert np.array_equal(error, e)
        assert np.array_equal(decoded, reference)
        assert np.array_equal(error, reference_error)
