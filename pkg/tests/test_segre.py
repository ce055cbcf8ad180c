import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from segretoric.segre import (
    MeasureConfig,
    QuadricBinomial,
    entanglement_measure,
    evaluate_binomial,
    segre_embed,
    separability_report,
    single_swap_minors,
)
from segretoric.state import MultiIndex, MultiQubitState, family_state, make_state, random_factors

R2 = 1 / math.sqrt(2)

# frozen from oracles.measure (norm_const=1)
GOLDEN_MEASURE = {
    ("ghz", 2): 0.9999999999999999,
    ("ghz", 3): 1.7320508075688772,
    ("w", 3): 1.154700538379252,
}
GOLDEN_MINORS_ONLY = {
    ("ghz", 3): 1.224744871391589,
    ("w", 3): 1.154700538379252,
}
# frozen from oracles.minors
MINOR_COUNTS = {2: 1, 3: 12, 4: 88, 5: 520}


def as_strings(binomials):
    return {((str(b.plus[0]), str(b.plus[1])), (str(b.minus[0]), str(b.minus[1]))) for b in binomials}


def amp_dict(state):
    return {str(MultiIndex(state.m, r)): complex(a) for r, a in enumerate(state.amplitudes)}


def test_minors_m2():
    (b,) = single_swap_minors(2)
    assert str(b) == "a_00 a_11 - a_01 a_10"


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_minors_match_oracle(m):
    got = single_swap_minors(m)
    assert len(got) == MINOR_COUNTS[m]
    assert as_strings(got) == oracles.minors(m)


def test_minors_m3_contains_position_one_swap():
    assert (("000", "011"), ("001", "010")) in as_strings(single_swap_minors(3))


def test_minors_sorted_and_unique():
    got = single_swap_minors(4)
    assert got == sorted(set(got))


def test_minors_reject_m1():
    with pytest.raises(ValueError):
        single_swap_minors(1)


def test_binomial_balance_check():
    with pytest.raises(ValueError, match="unbalanced"):
        QuadricBinomial(
            (MultiIndex.from_string("00"), MultiIndex.from_string("11")),
            (MultiIndex.from_string("00"), MultiIndex.from_string("10")),
        )


def test_binomial_canonical_form():
    b = QuadricBinomial.canonical(2, 2, 1, 3, 0)
    assert b.ranks() == (0, 3, 1, 2)
    with pytest.raises(ValueError):
        QuadricBinomial.canonical(2, 0, 3, 3, 0)


def test_evaluate_binomial_examples():
    (b,) = single_swap_minors(2)
    bell = make_state(2, [("00", R2), ("11", R2)])
    assert evaluate_binomial(b, bell) == pytest.approx(0.5, abs=1e-15)
    assert evaluate_binomial(b, make_state(2, [("00", 1)])) == 0
    psi = make_state(2, [("01", R2), ("10", R2)])
    assert evaluate_binomial(b, psi) == pytest.approx(-0.5, abs=1e-15)


def test_evaluate_binomial_dimension_mismatch():
    (b,) = single_swap_minors(2)
    with pytest.raises(ValueError):
        evaluate_binomial(b, family_state("ghz", 3))


@settings(max_examples=30)
@given(st.floats(0.01, 100), st.integers(0, 2**32 - 1))
def test_binomial_scaling_law(c, seed):
    s = family_state("random-dense", 3, seed)
    scaled = MultiQubitState(3, c * s.amplitudes)
    for b in single_swap_minors(3):
        assert evaluate_binomial(b, scaled) == pytest.approx(c * c * evaluate_binomial(b, s), rel=1e-12, abs=1e-14)


def test_separability_ghz3():
    rep = separability_report(family_state("ghz", 3))
    assert not rep.separable
    assert rep.max_residual == pytest.approx(0.5, abs=1e-15)
    assert rep.witness.ranks() in {(0, 7, 1, 6), (0, 7, 2, 5), (0, 7, 3, 4)}


def test_separability_w3():
    rep = separability_report(family_state("w", 3))
    assert not rep.separable
    assert rep.max_residual == pytest.approx(1 / 3, abs=1e-15)


def test_separability_verdict_matches_residual():
    for name in ("ghz", "w", "random-product", "random-dense"):
        rep = separability_report(family_state(name, 4, seed=1), tolerance=1e-10)
        assert rep.separable == (rep.max_residual <= rep.tolerance)


def test_separability_preconditions():
    with pytest.raises(ValueError):
        separability_report(family_state("ghz", 3), tolerance=0)
    with pytest.raises(ValueError):
        separability_report(make_state(1, [("0", 1)]))


def test_segre_embed_examples():
    np.testing.assert_array_equal(segre_embed([(1, 0), (1, 0)]).amplitudes, [1, 0, 0, 0])
    s = segre_embed([(R2, R2), (1, 0)])
    np.testing.assert_allclose(s.amplitudes, [R2, 0, R2, 0], atol=1e-15)


def test_segre_embed_unnormalized_products():
    s = segre_embed([(2, 3), (5, 7), (11, 13)], normalize=False)
    for r in range(8):
        bits = MultiIndex(3, r).bits
        expected = [2, 3][bits[0]] * [5, 7][bits[1]] * [11, 13][bits[2]]
        assert s[r] == expected


def test_segre_embed_errors():
    with pytest.raises(ValueError):
        segre_embed([])
    with pytest.raises(ValueError):
        segre_embed([(1, 0), (0, 0)])


def test_segre_image_is_separable():
    rng = np.random.default_rng(3)
    for _ in range(20):
        rep = separability_report(segre_embed(random_factors(3, rng)))
        assert rep.separable and rep.max_residual <= 1e-12


@pytest.mark.parametrize("key", sorted(GOLDEN_MEASURE))
def test_measure_golden(key):
    assert entanglement_measure(family_state(*key)) == pytest.approx(GOLDEN_MEASURE[key], abs=1e-12)


@pytest.mark.parametrize("key", sorted(GOLDEN_MINORS_ONLY))
def test_measure_minors_only_golden(key):
    cfg = MeasureConfig(mode="minors-only")
    assert entanglement_measure(family_state(*key), cfg) == pytest.approx(GOLDEN_MINORS_ONLY[key], abs=1e-12)


def test_measure_golden_matches_closed_forms():
    assert GOLDEN_MEASURE[("ghz", 2)] == pytest.approx(1.0, abs=1e-15)
    assert GOLDEN_MEASURE[("ghz", 3)] == pytest.approx(math.sqrt(3), abs=1e-15)
    assert GOLDEN_MEASURE[("w", 3)] == pytest.approx(2 / math.sqrt(3), abs=1e-15)


def test_measure_norm_const():
    s = family_state("ghz", 3)
    assert entanglement_measure(s, MeasureConfig(norm_const=4.0)) == pytest.approx(2 * math.sqrt(3), abs=1e-12)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_measure_matches_oracle_random(m):
    for seed in range(5):
        s = family_state("random-dense", m, seed)
        assert entanglement_measure(s) == pytest.approx(oracles.measure(amp_dict(s), m), abs=1e-12)
        got = entanglement_measure(s, MeasureConfig(mode="minors-only"))
        assert got == pytest.approx(oracles.measure(amp_dict(s), m, minors_only=True), abs=1e-12)


def test_measure_rejects_unnormalized():
    with pytest.raises(ValueError, match="normalized"):
        entanglement_measure(MultiQubitState(2, [2, 0, 0, 0]))


def test_measure_config_validation():
    with pytest.raises(ValueError):
        MeasureConfig(mode="partial")
    with pytest.raises(ValueError):
        MeasureConfig(norm_const=0)


@pytest.mark.parametrize("m", range(2, 7))
def test_measure_vanishes_on_products(m):
    rng = np.random.default_rng(100 + m)
    for _ in range(100):
        assert entanglement_measure(segre_embed(random_factors(m, rng))) <= 1e-10


@pytest.mark.parametrize("name", ["ghz", "w"])
@pytest.mark.parametrize("m", range(2, 7))
def test_measure_positive_on_entangled(name, m):
    assert entanglement_measure(family_state(name, m)) >= 0.1


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.floats(0, 2 * math.pi), st.integers(0, 2**32 - 1))
def test_global_phase_invariance(m, theta, seed):
    s = family_state("random-dense", m, seed)
    t = MultiQubitState(m, np.exp(1j * theta) * s.amplitudes)
    assert abs(entanglement_measure(s) - entanglement_measure(t)) <= 1e-12
    assert separability_report(s).separable == separability_report(t).separable


@pytest.mark.parametrize("m", [2, 3, 4])
def test_relabeling_invariance(m):
    s = family_state("random-dense", m, seed=11)
    base = entanglement_measure(s)
    values = sorted(abs(v) for v in (evaluate_binomial(b, s) for b in single_swap_minors(m)))
    for perm in itertools.permutations(range(m)):
        t = s.permute_qubits(perm)
        assert abs(entanglement_measure(t) - base) <= 1e-12
        permuted = sorted(abs(evaluate_binomial(b, t)) for b in single_swap_minors(m))
        np.testing.assert_allclose(permuted, values, atol=1e-15)


@pytest.mark.parametrize("m", range(2, 7))
def test_w_state_witness_is_one_over_m(m):
    # both products of a minor are nonzero only for the trivial binomial, so |value| <= 1/m
    rep = separability_report(family_state("w", m))
    assert rep.max_residual == pytest.approx(1 / m, abs=1e-15)
