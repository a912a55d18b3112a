import numpy as np
import pytest

from framelab import (DimensionMismatch, InvalidInput, KernelVector,
                      NegativePower, NormalOperatorModel, SpectralAtom,
                      ZeroVector, apply, is_invertible, kernel_component,
                      norm_ratio_sequence, power_norm_log,
                      power_norm_log_table, support_radius, weighted_inner,
                      weighted_norm)
from helpers import brute_power_norm, random_model, random_seed_vector


class TestSpectralAtom:
    def test_defaults(self):
        a = SpectralAtom(0.5, 1.0)
        assert a.z == 0.5 + 0j and a.weight == 1.0 and a.mult == 1

    def test_rejects_nonpositive_weight(self):
        with pytest.raises(InvalidInput):
            SpectralAtom(1.0, 0.0)
        with pytest.raises(InvalidInput):
            SpectralAtom(1.0, -2.0)

    def test_rejects_bad_mult(self):
        with pytest.raises(InvalidInput):
            SpectralAtom(1.0, 1.0, 0)
        with pytest.raises(InvalidInput):
            SpectralAtom(1.0, 1.0, 1.5)

    def test_rejects_non_finite_value(self):
        with pytest.raises(InvalidInput):
            SpectralAtom(np.inf, 1.0)


class TestNormalOperatorModel:
    def test_dim_and_norm(self):
        m = NormalOperatorModel([SpectralAtom(0.5, 1.0, 2),
                                 SpectralAtom(-2j, 3.0, 1)])
        assert m.dim == 3
        assert m.op_norm == 2.0

    def test_rejects_empty(self):
        with pytest.raises(InvalidInput):
            NormalOperatorModel([])

    def test_rejects_duplicate_values(self):
        with pytest.raises(InvalidInput):
            NormalOperatorModel([SpectralAtom(0.5, 1.0),
                                 SpectralAtom(0.5, 2.0)])

    def test_from_values(self):
        m = NormalOperatorModel.from_values([0.1, 0.2], weights=[1.0, 4.0])
        assert m.dim == 2 and m.atoms[1].weight == 4.0

    def test_from_values_length_mismatch(self):
        with pytest.raises(DimensionMismatch):
            NormalOperatorModel.from_values([0.1, 0.2], weights=[1.0])

    def test_equality_and_hash(self):
        a = NormalOperatorModel.from_values([0.1, 0.2])
        b = NormalOperatorModel.from_values([0.1, 0.2])
        assert a == b and hash(a) == hash(b)
        assert a != NormalOperatorModel.from_values([0.1, 0.3])


class TestApply:
    def test_single_atom(self):
        m = NormalOperatorModel.from_values([0.5])
        assert np.allclose(apply(m, [1.0]), [0.5])

    def test_two_atoms(self):
        m = NormalOperatorModel.from_values([1j, 2.0])
        assert np.allclose(apply(m, [1.0, 1.0]), [1j, 2.0])

    def test_zero_vector(self):
        m = NormalOperatorModel.from_values([1j, 2.0])
        assert np.allclose(apply(m, [0.0, 0.0]), [0.0, 0.0])

    def test_block_multiplicity(self):
        m = NormalOperatorModel([SpectralAtom(3.0, 1.0, 2)])
        assert np.allclose(apply(m, [1.0, 2.0]), [3.0, 6.0])

    def test_dimension_mismatch(self):
        m = NormalOperatorModel.from_values([0.5])
        with pytest.raises(DimensionMismatch):
            apply(m, [1.0, 2.0])


class TestInnerAndNorm:
    def test_weights_enter_inner_product(self):
        m = NormalOperatorModel([SpectralAtom(0.5, 4.0)])
        assert weighted_inner(m, [1.0], [1.0]) == pytest.approx(4.0)
        assert weighted_norm(m, [1.0]) == pytest.approx(2.0)

    def test_conjugate_linear_in_second(self):
        m = NormalOperatorModel.from_values([0.5])
        assert weighted_inner(m, [1.0], [1j]) == pytest.approx(-1j)

    def test_norm_matches_inner(self):
        rng = np.random.default_rng(7)
        m = random_model(rng, max_mult=3)
        v = random_seed_vector(rng, m)
        assert weighted_norm(m, v) ** 2 == pytest.approx(
            weighted_inner(m, v, v).real, rel=1e-12)


class TestPowerNormLog:
    def test_scalar_power(self):
        m = NormalOperatorModel.from_values([2.0])
        assert power_norm_log(m, [1.0], 10) == pytest.approx(
            10 * np.log(2.0), abs=1e-12)

    def test_two_atom_example(self):
        m = NormalOperatorModel.from_values([0.5, 0.9])
        v = np.array([1.0, 1.0]) / np.sqrt(2.0)
        assert power_norm_log(m, v, 1) == pytest.approx(
            0.5 * np.log(0.53), abs=1e-12)

    def test_power_zero_of_unit_vector(self):
        m = NormalOperatorModel.from_values([0.5, 0.9])
        v = np.array([1.0, 1.0]) / np.sqrt(2.0)
        assert power_norm_log(m, v, 0) == pytest.approx(0.0, abs=1e-12)

    def test_zero_atom_contributes_only_at_power_zero(self):
        m = NormalOperatorModel.from_values([0.0, 0.5])
        v = [1.0, 1.0]
        assert power_norm_log(m, v, 0) == pytest.approx(
            0.5 * np.log(2.0), abs=1e-12)
        assert power_norm_log(m, v, 1) == pytest.approx(np.log(0.5), abs=1e-12)

    def test_kernel_only_vector_gives_neg_inf_past_zero(self):
        m = NormalOperatorModel.from_values([0.0, 0.5])
        table = power_norm_log_table(m, [1.0, 0.0], [0, 1, 2])
        assert table[0] == pytest.approx(0.0, abs=1e-15)
        assert table[1] == -np.inf and table[2] == -np.inf

    def test_rejects_zero_vector(self):
        m = NormalOperatorModel.from_values([0.5])
        with pytest.raises(ZeroVector):
            power_norm_log(m, [0.0], 1)

    def test_rejects_negative_or_fractional_power(self):
        m = NormalOperatorModel.from_values([0.5])
        with pytest.raises(NegativePower):
            power_norm_log(m, [1.0], -1)
        with pytest.raises(NegativePower):
            power_norm_log_table(m, [1.0], [0.5])

    def test_agrees_with_repeated_apply(self):
        # Brute-force oracle: n <= 60, moduli in [0.1, 2].
        rng = np.random.default_rng(31)
        for _ in range(20):
            m = random_model(rng, max_atoms=8, mod_range=(0.1, 2.0), max_mult=2)
            v = random_seed_vector(rng, m)
            powers = [0, 1, 2, 5, 17, 60]
            table = power_norm_log_table(m, v, powers)
            for n, val in zip(powers, table):
                assert abs(val - np.log(brute_power_norm(m, v, n))) <= 1e-9

    def test_no_overflow_at_extreme_powers(self):
        m = NormalOperatorModel.from_values([1e-3, 1.0, 1e3])
        v = [1.0, 1.0, 1.0]
        val = power_norm_log(m, v, 5000)
        assert np.isfinite(val)
        assert val == pytest.approx(5000 * np.log(1e3), abs=1e-6)


class TestSupportRadius:
    def test_partial_support(self):
        m = NormalOperatorModel.from_values([0.3, 0.9])
        assert support_radius(m, [1.0, 0.0]) == pytest.approx(0.3)
        assert support_radius(m, [1.0, 1.0]) == pytest.approx(0.9)

    def test_zero_vector_rejected(self):
        m = NormalOperatorModel.from_values([0.3, 0.9])
        with pytest.raises(ZeroVector):
            support_radius(m, [0.0, 0.0])


class TestNormRatioSequence:
    def test_constant_for_single_atom(self):
        m = NormalOperatorModel.from_values([0.5])
        assert np.allclose(norm_ratio_sequence(m, [1.0], 10), 0.5, atol=1e-12)

    def test_two_atom_start_and_growth(self):
        m = NormalOperatorModel.from_values([0.5, 0.9])
        v = np.array([1.0, 1.0]) / np.sqrt(2.0)
        rho = norm_ratio_sequence(m, v, 50)
        assert rho[0] == pytest.approx(np.sqrt(0.53), abs=1e-12)
        assert np.all(np.diff(rho) >= -1e-12)
        assert rho[-1] <= 0.9 + 1e-12

    def test_unimodular_spectrum(self):
        rng = np.random.default_rng(13)
        z = np.exp(1j * rng.uniform(0, 2 * np.pi, 5))
        m = NormalOperatorModel.from_values(z)
        rho = norm_ratio_sequence(m, random_seed_vector(rng, m), 20)
        assert np.allclose(rho, 1.0, atol=1e-12)

    def test_monotone_and_bounded_across_random_models(self):
        # Moduli in (0, 1], 200 draws, 200 ratios each.
        rng = np.random.default_rng(41)
        for _ in range(200):
            m = random_model(rng, max_atoms=16, mod_range=(0.01, 1.0))
            v = random_seed_vector(rng, m)
            rho = norm_ratio_sequence(m, v, 200)
            assert np.all(np.diff(rho) >= -1e-12)
            assert np.all(rho <= support_radius(m, v) + 1e-12)

    def test_converges_to_support_radius(self):
        m = NormalOperatorModel.from_values([0.5, 0.9])
        v = np.array([1.0, 1.0]) / np.sqrt(2.0)
        # (0.5/0.9)^(2N) <= 1e-8 at N = 16.
        rho = norm_ratio_sequence(m, v, 17)
        assert abs(rho[-1] - 0.9) <= 1e-3

    def test_telescoping_lower_bound(self):
        # exp(log|A^(n+j) v| - log|A^n v|) >= rho_0^j - 1e-10. Moduli <= 1
        # keep the compared quantities O(1), where the absolute slack is
        # meaningful.
        rng = np.random.default_rng(43)
        for _ in range(10):
            m = random_model(rng, max_atoms=6, mod_range=(0.2, 1.0))
            v = random_seed_vector(rng, m)
            table = power_norm_log_table(m, v, np.arange(101))
            rho0 = np.exp(table[1] - table[0])
            for n in (0, 3, 25, 50):
                for j in (1, 2, 10, 50):
                    ratio = np.exp(table[n + j] - table[n])
                    assert ratio >= rho0 ** j - 1e-10

    def test_kernel_vector_rejected(self):
        m = NormalOperatorModel.from_values([0.0, 0.5])
        with pytest.raises(KernelVector):
            norm_ratio_sequence(m, [1.0, 0.0], 5)
        with pytest.raises(ZeroVector):
            norm_ratio_sequence(m, [0.0, 0.0], 5)

    def test_rejects_bad_count(self):
        m = NormalOperatorModel.from_values([0.5])
        with pytest.raises(InvalidInput):
            norm_ratio_sequence(m, [1.0], 0)


class TestKernelStructure:
    def test_is_invertible(self):
        assert not is_invertible(NormalOperatorModel.from_values([0.0, 0.5]))
        assert is_invertible(NormalOperatorModel.from_values([0.1, 0.5]))
        assert is_invertible(NormalOperatorModel.from_values([1j]))

    def test_split_without_kernel_atom(self):
        m = NormalOperatorModel.from_values([0.5, 2.0])
        ker, rest = kernel_component(m, [1.0, 2.0])
        assert np.allclose(ker, 0.0)
        assert np.allclose(rest, [1.0, 2.0])

    def test_split_on_kernel_atom(self):
        m = NormalOperatorModel.from_values([0.0, 2.0])
        ker, rest = kernel_component(m, [3.0, 4.0])
        assert np.allclose(ker, [3.0, 0.0])
        assert np.allclose(rest, [0.0, 4.0])
        assert np.allclose(ker + rest, [3.0, 4.0])

    def test_kernel_split_commutes_with_apply(self):
        rng = np.random.default_rng(59)
        m = NormalOperatorModel.from_values([0.0, 0.5, 1.5],
                                            weights=[1.0, 2.0, 0.5])
        v = random_seed_vector(rng, m)
        ker, rest = kernel_component(m, apply(m, v))
        ker2, rest2 = kernel_component(m, v)
        assert np.allclose(ker, apply(m, ker2))
        assert np.allclose(rest, apply(m, rest2))
        # A vector with zero kernel part stays zero-kernel under apply.
        ker3, _ = kernel_component(m, apply(m, rest2))
        assert np.allclose(ker3, 0.0)
