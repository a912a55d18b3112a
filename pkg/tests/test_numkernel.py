import numpy as np
import pytest

from framelab import (EmptyInput, EmptyMatrix, InvalidInput, NonHermitian,
                      SingularOperator)
from framelab.numkernel import (hermitian_extreme_eigs, log_sum_exp,
                                solve_hermitian_psd, svd_extremes)


class TestHermitianExtremeEigs:
    def test_identity(self):
        assert hermitian_extreme_eigs(np.eye(2)) == (1.0, 1.0)

    def test_diagonal(self):
        lo, hi = hermitian_extreme_eigs(np.diag([1.0, 4.0]))
        assert lo == pytest.approx(1.0) and hi == pytest.approx(4.0)

    def test_off_diagonal(self):
        lo, hi = hermitian_extreme_eigs([[2.0, 1.0], [1.0, 2.0]])
        assert lo == pytest.approx(1.0, abs=1e-12)
        assert hi == pytest.approx(3.0, abs=1e-12)

    def test_complex_hermitian(self):
        m = [[0.0, -1j], [1j, 0.0]]
        lo, hi = hermitian_extreme_eigs(m)
        assert lo == pytest.approx(-1.0, abs=1e-12)
        assert hi == pytest.approx(1.0, abs=1e-12)

    def test_rejects_non_hermitian(self):
        with pytest.raises(NonHermitian):
            hermitian_extreme_eigs([[0.0, 1.0], [0.0, 0.0]])

    def test_rejects_non_square(self):
        with pytest.raises(NonHermitian):
            hermitian_extreme_eigs(np.ones((2, 3)))

    def test_rejects_empty(self):
        with pytest.raises(EmptyMatrix):
            hermitian_extreme_eigs(np.empty((0, 0)))

    def test_rejects_non_finite(self):
        with pytest.raises(InvalidInput):
            hermitian_extreme_eigs([[np.inf, 0.0], [0.0, 1.0]])

    def test_rayleigh_quotients_inside_range(self):
        rng = np.random.default_rng(101)
        for _ in range(50):
            n = int(rng.integers(1, 9))
            a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            m = a + a.conj().T
            lo, hi = hermitian_extreme_eigs(m)
            v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            v /= np.linalg.norm(v)
            q = float(np.real(v.conj() @ m @ v))
            assert lo - 1e-8 <= q <= hi + 1e-8


class TestSvdExtremes:
    def test_identity(self):
        assert svd_extremes(np.eye(3)) == (1.0, 1.0)

    def test_single_column_is_rank_deficient(self):
        smin, smax = svd_extremes(np.array([[3.0], [4.0]]))
        assert smin == 0.0
        assert smax == pytest.approx(5.0, abs=1e-12)

    def test_zero_matrix(self):
        assert svd_extremes(np.zeros((2, 2))) == (0.0, 0.0)

    def test_wide_matrix_uses_row_count(self):
        # 2x3 of rank 2: sigma_min is the 2nd singular value, not the 3rd.
        m = np.array([[1.0, 0.0, 0.0], [0.0, 2.0, 0.0]])
        smin, smax = svd_extremes(m)
        assert smin == pytest.approx(1.0, abs=1e-12)
        assert smax == pytest.approx(2.0, abs=1e-12)

    def test_orthonormal_columns(self):
        rng = np.random.default_rng(55)
        for _ in range(10):
            n = int(rng.integers(2, 8))
            a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            q, _ = np.linalg.qr(a)
            smin, smax = svd_extremes(q)
            assert abs(smin - 1.0) <= 1e-10
            assert abs(smax - 1.0) <= 1e-10

    def test_matches_gram_eigenvalues(self):
        rng = np.random.default_rng(56)
        for _ in range(25):
            rows = int(rng.integers(1, 7))
            cols = int(rng.integers(rows, 25))
            f = rng.uniform(-1, 1, (rows, cols)) + 1j * rng.uniform(-1, 1, (rows, cols))
            smin, smax = svd_extremes(f)
            lo, hi = hermitian_extreme_eigs(f @ f.conj().T)
            scale = max(hi, 1e-300)
            assert abs(smin ** 2 - lo) <= 1e-8 * scale
            assert abs(smax ** 2 - hi) <= 1e-8 * scale

    def test_rejects_empty(self):
        with pytest.raises(EmptyMatrix):
            svd_extremes(np.empty((3, 0)))


class TestLogSumExp:
    def test_two_zeros(self):
        assert log_sum_exp([0.0, 0.0]) == pytest.approx(np.log(2.0), abs=1e-15)

    def test_shift_beyond_double_range(self):
        assert log_sum_exp([1000.0, 1000.0]) == pytest.approx(
            1000.0 + np.log(2.0), abs=1e-12)

    def test_single_entry_exact(self):
        assert log_sum_exp([0.0]) == 0.0
        assert log_sum_exp([-3.25]) == -3.25

    def test_all_neg_inf(self):
        assert log_sum_exp([-np.inf, -np.inf]) == -np.inf

    def test_neg_inf_entries_ignored(self):
        assert log_sum_exp([0.0, -np.inf]) == pytest.approx(0.0, abs=1e-15)

    def test_shift_invariance(self):
        rng = np.random.default_rng(77)
        for _ in range(20):
            t = rng.uniform(-5, 5, int(rng.integers(1, 40)))
            c = float(rng.uniform(-800, 800))
            assert log_sum_exp(t + c) == pytest.approx(
                log_sum_exp(t) + c, abs=1e-12 * max(1.0, abs(c)))

    def test_rejects_empty(self):
        with pytest.raises(EmptyInput):
            log_sum_exp([])

    def test_rejects_nan_and_pos_inf(self):
        with pytest.raises(InvalidInput):
            log_sum_exp([0.0, np.nan])
        with pytest.raises(InvalidInput):
            log_sum_exp([0.0, np.inf])

    def test_rejects_2d(self):
        with pytest.raises(InvalidInput):
            log_sum_exp(np.zeros((2, 2)))


class TestSolveHermitianPsd:
    def test_identity(self):
        b = np.array([1.0 + 2j, -3.0])
        x = solve_hermitian_psd(np.eye(2), b)
        assert np.allclose(x, b, atol=1e-14)

    def test_scalar_division(self):
        x = solve_hermitian_psd([[4.0]], [2.0])
        assert x[0] == pytest.approx(0.5, abs=1e-15)

    def test_random_psd_residual(self):
        rng = np.random.default_rng(91)
        for _ in range(20):
            n = int(rng.integers(1, 9))
            a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            m = a @ a.conj().T + 1e-3 * np.eye(n)
            b = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            x = solve_hermitian_psd(m, b)
            assert np.linalg.norm(m @ x - b) <= 1e-8 * np.linalg.norm(b)

    def test_matrix_right_hand_side(self):
        rng = np.random.default_rng(92)
        a = rng.standard_normal((4, 4))
        m = a @ a.T + np.eye(4)
        b = rng.standard_normal((4, 3))
        x = solve_hermitian_psd(m, b)
        assert np.linalg.norm(m @ x - b) <= 1e-10 * np.linalg.norm(b)

    def test_rejects_singular(self):
        with pytest.raises(SingularOperator):
            solve_hermitian_psd(np.diag([1.0, 0.0]), [1.0, 1.0])

    def test_rejects_indefinite(self):
        with pytest.raises(SingularOperator):
            solve_hermitian_psd(np.diag([1.0, -1.0]), [1.0, 1.0])

    def test_rejects_non_hermitian(self):
        with pytest.raises(NonHermitian):
            solve_hermitian_psd([[1.0, 1.0], [0.0, 1.0]], [1.0, 1.0])

    def test_rejects_bad_rhs_length(self):
        with pytest.raises(InvalidInput):
            solve_hermitian_psd(np.eye(2), [1.0, 2.0, 3.0])
