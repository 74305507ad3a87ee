from collections import Counter

import numpy as np
import pytest

from clsets.clkernel import Family, anti_pencil, check_by_eigenvector, point_pencil
from clsets.errors import ResourceError
from clsets.exactla import ExactVector, mat_vec, rank_exact
from clsets.setcore import binom
from clsets.spectral import kneser_matrix, predicted_spectrum, verify_spectrum


def numeric_spectrum(n, k):
    """Float eigensolver oracle, rounded to integers."""
    K = np.array(kneser_matrix(n, k).to_rows(), dtype=float)
    vals = np.linalg.eigvalsh(K)
    rounded = np.rint(vals)
    assert np.allclose(vals, rounded, atol=1e-8)
    return Counter(int(v) for v in rounded)


class TestKneserMatrix:
    def test_trivial(self):
        K = kneser_matrix(5, 5)
        assert (K.rows, K.cols) == (1, 1) and K.is_zero()

    def test_perfect_matching(self):
        K = kneser_matrix(4, 2)
        assert K.rows == 6
        assert all(sum(K.row(i)) == 1 for i in range(6))
        assert K[0, 5] == 1  # {0,1} and {2,3}

    def test_petersen(self):
        K = kneser_matrix(5, 2)
        assert all(sum(K.row(i)) == 3 for i in range(10))

    def test_symmetry_and_regularity(self):
        for n in range(2, 13):
            for k in range(1, n // 2 + 1):
                K = kneser_matrix(n, k)
                assert K == K.transpose()
                assert all(K[i, i] == 0 for i in range(K.rows))
                j = ExactVector.ones(K.rows)
                assert mat_vec(K, j) == binom(n - k, k) * j


class TestPrediction:
    def test_petersen(self):
        assert predicted_spectrum(5, 2).pairs == ((3, 1), (-2, 4), (1, 5))

    def test_merged(self):
        p = predicted_spectrum(4, 2)
        assert p.raw == ((1, 1), (-1, 3), (1, 2))
        assert p.pairs == ((1, 3), (-1, 3))

    def test_six_three(self):
        # every eigenvalue is +-1 when n = 2k
        assert predicted_spectrum(6, 3).raw == ((1, 1), (-1, 5), (1, 9), (-1, 5))
        assert predicted_spectrum(6, 3).pairs == ((1, 10), (-1, 10))

    def test_degenerate(self):
        assert predicted_spectrum(4, 4).pairs == ((0, 1),)
        assert predicted_spectrum(7, 5).pairs == ((0, 21),)

    @pytest.mark.parametrize(
        "n,k", [(4, 2), (5, 2), (6, 2), (6, 3), (7, 3), (8, 3), (8, 4), (9, 4), (10, 3), (7, 7), (7, 5)]
    )
    def test_against_numeric_oracle(self, n, k):
        assert dict(predicted_spectrum(n, k).pairs) == dict(numeric_spectrum(n, k))

    def test_multiplicities_sum(self):
        for n in range(1, 20):
            for k in range(1, n + 1):
                assert sum(m for _, m in predicted_spectrum(n, k).pairs) == binom(n, k)


class TestVerify:
    def test_petersen(self):
        rep = verify_spectrum(5, 2)
        assert rep.passed
        assert {r["eigenvalue"]: r["rank"] for r in rep.ranks}[1] == 5

    def test_trivial(self):
        rep = verify_spectrum(3, 3)
        assert rep.passed and rep.prediction.pairs == ((0, 1),)

    def test_six_two_trace(self):
        rep = verify_spectrum(6, 2)
        assert rep.passed
        assert sum(m * lam * lam for lam, m in rep.prediction.pairs) == 90 == 15 * binom(4, 2)

    def test_bound(self):
        with pytest.raises(ResourceError):
            verify_spectrum(20, 10)
        assert verify_spectrum(10, 4, max_size=210).passed

    def test_wrong_prediction_fails(self):
        # the annihilator of a strict subset of eigenvalues is nonzero
        K = kneser_matrix(5, 2)
        assert rank_exact(K.shift(3)) == 9


@pytest.mark.parametrize("n,k", [(6, 2), (9, 3), (8, 2), (6, 3), (4, 2)])
def test_condition_four_uses_first_nontrivial_eigenvalue(n, k):
    lam1 = -binom(n - k - 1, k - 1)
    assert predicted_spectrum(n, k).raw[1][0] == lam1
    K = kneser_matrix(n, k)
    for f in (point_pencil(n, k, 0), anti_pencil(n, k, 1), Family.full(n, k)):
        assert check_by_eigenvector(f)
        u = n * binom(n - 1, k - 1) * f.chi() - ExactVector.ones(f.length) * (k * f.size)
        assert mat_vec(K.shift(lam1), u).is_zero()
