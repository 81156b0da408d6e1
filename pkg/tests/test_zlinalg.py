import numpy as np
import pytest

from cosetlab.zlinalg import IntMatrix, abelian_invariants_of, smith_diagonal, smith_normal_form

import helpers


def check_snf(m):
    d, u, v = smith_normal_form(IntMatrix(m))
    assert u @ IntMatrix(m) @ v == d
    assert d.is_diagonal()
    return d.diagonal(), u, v


class TestSmith:
    def test_diag_2_3(self):
        diag, _, _ = check_snf([[2, 0], [0, 3]])
        assert diag == [1, 6]

    def test_zero(self):
        d, u, v = smith_normal_form(IntMatrix([[0, 0], [0, 0]]))
        assert d.diagonal() == [0, 0]
        assert u == IntMatrix.identity(2) and v == IntMatrix.identity(2)

    def test_2468(self):
        diag, _, _ = check_snf([[2, 4], [6, 8]])
        assert diag == [2, 4]

    def test_unimodular(self):
        _, u, v = check_snf([[3, 5, 7], [2, 4, 6], [11, 0, 1]])
        assert abs(u.det()) == 1 and abs(v.det()) == 1

    @pytest.mark.parametrize("seed", range(5))
    def test_random_against_minors(self, seed):
        rng = np.random.default_rng(seed)
        for _ in range(40):
            m = helpers.random_matrix(rng)
            diag, u, v = check_snf(m)
            assert diag == helpers.smith_diagonal_oracle(m)
            assert all(b % a == 0 for a, b in zip(diag, diag[1:]) if a)

    def test_stable_under_permutation_and_sign(self):
        rng = np.random.default_rng(7)
        for _ in range(30):
            m = np.array(helpers.random_matrix(rng))
            m2 = -m[rng.permutation(m.shape[0])][:, rng.permutation(m.shape[1])]
            assert smith_diagonal(m.tolist()) == smith_diagonal(m2.tolist())

    def test_big_entries_promote_exactly(self):
        m = [[2**40, 3], [5, 2**45 + 1]]
        diag, _, _ = check_snf(m)
        assert diag[0] * diag[1] == abs(helpers.det_laplace(m))

    def test_det_agrees_with_oracle(self):
        rng = np.random.default_rng(3)
        for _ in range(30):
            n = int(rng.integers(1, 6))
            m = rng.integers(-9, 10, size=(n, n)).tolist()
            assert IntMatrix(m).det() == helpers.det_laplace(m)


class TestInvariants:
    def test_free(self):
        assert abelian_invariants_of(IntMatrix.zeros(0, 2), 2) == ([], 2)

    def test_two_two(self):
        assert abelian_invariants_of(IntMatrix([[2, 0], [0, 2]]), 2) == ([2, 2], 0)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            abelian_invariants_of(IntMatrix([[1, 2, 3]]), 2)

    def test_text_round_trip(self):
        m = IntMatrix([[1, -2], [3, 40]])
        assert IntMatrix.from_text(m.to_text()) == m
