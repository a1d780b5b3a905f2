import numpy as np
import pytest

import oracles
from tanglekit.basis import BasisState, SupportBasis
from tanglekit.operators import (
    DenseCapError,
    DensityOperator,
    SupportCapError,
    embed_dense,
    partial_trace_to_pair,
    partial_transpose,
    permute_qubits,
)
from tanglekit.spectral import hermitian_eigenvalues, negativity
from tanglekit.states import density_of, make_ghz, make_w, make_xi


def ket(text):
    return BasisState.from_string(text)


def family_states(n):
    return [("w", make_w(n)), ("ghz", make_ghz(n)), ("xi", make_xi(n))]


class TestPartialTranspose:
    def test_w3_block_content(self):
        # expected nonzero elements of the n=3 W partial transpose on qubit 1:
        # the single-excitation diagonal, the coherence between the two kets
        # with qubit 1 empty, and the rows coupling |000> to the
        # double-excitation kets that include qubit 1.
        pt = partial_transpose(density_of(make_w(3)), 1)
        assert [str(s) for s in pt.support] == ["000", "001", "010", "100", "101", "110"]
        third = 1 / 3
        expected = {
            ("100", "100"): third, ("010", "010"): third, ("001", "001"): third,
            ("010", "001"): third, ("001", "010"): third,
            ("000", "110"): third, ("110", "000"): third,
            ("000", "101"): third, ("101", "000"): third,
        }
        for a in pt.support:
            for b in pt.support:
                want = expected.get((str(a), str(b)), 0.0)
                assert pt.entry(a, b) == pytest.approx(want, abs=1e-15)

    def test_xi4_support_and_couplings(self):
        pt = partial_transpose(density_of(make_xi(4)), 1)
        assert pt.dim == 10
        fifth = 1 / 5
        # full-excitation diagonal survives; |1000> couples to |1111>; each
        # double-excitation ket containing qubit 1 couples to |0111>
        assert pt.entry(ket("1111"), ket("1111")) == pytest.approx(fifth, abs=1e-15)
        assert pt.entry(ket("1000"), ket("1111")) == pytest.approx(fifth, abs=1e-15)
        for d in ("1100", "1010", "1001"):
            assert pt.entry(ket(d), ket("0111")) == pytest.approx(fifth, abs=1e-15)
        assert pt.entry(ket("0111"), ket("0111")) == 0.0

    def test_diagonal_operator_fixed(self):
        support = SupportBasis([ket("00"), ket("11")])
        rho = DensityOperator(support, np.diag([0.5, 0.5]).astype(complex))
        for q in (1, 2):
            pt = partial_transpose(rho, q)
            assert pt.allclose(rho, tol=0.0)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_involution_families(self, n):
        for _, psi in family_states(n):
            rho = density_of(psi)
            again = partial_transpose(partial_transpose(rho, 1), 1)
            assert again.allclose(rho, tol=0.0)

    def test_involution_random_states(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            n = int(rng.integers(2, 6))
            rho = density_of(oracles.random_pure_state(n, rng))
            q = int(rng.integers(1, n + 1))
            again = partial_transpose(partial_transpose(rho, q), q)
            assert again.allclose(rho, tol=0.0)

    def test_preserves_trace_and_hermiticity(self):
        rng = np.random.default_rng(17)
        for _ in range(10):
            n = int(rng.integers(2, 6))
            rho = density_of(oracles.random_pure_state(n, rng))
            pt = partial_transpose(rho, int(rng.integers(1, n + 1)))
            m = pt.matrix
            assert abs(m.trace() - 1.0) <= 1e-12
            assert np.abs(m - m.conj().T).max() <= 1e-12

    def test_product_states_have_no_negative_eigenvalues(self):
        rng = np.random.default_rng(29)
        for _ in range(8):
            n = int(rng.integers(2, 6))
            rho = density_of(oracles.random_product_state(n, rng))
            for q in range(1, n + 1):
                assert negativity(partial_transpose(rho, q)) == 0.0

    def test_qubit_out_of_range(self):
        rho = density_of(make_w(3))
        with pytest.raises(ValueError):
            partial_transpose(rho, 0)
        with pytest.raises(ValueError):
            partial_transpose(rho, 4)

    def test_support_cap(self):
        rho = density_of(make_w(6))
        with pytest.raises(SupportCapError):
            partial_transpose(rho, 1, support_cap=8)

    @pytest.mark.parametrize("n", range(2, 13))
    def test_w_pt_support_is_2n(self, n):
        pt = partial_transpose(density_of(make_w(n)), 1)
        assert pt.dim == 2 * n

    @pytest.mark.parametrize("n", [2, 10, 25, 50, 75, 100])
    def test_w_pt_spectrum_to_n100(self, n):
        import math

        pt = partial_transpose(density_of(make_w(n)), 1)
        spec = hermitian_eigenvalues(pt)
        root = math.sqrt(n - 1) / n
        expected = sorted([-root] + [0.0] * (2 * n - 4) + [1 / n, root, (n - 1) / n])
        assert np.allclose(spec.eigenvalues, expected, atol=1e-10)
        assert spec.negative_count == 1

    @pytest.mark.parametrize("n", [4, 10, 25, 50, 75, 100])
    def test_xi_pt_single_negative_to_n100(self, n):
        import math

        pt = partial_transpose(density_of(make_xi(n)), 1)
        spec = hermitian_eigenvalues(pt)
        assert spec.negative_count == 1
        assert spec.eigenvalues[0] == pytest.approx(
            -math.sqrt(2 * (n - 1)) / (n + 1), abs=1e-10
        )

    @pytest.mark.parametrize("n", range(3, 13))
    def test_xi_pt_support_is_2n_plus_2(self, n):
        pt = partial_transpose(density_of(make_xi(n)), 1)
        assert pt.dim == 2 * n + 2

    def test_xi_pt_support_n2_kets_coincide(self):
        # at n=2 the generic 2n+2 kets collapse onto the 4-dim space
        pt = partial_transpose(density_of(make_xi(2)), 1)
        assert pt.dim == 4


class TestPartialTraceToPair:
    def test_w3_reduced_pair(self):
        pair = partial_trace_to_pair(density_of(make_w(3)), 1, 2)
        expected = np.array(
            [[1, 0, 0, 0], [0, 1, 1, 0], [0, 1, 1, 0], [0, 0, 0, 0]]
        ) / 3
        assert np.allclose(pair.matrix, expected, atol=1e-15)

    def test_wn_reduced_pair_general(self):
        n = 7
        pair = partial_trace_to_pair(density_of(make_w(n)), 2, 5)
        expected = np.array(
            [[n - 2, 0, 0, 0], [0, 1, 1, 0], [0, 1, 1, 0], [0, 0, 0, 0]]
        ) / n
        assert np.allclose(pair.matrix, expected, atol=1e-15)

    def test_xi4_reduced_pair(self):
        pair = partial_trace_to_pair(density_of(make_xi(4)), 1, 2)
        expected = np.array(
            [[2, 0, 0, 0], [0, 1, 1, 0], [0, 1, 1, 0], [0, 0, 0, 1]]
        ) / 5
        assert np.allclose(pair.matrix, expected, atol=1e-15)

    def test_projector_on_zero_ket(self):
        support = SupportBasis([ket("00")])
        rho = DensityOperator(support, np.ones((1, 1), dtype=complex))
        pair = partial_trace_to_pair(rho, 1, 2)
        expected = np.zeros((4, 4))
        expected[0, 0] = 1.0
        assert np.allclose(pair.matrix, expected, atol=1e-15)

    def test_matches_dense_oracle(self):
        rng = np.random.default_rng(41)
        for _ in range(8):
            n = int(rng.integers(3, 7))
            psi = oracles.random_pure_state(n, rng)
            i, k = rng.choice(np.arange(1, n + 1), size=2, replace=False)
            got = partial_trace_to_pair(density_of(psi), int(i), int(k))
            want = oracles.dense_pair_trace(oracles.dense_density(psi), int(i), int(k), n)
            assert np.allclose(got.matrix, want, atol=1e-12)

    def test_trace_one_and_psd(self):
        rng = np.random.default_rng(43)
        for _ in range(8):
            n = int(rng.integers(2, 7))
            psi = oracles.random_pure_state(n, rng)
            pair = partial_trace_to_pair(density_of(psi), 1, n)
            assert abs(pair.matrix.trace() - 1.0) <= 1e-12
            assert min(hermitian_eigenvalues(pair).eigenvalues) >= -1e-12

    def test_index_errors(self):
        rho = density_of(make_w(3))
        with pytest.raises(ValueError):
            partial_trace_to_pair(rho, 1, 1)
        with pytest.raises(ValueError):
            partial_trace_to_pair(rho, 0, 2)
        with pytest.raises(ValueError):
            partial_trace_to_pair(rho, 1, 4)


class TestEmbedDense:
    def test_w2(self):
        dense = embed_dense(density_of(make_w(2)))
        expected = np.zeros((4, 4))
        expected[1, 1] = expected[1, 2] = expected[2, 1] = expected[2, 2] = 0.5
        assert np.allclose(dense, expected, atol=1e-15)

    def test_ghz2(self):
        dense = embed_dense(density_of(make_ghz(2)))
        expected = np.zeros((4, 4))
        for r, c in ((0, 0), (0, 3), (3, 0), (3, 3)):
            expected[r, c] = 0.5
        assert np.allclose(dense, expected, atol=1e-15)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_dense_spectrum_is_padded_restricted_spectrum(self, n):
        rng = np.random.default_rng(n)
        candidates = [psi for _, psi in family_states(n)]
        candidates.append(oracles.random_pure_state(n, rng, support_size=n + 1))
        for psi in candidates:
            pt = partial_transpose(density_of(psi), 1)
            restricted = list(hermitian_eigenvalues(pt).eigenvalues)
            dense = hermitian_eigenvalues(embed_dense(pt)).eigenvalues
            padded = sorted(restricted + [0.0] * ((1 << n) - pt.dim))
            assert np.allclose(dense, padded, atol=1e-10)

    def test_cap(self):
        with pytest.raises(DenseCapError):
            embed_dense(density_of(make_w(6)), dense_cap=5)


class TestPermuteQubits:
    def test_identity(self):
        rho = density_of(make_xi(3))
        assert permute_qubits(rho, [1, 2, 3]).allclose(rho, tol=0.0)

    def test_w_invariant(self):
        rho = density_of(make_w(4))
        rng = np.random.default_rng(2)
        for _ in range(5):
            perm = list(rng.permutation(4) + 1)
            assert permute_qubits(rho, perm).allclose(rho, tol=1e-15)

    def test_projector_swap(self):
        support = SupportBasis([ket("10")])
        rho = DensityOperator(support, np.ones((1, 1), dtype=complex))
        swapped = permute_qubits(rho, [2, 1])
        assert [str(s) for s in swapped.support] == ["01"]

    def test_spectrum_unchanged(self):
        rng = np.random.default_rng(31)
        for _ in range(6):
            n = int(rng.integers(2, 6))
            rho = density_of(oracles.random_pure_state(n, rng))
            pt = partial_transpose(rho, 1)
            perm = list(rng.permutation(n) + 1)
            a = hermitian_eigenvalues(pt).eigenvalues
            b = hermitian_eigenvalues(permute_qubits(pt, perm)).eigenvalues
            assert np.allclose(a, b, atol=1e-12)

    def test_invalid_perm(self):
        rho = density_of(make_w(3))
        with pytest.raises(ValueError):
            permute_qubits(rho, [1, 2])
        with pytest.raises(ValueError):
            permute_qubits(rho, [1, 2, 2])


class TestDensityOperatorValidation:
    def test_rejects_non_hermitian(self):
        support = SupportBasis.from_bits(2, [0, 3])
        m = np.array([[0.5, 1.0], [0.0, 0.5]], dtype=complex)
        with pytest.raises(ValueError, match="Hermitian"):
            DensityOperator(support, m)

    def test_rejects_wrong_trace(self):
        support = SupportBasis.from_bits(2, [0, 3])
        with pytest.raises(ValueError, match="trace"):
            DensityOperator(support, np.eye(2, dtype=complex))

    def test_rejects_shape_mismatch(self):
        support = SupportBasis.from_bits(2, [0, 3])
        with pytest.raises(ValueError, match="shape"):
            DensityOperator(support, np.eye(3, dtype=complex) / 3)

    def test_matrix_is_read_only(self):
        rho = density_of(make_w(2))
        with pytest.raises(ValueError):
            rho.matrix[0, 0] = 9.0
