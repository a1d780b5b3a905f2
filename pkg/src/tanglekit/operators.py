"""Density-operator algebra on restricted support bases.

Operators are stored as Hermitian matrices over an explicit, ordered list of
basis kets rather than over the full 2^n-dimensional space.  The partial
transpose of the sparse states treated here only ever populates O(n) kets,
which keeps the numerics tractable far beyond dense reach.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .basis import BasisState, SupportBasis

DEFAULT_SUPPORT_CAP = 4096
DEFAULT_DENSE_CAP = 10

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12


class SupportCapError(RuntimeError):
    """Support closure grew past the configured cap."""


class DenseCapError(RuntimeError):
    """Dense 2^n embedding requested above the configured qubit cap."""


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """Hermitian matrix restricted to an explicit support basis.

    Every operator handled by this package has unit trace: states are
    normalized, and both partial transpose (diagonal untouched) and partial
    trace preserve the trace.
    """

    support: SupportBasis
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=complex)
        d = len(self.support)
        if m.shape != (d, d):
            raise ValueError(f"matrix shape {m.shape} does not match support size {d}")
        scale = max(1.0, float(np.abs(m).max()))
        if np.abs(m - m.conj().T).max() > HERMITICITY_TOL * scale:
            raise ValueError("matrix is not Hermitian within tolerance")
        if abs(m.trace().real - 1.0) > TRACE_TOL or abs(m.trace().imag) > TRACE_TOL:
            raise ValueError(f"trace must be 1, got {m.trace()}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def n(self) -> int:
        return self.support.n

    @property
    def dim(self) -> int:
        return len(self.support)

    def entry(self, a: BasisState, b: BasisState) -> complex:
        """Matrix element <a|rho|b>, zero when either ket is off support."""
        if a not in self.support or b not in self.support:
            return 0j
        return complex(self.matrix[self.support.index(a), self.support.index(b)])

    def entries(self) -> dict[tuple[BasisState, BasisState], complex]:
        """All nonzero elements keyed by ket pair (support-order independent)."""
        out: dict[tuple[BasisState, BasisState], complex] = {}
        rows, cols = np.nonzero(self.matrix)
        for r, c in zip(rows, cols):
            out[(self.support.states[r], self.support.states[c])] = complex(
                self.matrix[r, c]
            )
        return out

    def allclose(self, other: "DensityOperator", tol: float = 0.0) -> bool:
        """Compare as operators over the union of supports."""
        if self.n != other.n:
            return False
        union = self.support.union(other.support)
        for k in union:
            for j in union:
                if abs(self.entry(k, j) - other.entry(k, j)) > tol:
                    return False
        return True


def partial_transpose(
    rho: DensityOperator, q: int, support_cap: int = DEFAULT_SUPPORT_CAP
) -> DensityOperator:
    """Transpose qubit ``q``'s indices, closing the support over all images.

    Element <a|rho|b> lands at <a'|.|b'> where a' and b' are a and b with
    their q-th bits swapped.  The output support is the union of the input
    support with every image ket, in ascending bit order.
    """
    n = rho.n
    if not 1 <= q <= n:
        raise ValueError(f"qubit index {q} out of range 1..{n}")
    rows, cols = np.nonzero(rho.matrix)
    images: set[BasisState] = set()
    moved: list[tuple[BasisState, BasisState, complex]] = []
    for r, c in zip(rows, cols):
        a = rho.support.states[r]
        b = rho.support.states[c]
        a2 = a.with_bit(q, b.bit_of(q))
        b2 = b.with_bit(q, a.bit_of(q))
        images.add(a2)
        images.add(b2)
        moved.append((a2, b2, complex(rho.matrix[r, c])))
    out_support = rho.support.union(SupportBasis(images)) if images else rho.support
    if len(out_support) > support_cap:
        raise SupportCapError(
            f"partial transpose support {len(out_support)} exceeds cap {support_cap}"
        )
    out = np.zeros((len(out_support), len(out_support)), dtype=complex)
    for a2, b2, v in moved:
        out[out_support.index(a2), out_support.index(b2)] = v
    return DensityOperator(out_support, out)


_PAIR_SUPPORT = [(0, 0), (0, 1), (1, 0), (1, 1)]


def partial_trace_to_pair(rho: DensityOperator, i: int, k: int) -> DensityOperator:
    """Reduced operator of the qubit pair ``(i, k)``.

    Returns the full 4x4 matrix on the ordered two-qubit basis
    {|00>, |01>, |10>, |11>} with qubit ``i`` first, even when some rows are
    identically zero.
    """
    n = rho.n
    for q in (i, k):
        if not 1 <= q <= n:
            raise ValueError(f"qubit index {q} out of range 1..{n}")
    if i == k:
        raise ValueError("pair qubits must be distinct")
    # Bits outside {i, k} must agree between bra and ket for a term to survive
    # the trace.
    mask_out = (1 << n) - 1
    mask_out &= ~(1 << (n - i))
    mask_out &= ~(1 << (n - k))
    out = np.zeros((4, 4), dtype=complex)
    rows, cols = np.nonzero(rho.matrix)
    for r, c in zip(rows, cols):
        a = rho.support.states[r]
        b = rho.support.states[c]
        if (a.bits & mask_out) != (b.bits & mask_out):
            continue
        ra = 2 * a.bit_of(i) + a.bit_of(k)
        rb = 2 * b.bit_of(i) + b.bit_of(k)
        out[ra, rb] += rho.matrix[r, c]
    support = SupportBasis.from_bits(2, range(4))
    return DensityOperator(support, out)


def embed_dense(rho: DensityOperator, dense_cap: int = DEFAULT_DENSE_CAP) -> np.ndarray:
    """Scatter the restricted matrix into the full 2^n x 2^n space."""
    n = rho.n
    if n > dense_cap:
        raise DenseCapError(f"dense embedding needs n <= {dense_cap}, got n={n}")
    out = np.zeros((1 << n, 1 << n), dtype=complex)
    for (a, b), v in rho.entries().items():
        out[a.bits, b.bits] = v
    return out


def permute_qubits(rho: DensityOperator, perm: Sequence[int]) -> DensityOperator:
    """Relabel qubits: qubit j's bit moves to position ``perm[j-1]``.

    Pure relabeling of the support kets; the spectrum is unchanged.
    """
    n = rho.n
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"perm must be a permutation of 1..{n}, got {list(perm)}")
    relabeled = []
    for s in rho.support:
        bits = 0
        for j in range(1, n + 1):
            if s.bit_of(j):
                bits |= 1 << (n - perm[j - 1])
        relabeled.append(BasisState(bits, n))
    order = sorted(range(len(relabeled)), key=lambda idx: relabeled[idx].bits)
    support = SupportBasis(relabeled[idx] for idx in order)
    matrix = rho.matrix[np.ix_(order, order)]
    return DensityOperator(support, matrix)
