"""Hermitian spectra and negativity.

Real-symmetric input is diagonalized directly.  Complex Hermitian input goes
through the real-symmetric embedding [[Re, -Im], [Im, Re]], whose spectrum is
the complex spectrum with every multiplicity doubled; adjacent pairs of the
sorted embedded eigenvalues are averaged to undo the doubling.  One real
solver therefore serves both cases.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HERMITICITY_TOL = 1e-10

# Eigenvalues above -eps are round-off, not entanglement; eps scales with the
# matrix entries (Theta(1/n) here) but never below the absolute floor.
NEGATIVE_EPS_FACTOR = 1e-12


class NonHermitianError(ValueError):
    """Input matrix failed the Hermiticity check."""


@dataclass(frozen=True)
class Spectrum:
    """Sorted real eigenvalues with their negative-part summary."""

    eigenvalues: tuple[float, ...]
    negative_sum: float
    trace: float

    @property
    def negative_count(self) -> int:
        eps = _negative_eps(max(abs(v) for v in self.eigenvalues) if self.eigenvalues else 1.0)
        return sum(1 for v in self.eigenvalues if v < -eps)


def _negative_eps(scale: float) -> float:
    return NEGATIVE_EPS_FACTOR * max(1.0, scale)


def _as_matrix(rho) -> np.ndarray:
    m = getattr(rho, "matrix", rho)
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def _check_hermitian(m: np.ndarray) -> None:
    scale = max(1.0, float(np.abs(m).max()))
    if np.abs(m - m.conj().T).max() > HERMITICITY_TOL * scale:
        raise NonHermitianError("matrix is not Hermitian within tolerance")


def _embed_real(m: np.ndarray) -> np.ndarray:
    re, im = m.real, m.imag
    return np.block([[re, -im], [im, re]])


def hermitian_eigenvalues(rho) -> Spectrum:
    """All real eigenvalues (with multiplicity) of a Hermitian matrix.

    Accepts a DensityOperator or a plain square array.
    """
    m = _as_matrix(rho)
    _check_hermitian(m)
    if np.iscomplexobj(m):
        if np.abs(m.imag).max() == 0.0:
            vals = np.linalg.eigvalsh(m.real)
        else:
            doubled = np.linalg.eigvalsh(_embed_real(m))
            vals = 0.5 * (doubled[0::2] + doubled[1::2])
    else:
        vals = np.linalg.eigvalsh(m)
    eps = _negative_eps(float(np.abs(m).max()))
    negative_sum = float(-vals[vals < -eps].sum())
    return Spectrum(tuple(float(v) for v in vals), negative_sum, float(vals.sum()))


def hermitian_eigensystem(rho) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and matching eigenvector columns.

    Used by verification code to check residuals ||m v - lambda v||; the
    complex path maps each embedded eigenvector (x; y) back to x + iy.
    """
    m = _as_matrix(rho)
    _check_hermitian(m)
    if np.iscomplexobj(m) and np.abs(m.imag).max() > 0.0:
        doubled, emb_vecs = np.linalg.eigh(_embed_real(m))
        d = m.shape[0]
        vals = 0.5 * (doubled[0::2] + doubled[1::2])
        vecs = np.empty((d, d), dtype=complex)
        for j in range(d):
            col = emb_vecs[:, 2 * j]
            v = col[:d] + 1j * col[d:]
            vecs[:, j] = v / np.linalg.norm(v)
        return vals, vecs
    vals, vecs = np.linalg.eigh(m.real if np.iscomplexobj(m) else m)
    return vals, vecs.astype(complex)


def negativity(rho) -> float:
    """Twice the summed magnitude of the negative eigenvalues."""
    return 2.0 * hermitian_eigenvalues(rho).negative_sum


def trace_norm(rho) -> float:
    """Sum of |eigenvalue| -- equals 1 + negativity for trace-1 operators."""
    spec = hermitian_eigenvalues(rho)
    return float(sum(abs(v) for v in spec.eigenvalues))
