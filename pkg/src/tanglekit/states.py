"""Pure-state constructors for the built-in families and custom input.

All built-in families are permutation symmetric and real valued; amplitudes
are stored as complex anyway so that custom states with phases flow through
the same operator machinery.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .basis import BasisState, SupportBasis
from .operators import DensityOperator

log = logging.getLogger(__name__)

NORM_TOL = 1e-12

FAMILY_TAGS = ("w", "ghz", "xi", "custom")

# Families whose states are invariant under any qubit relabeling, enabling
# the compute-one-representative fast path in the measures layer.
SYMMETRIC_FAMILIES = ("w", "ghz", "xi")


class StateFormatError(ValueError):
    """Malformed custom-state text input."""


@dataclass(frozen=True)
class PureState:
    """Normalized sparse amplitude map over n-qubit basis kets."""

    n: int
    amplitudes: dict[BasisState, complex]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"need at least 2 qubits, got n={self.n}")
        if not self.amplitudes:
            raise ValueError("state must have at least one nonzero amplitude")
        for ket, amp in self.amplitudes.items():
            if ket.n != self.n:
                raise ValueError(f"ket {ket} does not have n={self.n}")
            if amp == 0:
                raise ValueError(f"zero amplitude stored for ket {ket}")
        norm_sq = sum(abs(a) ** 2 for a in self.amplitudes.values())
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise ValueError(f"state norm^2 = {norm_sq} is not 1")

    @property
    def support(self) -> SupportBasis:
        return SupportBasis(sorted(self.amplitudes, key=lambda s: s.bits))


def make_w(n: int) -> PureState:
    """Equal superposition of the n single-excitation kets, amplitude 1/sqrt(n)."""
    _check_n(n)
    amp = 1.0 / math.sqrt(n)
    amps = {BasisState(1 << (n - q), n): complex(amp) for q in range(1, n + 1)}
    return PureState(n, amps)


def make_ghz(n: int) -> PureState:
    """(|0...0> + |1...1>)/sqrt(2)."""
    _check_n(n)
    amp = complex(1.0 / math.sqrt(2.0))
    return PureState(n, {BasisState(0, n): amp, BasisState((1 << n) - 1, n): amp})


def make_xi(n: int) -> PureState:
    """(|1...1> + sqrt(n)|W>)/sqrt(n+1): amplitude 1/sqrt(n+1) on n+1 kets."""
    _check_n(n)
    amp = complex(1.0 / math.sqrt(n + 1))
    amps = {BasisState(1 << (n - q), n): amp for q in range(1, n + 1)}
    amps[BasisState((1 << n) - 1, n)] = amp
    return PureState(n, amps)


def parse_custom(text: str) -> PureState:
    """Parse the custom-state text format and normalize the amplitudes.

    One term per line: ``<bitstring> <re> [<im>]``.  '#' starts a comment,
    blank lines are ignored, and the bitstring length fixes the qubit count.
    Input need not be normalized; the 2-norm is divided out (and logged).
    """
    terms: dict[str, complex] = {}
    n: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise StateFormatError(
                f"line {lineno}: expected '<bitstring> <re> [<im>]', got {raw!r}"
            )
        bitstring = parts[0]
        if any(c not in "01" for c in bitstring):
            raise StateFormatError(f"line {lineno}: bad bitstring {bitstring!r}")
        if n is None:
            n = len(bitstring)
        elif len(bitstring) != n:
            raise StateFormatError(
                f"line {lineno}: bitstring length {len(bitstring)} != {n}"
            )
        if bitstring in terms:
            raise StateFormatError(f"line {lineno}: duplicate ket {bitstring!r}")
        try:
            re = float(parts[1])
            im = float(parts[2]) if len(parts) == 3 else 0.0
        except ValueError as exc:
            raise StateFormatError(f"line {lineno}: malformed number: {exc}") from exc
        terms[bitstring] = complex(re, im)
    if n is None:
        raise StateFormatError("no amplitude lines found")
    if n < 2:
        raise StateFormatError("need at least 2 qubits (bitstring length >= 2)")
    norm = math.sqrt(sum(abs(a) ** 2 for a in terms.values()))
    if norm == 0.0:
        raise StateFormatError("zero vector: all amplitudes vanish")
    if abs(norm - 1.0) > 1e-9:
        log.info("normalizing custom state: input 2-norm was %.12g", norm)
    amps = {
        BasisState.from_string(b): a / norm for b, a in terms.items() if a != 0
    }
    return PureState(n, amps)


def density_of(psi: PureState) -> DensityOperator:
    """Rank-1 projector |psi><psi| on the state's own support."""
    support = psi.support
    vec = np.array([psi.amplitudes[s] for s in support], dtype=complex)
    return DensityOperator(support, np.outer(vec, vec.conj()))


def permute_amplitudes(psi: PureState, perm: list[int] | tuple[int, ...]) -> PureState:
    """Relabel qubits of a pure state: qubit j moves to position perm[j-1]."""
    n = psi.n
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"perm must be a permutation of 1..{n}, got {list(perm)}")
    out: dict[BasisState, complex] = {}
    for ket, amp in psi.amplitudes.items():
        bits = 0
        for j in range(1, n + 1):
            if ket.bit_of(j):
                bits |= 1 << (n - perm[j - 1])
        out[BasisState(bits, n)] = amp
    return PureState(n, out)


@dataclass(frozen=True)
class StateFamily:
    """A named state family at a fixed qubit count."""

    tag: str
    n: int

    def __post_init__(self) -> None:
        if self.tag not in ("w", "ghz", "xi"):
            raise ValueError(f"unknown family tag {self.tag!r}")
        _check_n(self.n)

    def build(self) -> PureState:
        return {"w": make_w, "ghz": make_ghz, "xi": make_xi}[self.tag](self.n)


def _check_n(n: int) -> None:
    # n=1 has no bipartition: every per-pair sum is empty, so reject rather
    # than return vacuous zeros.
    if n < 2:
        raise ValueError(f"need at least 2 qubits, got n={n}")
