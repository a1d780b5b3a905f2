"""Computational-basis bitstring labels and ordered support bases.

Convention used throughout the package: qubit 1 is the *leftmost* character
of the bitstring ket, i.e. the most significant bit of the integer label.
``|100>`` therefore has qubit 1 excited and qubits 2, 3 in ``|0>``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

# Upper bound on the qubit count for bitstring labels.  Guards runaway
# storage for sparse numerics; closed-form evaluation has no such limit.
MAX_QUBITS = 4096


@dataclass(frozen=True, order=True)
class BasisState:
    """One n-qubit computational-basis ket, stored as an integer bit pattern."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_QUBITS:
            raise ValueError(f"qubit count must be in 1..{MAX_QUBITS}, got {self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bit pattern {self.bits} out of range for n={self.n}")

    @classmethod
    def from_string(cls, text: str) -> "BasisState":
        """Parse a literal 0/1 string, qubit 1 leftmost (e.g. ``"100"``)."""
        if not text or any(c not in "01" for c in text):
            raise ValueError(f"bitstring must be nonempty 0/1 characters, got {text!r}")
        return cls(int(text, 2), len(text))

    def bit_of(self, q: int) -> int:
        """Occupation of qubit ``q`` (1-based, 1 = most significant)."""
        self._check_qubit(q)
        return (self.bits >> (self.n - q)) & 1

    def with_bit(self, q: int, value: int) -> "BasisState":
        """Copy of this ket with qubit ``q`` set to ``value``."""
        self._check_qubit(q)
        if value not in (0, 1):
            raise ValueError(f"bit value must be 0 or 1, got {value}")
        mask = 1 << (self.n - q)
        bits = self.bits | mask if value else self.bits & ~mask
        return BasisState(bits, self.n)

    def _check_qubit(self, q: int) -> None:
        if not 1 <= q <= self.n:
            raise ValueError(f"qubit index {q} out of range 1..{self.n}")

    def __str__(self) -> str:
        return format(self.bits, f"0{self.n}b")


class SupportBasis:
    """Ordered list of distinct same-n basis kets with O(1) index lookup."""

    __slots__ = ("states", "_index")

    def __init__(self, states: Iterable[BasisState]):
        self.states: tuple[BasisState, ...] = tuple(states)
        if not self.states:
            raise ValueError("support basis must be nonempty")
        n = self.states[0].n
        if any(s.n != n for s in self.states):
            raise ValueError("all support kets must share the same qubit count")
        self._index: dict[BasisState, int] = {s: i for i, s in enumerate(self.states)}
        if len(self._index) != len(self.states):
            raise ValueError("duplicate kets in support basis")

    @classmethod
    def from_bits(cls, n: int, bits: Iterable[int]) -> "SupportBasis":
        return cls(BasisState(b, n) for b in bits)

    @property
    def n(self) -> int:
        return self.states[0].n

    def index(self, state: BasisState) -> int:
        return self._index[state]

    def union(self, other: "SupportBasis") -> "SupportBasis":
        """Set union of two supports, ordered by ascending bit pattern.

        The ordering is a pure function of the member set, so matrices built
        on a union support are reproducible run to run.
        """
        if self.n != other.n:
            raise ValueError(f"qubit count mismatch: {self.n} vs {other.n}")
        merged = set(self.states) | set(other.states)
        return SupportBasis(sorted(merged, key=lambda s: s.bits))

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self) -> Iterator[BasisState]:
        return iter(self.states)

    def __contains__(self, state: BasisState) -> bool:
        return state in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SupportBasis):
            return NotImplemented
        return self.states == other.states

    def __hash__(self) -> int:
        return hash(self.states)

    def __repr__(self) -> str:
        kets = ", ".join(str(s) for s in self.states)
        return f"SupportBasis([{kets}])"
