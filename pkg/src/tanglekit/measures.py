"""Entanglement measures assembled from the operator and spectral layers.

One-tangle: negativity of the full state under a single-qubit partial
transpose.  Two-tangle: negativity of the reduced pair state.  The per-qubit
residual pi_i = N_i^2 - sum_k N_ik^2 is non-negative when monogamy holds;
its average over qubits is the pi-tangle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from . import closed_form
from .operators import (
    DEFAULT_DENSE_CAP,
    DensityOperator,
    embed_dense,
    partial_trace_to_pair,
    partial_transpose,
)
from .spectral import negativity
from .states import SYMMETRIC_FAMILIES, PureState, density_of

# A residual above -CKW_TOL counts as satisfying monogamy; below it is a
# genuine violation and is reported, never clamped.
CKW_TOL = 1e-9

PPT_TOL = 1e-10


@dataclass(frozen=True)
class MeasureReport:
    """Every per-qubit, per-pair, and total quantity for one state."""

    family: str
    n: int
    one_tangles: list[float]
    two_tangles: dict[tuple[int, int], float]
    pi_values: list[float]
    pi_tangle: float
    total_bipartition_negativity: float
    total_one_tangle_squares: float
    ckw_satisfied: list[bool]
    method: str

    def to_dict(self) -> dict:
        """JSON-ready mapping with stable field names."""
        return {
            "family": self.family,
            "n": self.n,
            "one_tangles": list(self.one_tangles),
            "two_tangles": [
                {"i": i, "k": k, "value": v}
                for (i, k), v in sorted(self.two_tangles.items())
            ],
            "pi_values": list(self.pi_values),
            "pi_tangle": self.pi_tangle,
            "total_bipartition_negativity": self.total_bipartition_negativity,
            "total_one_tangle_squares": self.total_one_tangle_squares,
            "ckw_satisfied": list(self.ckw_satisfied),
            "method": self.method,
        }


def one_tangle(
    psi: PureState,
    i: int,
    *,
    dense: bool = False,
    dense_cap: int = DEFAULT_DENSE_CAP,
) -> float:
    """Negativity of |psi><psi| transposed on qubit ``i``.

    ``dense=True`` routes the eigenproblem through the full 2^n embedding
    instead of the restricted support (verification path; capped).
    """
    pt = partial_transpose(density_of(psi), i)
    if dense:
        return negativity(embed_dense(pt, dense_cap))
    return negativity(pt)


def two_tangle(psi: PureState, i: int, k: int) -> float:
    """Negativity of the reduced pair (i, k) under partial transpose.

    The transpose acts on the pair's first qubit, min(i, k); transposing the
    other qubit gives the matrix transpose, which has the same spectrum.
    """
    lo, hi = min(i, k), max(i, k)
    if lo == hi:
        raise ValueError("pair qubits must be distinct")
    pair = partial_trace_to_pair(density_of(psi), lo, hi)
    return negativity(partial_transpose(pair, 1))


def pi_tangle(
    psi: PureState,
    family: str = "custom",
    *,
    dense: bool = False,
    dense_cap: int = DEFAULT_DENSE_CAP,
) -> tuple[list[float], float]:
    """Per-qubit residuals pi_i and their mean."""
    report = ckw_report(psi, family, dense=dense, dense_cap=dense_cap)
    return report.pi_values, report.pi_tangle


def total_bipartition_negativity(psi: PureState, family: str = "custom") -> float:
    """Two-tangle summed over all n(n-1)/2 unordered pairs."""
    n = psi.n
    if family in SYMMETRIC_FAMILIES:
        return n * (n - 1) / 2.0 * two_tangle(psi, 1, 2)
    return math.fsum(two_tangle(psi, i, k) for i, k in combinations(range(1, n + 1), 2))


def total_one_tangle_squares(
    psi: PureState,
    family: str = "custom",
    *,
    dense: bool = False,
    dense_cap: int = DEFAULT_DENSE_CAP,
) -> float:
    """Sum over qubits of the squared one-tangle."""
    n = psi.n
    if family in SYMMETRIC_FAMILIES:
        return n * one_tangle(psi, 1, dense=dense, dense_cap=dense_cap) ** 2
    return math.fsum(
        one_tangle(psi, i, dense=dense, dense_cap=dense_cap) ** 2
        for i in range(1, n + 1)
    )


def ckw_report(
    psi: PureState,
    family: str = "custom",
    *,
    dense: bool = False,
    dense_cap: int = DEFAULT_DENSE_CAP,
) -> MeasureReport:
    """Full numeric measure report for one state.

    Built-in families are permutation symmetric, so one representative qubit
    and one representative pair suffice; custom states always compute every
    qubit and every pair (correctness over speed for unknown input).
    """
    n = psi.n
    pairs = list(combinations(range(1, n + 1), 2))
    if family in SYMMETRIC_FAMILIES:
        n1 = one_tangle(psi, 1, dense=dense, dense_cap=dense_cap)
        n12 = two_tangle(psi, 1, 2)
        ones = [n1] * n
        twos = {pair: n12 for pair in pairs}
        pi_i = n1 * n1 - (n - 1) * n12 * n12
        pis = [pi_i] * n
    else:
        ones = [
            one_tangle(psi, i, dense=dense, dense_cap=dense_cap)
            for i in range(1, n + 1)
        ]
        twos = {(i, k): two_tangle(psi, i, k) for i, k in pairs}
        pis = []
        for i in range(1, n + 1):
            paired = math.fsum(
                twos[(min(i, k), max(i, k))] ** 2 for k in range(1, n + 1) if k != i
            )
            pis.append(ones[i - 1] ** 2 - paired)
    return MeasureReport(
        family=family,
        n=n,
        one_tangles=ones,
        two_tangles=twos,
        pi_values=pis,
        pi_tangle=math.fsum(pis) / n,
        total_bipartition_negativity=math.fsum(twos.values()),
        total_one_tangle_squares=math.fsum(v * v for v in ones),
        ckw_satisfied=[p >= -CKW_TOL for p in pis],
        method="numeric",
    )


def closed_form_report(family: str, n: int) -> MeasureReport:
    """Measure report built purely from the closed forms (W and xi only).

    Raises FormulaValidityError when any required formula is outside its
    validity range at this n.
    """
    one = closed_form.evaluate(family, "one_tangle", n).value
    two = closed_form.evaluate(family, "two_tangle", n).value
    pi = closed_form.evaluate(family, "pi", n).value
    total_neg = closed_form.evaluate(family, "total_neg", n).value
    total_sq = closed_form.evaluate(family, "total_sq", n).value
    pairs = list(combinations(range(1, n + 1), 2))
    return MeasureReport(
        family=family,
        n=n,
        one_tangles=[one] * n,
        two_tangles={pair: two for pair in pairs},
        pi_values=[pi] * n,
        pi_tangle=pi,
        total_bipartition_negativity=total_neg,
        total_one_tangle_squares=total_sq,
        ckw_satisfied=[pi >= -CKW_TOL] * n,
        method="closed_form",
    )


def is_ppt_separable_pair(rho2: DensityOperator, tol: float = PPT_TOL) -> bool:
    """PPT check for a two-qubit state: necessary and sufficient there."""
    if rho2.n != 2 or rho2.dim != 4:
        raise ValueError(
            f"expected a full 4x4 two-qubit operator, got n={rho2.n} dim={rho2.dim}"
        )
    return negativity(partial_transpose(rho2, 1)) <= tol
