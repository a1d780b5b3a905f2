"""Exact closed-form values for the W and xi families at arbitrary n.

These expressions stay accurate far beyond the reach of the numeric path
(n ~ 10^6 and above).  Each carries an explicit validity range; asking for a
value outside it raises rather than extrapolating, because the derivations
behind the small-n cases genuinely differ (see the function docstrings).
"""
from __future__ import annotations

import math
from dataclasses import dataclass


class FormulaValidityError(ValueError):
    """Closed form requested outside its validity range."""


@dataclass(frozen=True)
class ClosedFormResult:
    """A closed-form value with its provenance and validity range."""

    value: float
    valid_for: tuple[int, int | None]  # inclusive min, None = unbounded
    formula_id: str


def _check_min(n: int, min_n: int, name: str) -> None:
    if n < min_n:
        raise FormulaValidityError(
            f"{name} requires n >= {min_n} (got n={n}); use the numeric path"
        )


def _stable_root_gap(n: int) -> float:
    """sqrt((n-2)^2 + 4) - (n - 2) without cancellation at large n."""
    m = n - 2
    if m <= 0:
        return math.sqrt(m * m + 4.0) - m
    # Rationalized form: the difference is Theta(1/n) while both terms are
    # Theta(n), so the direct subtraction loses ~all digits by n ~ 1e8.
    return 4.0 / (math.sqrt(m * m + 4.0) + m)


def w_one_tangle(n: int) -> float:
    """2 sqrt(n-1) / n."""
    _check_min(n, 2, "w_one_tangle")
    return 2.0 * math.sqrt(n - 1.0) / n


def w_two_tangle(n: int) -> float:
    """(sqrt((n-2)^2 + 4) - n + 2) / n."""
    _check_min(n, 2, "w_two_tangle")
    return _stable_root_gap(n) / n


def w_pi(n: int) -> float:
    """Residual one-tangle squared minus the (n-1) pair-tangle squares."""
    _check_min(n, 2, "w_pi")
    return w_one_tangle(n) ** 2 - (n - 1) * w_two_tangle(n) ** 2


def w_total_negativity(n: int) -> float:
    """Two-tangle summed over all n(n-1)/2 pairs; approaches 1."""
    _check_min(n, 2, "w_total_negativity")
    return (n - 1) / 2.0 * _stable_root_gap(n)


def w_total_squares(n: int) -> float:
    """Sum of squared one-tangles, 4(n-1)/n; approaches 4.

    Evaluated as 4 - 4/n: a single rounding, so the float gap from the limit
    stays within one ulp of the exact 4/n.
    """
    _check_min(n, 2, "w_total_squares")
    return 4.0 - 4.0 / n


def w_pt_spectrum(n: int) -> list[float]:
    """Ascending spectrum of the W state's single-qubit partial transpose.

    {-sqrt(n-1)/n, 0 x (2n-4), 1/n, (n-1)/n, sqrt(n-1)/n}: 2n values on the
    2n-ket support, summing to 1.
    """
    _check_min(n, 2, "w_pt_spectrum")
    root = math.sqrt(n - 1.0) / n
    vals = [-root] + [0.0] * (2 * n - 4) + [1.0 / n, root, (n - 1.0) / n]
    return sorted(vals)


def xi_one_tangle(n: int) -> float:
    """sqrt(8(n-1)) / (n+1).

    Describes the xi state for n >= 3 only: at n=2 the support kets behind
    the derivation coincide (|01...1> = |01>, |1...1> = |11>) and the actual
    one-tangle is 2/3.
    """
    _check_min(n, 2, "xi_one_tangle")
    return math.sqrt(8.0 * (n - 1.0)) / (n + 1)


def xi_negative_eigenvalue(n: int) -> float:
    """-sqrt(2(n-1)) / (n+1): the single negative PT eigenvalue for n >= 3.

    At n=2 the formula no longer describes the state (actual value -1/3);
    see xi_one_tangle.
    """
    _check_min(n, 2, "xi_negative_eigenvalue")
    return -math.sqrt(2.0 * (n - 1.0)) / (n + 1)


def xi_two_tangle(n: int) -> float:
    """0 for n >= 4, where tracing to a pair leaves a separable state.

    For n < 4 the reduced pair keeps cross terms between the full-excitation
    component and the single-excitation kets, so the derivation does not
    apply; use the numeric path.
    """
    _check_min(n, 4, "xi_two_tangle")
    return 0.0


def xi_pi(n: int) -> float:
    """8(n-1) / (n+1)^2 for n >= 4 (assumes vanishing pair tangles)."""
    _check_min(n, 4, "xi_pi")
    return 8.0 * (n - 1.0) / (n + 1) ** 2


def xi_total_negativity(n: int) -> float:
    """0 for n >= 4: every pair is separable."""
    _check_min(n, 4, "xi_total_negativity")
    return n * (n - 1) / 2.0 * xi_two_tangle(n)


def xi_total_squares(n: int) -> float:
    """8n(n-1) / (n+1)^2; approaches 8 at rate 8(3n+1)/(n+1)^2 ~ 24/n.

    Valid from n >= 3 (n=2 caveat as for xi_one_tangle).
    """
    _check_min(n, 2, "xi_total_squares")
    return 8.0 * n * (n - 1.0) / (n + 1) ** 2


# Asymptotic limits used as the optional [0,1] normalization convention for
# the totals.  This is a documented convention, not a derived result: the
# families' totals approach these constants from below/above respectively.
NORMALIZATION_LIMITS: dict[tuple[str, str], float] = {
    ("w", "total_neg"): 1.0,
    ("w", "total_sq"): 4.0,
    ("xi", "total_sq"): 8.0,
}


@dataclass(frozen=True)
class _Entry:
    func: object
    min_n: int  # smallest n at which the formula describes the actual state


# (family, measure) -> closed form, keyed by the CLI measure names.  The xi
# entries start at n=3 or n=4: below that the formulas evaluate but do not
# describe the state, so reports must fall back to the numeric path.
_REGISTRY: dict[tuple[str, str], _Entry] = {
    ("w", "one_tangle"): _Entry(w_one_tangle, 2),
    ("w", "two_tangle"): _Entry(w_two_tangle, 2),
    ("w", "pi"): _Entry(w_pi, 2),
    ("w", "total_neg"): _Entry(w_total_negativity, 2),
    ("w", "total_sq"): _Entry(w_total_squares, 2),
    ("xi", "one_tangle"): _Entry(xi_one_tangle, 3),
    ("xi", "two_tangle"): _Entry(xi_two_tangle, 4),
    ("xi", "pi"): _Entry(xi_pi, 4),
    ("xi", "total_neg"): _Entry(xi_total_negativity, 4),
    ("xi", "total_sq"): _Entry(xi_total_squares, 3),
}


def has_closed_form(family: str, measure: str) -> bool:
    return (family, measure) in _REGISTRY


def closed_form_min_n(family: str, measure: str) -> int:
    entry = _REGISTRY.get((family, measure))
    if entry is None:
        raise FormulaValidityError(f"no closed form for family={family!r} measure={measure!r}")
    return entry.min_n


def evaluate(family: str, measure: str, n: int) -> ClosedFormResult:
    """Closed-form value of a named measure, guarded by its validity range."""
    entry = _REGISTRY.get((family, measure))
    if entry is None:
        raise FormulaValidityError(
            f"no closed form for family={family!r} measure={measure!r}; use the numeric path"
        )
    if n < entry.min_n:
        raise FormulaValidityError(
            f"closed form for {family}/{measure} requires n >= {entry.min_n} "
            f"(got n={n}); use the numeric path"
        )
    value = entry.func(n)
    return ClosedFormResult(float(value), (entry.min_n, None), f"{family}_{measure}")
