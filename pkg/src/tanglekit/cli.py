"""Command-line front end.

Subcommands: ``measure`` (full report for one state), ``sweep`` (CSV of
measures over a range of qubit counts, optionally rendered to a figure),
``check`` (consistency suite), ``spectrum`` (partial-transpose eigenvalues).

Exit codes are a contract: 0 success, 1 check failures, 2 usage errors,
3 validity-guard errors, 4 resource caps, 5 internal numerical failures.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import closed_form
from .closed_form import FormulaValidityError, NORMALIZATION_LIMITS
from .measures import ckw_report, closed_form_report, is_ppt_separable_pair
from .operators import (
    DEFAULT_DENSE_CAP,
    DenseCapError,
    SupportCapError,
    embed_dense,
    partial_trace_to_pair,
    partial_transpose,
)
from .spectral import (
    NonHermitianError,
    hermitian_eigenvalues,
    negativity,
    trace_norm,
)
from .states import (
    PureState,
    StateFamily,
    StateFormatError,
    density_of,
    parse_custom,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_VALIDITY = 3
EXIT_RESOURCE = 4
EXIT_NUMERICAL = 5

# Largest n the structured (restricted-support) numeric path will attempt;
# sweeps switch to closed forms beyond it.
STRUCTURED_CAP = 500
MAX_DENSE_CAP = 14

DENSE_CAP_ENV = "TANGLEKIT_DENSE_CAP"

SWEEP_MEASURES = ("one_tangle", "two_tangle", "pi", "total_neg", "total_sq")

# Tolerance of the closed-vs-numeric consistency checks run by `check`
# (relative where the closed value is nonzero, absolute against zero).
CHECK_RTOL = 1e-8


class ResourceCapError(RuntimeError):
    """Requested n is beyond the configured numeric caps."""


class UsageError(ValueError):
    """Bad argument combination not already caught by argparse."""


@dataclass(frozen=True)
class SweepRow:
    family: str
    n: int
    measure: str
    value: float
    method: str


def _fmt(value: float) -> str:
    # 12 significant digits, locale independent, reproducible byte-for-byte.
    return format(float(value), ".12g")


def _dense_cap_default() -> int:
    raw = os.environ.get(DENSE_CAP_ENV)
    if raw is None:
        return DEFAULT_DENSE_CAP
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"{DENSE_CAP_ENV} must be an integer, got {raw!r}") from exc


def _load_state(args) -> tuple[str, PureState]:
    if args.family == "custom":
        if not getattr(args, "state_file", None):
            raise UsageError("--state-file is required with --family custom")
        text = Path(args.state_file).read_text(encoding="utf-8")
        return "custom", parse_custom(text)
    if args.n is None:
        raise UsageError("--n is required for built-in families")
    return args.family, StateFamily(args.family, args.n).build()


def _check_numeric_reach(n: int, *, dense: bool, dense_cap: int) -> None:
    if dense and n > dense_cap:
        raise DenseCapError(
            f"--dense requires n <= dense cap ({dense_cap}), got n={n}"
        )
    if n > STRUCTURED_CAP:
        raise ResourceCapError(
            f"numeric path capped at n <= {STRUCTURED_CAP}, got n={n}"
        )


def _rel_delta_ok(numeric: float, closed: float, rtol: float) -> bool:
    if closed == 0.0:
        return abs(numeric) <= rtol
    return abs(numeric - closed) <= rtol * abs(closed)


def _report_scalars(report) -> dict[str, float]:
    return {
        "one_tangle": report.one_tangles[0],
        "two_tangle": report.two_tangles[(1, 2)],
        "pi": report.pi_tangle,
        "total_neg": report.total_bipartition_negativity,
        "total_sq": report.total_one_tangle_squares,
    }


# ---------------------------------------------------------------- measure


def cmd_measure(args) -> int:
    family, psi = _load_state(args)
    n = psi.n

    numeric = None
    closed = None
    if args.method in ("numeric", "both"):
        _check_numeric_reach(n, dense=args.dense, dense_cap=args.dense_cap)
        numeric = ckw_report(psi, family, dense=args.dense, dense_cap=args.dense_cap)
    if args.method in ("closed", "both"):
        closed = closed_form_report(family, n)

    normalized = None
    if args.normalize_totals:
        source = numeric or closed
        limits = {
            m: NORMALIZATION_LIMITS.get((family, m)) for m in ("total_neg", "total_sq")
        }
        if limits["total_neg"] is None and limits["total_sq"] is None:
            raise FormulaValidityError(
                f"no normalization convention defined for family {family!r}"
            )
        normalized = {
            "total_bipartition_negativity": (
                source.total_bipartition_negativity / limits["total_neg"]
                if limits["total_neg"]
                else None
            ),
            "total_one_tangle_squares": (
                source.total_one_tangle_squares / limits["total_sq"]
                if limits["total_sq"]
                else None
            ),
        }

    if args.method == "both":
        nums = _report_scalars(numeric)
        clos = _report_scalars(closed)
        deltas = {m: abs(nums[m] - clos[m]) for m in SWEEP_MEASURES}
        if args.json:
            payload = {
                "family": family,
                "n": n,
                "method": "both",
                "numeric": numeric.to_dict(),
                "closed_form": closed.to_dict(),
                "deltas": deltas,
            }
            if normalized is not None:
                payload["normalized_totals"] = normalized
            print(json.dumps(payload, indent=2))
        else:
            print(f"family {family}  n {n}  method both")
            print(f"{'measure':<12}{'numeric':>20}{'closed_form':>20}{'|delta|':>12}")
            for m in SWEEP_MEASURES:
                print(
                    f"{m:<12}{_fmt(nums[m]):>20}{_fmt(clos[m]):>20}"
                    f"{format(deltas[m], '.3g'):>12}"
                )
            _print_normalized(normalized)
        return EXIT_OK

    report = numeric if args.method == "numeric" else closed
    if args.json:
        payload = report.to_dict()
        if normalized is not None:
            payload["normalized_totals"] = normalized
        print(json.dumps(payload, indent=2))
    else:
        _print_report_table(report)
        _print_normalized(normalized)
    return EXIT_OK


def _print_report_table(report) -> None:
    print(f"family {report.family}  n {report.n}  method {report.method}")
    for i, v in enumerate(report.one_tangles, start=1):
        print(f"one_tangle[{i}] {_fmt(v)}")
    for (i, k), v in sorted(report.two_tangles.items()):
        print(f"two_tangle[{i},{k}] {_fmt(v)}")
    for i, v in enumerate(report.pi_values, start=1):
        flag = "" if report.ckw_satisfied[i - 1] else "  CKW-VIOLATED"
        print(f"pi[{i}] {_fmt(v)}{flag}")
    print(f"pi_tangle {_fmt(report.pi_tangle)}")
    print(f"total_bipartition_negativity {_fmt(report.total_bipartition_negativity)}")
    print(f"total_one_tangle_squares {_fmt(report.total_one_tangle_squares)}")


def _print_normalized(normalized) -> None:
    if normalized is None:
        return
    for key, value in normalized.items():
        shown = _fmt(value) if value is not None else "n/a"
        print(f"normalized {key} {shown}  (convention: divide by asymptotic limit)")


# ---------------------------------------------------------------- sweep


def _sweep_value(family: str, measure: str, n: int) -> tuple[float, str]:
    if n <= STRUCTURED_CAP:
        report = ckw_report(StateFamily(family, n).build(), family)
        return _report_scalars(report)[measure], "numeric"
    if not closed_form.has_closed_form(family, measure):
        raise ResourceCapError(
            f"family {family!r} has no closed form for {measure!r} and "
            f"n={n} exceeds the numeric cap {STRUCTURED_CAP}"
        )
    return closed_form.evaluate(family, measure, n).value, "closed_form"


def cmd_sweep(args) -> int:
    measures = [m.strip() for m in args.measures.split(",") if m.strip()]
    if not measures:
        raise UsageError("--measures must name at least one measure")
    for m in measures:
        if m not in SWEEP_MEASURES:
            raise UsageError(
                f"unknown measure {m!r}; choose from {', '.join(SWEEP_MEASURES)}"
            )
    if not 2 <= args.n_min <= args.n_max:
        raise UsageError("need 2 <= --n-min <= --n-max")

    rows: list[SweepRow] = []
    for n in range(args.n_min, args.n_max + 1):
        for measure in measures:
            value, method = _sweep_value(args.family, measure, n)
            rows.append(SweepRow(args.family, n, measure, value, method))

    out_path = Path(args.out)
    with out_path.open("w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["family", "n", "measure", "value", "method"])
        for row in rows:
            writer.writerow([row.family, row.n, row.measure, _fmt(row.value), row.method])

    if args.plot is not None:
        from . import plotting  # matplotlib import deferred to first use

        plot_path = args.plot if args.plot != "" else str(out_path.with_suffix(".png"))
        plotting.render_sweep_figure(
            rows, plot_path, title=f"{args.family} family, n={args.n_min}..{args.n_max}"
        )
        print(f"wrote {out_path} and {plot_path}")
    else:
        print(f"wrote {out_path}")
    return EXIT_OK


# ---------------------------------------------------------------- check


def _run_checks(family: str, psi: PureState, dense_cap: int) -> list[tuple[str, bool, str]]:
    """Consistency checks; each entry is (name, passed, detail)."""
    n = psi.n
    rho = density_of(psi)
    pt = partial_transpose(rho, 1)
    results: list[tuple[str, bool, str]] = []

    def add(name: str, ok: bool, detail: str = "") -> None:
        results.append((name, bool(ok), detail))

    # Structure: involution, trace, Hermiticity, trace-norm identity.
    ptpt = partial_transpose(pt, 1)
    add("pt_involution", ptpt.allclose(rho, tol=0.0), "PT applied twice returns the state")
    trace = float(pt.matrix.trace().real)
    add("pt_trace_one", abs(trace - 1.0) <= 1e-12, f"trace {trace!r}")
    herm_gap = float(np.abs(pt.matrix - pt.matrix.conj().T).max())
    add("pt_hermitian", herm_gap <= 1e-12, f"max |M - M^dag| = {herm_gap:.3g}")
    neg = negativity(pt)
    tnorm = trace_norm(pt)
    add(
        "negativity_is_trace_norm_minus_one",
        abs(neg - (tnorm - 1.0)) <= 1e-10,
        f"negativity {_fmt(neg)} vs trace norm - 1 = {_fmt(tnorm - 1.0)}",
    )

    report = ckw_report(psi, family)
    if family == "custom":
        worst = min(report.pi_values)
        add("ckw_report_built", True, f"min pi_i = {_fmt(worst)} (sign reported, not asserted)")
        if not all(report.ckw_satisfied):
            add("ckw_violation_reported", True, "monogamy residual below tolerance; see report")
    else:
        add(
            "ckw_sign",
            all(report.ckw_satisfied),
            f"min pi_i = {_fmt(min(report.pi_values))}",
        )

    if n == 2:
        add(
            "pair_identity_pi_zero",
            abs(report.pi_tangle) <= 1e-10,
            f"pi = {_fmt(report.pi_tangle)} (2-qubit identity)",
        )

    if family == "w":
        spec = hermitian_eigenvalues(pt)
        expected = closed_form.w_pt_spectrum(n)
        worst_gap = max(abs(a - b) for a, b in zip(spec.eigenvalues, expected))
        add(
            "pt_spectrum_matches_closed_roots",
            len(spec.eigenvalues) == len(expected) and worst_gap <= 1e-10,
            f"max |eig gap| = {worst_gap:.3g} over {len(expected)} values",
        )
        add("single_negative_eigenvalue", spec.negative_count == 1, f"count {spec.negative_count}")
    if family == "xi":
        spec = hermitian_eigenvalues(pt)
        add("single_negative_eigenvalue", spec.negative_count == 1, f"count {spec.negative_count}")
        if n >= 3:
            gap = abs(spec.eigenvalues[0] - closed_form.xi_negative_eigenvalue(n))
            add("negative_eigenvalue_matches_formula", gap <= 1e-10, f"gap {gap:.3g}")
        else:
            add("negative_eigenvalue_small_n", True,
                f"n=2: formula support degenerates; eigenvalue {_fmt(spec.eigenvalues[0])}")
        if n >= 4:
            pair = partial_trace_to_pair(rho, 1, 2)
            add("pair_ppt_separable", is_ppt_separable_pair(pair), "reduced pair is PPT")
    if family == "ghz":
        add("one_tangle_is_one", abs(report.one_tangles[0] - 1.0) <= 1e-9,
            f"one-tangle {_fmt(report.one_tangles[0])}")
        if n >= 3:
            add("two_tangle_is_zero", abs(report.two_tangles[(1, 2)]) <= 1e-10,
                f"two-tangle {_fmt(report.two_tangles[(1, 2)])}")
            add("pi_is_one", abs(report.pi_tangle - 1.0) <= 1e-9,
                f"pi {_fmt(report.pi_tangle)}")

    if family in ("w", "xi"):
        try:
            closed = closed_form_report(family, n)
        except FormulaValidityError as exc:
            add("closed_vs_numeric", True, f"skipped: {exc}")
        else:
            nums = _report_scalars(report)
            clos = _report_scalars(closed)
            bad = [
                m for m in SWEEP_MEASURES if not _rel_delta_ok(nums[m], clos[m], CHECK_RTOL)
            ]
            add(
                "closed_vs_numeric",
                not bad,
                "all deltas within 1e-8 relative" if not bad else f"failing: {bad}",
            )

    if n <= dense_cap:
        dense_spec = hermitian_eigenvalues(embed_dense(pt, dense_cap))
        structured = hermitian_eigenvalues(pt).eigenvalues
        padded = sorted(list(structured) + [0.0] * ((1 << n) - pt.dim))
        worst = max(abs(a - b) for a, b in zip(dense_spec.eigenvalues, padded))
        add("dense_matches_structured", worst <= 1e-10, f"max |eig gap| = {worst:.3g}")
    else:
        add("dense_matches_structured", True, f"skipped: n={n} above dense cap {dense_cap}")

    return results


def cmd_check(args) -> int:
    family, psi = _load_state(args)
    if psi.n > STRUCTURED_CAP:
        raise ResourceCapError(
            f"check needs the numeric path (n <= {STRUCTURED_CAP}), got n={psi.n}"
        )
    results = _run_checks(family, psi, args.dense_cap)
    failures = 0
    for name, ok, detail in results:
        tag = "PASS" if ok else "FAIL"
        suffix = f"  {detail}" if detail else ""
        print(f"[{tag}] {name}{suffix}")
        failures += 0 if ok else 1
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return EXIT_OK if failures == 0 else EXIT_CHECK_FAILED


# ---------------------------------------------------------------- spectrum


def cmd_spectrum(args) -> int:
    family, psi = _load_state(args)
    if psi.n > STRUCTURED_CAP:
        raise ResourceCapError(
            f"spectrum needs the numeric path (n <= {STRUCTURED_CAP}), got n={psi.n}"
        )
    if not 1 <= args.qubit <= psi.n:
        raise UsageError(f"--qubit must be in 1..{psi.n}")
    pt = partial_transpose(density_of(psi), args.qubit)
    spec = hermitian_eigenvalues(pt)
    for v in spec.eigenvalues:
        print(_fmt(v))
    print(f"negativity {_fmt(2.0 * spec.negative_sum)}")
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tanglekit",
        description="Negativity-based entanglement measures for n-qubit pure states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, families=("w", "ghz", "xi", "custom"), with_n=True):
        p.add_argument("--family", required=True, choices=families)
        if with_n:
            p.add_argument("--n", type=int, help="qubit count (built-in families)")
        p.add_argument("--state-file", help="custom-state file (family custom)")
        p.add_argument(
            "--dense-cap",
            type=int,
            default=None,
            help=f"dense-path qubit cap, up to {MAX_DENSE_CAP} "
            f"(default {DEFAULT_DENSE_CAP}; env {DENSE_CAP_ENV})",
        )

    p = sub.add_parser("measure", help="full measure report for one state")
    add_common(p)
    p.add_argument("--method", choices=("numeric", "closed", "both"), default="numeric")
    p.add_argument("--dense", action="store_true", help="force the dense 2^n numeric path")
    p.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    p.add_argument(
        "--normalize-totals",
        action="store_true",
        help="also report totals divided by their asymptotic limits (a convention)",
    )
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("sweep", help="measures over a range of n, to CSV (and figure)")
    p.add_argument("--family", required=True, choices=("w", "ghz", "xi"))
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument(
        "--measures",
        required=True,
        help=f"comma-separated subset of: {', '.join(SWEEP_MEASURES)}",
    )
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument(
        "--plot",
        nargs="?",
        const="",
        default=None,
        help="also render a figure (optional path; default: CSV path with .png)",
    )
    p.add_argument("--dense-cap", type=int, default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("check", help="consistency checks for one state")
    add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("spectrum", help="partial-transpose eigenvalues")
    add_common(p)
    p.add_argument("--qubit", type=int, required=True)
    p.set_defaults(func=cmd_spectrum)

    return parser


def _resolve_dense_cap(args) -> int:
    cap = args.dense_cap if args.dense_cap is not None else _dense_cap_default()
    if not 1 <= cap <= MAX_DENSE_CAP:
        raise UsageError(f"dense cap must be in 1..{MAX_DENSE_CAP}, got {cap}")
    return cap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        args.dense_cap = _resolve_dense_cap(args)
        return args.func(args)
    except FormulaValidityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDITY
    except (SupportCapError, DenseCapError, ResourceCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (NonHermitianError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (UsageError, StateFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
