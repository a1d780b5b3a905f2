"""Figure rendering for sweep output.

Renders the measure-vs-qubit-count curves to an image file next to the CSV.
Uses the Agg backend so it works headless.
"""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

MEASURE_LABELS = {
    "one_tangle": "one-tangle",
    "two_tangle": "two-tangle",
    "pi": "pi-tangle",
    "total_neg": "total bipartition negativity",
    "total_sq": "total of squared one-tangles",
}


def render_sweep_figure(rows, out_path: str, title: str | None = None) -> None:
    """Plot sweep rows (one curve per measure) and save to ``out_path``."""
    measures: list[str] = []
    for row in rows:
        if row.measure not in measures:
            measures.append(row.measure)
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for measure in measures:
        pts = sorted((r.n, r.value) for r in rows if r.measure == measure)
        ax.plot(
            [p[0] for p in pts],
            [p[1] for p in pts],
            marker=".",
            markersize=4,
            linewidth=1.2,
            label=MEASURE_LABELS.get(measure, measure),
        )
    ax.set_xlabel("number of qubits")
    ax.set_ylabel("value")
    if title:
        ax.set_title(title)
    ax.grid(alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
