"""Delimited and figure artifacts for the reporting commands.

Figures render through the Agg backend so headless runs work; files go
through the atomic writers like everything else.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .io_utils import atomic_write_bytes, atomic_write_text  # noqa: E402


def _csv_text(rows: list[list[object]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _save_png(path: Path, fig) -> Path:
    buf = io.BytesIO()
    fig.savefig(buf, format="png", dpi=150)
    plt.close(fig)
    return atomic_write_bytes(path, buf.getvalue())


def write_confusion_csv(path: Path, behaviors, matrix) -> Path:
    rows: list[list[object]] = [["behavior", *behaviors]]
    for name, row in zip(behaviors, matrix):
        rows.append([name, *[f"{value:.4f}" for value in row]])
    return atomic_write_text(path, _csv_text(rows))


def render_confusion_png(path: Path, behaviors, matrix) -> Path:
    fig, ax = plt.subplots(figsize=(6.5, 5.5))
    image = ax.imshow(matrix, cmap="viridis", vmin=0.0, vmax=1.0)
    ax.set_xticks(range(len(behaviors)), behaviors, rotation=30, ha="right")
    ax.set_yticks(range(len(behaviors)), behaviors)
    ax.set_xlabel("evaluation traces")
    ax.set_ylabel("representatives")
    for i, row in enumerate(matrix):
        for j, value in enumerate(row):
            ax.text(
                j, i, f"{value:.2f}", ha="center", va="center",
                color="white" if value < 0.5 else "black",
            )
    fig.colorbar(image, ax=ax, label="chronology distance")
    fig.tight_layout()
    return _save_png(path, fig)


def write_iterations_csv(path: Path, records) -> Path:
    rows: list[list[object]] = [[
        "pass", "base", "gmap_score", "generated", "kept",
        "discarded_event", "discarded_duplicate", "target_size_after",
    ]]
    for r in records:
        rows.append([
            r.pass_number, r.base_id, f"{r.gmap_score:.4f}", r.generated,
            r.kept, r.discarded_event, r.discarded_duplicate,
            r.target_size_after,
        ])
    return atomic_write_text(path, _csv_text(rows))


def write_weights_csv(path: Path, weights) -> Path:
    rows: list[list[object]] = [[
        "rank", "base", "similarity", "edges", "weight", "skolem_risk",
        "unanchored",
    ]]
    for w in weights:
        rows.append([
            w.rank, w.base_id, f"{w.similarity:.4f}", w.edges,
            f"{w.weight:.4f}", w.skolem_risk, " ".join(w.unanchored),
        ])
    return atomic_write_text(path, _csv_text(rows))


def render_hypotheses_png(path: Path, records) -> Path:
    labels = [f"p{r.pass_number}:{r.base_id}" for r in records]
    kept = [r.kept for r in records]
    events = [r.discarded_event for r in records]
    dupes = [r.discarded_duplicate for r in records]
    xs = list(range(len(records)))
    fig, ax = plt.subplots(figsize=(max(6.0, 1.2 * len(records)), 4.5))
    ax.bar(xs, kept, label="kept", color="#2a7f3f")
    ax.bar(xs, events, bottom=kept, label="discarded: unobserved event",
           color="#c4452d")
    ax.bar(xs, dupes, bottom=[a + b for a, b in zip(kept, events)],
           label="discarded: duplicate", color="#b0892b")
    ax.set_xticks(xs, labels, rotation=30, ha="right")
    ax.set_ylabel("hypotheses")
    ax.set_title("hypotheses per iteration")
    ax.legend()
    fig.tight_layout()
    return _save_png(path, fig)
