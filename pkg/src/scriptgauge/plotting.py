"""Matplotlib rendering for report outputs.

Figures are written next to the delimited report files. SVG output omits
the creation date so identical runs produce identical bytes.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "scriptgauge"  # stable ids, reproducible bytes

import matplotlib.pyplot as plt  # noqa: E402


def _save(fig, out_path) -> None:
    out_path = str(out_path)
    kwargs = {"metadata": {"Date": None}} if out_path.endswith(".svg") else {}
    fig.savefig(out_path, bbox_inches="tight", **kwargs)
    plt.close(fig)


def save_feature_curves(positions, curves: dict[str, list | None], feature: str, out_path) -> None:
    """Line chart of per-class mean feature values along the script.

    `curves` maps a class label ("nominated"/"non-nominated") to a value
    series or None when the manifest has no documents of that class.
    """
    fig, ax = plt.subplots(figsize=(6.0, 3.6))
    styles = {"nominated": "-o", "non-nominated": "--s"}
    for label, series in curves.items():
        if series is None:
            continue
        ax.plot(positions, series, styles.get(label, "-"), label=label, markersize=4)
    ax.set_xlabel("script position (%)")
    ax.set_ylabel(feature)
    ax.set_title(f"{feature} along the script")
    ax.legend()
    ax.grid(True, alpha=0.3)
    _save(fig, out_path)


def save_ablation_bars(labels, val_scores, test_scores, out_path) -> None:
    """Grouped bars of validation/test macro-F1 per feature-block set."""
    import numpy as np

    x = np.arange(len(labels))
    width = 0.38
    fig, ax = plt.subplots(figsize=(max(6.0, 1.2 * len(labels)), 3.6))
    ax.bar(x - width / 2, val_scores, width, label="validation")
    ax.bar(x + width / 2, test_scores, width, label="test")
    ax.set_xticks(x)
    ax.set_xticklabels(labels, rotation=20, ha="right")
    ax.set_ylabel("macro-F1")
    ax.set_ylim(0.0, 1.05)
    ax.set_title("feature-block ablation")
    ax.legend()
    ax.grid(True, axis="y", alpha=0.3)
    _save(fig, out_path)
