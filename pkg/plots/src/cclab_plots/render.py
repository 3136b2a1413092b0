"""Render figures from the five experiment CSV schemas.

Only aggregate rows (`is_aggregate` true) are consumed unless the
per-seed overlay flag is set; confidence intervals are read from the
CSV, never recomputed.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from . import style  # noqa: E402

KINDS = ("noise_curves", "share_bars", "effect_trends", "action_counts")

# Header each figure kind expects, hence which CSVs it accepts.
_EXPECTED_HEADERS = {
    "noise_curves": ["agent", "noise_axis", "noise_level", "seed", "mean_ev",
                     "is_aggregate", "ci_low", "ci_high"],
    "share_bars": [["task", "role", "seed", "share", "is_aggregate",
                    "ci_low", "ci_high"],
                   ["task_set", "role", "seed", "share", "is_aggregate",
                    "ci_low", "ci_high"]],
    "effect_trends": ["axis", "level", "seed", "effect_size", "is_aggregate",
                      "ci_low", "ci_high"],
    "action_counts": ["axis", "level", "seed", "mean_comparisons",
                      "mean_calculations", "is_aggregate", "ci_low", "ci_high"],
}


class PlotError(ValueError):
    """Raised when the CSV does not match the requested figure kind."""


@dataclass(frozen=True)
class FigureSpec:
    csv_path: Path
    kind: str
    out_path: Path
    axis_labels: dict = field(default_factory=dict)
    per_seed_overlay: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise PlotError(f"unknown figure kind {self.kind!r}; "
                            f"valid kinds: {', '.join(KINDS)}")


def _load(spec: FigureSpec):
    path = Path(spec.csv_path)
    if not path.exists():
        raise PlotError(f"CSV not found: {path}")
    lines = [ln for ln in path.read_text().splitlines()
             if ln and not ln.startswith("#")]
    rows = list(csv.DictReader(lines))
    header = lines[0].split(",")
    expected = _EXPECTED_HEADERS[spec.kind]
    accepted = expected if isinstance(expected[0], list) else [expected]
    if header not in accepted:
        raise PlotError(
            f"CSV header {header} does not match figure kind {spec.kind!r}")
    return header, rows


def _agg(rows, **filters):
    out = [r for r in rows if r["is_aggregate"] == "true"
           and all(r[k] == v for k, v in filters.items())]
    return out


def _per_seed(rows, **filters):
    return [r for r in rows if r["is_aggregate"] == "false"
            and all(r[k] == v for k, v in filters.items())]


def _overlay(ax, rows, x_col, y_col, color, **filters):
    pts = _per_seed(rows, **filters)
    if pts:
        ax.scatter([float(r[x_col]) for r in pts],
                   [float(r[y_col]) for r in pts],
                   s=6, color=color, alpha=0.35, linewidths=0, zorder=1)


def _render_noise_curves(spec: FigureSpec, rows):
    fig, axes = plt.subplots(1, 2, figsize=(7.2, 3.0), sharey=True)
    for ax, axis in zip(axes, ("calculation_noise", "comparison_noise")):
        for agent in style.AGENT_COLORS:
            agg = sorted(_agg(rows, agent=agent, noise_axis=axis),
                         key=lambda r: float(r["noise_level"]))
            if not agg:
                continue
            x = [float(r["noise_level"]) for r in agg]
            y = [float(r["mean_ev"]) for r in agg]
            lo = [float(r["ci_low"]) for r in agg]
            hi = [float(r["ci_high"]) for r in agg]
            color = style.AGENT_COLORS[agent]
            ax.plot(x, y, "-o", color=color, label=style.AGENT_LABELS[agent])
            ax.fill_between(x, lo, hi, color=color, alpha=0.2, linewidth=0)
            if spec.per_seed_overlay:
                _overlay(ax, rows, "noise_level", "mean_ev", color,
                         agent=agent, noise_axis=axis)
        ax.axhline(style.MAX_EV_BOUND, color="black", linestyle="--",
                   linewidth=1.0, label="Max achievable EV")
        ax.set_xlabel(spec.axis_labels.get(axis, style.AXIS_LABELS[axis]))
        ax.set_title(style.AXIS_LABELS[axis])
    axes[0].set_ylabel(spec.axis_labels.get("y", "Mean obtained EV"))
    handles, labels = axes[0].get_legend_handles_labels()
    axes[1].legend(handles, labels, loc="lower left", fontsize=7)
    return fig


def _render_share_bars(spec: FigureSpec, rows, header):
    key = header[0]  # "task" or "task_set"
    labels = sorted({r[key] for r in rows})
    fig, ax = plt.subplots(figsize=(5.4, 3.0))
    width = 0.26
    for j, role in enumerate(style.ROLE_ORDER):
        xs, ys, errs = [], [], []
        for i, label in enumerate(labels):
            agg = _agg(rows, **{key: label, "role": role})
            if not agg:
                continue
            r = agg[0]
            xs.append(i + (j - 1) * width)
            ys.append(float(r["share"]))
            errs.append([float(r["share"]) - float(r["ci_low"]),
                         float(r["ci_high"]) - float(r["share"])])
        ax.bar(xs, ys, width=width, color=style.ROLE_COLORS[role],
               label=role.capitalize(),
               yerr=list(zip(*errs)) if errs else None,
               capsize=2, error_kw={"linewidth": 0.8})
        if spec.per_seed_overlay:
            for i, label in enumerate(labels):
                pts = _per_seed(rows, **{key: label, "role": role})
                ax.scatter([i + (j - 1) * width] * len(pts),
                           [float(r["share"]) for r in pts],
                           s=6, color="black", alpha=0.35, linewidths=0,
                           zorder=3)
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels)
    ax.set_xlabel(spec.axis_labels.get("x", key.replace("_", " ")))
    ax.set_ylabel(spec.axis_labels.get("y", "Choice share"))
    ax.legend(fontsize=7)
    return fig


def _axis_panels(rows):
    order = ("comparison_noise", "calculation_noise", "cost_scale")
    present = [a for a in order if any(r["axis"] == a for r in rows)]
    return present


def _render_effect_trends(spec: FigureSpec, rows):
    axes_present = _axis_panels(rows)
    fig, axes = plt.subplots(1, max(len(axes_present), 1),
                             figsize=(2.6 * max(len(axes_present), 1), 2.8),
                             squeeze=False)
    for ax, axis in zip(axes[0], axes_present):
        agg = sorted(_agg(rows, axis=axis), key=lambda r: float(r["level"]))
        x = [float(r["level"]) for r in agg]
        y = [float(r["effect_size"]) for r in agg]
        lo = [float(r["ci_low"]) for r in agg]
        hi = [float(r["ci_high"]) for r in agg]
        ax.errorbar(x, y, yerr=[[yy - l for yy, l in zip(y, lo)],
                                [h - yy for yy, h in zip(y, hi)]],
                    fmt="-o", color="#4c72b0", capsize=2, linewidth=1.4)
        ax.axhline(0.0, color="black", linewidth=0.8)
        if spec.per_seed_overlay:
            _overlay(ax, rows, "level", "effect_size", "#4c72b0", axis=axis)
        ax.set_xlabel(spec.axis_labels.get(axis, style.AXIS_LABELS[axis]))
    axes[0][0].set_ylabel(spec.axis_labels.get("y", "Effect size (T - C share)"))
    return fig


def _render_action_counts(spec: FigureSpec, rows):
    axes_present = _axis_panels(rows)
    fig, axes = plt.subplots(1, max(len(axes_present), 1),
                             figsize=(2.6 * max(len(axes_present), 1), 2.8),
                             squeeze=False)
    for ax, axis in zip(axes[0], axes_present):
        agg = sorted(_agg(rows, axis=axis), key=lambda r: float(r["level"]))
        x = [float(r["level"]) for r in agg]
        ax.plot(x, [float(r["mean_comparisons"]) for r in agg], "-o",
                color="#dd8452", label="Comparisons")
        ax.plot(x, [float(r["mean_calculations"]) for r in agg], "-s",
                color="#4c72b0", label="Calculations")
        if spec.per_seed_overlay:
            _overlay(ax, rows, "level", "mean_comparisons", "#dd8452", axis=axis)
            _overlay(ax, rows, "level", "mean_calculations", "#4c72b0", axis=axis)
        ax.set_xlabel(spec.axis_labels.get(axis, style.AXIS_LABELS[axis]))
    axes[0][0].set_ylabel(spec.axis_labels.get("y", "Mean count per episode"))
    axes[0][-1].legend(fontsize=7)
    return fig


def render(spec: FigureSpec) -> Path:
    """Render the figure described by `spec`; returns the image path."""
    header, rows = _load(spec)
    with plt.rc_context(style.RC):
        if spec.kind == "noise_curves":
            fig = _render_noise_curves(spec, rows)
        elif spec.kind == "share_bars":
            fig = _render_share_bars(spec, rows, header)
        elif spec.kind == "effect_trends":
            fig = _render_effect_trends(spec, rows)
        else:
            fig = _render_action_counts(spec, rows)
        out = Path(spec.out_path)
        out.parent.mkdir(parents=True, exist_ok=True)
        fig.tight_layout()
        fig.savefig(out, metadata=_stable_metadata(out))
        plt.close(fig)
    return out


def _stable_metadata(out: Path):
    """Strip writer-version metadata so identical input gives identical
    bytes."""
    suffix = out.suffix.lower()
    if suffix == ".png":
        return {"Software": ""}
    if suffix == ".svg":
        return {"Date": None, "Creator": None}
    return None
