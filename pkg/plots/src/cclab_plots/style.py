"""Single source of figure styling, frozen so golden-image tests stay
byte-stable. Rendering must not depend on user rcParams."""

AGENT_COLORS = {
    "integrated": "#1f77b4",
    "comparison_only": "#ff7f0e",
    "calculation_only": "#2ca02c",
}

AGENT_LABELS = {
    "integrated": "Integrated",
    "comparison_only": "Comparison only",
    "calculation_only": "Calculation only",
}

ROLE_COLORS = {
    "target": "#4c72b0",
    "competitor": "#dd8452",
    "decoy": "#8c8c8c",
}

ROLE_ORDER = ("target", "competitor", "decoy")

AXIS_LABELS = {
    "comparison_noise": "Comparison error probability",
    "calculation_noise": "Calculation noise",
    "cost_scale": "Observation cost scale",
}

MAX_EV_BOUND = 16.29

RC = {
    "figure.dpi": 100,
    "savefig.dpi": 100,
    "font.family": "DejaVu Sans",
    "font.size": 9,
    "axes.titlesize": 10,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "grid.linewidth": 0.5,
    "legend.frameon": False,
    "lines.linewidth": 1.6,
    "lines.markersize": 4,
    "svg.hashsalt": "cclab",
}
