"""Render figure analogues from the committed experiment CSVs.

Requires the secondary plotting package (`pip install -e ./plots`) and
the committed artifacts under `results/`.  Writes PNGs to
`results/figures/`.
"""

from pathlib import Path

from cclab_plots import FigureSpec, render

ROOT = Path(__file__).resolve().parents[1]
RESULTS = ROOT / "results"
OUT = RESULTS / "figures"

for csv, kind in [
    ("noise_sweep", "noise_curves"),
    ("context", "share_bars"),
    ("wedell", "share_bars"),
    ("effect_size", "effect_trends"),
    ("actions", "action_counts"),
]:
    src = RESULTS / f"{csv}.csv"
    if not src.exists():
        print(f"skipping {csv}: run `cclab experiment {csv} --out results` first")
        continue
    path = render(FigureSpec(src, kind, OUT / f"{csv}.png"))
    print(f"wrote {path}")
