from pathlib import Path

import pytest

from cclab_plots import FigureSpec, PlotError, render
from cclab_plots.cli import main

HERE = Path(__file__).resolve().parent
FIXTURES = HERE / "fixtures"
GOLDEN = HERE / "golden"

CASES = [
    ("noise_sweep", "noise_curves"),
    ("context", "share_bars"),
    ("wedell", "share_bars"),
    ("effect_size", "effect_trends"),
    ("actions", "action_counts"),
]


@pytest.mark.parametrize("csv,kind", CASES)
def test_renders_without_error(tmp_path, csv, kind):
    out = render(FigureSpec(FIXTURES / f"{csv}.csv", kind, tmp_path / f"{csv}.png"))
    assert out.exists() and out.stat().st_size > 0


@pytest.mark.parametrize("csv,kind", CASES)
def test_golden_image_byte_equality(tmp_path, csv, kind):
    out = render(FigureSpec(FIXTURES / f"{csv}.csv", kind, tmp_path / f"{csv}.png"))
    golden = GOLDEN / f"{csv}.png"
    assert out.read_bytes() == golden.read_bytes(), (
        f"{csv}/{kind} image differs from {golden}; regenerate goldens if "
        "the style changed intentionally")


def test_kind_must_match_schema(tmp_path):
    with pytest.raises(PlotError, match="does not match"):
        render(FigureSpec(FIXTURES / "context.csv", "noise_curves",
                          tmp_path / "x.png"))
    with pytest.raises(PlotError, match="does not match"):
        render(FigureSpec(FIXTURES / "noise_sweep.csv", "effect_trends",
                          tmp_path / "x.png"))


def test_unknown_kind_rejected(tmp_path):
    with pytest.raises(PlotError, match="unknown figure kind"):
        FigureSpec(FIXTURES / "context.csv", "pie", tmp_path / "x.png")


def test_missing_csv(tmp_path):
    with pytest.raises(PlotError, match="not found"):
        render(FigureSpec(tmp_path / "nope.csv", "share_bars",
                          tmp_path / "x.png"))


def test_per_seed_overlay_changes_output(tmp_path):
    plain = render(FigureSpec(FIXTURES / "effect_size.csv", "effect_trends",
                              tmp_path / "plain.png"))
    overlay = render(FigureSpec(FIXTURES / "effect_size.csv", "effect_trends",
                                tmp_path / "overlay.png",
                                per_seed_overlay=True))
    assert plain.read_bytes() != overlay.read_bytes()


def test_cli_render(tmp_path, capsys):
    code = main(["render", "--csv", str(FIXTURES / "wedell.csv"),
                 "--kind", "share_bars", "--out", str(tmp_path / "w.png")])
    assert code == 0
    assert (tmp_path / "w.png").exists()


def test_cli_rejects_mismatched_kind(tmp_path, capsys):
    code = main(["render", "--csv", str(FIXTURES / "wedell.csv"),
                 "--kind", "noise_curves", "--out", str(tmp_path / "w.png")])
    assert code == 2
    assert "does not match" in capsys.readouterr().err
