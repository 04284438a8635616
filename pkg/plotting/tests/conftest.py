"""Fixtures: real sweep CSVs produced through the duomech CLI.

The plotting component consumes the primary package only through its CSV
artifact, so the fixtures go through the actual `duomech figure` command
rather than fabricating files by hand.
"""

import pathlib

import pytest
from click.testing import CliRunner

from duomech.cli import main as duomech_main

REFERENCE_CFG = pathlib.Path(__file__).resolve().parents[2] / "configs" / "reference.cfg"


def _figure_csv(tmp_dir, figure_id, t_min, t_max):
    out = tmp_dir / f"fig{figure_id}_{t_min}_{t_max}.csv"
    result = CliRunner().invoke(
        duomech_main,
        [
            "figure", "--config", str(REFERENCE_CFG),
            "--figure-id", str(figure_id), "--out", str(out),
            "--omega-halfwidth", "50", "--omega-points", "21",
            "--t-min", str(t_min), "--t-max", str(t_max), "--t-points", "6",
        ],
        catch_exceptions=False,
    )
    assert result.exit_code == 0, result.output
    return out


@pytest.fixture(scope="session")
def cold_csv(tmp_path_factory):
    """Matched-mirror sweep over 0.1-1 K: contains a sub-unity dip."""
    return _figure_csv(tmp_path_factory.mktemp("csv"), 2, 0.1, 1.0)


@pytest.fixture(scope="session")
def hot_csv(tmp_path_factory):
    """Matched-mirror sweep over 4-5 K: no entangled points at all."""
    return _figure_csv(tmp_path_factory.mktemp("csv"), 2, 4.0, 5.0)
