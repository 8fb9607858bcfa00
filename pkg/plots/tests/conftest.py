import os
import subprocess
import sys

import pytest

PLOTS_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "afvp.cli", *args], capture_output=True, text=True
    )
    assert proc.returncode == 0, f"CLI failed: {proc.stderr}"
    return proc


@pytest.fixture(scope="session")
def weak_landau_outputs(tmp_path_factory):
    """Outputs of a weak Landau run plus a convergence sweep, produced through
    the CLI only (the plot scripts consume the solver's file contracts)."""
    root = tmp_path_factory.mktemp("weak_landau")
    cfg = root / "sim.cfg"
    cfg.write_text(
        "problem = weak_landau\n"
        "n_x = 64\n"
        "n_v = 64\n"
        "scheme = af3\n"
        "splitting = strang\n"
        "t_max = 15.0\n"
        "diag_every = 2\n"
        "snapshot_times = 15.0\n"
    )
    out = root / "out"
    run_cli("--output-dir", str(out), "--histopolate", "run", "--config", str(cfg))

    conv_cfg = root / "conv.cfg"
    conv_cfg.write_text(
        "problem = weak_landau\nscheme = af3\nsplitting = strang\nt_max = 0.5\n"
    )
    run_cli(
        "--output-dir", str(out), "convergence", "--config", str(conv_cfg),
        "--levels", "8,16", "--reference", "32",
    )
    return {
        "dir": out,
        "diagnostics": out / "diagnostics.csv",
        "snapshot": out / "snapshot_cell_avg_t15.000000.csv",
        "points": out / "snapshot_points_t15.000000.csv",
        "convergence": out / "convergence.csv",
    }


@pytest.fixture()
def run_script():
    def _run(name, *args):
        proc = subprocess.run(
            [sys.executable, os.path.join(PLOTS_DIR, name), *args],
            capture_output=True, text=True,
        )
        return proc

    return _run
