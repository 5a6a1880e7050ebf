import json

import pytest
from click.testing import CliRunner

from dogblock.cli import main
from dogblock.config import ExperimentConfig


@pytest.fixture
def runner():
    return CliRunner()


def test_config_round_trip(tmp_path):
    cfg = ExperimentConfig(dim=2, n_points=(4, 8), radius=1, shape="cross")
    path = tmp_path / "cfg.json"
    cfg.save(path)
    assert ExperimentConfig.load(path) == cfg


def test_config_rejects_unknown_keys():
    with pytest.raises(ValueError, match="unknown config keys"):
        ExperimentConfig.from_dict({"radius": 2, "typo": 1})


def test_kernel_command_defaults(runner, tmp_path):
    result = runner.invoke(main, ["kernel", "--out", str(tmp_path)])
    assert result.exit_code == 0
    assert "sum|c_t| = 0.556" in result.output
    report = json.loads((tmp_path / "kernel_report.json").read_text())
    assert report["coefficient_one_norm"] == pytest.approx(0.556, abs=5e-3)
    assert report["one_norm_within_lambda"] is True
    lines = (tmp_path / "kernel.csv").read_text().splitlines()
    assert len(lines) == 8


@pytest.mark.filterwarnings("ignore::UserWarning")
def test_kernel_command_zero_difference(runner, tmp_path):
    result = runner.invoke(
        main,
        ["kernel", "--sigma-p", "1.0", "--sigma-q", "1.0", "--out", str(tmp_path)],
    )
    assert result.exit_code == 0
    rows = (tmp_path / "kernel.csv").read_text().splitlines()[1:]
    assert all(float(r.split(",")[-1]) == 0.0 for r in rows)


def test_kernel_command_single_row(runner, tmp_path):
    result = runner.invoke(main, ["kernel", "--radius", "0", "--out", str(tmp_path)])
    assert result.exit_code == 0
    assert len((tmp_path / "kernel.csv").read_text().splitlines()) == 2


def test_kernel_command_is_deterministic(runner, tmp_path):
    out1, out2 = tmp_path / "a", tmp_path / "b"
    for out in (out1, out2):
        assert runner.invoke(main, ["kernel", "--out", str(out)]).exit_code == 0
    assert (out1 / "kernel.csv").read_bytes() == (out2 / "kernel.csv").read_bytes()


def test_spectrum_command(runner, tmp_path):
    result = runner.invoke(main, ["spectrum", "--out", str(tmp_path)])
    assert result.exit_code == 0
    lines = (tmp_path / "transfer.csv").read_text().splitlines()
    assert lines[0] == "w1,re_mu,im_mu,abs_mu"
    assert len(lines) == 10
    dc = lines[1].split(",")
    assert abs(float(dc[1])) <= 1e-12 and abs(float(dc[2])) <= 1e-12
    mags = [float(line.split(",")[3]) for line in lines[1:]]
    # bandpass: rises to an interior peak, then falls off
    peak = mags.index(max(mags))
    assert 0 < peak < len(mags) - 1


def test_verify_command_passes(runner):
    result = runner.invoke(main, ["verify"])
    assert result.exit_code == 0, result.output
    assert "FAIL" not in result.output
    assert "block identity" in result.output


@pytest.mark.filterwarnings("ignore::UserWarning")
def test_verify_command_identical_kernels(runner):
    result = runner.invoke(
        main, ["verify", "--sigma-p", "1.0", "--sigma-q", "1.0"]
    )
    assert result.exit_code == 0, result.output


def test_verify_expected_fail_mode(runner):
    result = runner.invoke(main, ["verify", "--inject-asymmetry"])
    assert result.exit_code == 0, result.output
    assert "hermiticity (expected fail)" in result.output


def test_verify_dimension_cap_is_config_error(runner):
    result = runner.invoke(main, ["verify", "--max-dim-cap", "8"])
    assert result.exit_code == 2
    assert "exceeds cap" in result.output


def test_bad_n_points_is_config_error(runner):
    result = runner.invoke(main, ["spectrum", "--n-points", "12"])
    assert result.exit_code == 2


def test_bad_sigma_is_config_error(runner):
    result = runner.invoke(main, ["kernel", "--sigma-p", "-1"])
    assert result.exit_code == 2


def test_sweep_command(runner, tmp_path):
    args = ["sweep", "--out", str(tmp_path)]
    for k in range(4, 11):
        args += ["--n-points", str(2**k)]
    result = runner.invoke(main, args)
    assert result.exit_code == 0, result.output
    summary = json.loads((tmp_path / "sweep_summary.json").read_text())
    assert summary["slope_P_exact"] == pytest.approx(-4.0, abs=0.3)
    assert abs(summary["final_ratio"] - 1.0) <= 0.05
    lines = (tmp_path / "sweep.csv").read_text().splitlines()
    assert lines[0] == "N,h,P_exact,P_asym,ratio"
    assert len(lines) == 8


def test_sweep_single_entry(runner, tmp_path):
    result = runner.invoke(main, ["sweep", "--n-points", "16", "--out", str(tmp_path)])
    assert result.exit_code == 0, result.output
    assert len((tmp_path / "sweep.csv").read_text().splitlines()) == 2


def test_sweep_constant_field_is_all_zero(runner, tmp_path):
    result = runner.invoke(
        main,
        ["sweep", "--field", "constant", "--n-points", "16", "--n-points", "32",
         "--out", str(tmp_path)],
    )
    assert result.exit_code == 0, result.output
    for line in (tmp_path / "sweep.csv").read_text().splitlines()[1:]:
        _, _, p_exact, p_asym, _ = line.split(",")
        assert abs(float(p_exact)) <= 1e-25
        assert float(p_asym) == 0.0


def test_config_file_drives_commands(runner, tmp_path):
    cfg = ExperimentConfig(dim=2, n_points=(4,), radius=1, shape="cross",
                           out=str(tmp_path))
    path = tmp_path / "cfg.json"
    cfg.save(path)
    result = runner.invoke(main, ["verify", "--config", str(path)])
    assert result.exit_code == 0, result.output
