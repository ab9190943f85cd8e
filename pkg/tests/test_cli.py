"""Command-line driver: flags, outputs, and exit-code mapping."""

import pytest

from wavecol import cli
from wavecol.errors import ConditioningError


def test_fast_dirichlet_run_writes_reports(tmp_path):
    code = cli.main(["--case", "1", "--np", "9", "--times", "0.05",
                     "--out", str(tmp_path)])
    assert code == cli.EXIT_OK
    assert (tmp_path / "report_case1_re1_np9.csv").exists()
    assert (tmp_path / "summary_case1_re1_np9.csv").exists()


def test_markdown_format_and_profiles(tmp_path):
    code = cli.main(["--case", "1", "--np", "9", "--times", "0.05",
                     "--format", "md", "--profiles", "--out", str(tmp_path)])
    assert code == cli.EXIT_OK
    assert (tmp_path / "report_case1_re1_np9.md").exists()
    assert (tmp_path / "profile_case1_re1_np9_t0.05.csv").exists()


def test_operator_dump_flag(tmp_path):
    code = cli.main(["--case", "1", "--np", "5", "--times", "0.01",
                     "--dump-operators", "--out", str(tmp_path)])
    assert code == cli.EXIT_OK
    assert (tmp_path / "operators_np5_gram.csv").exists()
    assert (tmp_path / "operators_np5_deriv_inner.csv").exists()
    assert (tmp_path / "operators_np5_deriv_op.csv").exists()


def test_truncate_level_flag(tmp_path):
    code = cli.main(["--case", "1", "--np", "17", "--times", "0.05",
                     "--truncate-level", "2", "--out", str(tmp_path)])
    assert code == cli.EXIT_OK


def test_neumann_case_diverges_with_default_times(tmp_path, capsys):
    # the steep-front case cannot be integrated to t = 1 at these
    # resolutions; the CLI must report divergence through its exit code
    code = cli.main(["--case", "3", "--np", "17", "--out", str(tmp_path)])
    assert code == cli.EXIT_DIVERGENCE
    assert "diverged" in capsys.readouterr().err


def test_neumann_case_with_early_times_succeeds(tmp_path):
    code = cli.main(["--case", "3", "--np", "17", "--times", "0.05,0.1",
                     "--out", str(tmp_path)])
    assert code == cli.EXIT_OK
    assert (tmp_path / "report_case3_re10_np17.csv").exists()


def test_conditioning_failure_maps_to_exit_3(tmp_path, monkeypatch):
    def explode(*args, **kwargs):
        raise ConditioningError("forced", 1e99)

    monkeypatch.setattr(cli, "run_case", explode)
    code = cli.main(["--case", "1", "--np", "5", "--times", "0.01",
                     "--out", str(tmp_path)])
    assert code == cli.EXIT_CONDITIONING


def test_unwritable_output_maps_to_exit_4(tmp_path):
    blocker = tmp_path / "not_a_dir"
    blocker.write_text("occupied")
    code = cli.main(["--case", "1", "--np", "5", "--times", "0.01",
                     "--out", str(blocker)])
    assert code == cli.EXIT_IO


def test_usage_errors_exit_1():
    with pytest.raises(SystemExit) as info:
        cli.main(["--case", "9"])
    assert info.value.code == cli.EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        cli.main(["--case", "1", "--np", "12"])
    assert info.value.code == cli.EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        cli.main(["--case", "1", "--times", "0.2", "--t-end", "0.1"])
    assert info.value.code == cli.EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        cli.main(["--case", "1", "--times", "-0.5"])
    assert info.value.code == cli.EXIT_USAGE


def test_bad_truncate_level_exits_1(tmp_path):
    code = cli.main(["--case", "1", "--np", "9", "--times", "0.01",
                     "--truncate-level", "9", "--out", str(tmp_path)])
    assert code == cli.EXIT_USAGE


def test_reported_paths_are_printed(tmp_path, capsys):
    cli.main(["--case", "1", "--np", "9", "--times", "0.05",
              "--out", str(tmp_path)])
    out = capsys.readouterr().out
    assert "report_case1_re1_np9.csv" in out


def test_identical_flags_produce_byte_identical_outputs(tmp_path):
    flags = ["--case", "1", "--np", "9", "--times", "0.05", "--profiles"]
    assert cli.main(flags + ["--out", str(tmp_path / "a")]) == cli.EXIT_OK
    assert cli.main(flags + ["--out", str(tmp_path / "b")]) == cli.EXIT_OK
    names = sorted(p.name for p in (tmp_path / "a").iterdir())
    assert names == sorted(p.name for p in (tmp_path / "b").iterdir())
    for name in names:
        assert ((tmp_path / "a" / name).read_bytes()
                == (tmp_path / "b" / name).read_bytes())
