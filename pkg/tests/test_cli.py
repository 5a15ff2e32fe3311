"""CLI surface: output formats, exit codes, CSV determinism."""

import math

import pytest

from betareduce.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_beta_half(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "beta", "--nu", "1/2", "--z", "0.25")
        assert code == 0
        value = float(out.strip())
        assert abs(value - math.log(3)) <= 2 * math.ulp(math.log(3))

    def test_lerch_integer(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "lerch", "--nu", "1", "--z", "0.5")
        assert code == 0
        assert out.strip() == "1.3862943611198906"

    def test_beta_divergent_exit_two(self, capsys):
        code, _, err = run_cli(capsys, "eval", "beta", "--nu", "-3", "--z", "0.5")
        assert code == 2
        assert err.startswith("DivergentParameter")

    def test_complex_output_format(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "beta", "--nu", "12.3", "--z", "2")
        assert code == 0
        assert out.strip().endswith("i")
        assert "-3.14159265358979" in out

    def test_complex_input(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "beta", "--nu", "1/2", "--z", "0.3,0.4")
        assert code == 0

    def test_beta_mu(self, capsys):
        # B(1, 2, z) = z - z^2/2
        code, out, _ = run_cli(capsys, "eval", "beta-mu", "--nu", "1", "--mu", "2", "--z", "0.5")
        assert code == 0
        assert float(out.strip()) == pytest.approx(0.375, abs=1e-15)

    def test_beta_mu_zero_rejected(self, capsys):
        code, _, err = run_cli(capsys, "eval", "beta-mu", "--nu", "1", "--mu", "0", "--z", "0.5")
        assert code == 2

    def test_malformed_nu(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["eval", "beta", "--nu", "half", "--z", "0.5"])
        assert exc.value.code == 2

    def test_branch_point_exit_two(self, capsys):
        code, _, err = run_cli(capsys, "eval", "beta", "--nu", "1/2", "--z", "1")
        assert code == 2
        assert err.startswith("BranchPoint")


class TestFigure:
    def test_row_count_and_reference_column(self, capsys):
        code, out, _ = run_cli(
            capsys, "figure", "--nu", "1/2", "--z-start", "1.1", "--z-end", "2.0", "--points", "2"
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "z,im_reduction,im_series_analytic"
        assert len(lines) == 3
        for line in lines[1:]:
            z, im, ref = line.split(",")
            assert float(ref) == -math.pi
            assert abs(float(im) + math.pi) <= 1e-12

    def test_figure_parameter_from_the_plot(self, capsys):
        code, out, _ = run_cli(
            capsys, "figure", "--nu", "12.3", "--z-start", "1.1", "--z-end", "10", "--points", "50"
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert len(lines) == 51
        for line in lines[1:]:
            assert abs(float(line.split(",")[1]) + math.pi) <= 1e-12

    def test_bad_range(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["figure", "--nu", "1/2", "--z-start", "0.5", "--z-end", "2"])
        assert exc.value.code == 2

    def test_too_few_points(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["figure", "--nu", "1/2", "--points", "1"])
        assert exc.value.code == 2


class TestIntegral:
    def test_powlin(self, capsys):
        code, out, _ = run_cli(capsys, "integral", "powlin", "--nu", "1", "--z", "0.5")
        assert code == 0
        assert out.strip() == "1.3862943611198906"

    def test_tanh_constant_integrand(self, capsys):
        code, out, _ = run_cli(capsys, "integral", "tanh", "--lambda", "1/2", "--z", "0.5")
        assert code == 0
        assert float(out.strip()) == pytest.approx(0.5, abs=1e-14)

    def test_tanh_five_fourths(self, capsys):
        code, out, _ = run_cli(capsys, "integral", "tanh", "--lambda", "5/4", "--z", "0.8")
        assert code == 0
        u = math.sqrt(math.tanh(0.8))
        ref = math.atanh(u) - 2 * u + math.atan(u)
        assert abs(float(out.strip()) - ref) <= 1e-12

    def test_powlin_zero_exit_two(self, capsys):
        code, _, err = run_cli(capsys, "integral", "powlin", "--nu", "1/2", "--z", "0")
        assert code == 2
        assert err.startswith("ZeroArgument")


class TestVerify:
    def test_small_grid_passes(self, capsys):
        code, out, err = run_cli(
            capsys, "verify", "--n-max", "1", "--q-max", "4", "--tol", "1e-10"
        )
        assert code == 0
        assert "passed=" in err and "failed=0" in err
        lines = out.strip().split("\n")
        assert lines[0].startswith("nu,z_re,z_im,")
        assert len(lines) > 100

    def test_branch_points_skipped_not_failed(self, capsys):
        code, out, err = run_cli(
            capsys,
            "verify", "--n-max", "0", "--q-max", "3", "--z-point", "1.0", "--z-point", "0.5",
        )
        assert code == 0
        assert "Skipped" in out and "BranchPoint" in out

    def test_zero_tolerance_fails(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--n-max", "0", "--q-max", "3", "--tol", "0", "--side", "pos"
        )
        assert code == 1
        assert "failed=0" not in err

    def test_output_deterministic(self, capsys):
        args = ("verify", "--n-max", "0", "--q-max", "5", "--side", "pos")
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert out1 == out2


class TestBench:
    def test_zero_reps_exit_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["bench", "--reps", "0"])
        assert exc.value.code == 2

    def test_small_z_preset_schema(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--preset", "small-z", "--reps", "3", "--warmup", "1")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "method,nu,z_re,z_im,reps,median_ns,mean_ns,checksum"
        assert len(lines) == 1 + 3 * 3
        # checksums of the three methods at one point agree
        for point in range(3):
            sums = [float(lines[1 + 3 * point + i].split(",")[-1]) for i in range(3)]
            assert max(sums) - min(sums) <= 1e-9 * max(1.0, abs(sums[0]))

    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "bench.csv"
        code, out, _ = run_cli(
            capsys, "bench", "--preset", "small-z", "--reps", "1", "--warmup", "0", "--out", str(target)
        )
        assert code == 0
        assert out == ""
        assert target.read_text().startswith("method,nu,")
