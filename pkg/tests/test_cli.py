import csv
import io
import json
import math
import subprocess
import sys
import time

import numpy as np
import pytest

from cvgain.cli import main
from cvgain.fidelity import fidelity_coherent, fidelity_joint, fidelity_single_photon, fidelity_vacuum


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as e:  # argparse-level rejections
        code = e.code
    out, err = capsys.readouterr()
    return code, out, err


def table(text):
    rows = [line for line in text.splitlines() if not line.startswith("#")]
    reader = csv.reader(io.StringIO("\n".join(rows)))
    header = next(reader)
    return header, np.array([[float(x) for x in r] for r in reader])


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["--input", "vacuum", "--q", "0.5", "--gain", "0.5"], 1.0),
        (["--input", "qubit", "--q", "0", "--gain", "1"], 0.125),
        (["--input", "coherent", "--alpha", "1,0", "--q", "0.5", "--gain", "1"], 0.75),
        (["--input", "photon", "--q", "0", "--gain", "1"], 0.25),
    ],
)
def test_fidelity_command(capsys, argv, expected):
    code, out, _ = run(capsys, "fidelity", *argv)
    assert code == 0
    lines = out.splitlines()
    assert float(lines[0]) == pytest.approx(expected, abs=1e-12)
    assert lines[1].startswith("#")


def test_fidelity_complex_alpha(capsys):
    _, out, _ = run(capsys, "fidelity", "--input", "coherent", "--alpha", "0.3,0.4", "--q", "0.2", "--gain", "0.7")
    assert float(out.splitlines()[0]) == pytest.approx(fidelity_coherent(0.2, 0.7, 0.5), abs=1e-12)


@pytest.mark.parametrize(
    "argv",
    [
        ["fidelity", "--input", "vacuum", "--q", "1.0", "--gain", "1"],
        ["fidelity", "--input", "vacuum", "--q", "0.5", "--gain-range", "0:1"],
        ["curve", "--input", "vacuum", "--q", "0.5", "--gain-range", "1:1"],
        ["fidelity", "--input", "coherent", "--alpha", "x", "--q", "0.5", "--gain", "1"],
    ],
)
def test_parameter_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert "error" in err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as e:
        main(["figure", "9"])
    assert e.value.code == 2


def test_subprocess_exit_codes():
    ok = subprocess.run([sys.executable, "-m", "cvgain", "fidelity", "--input", "vacuum", "--q", "0.3", "--gain", "0.3"], capture_output=True, text=True)
    assert ok.returncode == 0 and float(ok.stdout.split()[0]) == 1.0
    bad = subprocess.run([sys.executable, "-m", "cvgain", "fidelity", "--input", "vacuum", "--q", "-1", "--gain", "1"], capture_output=True, text=True)
    assert bad.returncode == 2 and bad.stderr


def test_curve_round_trip(capsys):
    code, out, _ = run(capsys, "curve", "--input", "photon", "--q", "0.3", "--gain-range=-2:2", "--steps", "41")
    assert code == 0
    header, data = table(out)
    assert header == ["q", "g", "F"]
    assert len(data) == 41 and data[0, 1] == -2 and data[-1, 1] == 2
    np.testing.assert_allclose(data[:, 2], fidelity_single_photon(0.3, data[:, 1]), rtol=1e-11, atol=1e-12)


def test_curve_q_grid(capsys):
    _, out, _ = run(capsys, "curve", "--input", "vacuum", "--q-grid", "0:0.5:0.25", "--steps", "11")
    _, data = table(out)
    assert sorted(set(data[:, 0])) == [0.0, 0.25, 0.5]


def test_csv_is_lf_only(capsys):
    _, out, _ = run(capsys, "figure", "6")
    assert "\r" not in out


def test_json_schema(capsys):
    _, out, _ = run(capsys, "curve", "--input", "vacuum", "--q", "0.5", "--steps", "5", "--format", "json")
    doc = json.loads(out)
    assert set(doc) == {"config", "columns", "rows"}
    assert doc["columns"] == ["q", "g", "F"]
    assert len(doc["rows"]) == 5


def test_precision(capsys):
    _, out, _ = run(capsys, "fidelity", "--input", "photon", "--q", "0.3", "--gain", "0.77", "--precision", "4")
    assert out.splitlines()[0] == repr(float(f"{fidelity_single_photon(0.3, 0.77):.4g}"))


def test_out_file(tmp_path, capsys):
    path = tmp_path / "fig.csv"
    code, out, _ = run(capsys, "figure", "8", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_bytes() == subprocess.run([sys.executable, "-m", "cvgain", "figure", "8"], capture_output=True).stdout


def test_deterministic_output(capsys):
    outs = [run(capsys, "verify", "--suite", "polarization", "--seed", "3")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_optimal_gain_qubit(capsys):
    _, out, _ = run(capsys, "optimal-gain", "--family", "qubit", "--q", "0.5")
    header, data = table(out)
    assert header == ["q", "g_opt", "F_opt", "F_unit", "delta_F", "residual"]
    assert data[0, 1] == pytest.approx(0.79, abs=5e-3)
    assert data[0, 2] == pytest.approx(0.4438, abs=1e-3)


def test_optimal_gain_coherent(capsys):
    _, out, _ = run(capsys, "optimal-gain", "--family", "coherent", "--alpha-sq", "1", "--q", "0")
    assert table(out)[1][0, 1] == pytest.approx(0.544, abs=1e-3)
    _, out, _ = run(capsys, "optimal-gain", "--family", "coherent", "--alpha-sq", "0", "--q", "0.3")
    assert table(out)[1][0, 1] == 0.3


def test_figure_2b_blocks_peak_at_q(capsys):
    _, out, _ = run(capsys, "figure", "2b")
    _, data = table(out)
    qs = sorted(set(data[:, 0]))
    assert qs == [0.0, 0.25, 0.5, 0.75, 0.99]
    for q in qs:
        block = data[data[:, 0] == q]
        i = np.argmax(block[:, 2])
        assert block[i, 1] == pytest.approx(q, abs=0.01)
        assert block[i, 2] == pytest.approx(1.0, abs=1e-3)
    # exact peak where the grid hits g = q
    assert data[(data[:, 0] == 0.5) & (data[:, 1] == 0.5), 2] == pytest.approx(1.0, abs=1e-12)


def test_figure_3_peaks_shift_toward_unity(capsys):
    _, out, _ = run(capsys, "figure", "3")
    _, data = table(out)
    intensities = sorted(set(data[:, 0]))
    assert intensities == [0.0, 1.0, 10.0, 100.0]
    peaks = [data[data[:, 0] == a][np.argmax(data[data[:, 0] == a][:, 2]), 1] for a in intensities]
    assert peaks[0] == pytest.approx(0.5)
    assert np.all(np.diff(peaks) > 0) and peaks[-1] <= 1.0


def test_figure_6_joint_is_product(capsys):
    _, out, _ = run(capsys, "figure", "6")
    header, data = table(out)
    assert header == ["g", "F_vacuum", "F_photon", "F_joint"]
    np.testing.assert_allclose(data[:, 1], fidelity_vacuum(0.5, data[:, 0]), atol=1e-12)
    np.testing.assert_allclose(data[:, 3], data[:, 1] * data[:, 2], atol=1e-12)
    np.testing.assert_allclose(data[:, 3], fidelity_joint(0.5, data[:, 0]), atol=1e-12)


@pytest.mark.parametrize("fig", ["2a", "2b", "2c", "3", "4", "5", "6", "7", "8"])
def test_every_figure_fast(capsys, fig):
    t0 = time.perf_counter()
    code, out, _ = run(capsys, "figure", fig)
    assert code == 0 and out
    assert time.perf_counter() - t0 < 10


def test_figure_4_gain_rises(capsys):
    _, out, _ = run(capsys, "figure", "4")
    header, data = table(out)
    assert header == ["alpha_sq", "g_opt"]
    assert data[0, 1] == 0.5 and np.all(np.diff(data[:, 1]) > 0)


def test_figure_8_matches_published_endpoints(capsys):
    _, out, _ = run(capsys, "figure", "8")
    _, data = table(out)
    assert data[0, 1] == pytest.approx(1 / math.sqrt(3), abs=1e-10)
    assert data[data[:, 0] == 0.5, 1] == pytest.approx(0.79, abs=5e-3)


def test_verify_passes_and_reports_discrepancy(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "gradient")
    assert code == 0
    assert "FAIL" not in out
    assert any(line.startswith("INFO") and "0.221" in line for line in out.splitlines())


def test_verify_unknown_suite():
    with pytest.raises(SystemExit) as e:
        main(["verify", "--suite", "nope"])
    assert e.value.code == 2
