"""Black-box CLI tests: wire formats, exit codes, determinism."""

import cmath
import json
import math
import subprocess
import sys

import pytest


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "hypercom", *args],
        capture_output=True,
        text=True,
    )


def write_system(path, radius, model, rows):
    payload = {
        "radius": radius,
        "model": model,
        "particles": [{"mass": m, "coords": list(c)} for m, c in rows],
    }
    path.write_text(json.dumps(payload))
    return path


@pytest.fixture
def pair_file(tmp_path):
    return write_system(
        tmp_path / "pair.json",
        1.0,
        "disk",
        [(1.0, (0.5, 0.0)), (1.0, (-0.5, 0.0))],
    )


@pytest.fixture
def lagrangian_file(tmp_path):
    rows = []
    for k in range(3):
        w = 0.5 * cmath.exp(2j * math.pi * k / 3.0)
        rows.append((1.0, (w.real, w.imag)))
    return write_system(tmp_path / "lagr.json", 1.0, "disk", rows)


def test_help():
    done = run_cli("--help")
    assert done.returncode == 0
    for name in (
        "com",
        "equilibrium",
        "limit-sweep",
        "karcher-compare",
        "distance",
        "project",
        "unproject",
    ):
        assert name in done.stdout


def test_project_unproject_distance_stdout():
    done = run_cli("project", "0", "0", "1", "--radius", "1")
    assert done.returncode == 0
    assert done.stdout == "0 0\n"

    done = run_cli("unproject", "0.5", "0", "--radius", "1")
    assert done.returncode == 0
    assert done.stdout == "1.3333333333333333 0 1.6666666666666667\n"

    done = run_cli("distance", "0", "0", "0.5", "0", "--radius", "1")
    assert done.returncode == 0
    assert float(done.stdout) == pytest.approx(math.log(3.0), rel=1e-15)


def test_com_single_particle_echoes_position(tmp_path):
    path = write_system(
        tmp_path / "one.json", 1.0, "disk", [(2.0, (0.25, -0.125))]
    )
    done = run_cli("com", "--input", str(path))
    assert done.returncode == 0
    report = json.loads(done.stdout)
    assert report["results"]["center_disk"] == [0.25, -0.125]
    assert report["results"]["total_mass"] == 2.0


def test_com_symmetric_pair_is_origin(pair_file):
    done = run_cli("com", "--input", str(pair_file))
    assert done.returncode == 0
    report = json.loads(done.stdout)
    re, im = report["results"]["center_disk"]
    assert abs(complex(re, im)) <= 1e-14
    assert report["results"]["center_hyperboloid"][2] == pytest.approx(1.0)


def test_com_lagrangian_file(lagrangian_file):
    done = run_cli("com", "--input", str(lagrangian_file))
    assert done.returncode == 0
    report = json.loads(done.stdout)
    re, im = report["results"]["center_disk"]
    assert re == pytest.approx(0.04186126023461038, abs=1e-10)
    assert abs(im) <= 1e-15


def test_com_line_and_hyperboloid_models(tmp_path):
    line = write_system(
        tmp_path / "line.json", 1.0, "line", [(1.0, (0.5,)), (2.0, (-0.1,))]
    )
    done = run_cli("com", "--input", str(line))
    assert done.returncode == 0
    report = json.loads(done.stdout)
    assert "center_interval" in report["results"]
    assert "center_hyperbola" in report["results"]

    lifted = write_system(
        tmp_path / "hyp.json",
        1.0,
        "hyperboloid",
        [(1.0, (4.0 / 3.0, 0.0, 5.0 / 3.0)), (1.0, (-4.0 / 3.0, 0.0, 5.0 / 3.0))],
    )
    done = run_cli("com", "--input", str(lifted))
    assert done.returncode == 0
    report = json.loads(done.stdout)
    re, im = report["results"]["center_disk"]
    assert abs(complex(re, im)) <= 1e-14


def test_com_matches_library_bit_for_bit(pair_file, tmp_path):
    from hypercom import com_disk
    from hypercom.files import load_system

    out = tmp_path / "report.json"
    done = run_cli("com", "--input", str(pair_file), "--output", str(out))
    assert done.returncode == 0
    report = json.loads(out.read_text())
    com = com_disk(load_system(pair_file))
    assert report["results"]["center_disk"] == [com.center.real, com.center.imag]
    assert report["results"]["total_mass"] == com.total_mass


def test_equilibrium_json(tmp_path):
    done = run_cli(
        "equilibrium", "--m1", "1", "--m2", "2", "--alpha", "0.5", "--radius", "1"
    )
    assert done.returncode == 0
    report = json.loads(done.stdout)
    results = report["results"]
    assert results["partner_radius"] == pytest.approx(
        2.0 - math.sqrt(3.0), rel=1e-14
    )
    assert results["relation"] == "less"
    assert results["matches_mass_order"] is True
    assert abs(results["lever_residual"]["value"]) <= results["lever_residual"][
        "tolerance"
    ]
    assert results["center_at_start"]["value"] <= results["center_at_start"][
        "tolerance"
    ]
    assert len(results["trace"]) == 64


def test_equilibrium_csv_trace():
    done = run_cli(
        "equilibrium",
        "--m1", "1", "--m2", "2", "--alpha", "0.5", "--radius", "1",
        "--angles", "8", "--format", "csv",
    )
    assert done.returncode == 0
    lines = done.stdout.strip().splitlines()
    assert lines[0] == "theta,re_wc,im_wc,defect"
    assert len(lines) == 9
    first = lines[1].split(",")
    assert float(first[0]) == 0.0
    assert float(first[3]) == 0.0  # no defect at the starting angle


def test_equilibrium_equal_masses():
    done = run_cli(
        "equilibrium", "--m1", "1", "--m2", "1", "--alpha", "0.5", "--radius", "1"
    )
    report = json.loads(done.stdout)
    assert report["results"]["partner_radius"] == pytest.approx(0.5, rel=1e-12)
    assert report["results"]["relation"] == "equal"


def test_limit_sweep_csv(tmp_path):
    path = write_system(
        tmp_path / "pts.json", 1.0, "disk", [(1.0, (0.3, 0.0)), (1.0, (0.5, 0.0))]
    )
    done = run_cli(
        "limit-sweep", "--input", str(path), "--sweep", "10,20,40,80",
        "--format", "csv",
    )
    assert done.returncode == 0
    lines = done.stdout.strip().splitlines()
    assert lines[0] == "R,error"
    rows = [line.split(",") for line in lines[1:]]
    errors = [float(err) for _, err in rows]
    assert [float(r) for r, _ in rows] == [10.0, 20.0, 40.0, 80.0]
    assert all(a > b for a, b in zip(errors, errors[1:]))
    for ratio in (errors[0] / errors[1], errors[1] / errors[2], errors[2] / errors[3]):
        assert 3.5 <= ratio <= 4.5


def test_limit_sweep_symmetric_pair_is_flat(pair_file):
    done = run_cli(
        "limit-sweep", "--input", str(pair_file), "--sweep", "10,20",
        "--format", "csv",
    )
    assert done.returncode == 0
    for line in done.stdout.strip().splitlines()[1:]:
        _, err = line.split(",")
        assert float(err) <= 1e-14


def test_limit_sweep_rejects_outside_point(tmp_path):
    path = write_system(
        tmp_path / "wide.json", 10.0, "disk", [(1.0, (3.0, 0.0)), (1.0, (0.1, 0.0))]
    )
    done = run_cli("limit-sweep", "--input", str(path), "--sweep", "2,4")
    assert done.returncode == 1
    assert "outside the swept disk" in done.stderr


def test_karcher_compare_single_particle(tmp_path):
    path = write_system(tmp_path / "one.json", 1.0, "disk", [(1.0, (0.3, 0.3))])
    done = run_cli("karcher-compare", "--input", str(path))
    assert done.returncode == 0
    report = json.loads(done.stdout)
    assert report["results"]["separation"] <= 1e-12


def test_karcher_compare_balanced_pair(tmp_path):
    path = write_system(
        tmp_path / "bal.json",
        1.0,
        "disk",
        [(1.0, (0.5, 0.0)), (2.0, (-(2.0 - math.sqrt(3.0)), 0.0))],
    )
    done = run_cli("karcher-compare", "--input", str(path))
    assert done.returncode == 0
    report = json.loads(done.stdout)
    assert report["results"]["separation"] <= 1e-8
    assert abs(report["results"]["lever_residual_karcher"]) <= 1e-8
    assert abs(report["results"]["lever_residual_com"]) <= 1e-8


def test_karcher_compare_generic_triple_reproducible(tmp_path):
    path = write_system(
        tmp_path / "tri.json",
        1.0,
        "disk",
        [(1.0, (0.3, 0.1)), (2.0, (-0.2, 0.4)), (1.5, (0.1, -0.5))],
    )
    first = run_cli("karcher-compare", "--input", str(path))
    second = run_cli("karcher-compare", "--input", str(path))
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    report = json.loads(first.stdout)
    assert report["results"]["separation"] > 0.0


def test_reports_are_byte_identical_across_runs(pair_file, tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    assert run_cli("com", "--input", str(pair_file), "--output", str(out1)).returncode == 0
    assert run_cli("com", "--input", str(pair_file), "--output", str(out2)).returncode == 0
    assert out1.read_bytes() == out2.read_bytes()

    csv1 = run_cli(
        "equilibrium", "--m1", "1.5", "--m2", "0.7", "--alpha", "0.4",
        "--radius", "2", "--format", "csv",
    )
    csv2 = run_cli(
        "equilibrium", "--m1", "1.5", "--m2", "0.7", "--alpha", "0.4",
        "--radius", "2", "--format", "csv",
    )
    assert csv1.stdout == csv2.stdout


# --- exit codes -----------------------------------------------------------------


def test_exit_code_malformed_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    done = run_cli("com", "--input", str(path))
    assert done.returncode == 1
    assert "error" in done.stderr


def test_exit_code_schema_violations(tmp_path):
    cases = [
        {"radius": 1.0, "model": "disk"},
        {"radius": 1.0, "model": "torus", "particles": [{"mass": 1, "coords": [0, 0]}]},
        {"radius": 1.0, "model": "disk", "particles": []},
        {"radius": 1.0, "model": "disk", "particles": [{"mass": 1}]},
        {"radius": 1.0, "model": "disk", "particles": [{"mass": 1, "coords": [0]}]},
        {"radius": 1.0, "model": "disk", "particles": [{"mass": "x", "coords": [0, 0]}]},
        {"radius": -1.0, "model": "disk", "particles": [{"mass": 1, "coords": [0, 0]}]},
        {"radius": 1.0, "model": "disk", "particles": [{"mass": 1, "coords": [0, 0]}], "extra": 1},
    ]
    for k, payload in enumerate(cases):
        path = tmp_path / f"case{k}.json"
        path.write_text(json.dumps(payload))
        done = run_cli("com", "--input", str(path))
        assert done.returncode == 1, payload


def test_exit_code_domain_violations(tmp_path):
    outside = write_system(
        tmp_path / "outside.json", 1.0, "disk", [(1.0, (1.5, 0.0))]
    )
    assert run_cli("com", "--input", str(outside)).returncode == 1

    negative = write_system(
        tmp_path / "negmass.json", 1.0, "disk", [(-1.0, (0.1, 0.0))]
    )
    assert run_cli("com", "--input", str(negative)).returncode == 1

    off_sheet = write_system(
        tmp_path / "offsheet.json", 1.0, "hyperboloid", [(1.0, (0.5, 0.5, 1.0))]
    )
    assert run_cli("com", "--input", str(off_sheet)).returncode == 1

    missing = run_cli("com", "--input", str(tmp_path / "missing.json"))
    assert missing.returncode == 1


def test_exit_code_forced_nonconvergence(tmp_path):
    path = write_system(
        tmp_path / "tri.json",
        1.0,
        "disk",
        [(1.0, (0.3, 0.1)), (2.0, (-0.2, 0.4)), (1.5, (0.1, -0.5))],
    )
    done = run_cli("karcher-compare", "--input", str(path), "--tol", "1e-300")
    assert done.returncode == 2
    assert "numerical failure" in done.stderr


def test_exit_code_usage_errors():
    assert run_cli("com").returncode == 1
    assert run_cli("equilibrium", "--m1", "1").returncode == 1
    assert run_cli("no-such-command").returncode == 1
    assert run_cli("distance", "0", "0", "--radius", "1").returncode == 1
