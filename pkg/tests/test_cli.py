"""Command-line behaviour: flags, exit codes, piping and file outputs."""

import io
import json

import pytest

from delisle.cli import main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParams:
    def test_russia_preset(self, capsys):
        code, out, _ = run(capsys, "params", "--russia", "--json")
        assert code == 0
        report = json.loads(out)
        assert report["cone_constant"] == pytest.approx(0.80983, abs=5e-5)
        assert 4.8 <= report["apex_offset_deg"] <= 5.1
        assert report["solver"] == "refined"
        assert abs(report["error_south_deg"]) == pytest.approx(0.00981, abs=2e-4)
        assert report["extremum_lat_dms"] == "54°5′"

    def test_parallels_published_values(self, capsys):
        code, out, _ = run(capsys, "params", "--parallels", "50,60", "--json")
        assert code == 0
        report = json.loads(out)
        assert report["apex_distance_dms"] == "45°1′"
        assert report["apex_offset_dms"] == "5°1′"
        assert abs(report["error_south_deg"]) < 1e-12
        assert abs(report["error_north_deg"]) < 1e-12

    def test_conflicting_region_flags(self, capsys):
        code, _, err = run(
            capsys, "params", "--bounds", "40,70", "--parallels", "50,60"
        )
        assert code == 2
        assert "exactly one" in err

    def test_region_required(self, capsys):
        code, _, err = run(capsys, "params")
        assert code == 2
        assert "region" in err

    def test_json_contains_every_text_field(self, capsys):
        code, text_out, _ = run(capsys, "params", "--russia")
        assert code == 0
        code, json_out, _ = run(capsys, "params", "--russia", "--json")
        assert code == 0
        report = json.loads(json_out)
        for key in report:
            assert key in text_out

    def test_dms_flag_values(self, capsys):
        code, out, _ = run(capsys, "params", "--bounds", "40°0′,70°0′", "--json")
        assert code == 0
        assert json.loads(out)["south"] == 40.0

    def test_midpoint_solver(self, capsys):
        code, out, _ = run(
            capsys, "params", "--russia", "--solver", "midpoint", "--json"
        )
        assert code == 0
        report = json.loads(out)
        assert report["solver"] == "midpoint"
        assert report["apex_offset_deg"] == pytest.approx(4.8895, abs=1e-3)

    def test_southern_bounds_equals_form(self, capsys):
        # Negative latitudes need --bounds=-70,-40 (argparse reads a bare
        # "-70,-40" token as a flag).
        code, out, _ = run(capsys, "params", "--bounds=-70,-40", "--json")
        assert code == 0
        report = json.loads(out)
        assert report["south"] == -70.0
        assert report["cone_constant"] == pytest.approx(0.8098268, abs=1e-6)
        assert report["extremum_lat_deg"] == pytest.approx(-54.079, abs=1e-3)


class TestProject:
    def test_forward_from_stdin(self, capsys, monkeypatch):
        code, out, _ = run(
            capsys,
            "project",
            "fwd",
            "--russia",
            stdin="lat,lon\n40,0\n",
            monkeypatch=monkeypatch,
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "x,y"
        x, y = (float(v) for v in lines[1].split(","))
        assert x == 0.0
        assert -55.1 <= y <= -54.8

    def test_round_trip_through_files(self, capsys, tmp_path):
        source = tmp_path / "points.csv"
        source.write_text("lat,lon\n40,0\n54°4′,30\n69.5,-12.25\n", encoding="utf-8")
        plane = tmp_path / "plane.csv"
        code, _, _ = run(
            capsys, "project", "fwd", str(source), "--russia", "-o", str(plane)
        )
        assert code == 0
        back = tmp_path / "back.csv"
        code, _, _ = run(
            capsys, "project", "inv", str(plane), "--russia", "-o", str(back)
        )
        assert code == 0
        rows = back.read_text().strip().splitlines()[1:]
        expected = [(40.0, 0.0), (54.0 + 4.0 / 60.0, 30.0), (69.5, -12.25)]
        for row, (lat, lon) in zip(rows, expected):
            got_lat, got_lon = (float(v) for v in row.split(","))
            assert abs(got_lat - lat) < 1e-7
            assert abs(got_lon - lon) < 1e-7

    def test_empty_input(self, capsys, monkeypatch):
        code, out, _ = run(
            capsys,
            "project",
            "fwd",
            "--russia",
            stdin="lat,lon\n",
            monkeypatch=monkeypatch,
        )
        assert code == 0
        assert out.strip() == "x,y"

    def test_bad_row_exits_one_with_line_number(self, capsys, monkeypatch):
        code, _, err = run(
            capsys,
            "project",
            "fwd",
            "--russia",
            stdin="lat,lon\n40\n",
            monkeypatch=monkeypatch,
        )
        assert code == 1
        assert "line 2" in err

    def test_missing_file_exits_one(self, capsys):
        code, _, err = run(capsys, "project", "fwd", "/nope/missing.csv", "--russia")
        assert code == 1
        assert "error:" in err


class TestErrorTable:
    def test_row_count_csv(self, capsys):
        code, out, _ = run(
            capsys, "error-table", "--russia", "--format", "csv", "--step", "1"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 32
        first = lines[1].split(",")
        assert float(first[0]) == 40.0
        assert float(first[1]) == pytest.approx(0.00981, abs=2e-4)
        assert float(first[3]) == pytest.approx(0.1471, abs=3e-3)

    def test_oversized_step(self, capsys):
        code, out, _ = run(
            capsys, "error-table", "--russia", "--format", "csv", "--step", "100"
        )
        assert code == 0
        assert len(out.strip().splitlines()) == 3

    def test_text_lists_roots(self, capsys):
        code, out, _ = run(capsys, "error-table", "--russia")
        assert code == 0
        assert "true-scale roots" in out
        roots_line = next(
            line for line in out.splitlines() if "true-scale roots" in line
        )
        values = [float(v) for v in roots_line.split(":")[1].split(",")]
        assert len(values) == 2

    def test_needs_bounds(self, capsys):
        code, _, err = run(capsys, "error-table", "--parallels", "50,60")
        assert code == 2
        assert "bounds" in err


class TestGraticule:
    def test_writes_deterministic_files(self, capsys, tmp_path):
        svg_a = tmp_path / "a.svg"
        svg_b = tmp_path / "b.svg"
        json_a = tmp_path / "a.json"
        json_b = tmp_path / "b.json"
        for svg, geo in ((svg_a, json_a), (svg_b, json_b)):
            code, _, _ = run(
                capsys,
                "graticule",
                "--russia",
                "--lon-span",
                "60",
                "--svg",
                str(svg),
                "--geojson",
                str(geo),
            )
            assert code == 0
        assert svg_a.read_bytes() == svg_b.read_bytes()
        assert json_a.read_bytes() == json_b.read_bytes()
        doc = json.loads(json_a.read_text())
        kinds = [f["properties"]["kind"] for f in doc["features"]]
        assert kinds.count("parallel") == 31

    def test_projected_mode(self, capsys, tmp_path):
        out_path = tmp_path / "proj.json"
        code, _, _ = run(
            capsys,
            "graticule",
            "--russia",
            "--geojson",
            str(out_path),
            "--mode",
            "projected",
        )
        assert code == 0
        assert "note" in json.loads(out_path.read_text())

    def test_requires_an_output(self, capsys):
        code, _, err = run(capsys, "graticule", "--russia")
        assert code == 2
        assert "--svg" in err

    def test_output_dir_env(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("DELISLE_OUTPUT_DIR", str(tmp_path))
        code, _, _ = run(
            capsys, "graticule", "--russia", "--svg", "nested.svg"
        )
        assert code == 0
        assert (tmp_path / "nested.svg").exists()


class TestOracle:
    def test_russia_gap_within_contract(self, capsys):
        code, out, err = run(capsys, "oracle", "--russia")
        assert code == 0
        assert "warning" not in err
        gap_line = next(line for line in out.splitlines() if "gap" in line)
        gap = abs(float(gap_line.split(":")[1].strip().rstrip("%")))
        assert gap <= 2.0

    def test_coarse_grid_warns(self, capsys):
        code, out, err = run(capsys, "oracle", "--russia", "--grid", "10")
        assert code == 0
        assert "below the contract minimum" in err
        assert "grid optimum" in out

    def test_needs_bounds(self, capsys):
        code, _, err = run(capsys, "oracle", "--parallels", "50,60")
        assert code == 2
        assert "bounds" in err


class TestConfig:
    def test_config_supplies_region(self, capsys, tmp_path):
        cfg = tmp_path / "map.cfg"
        cfg.write_text(
            "# map setup\nbounds = 40,70\nsolver = midpoint\n", encoding="utf-8"
        )
        code, out, _ = run(capsys, "params", "--config", str(cfg), "--json")
        assert code == 0
        report = json.loads(out)
        assert report["solver"] == "midpoint"
        assert report["south"] == 40.0

    def test_flags_override_config(self, capsys, tmp_path):
        cfg = tmp_path / "map.cfg"
        cfg.write_text("bounds = 40,70\nsolver = midpoint\n", encoding="utf-8")
        code, out, _ = run(
            capsys, "params", "--config", str(cfg), "--solver", "refined", "--json"
        )
        assert code == 0
        assert json.loads(out)["solver"] == "refined"

    def test_unknown_key_rejected(self, capsys, tmp_path):
        cfg = tmp_path / "map.cfg"
        cfg.write_text("bogus = 1\n", encoding="utf-8")
        code, _, err = run(capsys, "params", "--config", str(cfg), "--russia")
        assert code == 1
        assert "unknown config key" in err


class TestUsage:
    def test_no_subcommand(self, capsys):
        assert main([]) == 2

    def test_unknown_choice(self, capsys):
        code, _, _ = run(capsys, "params", "--russia", "--solver", "cowboy")
        assert code == 2

    def test_malformed_angle_flag(self, capsys):
        code, _, err = run(capsys, "params", "--bounds", "40,boom")
        assert code == 2
