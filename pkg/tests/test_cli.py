"""End-to-end command-line tests (subprocess level) and SVG output."""

import json
import math
import xml.etree.ElementTree as ET

import pytest

from slowmode import a000699, comparison_svg, critical_wave_number, spectrum_svg

from conftest import csv_sections, run_cli

SVG_NS = "{http://www.w3.org/2000/svg}"


@pytest.fixture(scope="module")
def branch_csv():
    return run_cli(["branch", "--points", "40"])


@pytest.fixture(scope="module")
def branch_json():
    return run_cli(["branch", "--points", "40", "--format", "json"])


@pytest.fixture(scope="module")
def ce_csv():
    return run_cli(["ce"])


@pytest.fixture(scope="module")
def ce_json():
    return run_cli(["ce", "--format", "json"])


@pytest.fixture(scope="module")
def compare_run(tmp_path_factory):
    svg = tmp_path_factory.mktemp("figures") / "compare.svg"
    result = run_cli(["compare", "--points", "50", "--svg", str(svg)])
    return result, svg


@pytest.fixture(scope="module")
def spectrum_csv():
    return run_cli(["spectrum", "--k", "0.5"])


class TestBranchCommand:
    def test_csv_schema(self, branch_csv):
        assert branch_csv.returncode == 0
        assert "\r" not in branch_csv.stdout
        sections = csv_sections(branch_csv.stdout)
        assert len(sections) == 2  # no supercritical points on [0, k_crit)
        table, summary = sections
        assert table[0] == ["k", "tau_k", "eigenvalue", "residual", "near_critical"]
        assert len(table) == 41
        assert summary[0] == ["tau", "critical_k"]
        assert float(summary[1][1]) == critical_wave_number(1.0)

    def test_first_row_is_origin(self, branch_csv):
        row = csv_sections(branch_csv.stdout)[0][1]
        assert float(row[0]) == 0.0
        assert float(row[2]) == 0.0
        assert row[4] == "false"

    def test_eigenvalues_decrease_along_grid(self, branch_csv):
        table = csv_sections(branch_csv.stdout)[0]
        rates = [float(row[2]) for row in table[1:]]
        assert all(a > b for a, b in zip(rates, rates[1:]))

    def test_json_matches_csv(self, branch_csv, branch_json):
        assert branch_json.returncode == 0
        payload = json.loads(branch_json.stdout)
        table = csv_sections(branch_csv.stdout)[0]
        assert len(payload["points"]) == len(table) - 1
        for row, record in zip(table[1:], payload["points"]):
            assert float(row[0]) == record["k"]
            assert float(row[2]) == record["eigenvalue"]
        assert payload["excluded"] == []

    def test_deterministic_output(self, branch_csv):
        again = run_cli(["branch", "--points", "40"])
        assert again.stdout == branch_csv.stdout

    def test_near_critical_flag(self):
        k_crit = critical_wave_number(1.0)
        result = run_cli(
            [
                "branch",
                "--kmin",
                repr(k_crit - 1e-9),
                "--kmax",
                repr(k_crit),
                "--points",
                "1",
            ]
        )
        assert result.returncode == 0
        table = csv_sections(result.stdout)[0]
        assert len(table) == 2
        assert table[1][4] == "true"

    def test_supercritical_grid_warns_and_lists_excluded(self):
        result = run_cli(
            ["branch", "--kmin", "2.0", "--kmax", "3.0", "--points", "3"]
        )
        assert result.returncode == 0
        assert "no subcritical" in result.stderr
        sections = csv_sections(result.stdout)
        assert len(sections) == 3
        assert sections[0] == [["k", "tau_k", "eigenvalue", "residual", "near_critical"]]
        assert sections[2][0] == ["excluded_k"]
        # Half-open grid [2, 3) with 3 nodes.
        assert [float(r[0]) for r in sections[2][1:]] == [2.0 + i / 3.0 for i in range(3)]


class TestCeCommand:
    def test_csv_schema(self, ce_csv):
        assert ce_csv.returncode == 0
        sections = csv_sections(ce_csv.stdout)
        assert len(sections) == 2
        table, summary = sections
        assert table[0] == [
            "n",
            "coefficient",
            "magnitude_reference",
            "moment_ratio",
            "root_test",
        ]
        assert len(table) == 31
        assert summary[0] == [
            "order",
            "radius_estimate",
            "root_test_increasing",
            "ratio_min",
            "ratio_max",
        ]

    def test_leading_coefficients(self, ce_csv):
        table = csv_sections(ce_csv.stdout)[0]
        assert [row[1] for row in table[1:6]] == ["-1", "1", "-4", "27", "-248"]
        for row in table[1:]:
            assert row[2] == str(abs(int(row[1])))

    def test_summary_values(self, ce_csv):
        summary = csv_sections(ce_csv.stdout)[1][1]
        assert summary[0] == "30"
        assert 0.2 < float(summary[1]) < 0.25
        assert summary[2] == "true"

    def test_json_big_integers_survive(self, ce_json):
        assert ce_json.returncode == 0
        payload = json.loads(ce_json.stdout)
        assert payload["order"] == 30
        coefficients = payload["coefficients"]
        assert all(isinstance(c, str) for c in coefficients)
        expected = a000699(30)
        for n, text in enumerate(coefficients, start=1):
            value = int(text)
            assert abs(value) == expected[n - 1]
            assert value == (-1) ** n * expected[n - 1]
        assert abs(int(coefficients[-1])) > 2**53
        assert len(payload["ratio_band"]) == 2

    def test_deterministic_output(self, ce_json):
        again = run_cli(["ce", "--format", "json"])
        assert again.stdout == ce_json.stdout


class TestCompareCommand:
    def test_csv_schema(self, compare_run):
        result, _ = compare_run
        assert result.returncode == 0
        sections = csv_sections(result.stdout)
        assert len(sections) == 3
        table, stability, meta = sections
        assert table[0] == ["x", "k", "exact", "T1", "T2", "T3", "T4"]
        assert len(table) == 51
        assert stability[0] == [
            "order",
            "stable",
            "sign_change_x",
            "precedes_criticality",
            "sup_error_origin",
            "sup_error_near_critical",
        ]
        assert meta[0] == ["tau", "critical_x", "critical_k"]

    def test_stability_section(self, compare_run):
        result, _ = compare_run
        stability = csv_sections(result.stdout)[1]
        by_order = {row[0]: row for row in stability[1:]}
        assert by_order["1"][1] == "true"
        assert by_order["1"][2] == ""  # stable orders have no sign change
        assert by_order["3"][1] == "true"
        assert by_order["2"][1] == "false"
        assert float(by_order["2"][2]) == 1.0
        assert by_order["2"][3] == "true"
        assert by_order["4"][1] == "false"

    def test_truncations_bracket_exact_curve(self, compare_run):
        # At every subcritical grid point the even truncations lie above
        # the odd ones once divergence kicks in; minimally, T1 <= exact
        # near the origin and T2 >= T1.
        result, _ = compare_run
        table = csv_sections(result.stdout)[0]
        for row in table[1:]:
            x, t1, t2 = float(row[0]), float(row[3]), float(row[4])
            assert t2 >= t1
            if x > 0.0:
                assert t2 > t1

    def test_svg_has_one_path_per_curve(self, compare_run):
        _, svg_path = compare_run
        root = ET.parse(svg_path).getroot()
        paths = list(root.iter(f"{SVG_NS}path"))
        assert len(paths) == 5  # exact + four truncations
        texts = [t.text for t in root.iter(f"{SVG_NS}text")]
        for label in ("exact", "N=1", "N=2", "N=3", "N=4"):
            assert label in texts

    def test_json_schema(self):
        result = run_cli(
            ["compare", "--points", "10", "--orders", "2,1", "--format", "json"]
        )
        assert result.returncode == 0
        payload = json.loads(result.stdout)
        assert sorted(payload["truncations"]) == ["1", "2"]
        assert len(payload["x"]) == 10
        stability = {entry["order"]: entry for entry in payload["stability"]}
        assert stability[1]["stable"] is True
        assert stability[1]["sign_change_x"] is None
        assert stability[2]["stable"] is False
        assert stability[2]["sign_change_x"] == 1.0


class TestSimulateCommand:
    def test_table_and_summary(self):
        result = run_cli(
            [
                "simulate",
                "--points",
                "2",
                "--velocities",
                "16",
                "--t-end",
                "8",
                "--method",
                "expm",
            ]
        )
        assert result.returncode == 0
        sections = csv_sections(result.stdout)
        assert len(sections) == 2
        table, summary = sections
        assert table[0] == [
            "k",
            "tau_k",
            "fitted_rate",
            "closure_rate",
            "abs_deviation",
            "rel_deviation",
            "dt",
            "status",
        ]
        assert len(table) == 3
        origin, interior = table[1], table[2]
        # k = 0: the density is conserved and the closure rate is zero,
        # so the relative-deviation cell is empty.
        assert float(origin[0]) == 0.0
        assert abs(float(origin[2])) < 1e-10
        assert float(origin[3]) == 0.0
        assert origin[5] == ""
        assert origin[7] == "ok"
        assert interior[7] == "ok"
        assert float(interior[5]) < 0.05
        assert summary[1] == ["1.0", "16", "8.0", "expm"]

    def test_supercritical_rows_report_missing_mode(self):
        result = run_cli(
            [
                "simulate",
                "--kmin",
                "2.0",
                "--kmax",
                "2.5",
                "--points",
                "1",
                "--velocities",
                "16",
                "--t-end",
                "4",
                "--method",
                "expm",
            ]
        )
        assert result.returncode == 0
        row = csv_sections(result.stdout)[0][1]
        assert row[7] == "no_isolated_mode"
        assert row[3] == "" and row[4] == "" and row[5] == ""


class TestSpectrumCommand:
    def test_subcritical_has_one_marked_mode(self, spectrum_csv):
        assert spectrum_csv.returncode == 0
        sections = csv_sections(spectrum_csv.stdout)
        assert len(sections) == 2
        table, summary = sections
        assert table[0] == ["re", "im", "hydrodynamic"]
        assert len(table) == 65
        flags = [row[2] for row in table[1:]]
        assert flags[0] == "true"
        assert flags.count("true") == 1
        assert summary[0][-1] == "merged"
        assert summary[1][-1] == "false"

    def test_rows_sorted_by_real_part(self, spectrum_csv):
        table = csv_sections(spectrum_csv.stdout)[0]
        reals = [float(row[0]) for row in table[1:]]
        assert all(a >= b - 1e-14 for a, b in zip(reals, reals[1:]))

    def test_supercritical_marks_nothing(self):
        result = run_cli(["spectrum", "--k", "2.0"])
        assert result.returncode == 0
        table, summary = csv_sections(result.stdout)
        assert all(row[2] == "false" for row in table[1:])
        assert summary[1][-1] == "true"

    def test_svg_circle_per_eigenvalue(self, tmp_path):
        svg = tmp_path / "spectrum.svg"
        result = run_cli(
            ["spectrum", "--k", "0.5", "--velocities", "32", "--svg", str(svg)]
        )
        assert result.returncode == 0
        root = ET.parse(svg).getroot()
        circles = list(root.iter(f"{SVG_NS}circle"))
        assert len(circles) == 32
        filled = [c for c in circles if c.get("fill") == "#d62728"]
        assert len(filled) == 1

    def test_json_schema(self):
        result = run_cli(
            ["spectrum", "--k", "0.5", "--velocities", "8", "--format", "json"]
        )
        payload = json.loads(result.stdout)
        assert len(payload["eigenvalues"]) == 8
        assert payload["merged"] is False
        assert sum(e["hydrodynamic"] for e in payload["eigenvalues"]) == 1
        assert payload["essential_rate"] == -1.0


class TestErrorHandling:
    @pytest.mark.parametrize(
        "args",
        [
            ["branch", "--points", "0"],
            ["branch", "--tau", "-1"],
            ["branch", "--kmin", "2.0", "--kmax", "1.0"],
            ["ce", "--order", "0"],
            ["ce", "--order", "300"],
            ["compare", "--orders", "abc"],
            ["compare", "--orders", ""],
            ["simulate", "--velocities", "1", "--points", "1"],
            ["spectrum", "--k", "0.5", "--gap-threshold", "0.0"],
            ["spectrum", "--k", "0.5", "--velocities", "257"],
        ],
    )
    def test_invalid_configuration_exits_2(self, args):
        result = run_cli(args)
        assert result.returncode == 2
        assert "error" in result.stderr.lower()

    def test_missing_required_argument_exits_2(self):
        assert run_cli(["spectrum"]).returncode == 2

    def test_unknown_format_exits_2(self):
        assert run_cli(["ce", "--format", "yaml"]).returncode == 2

    def test_unwritable_output_exits_3(self, tmp_path):
        target = tmp_path / "missing" / "out.csv"
        result = run_cli(["ce", "--order", "2", "--out", str(target)])
        assert result.returncode == 3
        assert "I/O error" in result.stderr

    def test_version(self):
        result = run_cli(["--version"])
        assert result.returncode == 0
        assert result.stdout.strip() == "slowmode 0.1.0"


class TestSvgWriters:
    def test_comparison_deterministic(self):
        xs = [0.0, 0.5, 1.0]
        exact = [0.0, -0.2, -0.6]
        truncations = {1: (0.0, -0.25, -1.0), 2: (0.0, -0.19, 0.0)}
        a = comparison_svg(xs, exact, truncations, critical_x=1.2533141373155003)
        b = comparison_svg(xs, exact, truncations, critical_x=1.2533141373155003)
        assert a == b
        assert a.count("<path") == 3

    def test_comparison_breaks_path_outside_window(self):
        # A truncation value far below the window must lift the pen: the
        # path restarts with a second M command instead of drawing
        # through the frame.
        xs = [0.0, 0.5, 1.0]
        exact = [0.0, -0.2, -0.6]
        truncations = {4: (0.0, -9.0, 0.1)}
        text = comparison_svg(xs, exact, truncations, critical_x=1.2)
        truncation_path = text.splitlines()[-3]
        assert truncation_path.count("M") == 2
        assert "L" not in truncation_path.split('d="')[1].split('"')[0]

    def test_comparison_rejects_empty_grid(self):
        with pytest.raises(ValueError):
            comparison_svg([], [], {}, critical_x=1.0)

    def test_spectrum_rejects_empty(self):
        with pytest.raises(ValueError):
            spectrum_svg([], -1.0, None)

    def test_spectrum_marks_hydrodynamic(self):
        eigs = [complex(-0.2, 0.0), complex(-1.0, 0.4), complex(-1.0, -0.4)]
        text = spectrum_svg(eigs, -1.0, complex(-0.2, 0.0))
        assert text.count("<circle") == 3
        assert text.count('fill="#d62728"') == 1
