"""End-to-end tests of the command line through main()."""

import pandas as pd
import pytest

from main import build_parser, main
from src.cli.demo import parse_theta_list
from src.piecewise import CadlagFunction, Homeomorphism
from src.turbo import embed, g_theta_family, paper_limit

EARLY = CadlagFunction.step([0.5], [0.0, 1.0])
LATE = CadlagFunction.step([0.6], [0.0, 1.0])


@pytest.fixture(autouse=True)
def isolated(tmp_path, monkeypatch):
    """Runs every command from a clean directory without a Skorofile."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("SKORO_CONFIG", raising=False)
    monkeypatch.delenv("SKORO_OUTPUT_DIR", raising=False)


def result_lines(capsys):
    return capsys.readouterr().out.splitlines()


class TestRho:
    def test_identical_functions(self, write_doc, capsys):
        f = write_doc(EARLY, "early")
        assert main(["rho", f, f]) == 0
        lines = result_lines(capsys)
        assert lines[0] == "lower 0 upper 0 exact true"
        assert lines[1] == "witness (0,0) (1,1)"

    def test_exact_step_distance(self, write_doc, capsys):
        assert main(["rho", write_doc(EARLY, "early"), write_doc(LATE, "late"), "--exact"]) == 0
        lower, upper = (float(v) for v in result_lines(capsys)[0].split()[1:4:2])
        assert lower == pytest.approx(0.1, abs=1e-9)
        assert upper == pytest.approx(0.1, abs=1e-9)

    def test_exact_needs_step_functions(self, write_doc):
        f = write_doc(CadlagFunction.ramp(), "ramp")
        assert main(["rho", f, f, "--exact"]) == 3

    def test_turbofunction_is_not_a_function(self, write_doc):
        assert main(["rho", write_doc(paper_limit(), "limit"), write_doc(EARLY, "early")]) == 3

    def test_malformed_document(self, tmp_path, write_doc):
        broken = tmp_path / "broken.yaml"
        broken.write_text("format: skoro-function/1\nkind: wiggle\nname: x\npayload: {}\n", encoding="utf-8")
        assert main(["rho", str(broken), write_doc(EARLY, "early")]) == 2

    def test_missing_document(self, tmp_path, write_doc):
        assert main(["rho", str(tmp_path / "absent.yaml"), write_doc(EARLY, "early")]) == 4

    def test_non_positive_tolerance(self, write_doc):
        f = write_doc(EARLY, "early")
        assert main(["rho", f, f, "--tol", "0"]) == 3

    def test_log_level_choices(self, write_doc, tmp_path):
        f = write_doc(EARLY, "early")
        with pytest.raises(SystemExit) as exit_info:
            main(["--log-level", "LOUD", "rho", f, f])
        assert exit_info.value.code == 2
        assert main(["--log-level", "DEBUG", "rho", f, f]) == 0
        assert (tmp_path / "logs" / "application.log").exists()


class TestRhoPlus:
    def test_bump_against_the_limit(self, write_doc, capsys):
        x = write_doc(embed(g_theta_family(8.0)), "g8")
        y = write_doc(paper_limit(), "limit")
        assert main(["rho-plus", x, y, "--tol", "1e-3"]) == 0
        first = result_lines(capsys)[0].split()
        assert float(first[3]) <= 1.0 / 8.0 + 1e-3
        assert first[-1] in ("true", "false")


class TestVisualize:
    def test_writes_csv_and_svg(self, tmp_path, write_doc, capsys):
        x = write_doc(paper_limit(), "limit")
        svg, csv = tmp_path / "limit.svg", tmp_path / "limit.csv"
        assert main(["visualize", x, "--svg", str(svg), "--csv", str(csv)]) == 0
        lines = result_lines(capsys)
        assert lines[1] == "instantons 1"
        assert lines[2].startswith("instanton s 0.5 ")
        assert f"wrote {svg}" in lines
        assert svg.read_text(encoding="utf-8").lstrip().startswith("<?xml")
        table = pd.read_csv(csv)
        assert list(table.columns) == ["s", "value"]
        assert table["value"].abs().max() == 0.0
        assert table["s"].is_monotonic_increasing

    def test_artifacts_are_byte_identical_across_runs(self, tmp_path, write_doc, capsys):
        x = write_doc(paper_limit(), "limit")
        outputs = []
        for run in ("first", "second"):
            svg, csv = tmp_path / f"{run}.svg", tmp_path / f"{run}.csv"
            assert main(["visualize", x, "--svg", str(svg), "--csv", str(csv)]) == 0
            stdout = [line for line in result_lines(capsys) if not line.startswith("wrote ")]
            outputs.append((stdout, svg.read_bytes(), csv.read_bytes()))
        assert outputs[0] == outputs[1]

    def test_unwritable_svg(self, tmp_path, write_doc):
        x = write_doc(paper_limit(), "limit")
        assert main(["visualize", x, "--svg", str(tmp_path / "missing" / "limit.svg")]) == 4


class TestEquivalenceAndCanonical:
    def test_equivalent(self, write_doc, capsys):
        x = write_doc(embed(g_theta_family(8.0)), "g8")
        assert main(["equiv", x, x]) == 0
        assert result_lines(capsys)[0] == "decision equivalent"

    def test_not_equivalent(self, write_doc, capsys):
        x = write_doc(CadlagFunction.constant(0.0), "zero")
        y = write_doc(paper_limit(), "limit")
        assert main(["equiv", x, y]) == 1
        lines = result_lines(capsys)
        assert lines[0] == "decision not-equivalent"
        assert lines[2].startswith("lower ")
        assert lines[3].startswith("first-difference F node 1 x (1,0,0) y (")

    def test_canonical_is_a_document(self, write_doc, capsys):
        assert main(["canonical", write_doc(paper_limit(), "limit")]) == 0
        lines = result_lines(capsys)
        assert lines[0] == "format: skoro-function/1"
        assert lines[1] == "kind: turbo"
        assert lines[2] == "name: limit"

    def test_canonical_to_file(self, tmp_path, write_doc, capsys):
        out = tmp_path / "canon.yaml"
        assert main(["canonical", write_doc(paper_limit(), "limit"), "--out", str(out)]) == 0
        assert result_lines(capsys) == [f"wrote {out}"]
        assert out.read_text(encoding="utf-8").startswith("format: skoro-function/1\nkind: turbo\n")

    def test_maps_are_rejected(self, write_doc):
        assert main(["canonical", write_doc(Homeomorphism.identity(), "id")]) == 3


class TestInstantons:
    def test_lists_flat_levels(self, write_doc, capsys):
        assert main(["instantons", write_doc(paper_limit(), "limit")]) == 0
        lines = result_lines(capsys)
        assert lines[0] == "instantons 1"
        assert lines[1] == "instanton s 0.5 interval 0.25 0.75 range 0 1"

    def test_embedded_function_has_none(self, write_doc, capsys):
        assert main(["instantons", write_doc(EARLY, "early")]) == 0
        assert result_lines(capsys) == ["instantons 0"]


class TestDemo:
    def test_single_theta(self, tmp_path, capsys):
        outdir = tmp_path / "artifacts"
        assert main(["demo-triangle", "--theta-list", "4", "--tol", "1e-3", "--outdir", str(outdir)]) == 0
        assert "all bounds hold" in result_lines(capsys)
        for name in ("g_theta_overlay.svg", "limit.yaml", "limit.svg", "paper_limit.svg", "pointwise.csv"):
            assert (outdir / name).is_file()
        assert not (outdir / "pairwise.csv").exists()

    @pytest.mark.parametrize("thetas", ["2", "8,4", "4,abc", ""])
    def test_invalid_theta_list(self, tmp_path, thetas):
        assert main(["demo-triangle", "--theta-list", thetas, "--outdir", str(tmp_path / "out")]) == 3

    @pytest.mark.slow
    def test_two_thetas(self, tmp_path, capsys):
        outdir = tmp_path / "artifacts"
        assert main(["demo-triangle", "--theta-list", "4,8", "--tol", "1e-3", "--outdir", str(outdir)]) == 0
        pairwise = pd.read_csv(outdir / "pairwise.csv")
        assert len(pairwise) == 1
        assert bool(pairwise["holds"].iloc[0])

    def test_default_theta_list(self):
        args = build_parser().parse_args(["demo-triangle"])
        assert parse_theta_list(args.theta_list) == [4.0, 8.0, 16.0, 32.0, 64.0]

    def test_reruns_are_byte_identical(self, tmp_path, capsys):
        runs = []
        for name in ("first", "second"):
            outdir = tmp_path / name
            assert main(["demo-triangle", "--theta-list", "4", "--tol", "1e-3", "--outdir", str(outdir)]) == 0
            stdout = [line.replace(str(outdir), "<out>") for line in result_lines(capsys)]
            files = {path.name: path.read_bytes() for path in sorted(outdir.iterdir())}
            runs.append((stdout, files))
        assert runs[0] == runs[1]

    @pytest.mark.slow
    def test_default_thetas(self, tmp_path, capsys):
        outdir = tmp_path / "artifacts"
        assert main(["demo-triangle", "--tol", "1e-3", "--outdir", str(outdir)]) == 0
        assert "all bounds hold" in result_lines(capsys)
        pairwise = pd.read_csv(outdir / "pairwise.csv")
        assert len(pairwise) == 10
        assert pairwise["holds"].all()
        assert sorted(set(pairwise["theta_1"]) | set(pairwise["theta_2"])) == [4.0, 8.0, 16.0, 32.0, 64.0]
