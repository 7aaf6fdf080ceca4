import io
import json
import subprocess
import sys
from fractions import Fraction

import jsonschema
import pytest

from pe_conics.cli import CliConfig, main, parse_conic_input
from pe_conics.conic import Conic
from pe_conics.errors import ParseError

try:
    from importlib.resources import files
except ImportError:  # pragma: no cover
    from importlib_resources import files

SCHEMA = json.loads(files("pe_conics").joinpath("report.schema.json").read_text())


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


class TestConfig:
    def test_defaults(self):
        cfg = CliConfig()
        assert cfg.exact and cfg.output_format == "text"

    @pytest.mark.parametrize(
        "kw", [{"arithmetic_mode": "fuzzy"}, {"epsilon": 0}, {"output_format": "xml"}, {"plot_window": (1, 0, 0, 1)}]
    )
    def test_validation(self, kw):
        with pytest.raises(ValueError):
            CliConfig(**kw)


class TestParse:
    def test_csv(self):
        assert parse_conic_input("-1,0,0,1/4,0,-1") == Conic(-1, 0, 0, Fraction(1, 4), 0, -1)

    def test_json(self):
        src = '{"a00": -16, "a01": 0, "a02": 0, "a11": 3, "a12": 1, "a22": -5}'
        assert parse_conic_input(src) == Conic(-16, 0, 0, 3, 1, -5)

    def test_float_mode(self):
        assert all(isinstance(v, float) for v in parse_conic_input("1,0,0,1,0,1", exact=False).coeffs)

    @pytest.mark.parametrize("src", ["1,2,3", "a,0,0,1,0,1", '{"a00": 1}', "{bad", "1,0,0,1/0,0,1"])
    def test_errors(self, src):
        with pytest.raises(ParseError):
            parse_conic_input(src)


class TestClassifyCommand:
    def test_text(self):
        code, out, _ = run("classify", "--coeffs", "-1,0,0,1/4,0,-1")
        assert code == 0
        assert "first type hyperbola I" in out and "semiaxes: a=2 b=1" in out

    def test_positional_negative(self):
        code, out, _ = run("classify", "-16,0,0,3,1,-5")
        assert code == 0 and "f2-hyperbola-II-first" in out

    def test_json_schema(self):
        code, out, _ = run("classify", "--format", "json", "--coeffs", "-3,1,0,1,0,-1")
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, SCHEMA)
        assert doc["class_id"] == "f4-hyperbolic-circle-first"
        assert doc["center"] == {"x": -1.0, "y": 0.0}

    @pytest.mark.parametrize("coeffs", ["0,1,0,0,0,0", "1,0,0,0,0,0", "0,0,0,1,-1,1", "-1,2,3,4,5,6"])
    def test_json_schema_many(self, coeffs):
        code, out, _ = run("classify", "--format", "json", "--float", "--coeffs", coeffs)
        assert code == 0
        jsonschema.validate(json.loads(out), SCHEMA)

    def test_csv(self):
        code, out, _ = run("classify", "--format", "csv", "--coeffs", "4,0,0,1,0,-1")
        lines = out.strip().splitlines()
        assert lines[0].startswith("a00,a01,a02,a11,a12,a22,class_id")
        assert "f4-hyperbolic-circle-second" in lines[1]

    def test_zero_conic(self):
        code, _, err = run("classify", "--coeffs", "0,0,0,0,0,0")
        assert code == 2 and "error" in err

    def test_bad_input(self):
        assert run("classify", "--coeffs", "1,2")[0] == 2
        assert run("classify")[0] == 2

    def test_bad_flag(self):
        assert run("classify", "--nope")[0] == 2


class TestReduceCommand:
    def test_json(self):
        code, out, _ = run("reduce", "--format", "json", "--coeffs", "-3,1,0,1,0,-1")
        doc = json.loads(out)
        assert code == 0 and doc["canonical"] == [-4.0, 0.0, 0.0, 1.0, 0.0, -1.0]
        assert doc["motion"]["tx"] == -1.0

    def test_text(self):
        code, out, _ = run("reduce", "--coeffs", "-3,1,0,1,0,-1")
        assert code == 0 and "-4" in out


class TestTaxonomyCommand:
    def test_text_footer(self):
        code, out, _ = run("taxonomy")
        lines = out.strip().splitlines()
        assert code == 0 and len(lines) == 44
        assert lines[-1] == "43 types: 20 proper + 23 degenerate"

    def test_json(self):
        doc = json.loads(run("taxonomy", "--format", "json")[1])
        assert len(doc) == 43 and sum(r["proper"] for r in doc) == 20

    def test_csv(self):
        assert len(run("taxonomy", "--format", "csv")[1].strip().splitlines()) == 44


class TestBatch:
    HEADER = "a00,a01,a02,a11,a12,a22\n"

    def test_mixed_rows(self):
        src = self.HEADER + "-1,0,0,1/4,0,-1\n0,0,0,0,0,0\nx,1,2,3,4,5\n"
        code, out, _ = run("batch", stdin=src)
        rows = out.strip().splitlines()
        assert code == 0 and len(rows) == 4
        assert "f1-hyperbola-I-first" in rows[1]
        assert rows[2].endswith("invalid-conic")
        assert "parse-error" in rows[3]

    def test_all_bad(self):
        assert run("batch", stdin=self.HEADER + "0,0,0,0,0,0\n")[0] == 2

    def test_bad_header(self):
        assert run("batch", stdin="a,b,c\n1,2,3\n")[0] == 2

    def test_file_input(self, tmp_path):
        p = tmp_path / "in.csv"
        p.write_text(self.HEADER + "4,0,0,1,0,-1\n")
        code, out, _ = run("batch", "--in", str(p))
        assert code == 0 and "f4-hyperbolic-circle-second" in out

    def test_missing_file(self, tmp_path):
        assert run("batch", "--in", str(tmp_path / "nope.csv"))[0] == 2


class TestPlotCommand:
    def test_stdout(self):
        code, out, _ = run("plot", "--coeffs", "-1,0,0,1/4,0,-1")
        assert code == 0 and out.startswith("<?xml") and 'class="conic"' in out

    def test_file(self, tmp_path):
        p = tmp_path / "c.svg"
        code, out, _ = run("plot", "--coeffs", "-4,0,0,1,0,-1", "--out", str(p), "--window", "-3,3,-3,3")
        assert code == 0 and out == "" and p.read_text().rstrip().endswith("</svg>")


class TestSynthesize:
    def test_canonical(self):
        code, out, _ = run("synthesize", "--id", "f1-real-ellipse-first", "--params", "a=2,b=1")
        assert code == 0 and out.strip() == "-1,0,0,1/4,0,1"

    def test_round_trip_with_seed(self):
        code, out, _ = run("synthesize", "--id", "f2-hyperbola-II-first", "--params", "a=2,c=1", "--seed", "5")
        assert code == 0
        assert "f2-hyperbola-II-first" in run("classify", "--coeffs", out.strip())[1]

    def test_float(self):
        _, out, _ = run("synthesize", "--float", "--id", "f4-hyperbolic-circle-first", "--params", "a=3")
        assert out.strip() == "-9,0,0,1,0,-1"

    def test_bad(self):
        assert run("synthesize", "--id", "f1-nope")[0] == 2
        assert run("synthesize", "--id", "f1-real-ellipse-first", "--params", "a=1,b=2")[0] == 2
        assert run("synthesize", "--id", "f1-real-ellipse-first", "--params", "a")[0] == 2


def test_console_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "pe_conics.cli", "classify", "--coeffs", "4,0,0,1,0,-1"],
        capture_output=True,
        text=True,
    )
    assert r.returncode == 0 and "second type hyperbolic circle" in r.stdout
