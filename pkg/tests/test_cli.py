"""End-to-end CLI behavior: commands, formats, exit codes, determinism."""

import json

import pytest

from fuskit.cli import main
from fuskit.core import FusionRing
from fuskit.families import psu2_6


@pytest.fixture()
def fib_file(tmp_path):
    main(["construct", "--family", "fibonacci", "--output", str(tmp_path / "fib.json")])
    return str(tmp_path / "fib.json")


@pytest.fixture()
def broken_file(tmp_path):
    ring = psu2_6()
    constants = dict(ring.constants)
    x = ring.index("X")
    constants[(x, x, x)] = 2
    broken = FusionRing("broken", ring.basis, ring.unit, list(ring.dual), constants)
    path = tmp_path / "broken.json"
    path.write_text(broken.to_json_str())
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestValidateCommand:
    def test_valid_ring_exit_zero(self, capsys, fib_file):
        code, out, _ = run(capsys, ["validate", fib_file])
        assert code == 0
        assert json.loads(out)["pass"] is True

    def test_broken_ring_exit_one_with_witness(self, capsys, broken_file):
        code, out, _ = run(capsys, ["validate", broken_file])
        assert code == 1
        payload = json.loads(out)
        axioms = {a["axiom"]: a for a in payload["axioms"]}
        assert axioms["associativity"]["pass"] is False
        assert axioms["associativity"]["witness"] == ["d", "X", "X", "Y"]

    def test_missing_file_exit_two(self, capsys, tmp_path):
        code, _, err = run(capsys, ["validate", str(tmp_path / "nope.json")])
        assert code == 2
        assert "cannot read" in err

    def test_garbage_exit_two(self, capsys, tmp_path):
        p = tmp_path / "garbage.json"
        p.write_text("{broken")
        code, _, err = run(capsys, ["validate", str(p)])
        assert code == 2
        assert "malformed" in err


class TestConstructClassify:
    def test_psu_pipeline(self, capsys, tmp_path, monkeypatch):
        code, ring_json, _ = run(capsys, ["construct", "--family", "psu2_6"])
        assert code == 0
        import io, sys

        monkeypatch.setattr(sys, "stdin", io.StringIO(ring_json))
        code, out, _ = run(capsys, ["classify", "-"])
        assert code == 0
        payload = json.loads(out)
        assert payload["is_gng"] is True
        assert payload["type"]["kvec"] == {"X": 1, "Y": 1}
        assert payload["type"]["group_order"] == 2
        assert payload["type"]["gamma"] == ["1"]

    def test_json_family_spec(self, capsys):
        spec = json.dumps({"family": "fib_extension", "group": {"type": "cyclic", "n": 3}})
        code, out, _ = run(capsys, ["construct", "--family", spec])
        assert code == 0
        assert len(json.loads(out)["basis"]) == 6

    def test_unknown_family_exit_two(self, capsys):
        code, _, err = run(capsys, ["construct", "--family", "nonsense"])
        assert code == 2

    def test_pointed_ring_classify(self, capsys, monkeypatch):
        spec = json.dumps({"family": "pointed", "group": {"type": "cyclic", "n": 3}})
        code, ring_json, _ = run(capsys, ["construct", "--family", spec])
        import io, sys

        monkeypatch.setattr(sys, "stdin", io.StringIO(ring_json))
        code, out, _ = run(capsys, ["classify", "-"])
        assert code == 0
        assert json.loads(out)["pointed"] is True


class TestOtherCommands:
    def test_info(self, capsys, fib_file):
        code, out, _ = run(capsys, ["info", fib_file])
        payload = json.loads(out)
        assert payload["rank"] == 2
        assert payload["fpdim"] == "5/2+1/2*sqrt(5)"

    def test_grading(self, capsys, tmp_path):
        run(capsys, ["construct", "--family", json.dumps(
            {"family": "tambara_yamagami", "group": {"type": "cyclic", "n": 2}}),
            "--output", str(tmp_path / "ty.json")])
        code, out, _ = run(capsys, ["grading", str(tmp_path / "ty.json")])
        assert code == 0
        payload = json.loads(out)
        assert len(payload["components"]) == 2
        assert set(payload["component_dims"].values()) == {"2"}

    def test_product(self, capsys, fib_file, tmp_path):
        code, out, _ = run(capsys, ["product", fib_file, fib_file])
        assert code == 0
        assert len(json.loads(out)["basis"]) == 4

    def test_factorize_extension(self, capsys, tmp_path):
        run(capsys, ["construct", "--family", json.dumps(
            {"family": "fib_extension", "group": {"type": "cyclic", "n": 2}}),
            "--output", str(tmp_path / "fe.json")])
        code, out, _ = run(capsys, ["factorize", str(tmp_path / "fe.json")])
        assert code == 0
        assert json.loads(out)["exact_factorization"] is True

    def test_factorize_failure_exit_one(self, capsys, fib_file):
        code, out, _ = run(capsys, ["factorize", fib_file, "--left", "X", "--right", "X"])
        assert code == 1
        assert json.loads(out)["exact_factorization"] is False

    def test_solve_lemma41(self, capsys):
        code, out, _ = run(capsys, ["solve-lemma41", "--bound", "10"])
        assert code == 0
        assert json.loads(out) == {"pairs": [[3, 5]], "triples": []}

    def test_solve_lemma41_text(self, capsys):
        code, out, _ = run(capsys, ["solve-lemma41", "--bound", "25", "--format", "text"])
        assert code == 0
        assert "pairs" in out

    def test_round_trip_construct_parse_validate(self, capsys, tmp_path):
        for family in ("psu2_6", "fibonacci"):
            path = tmp_path / f"{family}.json"
            run(capsys, ["construct", "--family", family, "--output", str(path)])
            first = path.read_text()
            ring = FusionRing.from_json_str(first)
            assert ring.to_json_str() == first
            code, _, _ = run(capsys, ["validate", str(path)])
            assert code == 0


class TestVerifyCommand:
    def test_single_check(self, capsys):
        code, out, _ = run(capsys, ["verify", "--only", "cosine_solutions"])
        assert code == 0
        payload = json.loads(out)
        assert payload["pass"] is True
        assert payload["counts"] == {"total": 1, "failed": 0}

    def test_unknown_check_exit_two(self, capsys):
        code, _, err = run(capsys, ["verify", "--only", "nonsense"])
        assert code == 2
        assert "unknown check" in err

    def test_text_format(self, capsys):
        code, out, _ = run(capsys, ["verify", "--only", "multiplicity_bound", "--format", "text"])
        assert code == 0
        assert "PASS" in out and "1/1 checks passed" in out

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        code, out, _ = run(capsys, ["verify", "--only", "cosine_solutions", "--output", str(path)])
        assert code == 0
        assert json.loads(path.read_text())["pass"] is True
