import json
import subprocess
import sys

import pytest

from dppasm import Asm, Partition, Permutation, formats, validate_dpp
from dppasm.cli import main
from dppasm.enumeration import enumerate_dpps, enumerate_mts
from dppasm.genfunc import QPolynomial

from conftest import EX6_MATRIX

EX6_TEXT = "6 6 6 6 5 / 5 4 4 4 / 3 3"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestCount:
    @pytest.mark.parametrize("argv, expected", [
        (("count", "--object", "dpp", "--n", "3", "--mode", "enumerate"), "7"),
        (("count", "--object", "dpp-nospecial", "--n", "3", "--mode", "formula"), "6"),
        (("count", "--object", "asm", "--n", "5", "--mode", "enumerate"), "429"),
        (("count", "--object", "monotone-triangle", "--n", "4"), "42"),
        (("count", "--object", "permutation", "--n", "4"), "24"),
        (("count", "--object", "dpp", "--n", "10", "--mode", "formula"), "129534272700"),
    ])
    def test_values(self, capsys, argv, expected):
        code, out, _ = run(capsys, *argv)
        assert code == 0 and out.strip() == expected

    def test_cap(self, capsys):
        code, _, err = run(capsys, "count", "--object", "dpp", "--n", "9")
        assert code == 2 and "cap" in err
        code, out, _ = run(capsys, "count", "--object", "dpp", "--n", "2", "--cap", "1")
        assert code == 2

    def test_bad_arguments(self, capsys):
        assert run(capsys, "count", "--object", "nope", "--n", "3")[0] == 1
        assert run(capsys, "count", "--object", "dpp")[0] == 1
        assert run(capsys, "frobnicate")[0] == 1


class TestMap:
    def test_worked_example_trace(self, capsys):
        code, out, _ = run(capsys, "map", "--from", "dpp", "--to", "asm", "--n", "6", "--trace", EX6_TEXT)
        assert code == 0
        lines = dict(line.split(": ", 1) for line in out.strip().splitlines())
        assert lines["partition"] == "6 6 6 6 5 5 4 4 4 3 3"
        assert lines["monotone-triangle"] == "4 / 4 6 / 3 4 6 / 3 4 5 6 / 1 3 4 5 6 / 1 2 3 4 5 6"
        assert formats.parse_text("asm", lines["asm"]).entries == EX6_MATRIX
        assert lines["permutation"] == "463512"

    def test_empty_dpp(self, capsys):
        code, out, _ = run(capsys, "map", "--from", "dpp", "--to", "asm", "--n", "3", "-")
        assert code == 0 and out.strip() == "1 0 0; 0 1 0; 0 0 1"

    def test_special_parts_exit_3(self, capsys):
        code, _, err = run(capsys, "map", "--from", "dpp", "--to", "asm", "--n", "3", "3 1")
        assert code == 3 and "HasSpecialParts" in err

    def test_minus_ones_exit_3(self, capsys):
        code, _, err = run(capsys, "map", "--from", "asm", "--to", "dpp", "0 1 0; 1 -1 1; 0 1 0")
        assert code == 3 and "AsmHasMinusOnes" in err

    def test_asm_triangle_defined_for_all_asms(self, capsys):
        code, out, _ = run(capsys, "map", "--from", "asm", "--to", "monotone-triangle",
                           "0 1 0; 1 -1 1; 0 1 0")
        assert code == 0 and out.strip() == "2 / 1 3 / 1 2 3"

    def test_reverse_direction(self, capsys):
        code, out, _ = run(capsys, "map", "--from", "permutation", "--to", "dpp", "463512")
        assert code == 0 and out.strip() == EX6_TEXT
        code, out, _ = run(capsys, "map", "--from", "partition", "--to", "dpp", "--n", "3", "3 3 2")
        assert code == 0 and out.strip() == "3 3 / 2"

    def test_parse_errors_exit_1(self, capsys):
        assert run(capsys, "map", "--from", "dpp", "--to", "asm", "--n", "3", "3 x")[0] == 1
        assert run(capsys, "map", "--from", "dpp", "--to", "asm", "--n", "3", "2 2")[0] == 1
        assert run(capsys, "map", "--from", "dpp", "--to", "asm", "3 3")[0] == 1

    def test_json_and_input_file(self, capsys, tmp_path):
        doc = tmp_path / "dpp.json"
        doc.write_text(formats.dumps(validate_dpp([[6, 6, 6, 6, 5], [5, 4, 4, 4], [3, 3]], 6)))
        code, out, _ = run(capsys, "map", "--from", "dpp", "--to", "permutation",
                           "--format", "json", "--input", str(doc))
        assert code == 0
        assert json.loads(out) == {"kind": "permutation", "n": 6, "payload": [4, 6, 3, 5, 1, 2]}

    def test_json_trace_reparses(self, capsys):
        doc = formats.dumps(formats.parse_text("dpp", EX6_TEXT, 6))
        code, out, _ = run(capsys, "map", "--from", "dpp", "--to", "asm",
                           "--trace", "--format", "json", doc)
        docs = json.loads(out)
        assert [d["kind"] for d in docs] == list(formats.KINDS)
        objs = [formats.from_document(d) for d in docs]
        assert objs[0] == validate_dpp([[6, 6, 6, 6, 5], [5, 4, 4, 4], [3, 3]], 6)
        assert objs[4] == Permutation((4, 6, 3, 5, 1, 2))


class TestStats:
    def test_dpp(self, capsys):
        code, out, _ = run(capsys, "stats", "--object", "dpp", "--n", "6", EX6_TEXT)
        assert code == 0 and out.strip() == "p=11 k=4 m=0 weight=52"

    def test_identity(self, capsys):
        code, out, _ = run(capsys, "stats", "--object", "asm", "1 0 0 0; 0 1 0 0; 0 0 1 0; 0 0 0 1")
        fields = dict(kv.split("=") for kv in out.split())
        assert code == 0
        assert (fields["inversions"], fields["minus_ones"], fields["last_col_one_row"]) == ("0", "0", "4")

    def test_center(self, capsys):
        code, out, _ = run(capsys, "stats", "--object", "asm", "0 1 0; 1 -1 1; 0 1 0")
        fields = dict(kv.split("=") for kv in out.split())
        assert (fields["inversions"], fields["minus_ones"]) == ("2", "1")

    def test_invalid(self, capsys):
        assert run(capsys, "stats", "--object", "asm", "1 1; 0 0")[0] == 1


class TestGf:
    @pytest.mark.parametrize("which, expected", [
        ("eq3", "1 + q^2 + q^3 + q^5 + q^6 + q^8"),
        ("qfactorial", "1 + 2*q + 2*q^2 + q^3"),
        ("empirical-all", "1 + q^2 + q^3 + q^4 + q^5 + q^6 + q^8"),
        ("eq2", "1 + q^2 + q^3 + q^4 + q^5 + q^6 + q^8"),
        ("empirical-nospecial", "1 + q^2 + q^3 + q^5 + q^6 + q^8"),
    ])
    def test_n3(self, capsys, which, expected):
        code, out, _ = run(capsys, "gf", "--which", which, "--n", "3")
        assert code == 0 and out.strip() == expected
        assert str(QPolynomial.parse(out)) == expected


class TestVerify:
    def test_all(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "all", "--n-max", "5")
        assert code == 0 and "FAIL" not in out

    def test_trivial(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "roundtrip", "--n-max", "0")
        assert code == 0 and "roundtrip n=0: 2/2 passed" in out

    def test_conjecture3(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "conjecture3-m0", "--n-max", "6")
        assert code == 0 and "720 pairs matched" in out.splitlines()[6]

    def test_failure_reports_counterexample(self, capsys, monkeypatch):
        import dppasm.verify as verify

        monkeypatch.setattr(verify, "inversion_number", lambda a: 0)
        code, out, _ = run(capsys, "verify", "--suite", "inversion-identity", "--n-max", "3")
        assert code == 4
        line = [ln for ln in out.splitlines() if ln.startswith("counterexample")][0]
        doc = json.loads(line.split(": ", 1)[1].rsplit(" (", 1)[0])
        assert formats.from_document(doc).n == 2

    def test_cap(self, capsys):
        assert run(capsys, "verify", "--n-max", "9")[0] == 2


class TestArrangements:
    @pytest.mark.parametrize("parts, n, total", [("5 5 5 3 1", 5, 2), ("3 3 2", 3, 1), ("", 4, 1)])
    def test_totals(self, capsys, parts, n, total):
        code, out, _ = run(capsys, "arrangements", "--parts", parts, "--n", str(n))
        assert code == 0 and out.strip().splitlines()[-1] == f"total: {total}"

    def test_listing_reparses(self, capsys):
        _, out, _ = run(capsys, "arrangements", "--parts", "5 5 5 3 1", "--n", "5")
        listed = [formats.parse_text("dpp", ln, 5) for ln in out.splitlines()[:-1]]
        assert {d.rows for d in listed} == {((5, 5, 5, 1), (3,)), ((5, 5, 5), (3, 1))}

    def test_part_too_large(self, capsys):
        assert run(capsys, "arrangements", "--parts", "6", "--n", "5")[0] == 1


class TestFormats:
    def test_every_object_roundtrips(self):
        objs = list(enumerate_dpps(4)) + list(enumerate_mts(4))
        objs += [Asm(((0, 1, 0), (1, -1, 1), (0, 1, 0))), Partition((3, 3, 2)), Partition(()),
                 Permutation(tuple(range(12, 0, -1))), Permutation(())]
        for obj in objs:
            kind = formats.kind_of(obj)
            n = obj.n if hasattr(obj, "n") else None
            assert formats.parse_text(kind, formats.to_text(obj), n) == obj
            assert formats.loads(formats.dumps(obj)) == obj

    def test_long_permutation_uses_spaces(self):
        assert str(Permutation(tuple(range(10, 0, -1)))) == "10 9 8 7 6 5 4 3 2 1"

    def test_bad_documents(self):
        with pytest.raises(formats.ParseError):
            formats.loads("{")
        with pytest.raises(formats.ParseError):
            formats.from_document({"kind": "dpp"})
        with pytest.raises(formats.ParseError):
            formats.parse_text("asm", "1 0; 0 1", 3)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dppasm", "gf", "--which", "eq3", "--n", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1 + q^2 + q^3 + q^5 + q^6 + q^8"
