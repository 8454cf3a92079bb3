import json
from itertools import combinations

import pytest

from conftest import DATA
from ftdesigns.cli import main
from ftdesigns.incidence import IncidenceStructure, structure_to_json
from ftdesigns.perm import canonical_json


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_fano(capsys, tmp_path):
    design = tmp_path / "fano_complement.json"
    code, out, _ = run(capsys, "construct", "--name", "line2_fano_complement",
                       "--out", str(design))
    assert code == 0
    code, out, _ = run(capsys, "verify",
                       "--group", str(DATA / "catalog" / "line2_fano_complement" / "group.json"),
                       "--design", str(design))
    assert code == 0
    assert out.strip() == "(7,7,4,4,2) flag-transitive point-primitive"


def test_verify_trivial_group_fails(capsys, tmp_path):
    group = tmp_path / "trivial.json"
    group.write_text(canonical_json(
        {"name": "trivial", "degree": 4, "generators": []}))
    pairs = IncidenceStructure.from_blocks(4, list(combinations(range(4), 2)))
    design = tmp_path / "pairs4.json"
    design.write_text(structure_to_json(pairs, name="pairs4"))
    code, out, _ = run(capsys, "verify", "--group", str(group),
                       "--design", str(design))
    assert code == 1
    assert "NOT flag-transitive" in out


def test_verify_parse_error_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    code, _, err = run(capsys, "verify", "--group", str(bad),
                       "--design", str(bad))
    assert code == 2
    assert "bad.json" in err


def test_verify_hs(capsys, tmp_path):
    design = tmp_path / "hs.json"
    assert run(capsys, "construct", "--name", "line10_hs",
               "--out", str(design))[0] == 0
    code, out, _ = run(capsys, "verify",
                       "--group", str(DATA / "catalog" / "line10_hs" / "group.json"),
                       "--design", str(design))
    assert code == 0
    assert out.strip() == "(176,1100,50,8,2) flag-transitive point-primitive"


def test_construct_unknown_name(capsys):
    code, _, err = run(capsys, "construct", "--name", "nope")
    assert code == 2


def test_construct_to_stdout_roundtrips(capsys):
    code, out, _ = run(capsys, "construct", "--name", "pg_lines:3")
    assert code == 0
    doc = json.loads(out)
    assert doc["v"] == 13 and len(doc["blocks"]) == 13


def test_eliminate_suzuki_range(capsys):
    code, out, _ = run(capsys, "eliminate", "--family", "suzuki",
                       "--q-min", "8", "--q-max", "128")
    assert code == 0
    assert "summary: 3 cases, 3 eliminated, 0 flagged, 0 candidates" in out


def test_eliminate_ree_flagged_exit_zero(capsys):
    code, out, _ = run(capsys, "eliminate", "--family", "ree",
                       "--q-min", "27", "--q-max", "27")
    assert code == 0
    assert "1 flagged" in out


def test_eliminate_g2_matches_case_table(capsys):
    code, out, _ = run(capsys, "eliminate", "--family", "g2",
                       "--q-min", "3", "--q-max", "16")
    assert code == 0
    # prime powers in [3,16]: 3,4,5,7,8,9,11,13,16 -> 9 values, both signs
    assert "summary: 18 cases, 9 eliminated, 9 flagged, 0 candidates" in out


def test_eliminate_json_output(capsys):
    code, out, _ = run(capsys, "eliminate", "--family", "e6",
                       "--q-min", "2", "--q-max", "3", "--json")
    assert code == 0
    docs = json.loads(out)
    assert len(docs) == 4
    assert {d["verdict"] for d in docs} == {"eliminated"}


def test_eliminate_unknown_family(capsys):
    with pytest.raises(SystemExit):
        run(capsys, "eliminate", "--family", "m24")


def test_feasible_default_modulus(capsys):
    code, out, _ = run(capsys, "feasible", "--v", "7")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "v\tb\tr\tk\tlambda"
    assert "7\t7\t4\t4\t2" in lines


def test_feasible_includes_biplane(capsys):
    code, out, _ = run(capsys, "feasible", "--v", "11")
    assert code == 0
    assert "11\t11\t5\t5\t2" in out


def test_feasible_explicit_modulus(capsys):
    code, out, _ = run(capsys, "feasible", "--v", "65", "--lambda", "2",
                       "--r-mod", "128")
    assert code == 0
    assert "65\t416\t32\t5\t2" in out


def test_feasible_empty(capsys):
    code, out, _ = run(capsys, "feasible", "--v", "65", "--lambda", "2",
                       "--r-mod", "3")
    assert code == 0
    assert out.strip() == "no feasible parameter sets"


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog-list")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 10
    assert any(line.startswith("line10_hs\t(176,1100,50,8,2)") for line in lines)


def test_byte_identical_reruns(capsys):
    first = run(capsys, "eliminate", "--family", "g2",
                "--q-min", "3", "--q-max", "8", "--json")
    second = run(capsys, "eliminate", "--family", "g2",
                 "--q-min", "3", "--q-max", "8", "--json")
    assert first == second
