import json

import pytest

from chevalier import golden
from chevalier.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    return json.loads(out), out


def test_cartan_text(capsys):
    code, out, _ = run(capsys, "cartan", "--type", "g2")
    assert code == 0
    assert "type G2" in out and "epsilon [1, -1]" in out


def matrix_file(tmp_path, rows):
    p = tmp_path / "cartan.json"
    p.write_text(json.dumps({"cartan": rows}))
    return str(p)


def test_cartan_from_matrix_affine(capsys, tmp_path):
    code, out, _ = run(capsys, "cartan", "--matrix", matrix_file(tmp_path, [[2, -2], [-2, 2]]))
    assert code == 0 and "AFF" in out


def test_roots_json(capsys):
    doc, _ = run_json(capsys, "roots", "--type", "g2")
    assert [tuple(r) for r in doc["roots"]] == golden.G2_POSITIVE_ROOTS


def test_weyl(capsys):
    doc, _ = run_json(capsys, "weyl", "--type", "f4", "--order")
    assert doc["order"] == 1152
    code, out, _ = run(capsys, "weyl", "--type", "g2", "--allwords", "2")
    assert code == 0 and "[1, 2]" in out


def test_weyl_word_roundtrip(capsys):
    doc, _ = run_json(capsys, "weyl", "--type", "g2", "--wordperm", "1,2,1")
    perm = doc["wordperm"]
    doc, _ = run_json(capsys, "weyl", "--type", "g2", "--permword", ",".join(map(str, perm)))
    assert doc["permword"] == [1, 2, 1]


def test_lie(capsys):
    doc, _ = run_json(capsys, "lie", "--type", "g2", "--structconst", "2", "4")
    assert doc["structconst"] == [2, 4, -3, 5]
    code, out, _ = run(capsys, "lie", "--type", "b3", "--checkrels")
    assert code == 0 and "Relations OK" in out


def test_weights(capsys):
    doc, _ = run_json(capsys, "weights", "--type", "e6", "--minuscule")
    assert doc["minuscule"] == [1, 6]
    doc, _ = run_json(capsys, "weights", "--type", "e6", "--orbit", "1,0,0,0,0,0")
    assert [tuple(w) for w in doc["orbit"]] == golden.E6_ORBIT_OMEGA1


def test_module_load_and_check(capsys, tmp_path):
    p = tmp_path / "g2.json"
    p.write_text(json.dumps(golden.g2_seven_json()))
    code, out, _ = run(capsys, "module", "--load", str(p), "--check")
    assert code == 0 and "admissible" in out


def test_group_matrix(capsys):
    doc, _ = run_json(capsys, "group", "--type", "a1", "--rep", "adjoint", "--gen", "x",
                      "--root", "1", "--ring", "GF(7)", "--param", "3")
    # v_a fixed, u -> u + 2t v_a, v_-a -> v_-a + t u + t^2 v_a, with t = 3 in GF(7)
    assert doc["ring"] == "GF(7)"
    assert sorted(map(tuple, doc["entries"])) == [(0, 0, 1), (0, 1, 6), (0, 2, 2),
                                                 (1, 1, 1), (1, 2, 3), (2, 2, 1)]


def test_group_check_all(capsys):
    code, out, _ = run(capsys, "group", "--type", "c2", "--rep", "minuscule:2", "--check-all",
                       "--field", "GF(3)")
    assert code == 0 and "FAIL" not in out


def test_json_output_is_byte_stable(capsys):
    _, first = run_json(capsys, "lie", "--type", "g2", "--export")
    _, second = run_json(capsys, "lie", "--type", "g2", "--export")
    assert first == second


def test_check_criterion(capsys):
    code, out, _ = run(capsys, "check", "--criterion", "3", "--criterion", "4")
    assert code == 0
    assert "[PASS]  3." in out and "[PASS]  4." in out


def test_check_suite(capsys):
    code, out, _ = run(capsys, "check", "--suite", "chevrels", "--type", "f4")
    assert code == 0


@pytest.mark.parametrize("argv", [
    ["cartan", "--type", "q9"],
    ["cartan", "--matrix", "/nonexistent/cartan.json"],
    ["group", "--type", "g2", "--rep", "minuscule:1", "--gen", "x", "--root", "1"],
    ["group", "--type", "g2", "--rep", "adjoint", "--gen", "n", "--root", "1", "--ring", "ZT",
     "--param", "1"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith(f"chevalier {argv[0]}:")


@pytest.mark.parametrize("cmd, rows", [
    ("cartan", [[2, -1], [0, 2]]),
    ("cartan", [[2, -1], [-1]]),
    ("lie", [[2, -2], [-2, 2]]),
])
def test_bad_matrices_exit_2(capsys, tmp_path, cmd, rows):
    code, _, err = run(capsys, cmd, "--matrix", matrix_file(tmp_path, rows))
    assert code == 2 and err.startswith(f"chevalier {cmd}:")
