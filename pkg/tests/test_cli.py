import json
import subprocess
import sys
from pathlib import Path

import pytest

from bettibound.cli import main

GOLDEN = Path(__file__).parent / "golden"


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def ideal_file(tmp_path, vars, gens, name="ideal.json"):
    return write(tmp_path, name, {"vars": vars, "generators": gens})


def hilbert_file(tmp_path, vars, values, name="h.json"):
    return write(tmp_path, name, {"vars": vars, "values": values})


SQUARE = [[2, 0, 0], [1, 1, 0], [0, 2, 0]]


def test_check(tmp_path, capsys):
    code, out, _ = run(capsys, "check", ideal_file(tmp_path, 3, SQUARE), "--max-degree", "4", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["classification"] == {"lex": False, "borel": True, "stable": True}
    assert data["hilbert"]["values"] == [0, 0, 3, 7, 12]
    code, out, _ = run(capsys, "check", ideal_file(tmp_path, 2, [[1, 0]]), "--format", "json")
    assert code == 0 and json.loads(out)["classification"] == {"lex": True, "borel": True, "stable": True}
    code, _, err = run(capsys, "check", ideal_file(tmp_path, 2, [[0, 0]]))
    assert code == 1 and "error" in err


@pytest.mark.parametrize("content", ["not json", "[1, 2]", '{"vars": 2}', '{"vars": 0, "generators": []}',
                                     '{"vars": 2, "generators": [[1, 0, 0]]}', '{"vars": 2, "generators": [[-1, 2]]}'])
def test_malformed_inputs_exit_1(tmp_path, capsys, content):
    code, _, _ = run(capsys, "check", write(tmp_path, "bad.json", content))
    assert code == 1


def test_usage_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["betti"])
    assert exc.value.code == 1
    assert run(capsys, "check", "/nonexistent/file.json")[0] == 1


def test_non_minimal_input_is_minimalized_with_a_warning(tmp_path, capsys, caplog):
    path = ideal_file(tmp_path, 2, [[1, 0], [2, 0], [1, 1]])
    code, out, _ = run(capsys, "check", path, "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["ideal"]["generators"] == [[1, 0]] and data["input_minimal"] is False
    assert "not minimal" in caplog.text


def test_betti(tmp_path, capsys):
    code, out, _ = run(capsys, "betti", ideal_file(tmp_path, 3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]), "--oracle",
                       "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["agree"] is True
    assert data["eliahou_kervaire"]["betas"] == data["taylor"]["betas"] == [3, 3, 1]
    odd = ideal_file(tmp_path, 3, [[1, 1, 0], [0, 1, 1]])
    assert run(capsys, "betti", odd)[0] == 1
    code, out, _ = run(capsys, "betti", odd, "--oracle", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["taylor"]["betas"] == [2, 1, 0] and "agree" not in data


def test_betti_text_and_csv(tmp_path, capsys):
    path = ideal_file(tmp_path, 3, SQUARE)
    code, out, _ = run(capsys, "betti", path, "--oracle")
    assert code == 0 and out.splitlines()[-1] == "AGREE"
    code, out, _ = run(capsys, "betti", path, "--format", "csv")
    assert out == "q,beta\n0,3\n1,2\n2,0\n\nd,q,contribution\n2,0,3\n2,1,2\n2,2,0\n"


def test_size_guard_exit_3(tmp_path, capsys):
    gens = [[a, 6 - a, 0] for a in range(7)]
    code, _, err = run(capsys, "betti", ideal_file(tmp_path, 3, gens), "--oracle", "--size-guard", "5")
    assert code == 3 and "error" in err
    odd = [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [1, 0, 0, 1], [2, 0, 1, 0], [0, 2, 0, 1]]
    assert run(capsys, "compare", ideal_file(tmp_path, 4, odd), "--size-guard", "4")[0] == 3


def test_lexify(tmp_path, capsys):
    code, out, _ = run(capsys, "lexify", hilbert_file(tmp_path, 3, [0, 0, 3, 7, 12]), "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["ideal"]["generators"] == [[2, 0, 0], [1, 1, 0], [1, 0, 1], [0, 3, 0]]
    assert data["generator_degrees"] == [[2, 3], [3, 1]]
    code, _, err = run(capsys, "lexify", hilbert_file(tmp_path, 3, [0, 0, 3, 5]))
    assert code == 2 and "degree 3" in err
    code, out, _ = run(capsys, "lexify", hilbert_file(tmp_path, 2, [0, 1, 2, 3]), "--format", "json")
    assert code == 0 and json.loads(out)["ideal"]["generators"] == [[1, 0]]


def test_bounds(tmp_path, capsys):
    code, out, _ = run(capsys, "bounds", hilbert_file(tmp_path, 3, [0, 0, 3, 7, 12]), "--verify", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["betti"]["betas"] == [4, 4, 1] and data["verified"] is True and data["beta1_closed_form"] == 4
    code, out, _ = run(capsys, "bounds", hilbert_file(tmp_path, 2, [0, 1, 2, 3]), "--format", "json")
    assert code == 0 and json.loads(out)["betti"]["betas"] == [1, 0]
    code, _, err = run(capsys, "bounds", hilbert_file(tmp_path, 3, [0, 0, 3]))
    assert code == 2 and err
    assert run(capsys, "bounds", hilbert_file(tmp_path, 3, [0, 0, 3, 5]))[0] == 2
    # a value above the number of monomials is malformed, not inadmissible
    assert run(capsys, "bounds", hilbert_file(tmp_path, 3, [0, 0, 7]))[0] == 1


def test_compare_golden_is_byte_exact(capsys):
    code, out, _ = run(capsys, "compare", str(GOLDEN / "square.json"), "--format", "json")
    assert code == 0
    assert out == (GOLDEN / "compare_square.json").read_text()


def test_compare_other_examples(tmp_path, capsys):
    lex = ideal_file(tmp_path, 3, [[2, 0, 0], [1, 1, 0], [1, 0, 1], [0, 3, 0]])
    code, out, _ = run(capsys, "compare", lex, "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["dominated"] and data["betti"] == data["lex_betti"]
    code, out, _ = run(capsys, "compare", ideal_file(tmp_path, 3, [[1, 1, 0], [0, 1, 1]]), "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["source"] == "taylor" and data["betti"]["betas"] == [2, 1, 0] and data["dominated"]
    code, out, _ = run(capsys, "compare", str(GOLDEN / "square.json"))
    assert code == 0 and out.splitlines()[-1] == "DOMINATED"
    assert run(capsys, "compare", str(GOLDEN / "square.json"), "--max-degree", "2")[0] == 2


def test_fuzz(capsys):
    code, out, _ = run(capsys, "fuzz", "--vars", "3", "--max-degree", "4", "--cases", "100", "--seed", "7",
                       "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["passed"] == data["cases"] == 100 and data["failures"] == []
    code, out, _ = run(capsys, "fuzz", "--vars", "3", "--max-degree", "4", "--cases", "0")
    assert code == 0 and out.startswith("0/0 cases pass")
    assert run(capsys, "fuzz", "--vars", "1", "--max-degree", "3")[0] == 1


def test_outputs_are_deterministic(tmp_path, capsys):
    args = ["fuzz", "--vars", "4", "--max-degree", "3", "--cases", "25", "--seed", "3", "--format", "json"]
    first = run(capsys, *args)
    assert first == run(capsys, *args)
    other = run(capsys, *args[:-3], "4", "--format", "json")
    assert other[0] == 0 and other[1] != first[1]
    path = ideal_file(tmp_path, 3, SQUARE)
    assert run(capsys, "compare", path, "--format", "json") == run(capsys, "compare", path, "--format", "json")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bettibound", "compare", str(GOLDEN / "square.json"), "--format", "json"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "compare_square.json").read_text()
