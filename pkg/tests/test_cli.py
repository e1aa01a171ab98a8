import io
import json

import pytest

from main import run
from schemas.cli import BoundsOutput, CheckOutput, GenOutput, GstarOutput, PcOutput


def invoke(*argv, stdin=""):
    out = io.StringIO()
    code = run(list(argv), stdout=out, stdin=io.StringIO(stdin))
    return code, out.getvalue()


@pytest.fixture
def coloring_file(tmp_path):
    def write(text):
        path = tmp_path / "coloring.txt"
        path.write_text(text)
        return str(path)
    return write


def test_gen_then_pc():
    code, graph6 = invoke("gen", "--family", "g1")
    assert code == 0 and graph6.startswith("F")
    code, text = invoke("pc", stdin=graph6)
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "3" and lines[1] == "k 3"
    assert len(lines) == 2 + 9


def test_pc_json():
    code, text = invoke("pc", "--graph6", "Bg", "--format", "json")
    assert code == 0
    output = PcOutput.model_validate_json(text)
    assert output.pc == 2 and output.method == "tree"
    assert sorted(c for _, _, c in output.coloring) == [1, 2]


def test_pc_from_edge_list_file(tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text("n 4\n0 1\n1 2\n2 3\n3 0\n")
    code, text = invoke("pc", "--file", str(path))
    assert code == 0 and text.splitlines()[0] == "2"


def test_check_verdicts(coloring_file):
    code, text = invoke("check", "--graph6", "Bg", "--coloring", coloring_file("k 2\n0 1 1\n1 2 2\n"))
    assert code == 0 and text.strip() == "properly connected"

    code, text = invoke(
        "check", "--graph6", "Bg", "--coloring", coloring_file("k 1\n0 1 1\n1 2 1\n"), "--format", "json",
    )
    assert code == 1
    output = CheckOutput.model_validate_json(text)
    assert not output.properly_connected and output.unreachable_pair == [0, 2]


def test_check_refuses_two_stdin_inputs():
    code, _ = invoke("check", "--coloring", "-", stdin="Bg\n")
    assert code == 2


def test_check_rejects_bad_coloring(coloring_file):
    code, _ = invoke("check", "--graph6", "Bg", "--coloring", coloring_file("k 2\n0 1 1\n"))
    assert code == 2


def test_gstar_json():
    code, text = invoke("gstar", "--graph6", "Bg", "--format", "json")
    assert code == 0
    output = GstarOutput.model_validate_json(text)
    assert output.bridges == [[0, 1], [1, 2]]
    assert output.delta_star == 2 and output.bridge_degree == 2
    assert output.singletons == [0, 1, 2]


def test_bounds():
    code, text = invoke("bounds", "--variant", "thm34", "--n", "9")
    assert code == 0 and text.splitlines()[0] == "13"
    code, text = invoke("bounds", "--variant", "thm34", "--n", "9", "--format", "json")
    assert BoundsOutput.model_validate_json(text).result.value == 13


def test_gen_formats():
    code, text = invoke("gen", "--family", "gn", "--n", "9", "--as", "edge-list")
    assert code == 0 and text.splitlines()[0] == "n 9"
    code, text = invoke("gen", "--family", "gstar1", "--format", "json")
    output = GenOutput.model_validate_json(text)
    assert output.family == "g-star-1" and (output.n, output.m) == (5, 5)


def test_verify_small_order():
    code, text = invoke("verify", "--theorem", "thm-small-order", "--n", "7")
    assert code == 0
    assert "violators: 1 (matches expected exception set)" in text
    assert "exhaustive: yes" in text


def test_verify_json_ends_with_summary():
    code, text = invoke("verify", "--theorem", "thm2-bridgeless", "--n", "5", "--format", "json")
    assert code == 0
    summary = json.loads(text.splitlines()[-1])
    assert summary["violations"] == 0 and summary["scanned"] == 21


def test_verify_reads_graphs_from_stdin():
    code, text = invoke(
        "verify", "--theorem", "prop11", "--n", "3", "--source", "-", "--format", "json", stdin="Bw\nBg\n",
    )
    assert code == 0
    summary = json.loads(text.splitlines()[-1])
    assert summary["scanned"] == 2 and summary["violations"] == 0


def test_verify_needs_n():
    code, _ = invoke("verify", "--theorem", "prop11")
    assert code == 2


def test_verify_monotonicity_without_n():
    code, text = invoke("verify", "--theorem", "lemma-monotonicity", "--samples", "3", "--seed", "1")
    assert code == 0 and "violators: 0" in text


def test_search_exit_codes():
    code, text = invoke("search", "--n", "6", "--delta", "3")
    assert code == 0 and "counterexamples: 0" in text
    code, _ = invoke("search", "--n", "6", "--delta", "2")
    assert code == 2


@pytest.mark.parametrize("argv", [
    ["pc", "--graph6", "B?x"],
    ["pc", "--graph6", "!!"],
    ["pc", "--unknown"],
    ["gen", "--family", "g-n", "--n", "5"],
    [],
])
def test_errors_exit_two(argv):
    code, _ = invoke(*argv)
    assert code == 2


def test_disconnected_input_is_an_error():
    code, _ = invoke("pc", "--graph6", "B?")
    assert code == 2
