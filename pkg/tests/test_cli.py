from __future__ import annotations

import io
import json
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from simplicial import cli
from simplicial import presentation as pr

GOLDEN = Path(__file__).parent / "golden"
WORKED = "p[1,0].p[2,1].p3.q[6,5].q[8,6].p[11,9]"
D1 = {"cups": [[2, 3], [4, 5], [10, 11]], "caps": [[-2, -1], [-8, -7]], "type": [11, 9]}
D2 = {"cups": [[2, 3], [4, 5]], "caps": [[-4, -3], [-6, -5], [-8, -7]], "type": [8, 10]}


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize("argv,golden", [
    (["normalize", "--n", "2", "p0.q0"], "normalize_p0q0.txt"),
    (["eval", "--n", "15", WORKED], "eval_worked.txt"),
    (["enumerate", "--n", "3", "--count-only"], "enumerate_3_count.txt"),
])
def test_golden(argv, golden):
    code, text = run(*argv)
    assert code == cli.EXIT_OK
    assert text == (GOLDEN / golden).read_text()


def test_exit_codes():
    assert run("normalize", "--n", "3", "p5")[0] == cli.EXIT_INVALID
    assert run("normalize", "--n", "3", "p0..q0")[0] == cli.EXIT_PARSE
    assert run("convert", "adj-word", "map", "GXF@O")[0] == cli.EXIT_PARSE
    assert run("render", "--frieze", '{"cups": []}')[0] == cli.EXIT_INVALID


def test_trace_names_equations():
    code, text = run("normalize", "--n", "2", "--trace", "p0.q0")
    assert code == 0
    assert text.splitlines()[0].split()[0] == "II.2.1pq"
    assert text.splitlines()[-1] == "p[0,0]"


def test_eq_and_decompose():
    assert run("eq", "--n", "2", "p0.q0", "p0")[1] == "true\n"
    assert run("eq", "--n", "2", "p0", "q0")[1] == "false\n"
    code, text = run("decompose", "0,0,1")
    assert code == 0
    assert pr.sigma(pr.parse_term(text.strip(), 3), 3).values == (0, 0, 1)


def test_enumerate_lists_normal_forms():
    lines = run("enumerate", "--n", "3")[1].splitlines()
    assert len(lines) == 10 and len(set(lines)) == 10
    images = {pr.sigma(pr.parse_term(line, 3), 3) for line in lines}
    assert len(images) == 10


@pytest.mark.parametrize("n", range(0, 7))
def test_format_parse_round_trip(n):
    for nf in pr.enumerate_normal_forms(min(n, 5)):
        text = pr.format_blocks(nf)
        code, out = run("normalize", "--n", str(n), text)
        assert code == 0 and out.strip() == text


@pytest.mark.parametrize("target", ["map", "monad-word", "adj-word", "frieze", "tl-word"])
def test_convert_round_trips(target):
    for nf in pr.enumerate_normal_forms(3):
        text = pr.format_blocks(nf)
        code, there = run("convert", "term", target, "--n", "3", text)
        assert code == 0
        code, back = run("convert", target, "term", "--n", "3", there.strip())
        assert code == 0 and back.strip() == text


def test_frieze_compose_files(tmp_path):
    upper, lower, dest = tmp_path / "d1.json", tmp_path / "d2.json", tmp_path / "out.json"
    upper.write_text(json.dumps(D1))
    lower.write_text(json.dumps(D2))
    assert run("frieze-compose", str(upper), str(lower), "-o", str(dest))[0] == 0
    both = json.loads(dest.read_text())
    assert both["cups"] == [[2, 3], [4, 5], [6, 7], [10, 11]]
    assert both["caps"] == [[-4, -3], [-6, -5], [-8, -7], [-10, -9]]


def test_render(tmp_path):
    dest = tmp_path / "d1.svg"
    code, _ = run("render", "--frieze", json.dumps(D1), "--w", "12", "-o", str(dest))
    assert code == 0
    assert ET.parse(dest).getroot().get("version") == "1.1"
    code, text = run("render", "--term", "p0", "--n", "2", "--w", "4", "--format", "ascii")
    assert code == 0 and "a cup [2,3]" in text


def test_verify_all_is_deterministic():
    first, second = run("verify", "all"), run("verify", "all")
    assert first[0] == cli.EXIT_OK
    assert first == second


def test_convert_mode_controls_circles():
    assert run("convert", "tl-word", "term", "--n", "2", "h3.h3.h2")[0] == cli.EXIT_INVALID
    assert run("convert", "tl-word", "term", "--n", "2", "--mode", "J", "h3.h3.h2") == (0, "p[0,0]\n")
