import json

import pytest
from conftest import SCRIPTS

from ringlab import dsl

SCRIPT_FILES = sorted(SCRIPTS.glob("*.ring"))


@pytest.mark.parametrize("path", SCRIPT_FILES, ids=lambda p: p.name)
def test_scripts_round_trip(path):
    program = dsl.parse(path.read_text())
    text = dsl.pretty(program)
    assert dsl.parse(text) == program
    assert dsl.pretty(dsl.parse(text)) == text


def test_semicolons_and_comments():
    a = dsl.parse("ring A = zmod 4; mset S in A = closure {2}  # trailing\ncheck sbezout A S")
    b = dsl.parse("ring A = zmod 4\nmset S in A = closure {2}\ncheck sbezout A S\n")
    assert a == b


@pytest.mark.parametrize("text,line,col,fragment", [
    ("ring A = zmod\n", 1, 14, "expected int"),
    ("ring A = zmod 4\nring A = zmod 5", 2, 6, "duplicate name"),
    ("ring A = zmod 4\ncheck bezout B", 2, 14, "unknown name"),
    ("ring A = zmod 4\n  check frob A", 2, 9, "unknown check"),
    ("ring A = zmod 4\ncheck sprincipal A A", 2, 18, "expected ideal"),
    ("ring A = zmod 4\ncheck bezout A A", 2, 1, "takes 1 argument"),
    ("ring A = zmod 4 $", 1, 17, "unexpected character"),
    ("ring A = cube 4", 1, 10, "unknown ring constructor"),
    ("ring Z = zext module((q2)^2)", 1, 23, "cyclic factor"),
])
def test_parse_errors_carry_position(text, line, col, fragment):
    with pytest.raises(dsl.DslError) as exc:
        dsl.parse(text)
    assert (exc.value.line, exc.value.col) == (line, col)
    assert fragment in exc.value.message


def _run(text):
    return list(dsl.execute(dsl.parse(text), timing=False))


def test_localize_query():
    recs = _run("ring A = zmod 12\nmset S in A = closure {2}\nring L = localize(A, S)\ncheck bezout L")
    assert recs[0]["result"] is True


def test_failing_statement_does_not_abort_the_rest():
    recs = _run("ring A = zmod 4\nmset One in A = closure {}\nideal P in A = <3>\n"
                "check pbezout A P\ncheck bezout A")
    assert "error" in recs[0] and recs[0]["result"] is None
    assert recs[1]["result"] is True


def test_timing_toggle():
    text = "ring A = zmod 6\ncheck bezout A"
    assert "elapsed_ms" in list(dsl.execute(dsl.parse(text), timing=True))[0]
    assert "elapsed_ms" not in _run(text)[0]


def test_records_are_json_serializable():
    for path in SCRIPT_FILES:
        for rec in dsl.execute(dsl.parse(path.read_text()), timing=False):
            json.dumps(rec)


def test_hom_map_and_tables_module():
    recs = _run("""ring A = zmod 4
ring B = zmod 2
hom f: A -> B = map [0, 1, 0, 1]
ideal J in B = <0>
ring G = amalg(A, B, f, J)
check bezout G
module M over B = tables [[0, 1], [1, 0]] [[0, 0], [0, 1]]
ring T = trivext(B, M)
check chained T""")
    assert [r["result"] for r in recs] == [True, True]


def test_bad_hom_map_is_a_definition_error():
    recs = _run("ring A = zmod 4\nring B = zmod 3\nhom f: A -> B = map [0, 1, 2, 0]\n"
                "ideal J in B = <0>\nring G = amalg(A, B, f, J)\ncheck bezout G")
    assert any("error" in r for r in recs)


def test_list_ideals():
    program = dsl.parse("ring A = zmod 12")
    assert len(list(dsl.list_ideals(program, "A"))) == 6
