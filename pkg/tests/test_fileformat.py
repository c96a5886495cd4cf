import json

import pytest
from hypothesis import given

from gendef import Dag, InputError, classify, enumerate_dfas
from gendef.fileformat import (
    parse_dag,
    parse_dfa,
    parse_dfa_stream,
    report_to_json,
    serialize_dag,
    serialize_dfa,
)

from conftest import dfas

A2_TEXT = """\
dfa
states 3
alphabet a b
start 0
final 1
trans 0 a 1
trans 0 b 2
trans 1 a 1
trans 1 b 1
trans 2 a 2
trans 2 b 2
"""


def test_serialize_a2(A2):
    assert serialize_dfa(A2) == A2_TEXT
    assert parse_dfa(A2_TEXT) == A2


def test_comments_blank_lines_and_order():
    text = "# starts with a\n\ndfa\nstates 3   # three\nalphabet a b\nstart 0\nfinal 1\n" + "\n".join(
        reversed(A2_TEXT.splitlines()[5:])) + "\n"
    assert parse_dfa(text) == parse_dfa(A2_TEXT)


def test_round_trip_all_small():
    for n in (1, 2, 3):
        for k in (1, 2):
            for dfa in enumerate_dfas(n, k):
                assert parse_dfa(serialize_dfa(dfa)) == dfa


@given(dfas(max_states=6, max_letters=3))
def test_round_trip_random(dfa):
    assert parse_dfa(serialize_dfa(dfa)) == dfa


def test_stream(A2, A3):
    assert parse_dfa_stream(serialize_dfa(A2) + serialize_dfa(A3)) == [A2, A3]
    assert parse_dfa_stream("") == []
    with pytest.raises(InputError):
        parse_dfa(serialize_dfa(A2) + serialize_dfa(A3))


@pytest.mark.parametrize(
    "mutate, line",
    [
        (lambda t: t.replace("trans 1 a 1", "trans 1 a"), 8),
        (lambda t: t.replace("trans 1 a 1", "trans 1 c 1"), 8),
        (lambda t: t.replace("trans 1 a 1", "trans 1 a 7"), 8),
        (lambda t: t.replace("trans 1 a 1", "trans 1 b 1"), 9),
        (lambda t: t.replace("start 0", "start x"), 4),
        (lambda t: t.replace("start 0", "start 3"), 4),
        (lambda t: t.replace("final 1", "final 4"), 5),
        (lambda t: t.replace("states 3", "states 0"), 2),
        (lambda t: t.replace("alphabet a b", "alphabet a a"), 3),
        (lambda t: t.replace("dfa\n", "nfa\n"), 1),
        (lambda t: t.replace("states 3\nalphabet a b", "alphabet a b\nstates 3"), 2),
    ],
)
def test_malformed_reports_line(mutate, line):
    with pytest.raises(InputError) as info:
        parse_dfa(mutate(A2_TEXT))
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_incomplete_automaton_rejected():
    text = A2_TEXT.replace("trans 2 b 2\n", "")
    with pytest.raises(InputError, match="incomplete"):
        parse_dfa(text)
    with pytest.raises(InputError):
        parse_dfa("dfa\nstates 1\n")


def test_dag_format():
    g = Dag(3, {(1, 2), (2, 3)})
    text = serialize_dag(g)
    assert text == "dag\nvertices 3\nedge 1 2\nedge 2 3\n"
    assert parse_dag(text) == g
    with pytest.raises(InputError):
        parse_dag("dag\nvertices 3\nedge 2 1\n")
    with pytest.raises(InputError):
        parse_dag("dag\nvertices 3\nedge 1 2\nedge 1 2\n")
    with pytest.raises(InputError):
        parse_dag("dag\nvertices 3\narc 1 2\n")


REPORT_KEYS = {
    "reduced_states", "finite", "cofinite", "definite", "reverse_definite", "generalized_definite",
    "witnesses", "indices",
}


def test_report_json_schema(A2, A3):
    for dfa in (A2, A3):
        payload = report_to_json(classify(dfa))
        assert set(payload) == REPORT_KEYS
        assert set(payload["witnesses"]) == {"Pf", "Pd", "Pr", "Pg"}
        json.dumps(payload)
    pg = report_to_json(classify(A3))["witnesses"]["Pg"]
    assert pg == {
        "pattern": "Pg", "p": 0, "q": 1,
        "x": {"letters": "b", "indices": [1]},
        "y": {"letters": "a", "indices": [0]},
    }
    assert report_to_json(classify(A2))["witnesses"]["Pg"] is None
    assert report_to_json(classify(A2), {"definite": None})["indices"] == {"definite": None}
