from __future__ import annotations

import json
from fractions import Fraction

from hypothesis import given

from hilbspine import serialize
from hilbspine.arrows import universal_generators
from hilbspine.macaulay import bar_quotient, macaulay_matrix
from hilbspine.matroid import Matroid
from hilbspine.polyring import RationalField
from hilbspine.poset import poset_hasse, spine_graph
from hilbspine.specialize import matroid_of_degree, specialize_ideal
from hilbspine.staircase import STANDARD, Grading, HilbertFunction, make_ideal

from .strategies import gradings, ideals


def through_json(d):
    return json.loads(json.dumps(d))


def test_spine_roundtrip_and_schema():
    s = spine_graph(5)
    data = through_json(serialize.spine_to_dict(s))
    assert set(data) == {"colength", "vertices", "edges"}
    assert set(data["edges"][0]) == {"u", "v", "witnesses"}
    assert set(data["edges"][0]["witnesses"][0]) == {"grading", "hf"}
    back = serialize.spine_from_dict(data)
    assert back.vertices == s.vertices and back.edges == s.edges


def test_spine_dot():
    dot = serialize.spine_to_dot(spine_graph(4), edge_labels=True)
    assert dot.startswith("graph spine_4 {")
    assert '0 [label="4"];' in dot and dot.count(" -- ") == 6
    assert "[label=" in dot.splitlines()[-2]


@given(ideals(max_n=7), gradings(3))
def test_family_roundtrip(M, g):
    F = universal_generators(M, g)
    assert serialize.family_from_dict(through_json(serialize.family_to_dict(F))) == F


def test_matrix_roundtrip():
    R = bar_quotient(macaulay_matrix(make_ideal((6, 4, 2, 1)), STANDARD, 4))
    back = serialize.matrix_from_dict(through_json(serialize.matrix_to_dict(R)))
    assert back == R


def test_matroid_roundtrip():
    J = specialize_ideal(make_ideal((7, 1, 1, 1)), Grading(2, 3), {(2, 2): 1}, RationalField())
    m = matroid_of_degree(J, 12)
    assert serialize.matroid_from_dict(through_json(serialize.matroid_to_dict(m))) == m
    assert isinstance(m, Matroid)


def test_poset_dict():
    P = poset_hasse(HilbertFunction((1, 1, 2, 1, 1)), Grading(1, 2))
    d = serialize.poset_to_dict(P)
    assert d["minimum"] == [5, 1] and d["maximum"] == [3, 2, 1] and len(d["hasse"]) == 4


def test_point_parsing():
    assert serialize.parse_point("(2,2)=1;(1,1)=-3/2") == {(2, 2): 1, (1, 1): Fraction(-3, 2)}
    assert serialize.parse_point("c(2,2)=1; ") == {(2, 2): 1}
    assert serialize.point_to_dict({(1, 1): Fraction(4), (2, 1): Fraction(1, 3)}) == {
        "c(1,1)": "4",
        "c(2,1)": "1/3",
    }
