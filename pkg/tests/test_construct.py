from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import GOLDEN_DEGREES, GOLDEN_EDGES_1BASED
from hyperthreshold.construct import (
    VACUOUS,
    build_hypergraph,
    complement,
    degree_sequence,
    disjoint_union,
    expected_edge_count,
    is_uniform,
    k_threshold_degree,
    parse_code,
    parse_edge_list,
    random_code,
    random_codes,
    serialize_code,
    to_edge_list,
)
from hyperthreshold.core import Hypergraph, ThresholdCode
from hyperthreshold.errors import (
    EmptyInput,
    FirstTokenNonzero,
    MalformedCode,
    MalformedRunLength,
    NegativeToken,
    NonUniformK,
    NotUniform,
    UniformityExceedsOrder,
)

codes = st.builds(
    lambda seed, kt, pm: random_code(seed, 5, 4, 4, k_threshold=kt, positive_m=pm),
    st.integers(0, 10**6), st.booleans(), st.booleans(),
)


@pytest.mark.parametrize("text, m, k", [
    ("0 3 0 3 0 0 3 3", (1, 1, 2, 0), (3, 3, 3, 3)),
    ("0", (1,), ()),
    ("0^3 1", (3,), (1,)),
    ("0,3,0,3,0,0,3,3", (1, 1, 2, 0), (3, 3, 3, 3)),
    ("  0^2\t3  3^2 ", (2, 0, 0), (3, 3, 3)),
    ("0^4", (4,), ()),
])
def test_parse_code(text, m, k):
    assert parse_code(text) == ThresholdCode(m, k)


@pytest.mark.parametrize("text, err", [
    ("", EmptyInput), ("  , ", EmptyInput), ("3 0", FirstTokenNonzero), ("0 -1", NegativeToken),
    ("0^x 1", MalformedRunLength), ("0^ 1", MalformedRunLength), ("0 1 0", MalformedCode), ("0 a", MalformedCode),
])
def test_parse_code_errors(text, err):
    with pytest.raises(err):
        parse_code(text)


def test_serialize_code_examples():
    assert serialize_code(ThresholdCode((1, 1, 2, 0), (3, 3, 3, 3))) == "0 3 0 3 0 0 3 3"
    assert serialize_code(ThresholdCode((3,), (1,)), runlength=True) == "0^3 1"
    assert serialize_code(ThresholdCode((1,), ())) == "0"


@given(codes, st.booleans())
def test_serialize_parse_round_trip(code, rl):
    assert parse_code(serialize_code(code, runlength=rl)) == code


def test_build_examples():
    assert build_hypergraph(ThresholdCode((1,), (2,))) == Hypergraph(3, ((0, 1, 2),))
    star = build_hypergraph(parse_code("0^3 1"))
    assert star.edges == ((0, 3), (1, 3), (2, 3))


def test_build_matches_worked_example(golden_code):
    h = build_hypergraph(golden_code)
    assert h.n == 16
    expected = [tuple(sorted(v - 1 for v in e)) for e in GOLDEN_EDGES_1BASED]
    assert list(h.edges) == expected


def test_degree_sequence_examples(golden_code):
    assert degree_sequence(build_hypergraph(golden_code)) == GOLDEN_DEGREES
    assert degree_sequence(Hypergraph(1)) == [0]
    assert degree_sequence(Hypergraph(3, ((0, 1, 2),))) == [1, 1, 1]


def test_k_threshold_degree(golden_code):
    assert k_threshold_degree(golden_code, 1) == 4
    assert k_threshold_degree(golden_code, 4) == 13
    for k in (1, 2, 5):
        assert k_threshold_degree(ThresholdCode((1,), (k,)), 1) == 1
    with pytest.raises(NonUniformK):
        k_threshold_degree(ThresholdCode((1, 1), (1, 2)), 1)


def test_is_uniform(golden_code):
    assert is_uniform(build_hypergraph(golden_code)) == 4
    assert is_uniform(Hypergraph(3, ((0, 1), (0, 1, 2)))) is None
    assert is_uniform(Hypergraph(3)) == VACUOUS
    for k in (1, 2, 3):
        assert is_uniform(build_hypergraph(ThresholdCode((1, 2, 0), (k, k, k)))) == k + 1


def test_complement_examples():
    assert complement(Hypergraph(2, ((0, 1),))) == Hypergraph(2)
    assert complement(Hypergraph(3), 3) == Hypergraph(3, ((0, 1, 2),))
    c = complement(Hypergraph(4, ((0, 1, 2),)), 3)
    # enumerate all 3-subsets of 4 vertices by hand: 4 of them, minus the one present
    assert set(c.edges) == {(0, 1, 3), (0, 2, 3), (1, 2, 3)}


def test_complement_errors():
    with pytest.raises(NotUniform):
        complement(Hypergraph(3, ((0, 1), (0, 1, 2))))
    with pytest.raises(NotUniform):
        complement(Hypergraph(3))
    with pytest.raises(NotUniform):
        complement(Hypergraph(3, ((0, 1),)), 3)
    with pytest.raises(UniformityExceedsOrder):
        complement(Hypergraph(2), 3)


@settings(max_examples=40)
@given(st.integers(0, 10**6))
def test_complement_is_involution(seed):
    code = random_code(seed, 3, 3, 3, k_threshold=True)
    h = build_hypergraph(code)
    m = code.uniform_k() + 1
    if m <= h.n:
        assert complement(complement(h, m), m).edge_set() == h.edge_set()


def test_disjoint_union_examples():
    k2 = Hypergraph(2, ((0, 1),))
    assert disjoint_union(k2, Hypergraph(1)) == Hypergraph(3, ((0, 1),))
    e3 = Hypergraph(3, ((0, 1, 2),))
    assert disjoint_union(e3, e3).edges == ((0, 1, 2), (3, 4, 5))
    assert disjoint_union(Hypergraph(0), e3) == e3


def test_random_code_determinism_and_bounds():
    assert random_code(42, 6, 5, 5) == random_code(42, 6, 5, 5)
    assert random_codes(7, 5, 6, 5, 5) == random_codes(7, 5, 6, 5, 5)
    for c in random_codes(1, 300, 6, 5, 5):
        assert 1 <= c.d <= 6 and 1 <= c.m[0] <= 5
        assert all(0 <= x <= 5 for x in c.m) and all(1 <= x <= 5 for x in c.k)
    for c in random_codes(2, 100, 6, 5, 5, k_threshold=True, positive_m=True):
        assert len(set(c.k)) == 1 and min(c.m) >= 1


@given(codes)
def test_vertex_and_edge_counts(code):
    h = build_hypergraph(code)
    assert h.n == sum(code.m) + sum(code.k)
    assert len(h.edges) == expected_edge_count(code)
    manual = sum(sum(code.m[:i + 1]) + sum(code.k[:i]) for i in range(code.d))
    assert len(h.edges) == manual


@given(codes)
def test_k_threshold_degree_multiset(code):
    k = code.uniform_k()
    if k is None:
        return
    d = code.d
    expected = []
    for i in range(1, d + 1):
        expected += [k_threshold_degree(code, i)] * k
    for t in range(1, d + 1):
        expected += [d - t + 1] * code.m[t - 1]
    assert sorted(expected, reverse=True) == degree_sequence(build_hypergraph(code))


def test_edge_list_format():
    text = to_edge_list(build_hypergraph(parse_code("0 2")))
    assert text == "3 1\n0 1 2\n"
    h = build_hypergraph(parse_code("0 3 0 3 0 0 3 3"))
    assert parse_edge_list(to_edge_list(h)) == h
    with pytest.raises(ValueError):
        parse_edge_list("3 2\n0 1 2\n")


def test_brute_force_domination_definition():
    # every dominating set S of size k forms an edge with each earlier vertex
    code = parse_code("0 0 2 0 3")
    h = build_hypergraph(code)
    edges = h.edge_set()
    assert all(tuple(sorted((v, 2, 3))) in edges for v in range(2))
    assert all(tuple(sorted((v, 5, 6, 7))) in edges for v in range(5))
    assert len(edges) == 2 + 5
    assert all(len(e) in (3, 4) for e in edges)
    assert not any(set(e) <= {0, 1, 4} for e in combinations(range(8), 2) if e in edges)
