"""Root type grammar, closed formulas and the rank-18 enumerations."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extremal_k3.roottypes import (RootType, RootTypeParseError,
                                   check_N2, cyclic_orders_of,
                                   discriminant_length, dynkin_graph,
                                   enumerate_list_L, enumerate_N_lists,
                                   enumerate_root_types, eu_of, graph_embeds,
                                   gram_of, rank_of, root_count_formula)


def test_parse_and_canonical_string():
    for text in ["6A3", "2A1+4A4", "D10+E8", "A1+A3+2A4+A6", "A18"]:
        assert str(RootType.parse(text)) == text


def test_parse_sorts_into_canonical_order():
    assert str(RootType.parse("E8+A1+D4+A1")) == "2A1+D4+E8"


def test_parse_errors():
    with pytest.raises(ValueError):
        RootType.parse("A0")
    with pytest.raises(ValueError):
        RootType.parse("D3+A1")
    with pytest.raises(RootTypeParseError):
        RootType.parse("B2")
    with pytest.raises(RootTypeParseError):
        RootType.parse("")
    with pytest.raises(RootTypeParseError) as exc:
        RootType.parse("A2+?4")
    assert exc.value.pos == 3


def test_rank_eu_and_root_count():
    s = RootType.parse("2A1+A3+D5+E7")
    assert rank_of(s) == 2 + 3 + 5 + 7
    assert eu_of(s) == 2 * 2 + 4 + 7 + 9
    assert root_count_formula(s) == 2 * 2 + 12 + 40 + 126


components = st.sampled_from(
    [("A", n) for n in range(1, 7)] + [("D", n) for n in range(4, 7)]
    + [("E", 6), ("E", 7), ("E", 8)])


@settings(max_examples=50, deadline=None)
@given(st.lists(components, min_size=1, max_size=3))
def test_root_formula_matches_lattice_enumeration(comps):
    from extremal_k3.exact import count_roots
    s = RootType(tuple(comps))
    if rank_of(s) > 12:
        return
    assert count_roots(gram_of(s)) == root_count_formula(s)


def test_discriminant_orders_by_component():
    assert cyclic_orders_of(RootType.parse("A4")) == [5]
    assert cyclic_orders_of(RootType.parse("D6")) == [2, 2]
    assert cyclic_orders_of(RootType.parse("D5")) == [4]
    assert cyclic_orders_of(RootType.parse("E6")) == [3]
    assert cyclic_orders_of(RootType.parse("E7")) == [2]
    assert cyclic_orders_of(RootType.parse("E8")) == []


def test_length_and_n2():
    assert discriminant_length(RootType.parse("6A3")) == 6
    assert not check_N2(RootType.parse("6A3"))
    assert check_N2(RootType.parse("D10+E8"))
    assert check_N2(RootType.parse("A18"))
    # monotone: adding a component cannot repair a violation
    assert not check_N2(RootType.parse("6A3"))


def test_candidate_list_size():
    assert len(enumerate_list_L()) == 712


def test_n2_enumeration_sizes():
    rank18, all_types = enumerate_N_lists()
    assert len(rank18) == 297
    assert all(rank_of(s) == 18 for s in rank18)
    assert all(check_N2(s) for s in all_types)
    assert len(all_types) == 2930


def test_enumeration_is_deterministic_and_sorted():
    ts = enumerate_root_types(6)
    assert [str(s) for s in ts] == sorted(str(s) for s in ts)
    assert ts == enumerate_root_types(6)


def test_graph_embedding_examples():
    def emb(a, b):
        return graph_embeds(dynkin_graph(RootType.parse(a)),
                            dynkin_graph(RootType.parse(b)))
    assert emb("A2", "A3") is not None
    assert emb("2A1", "A3") is not None
    assert emb("D4", "A10") is None
    assert emb("A3", "D4") is not None
    assert emb("D5", "E6") is not None
    assert emb("E6", "D10") is None


def test_embedding_is_induced():
    # a 3-chain cannot land inside a triangle-free star wrongly: check that
    # images of non-adjacent vertices are non-adjacent
    sub = dynkin_graph(RootType.parse("A3"))
    big = dynkin_graph(RootType.parse("D5"))
    mapping = graph_embeds(sub, big)
    for u in range(sub.n):
        for v in range(u + 1, sub.n):
            assert ((mapping[v] in big.adj[mapping[u]])
                    == (v in sub.adj[u]))
