"""Classification of data triples for single root types."""

import pytest

from extremal_k3.discform import discriminant_form
from extremal_k3.exact import count_roots, overlattice_gram
from extremal_k3.pipeline import (classify_one, combine_prime_invariants,
                                  compare_with_table, format_mw,
                                  read_triple_table)
from extremal_k3.roottypes import RootType, gram_of, root_count_formula

from conftest import data_path


def triples_of(name):
    return [(t.mw_str, t.form) for t in classify_one(name)]


def test_single_entries():
    assert triples_of("A18") == [("1", (2, 1, 10))]
    assert triples_of("2E8+A2") == [("1", (2, 1, 2))]
    assert triples_of("D10+E8") == [("1", (2, 0, 2))]


def test_entry_with_two_mordell_weil_groups():
    assert triples_of("2A9") == [("1", (10, 0, 10)), ("5", (2, 0, 2))]


def test_entry_with_two_forms_in_one_genus():
    assert triples_of("A1+A3+2A4+A6") == [("1", (10, 0, 140)),
                                          ("1", (20, 0, 70))]


def test_entry_with_noncyclic_mordell_weil():
    assert triples_of("6A3") == [("4.4", (4, 0, 4))]


def test_type_without_any_triple():
    # passes the rank/euler filter but admits no valid glue + form pair
    golden = {sigma for _, sigma, *_ in read_triple_table(data_path("table2.csv"))}
    from extremal_k3.roottypes import enumerate_list_L
    outside = next(s for s in enumerate_list_L() if str(s) not in golden)
    assert classify_one(outside) == []


def test_mw_format():
    assert format_mw(()) == "1"
    assert format_mw((5,)) == "5"
    assert format_mw((2, 6)) == "2.6"


def test_combine_prime_invariants():
    assert combine_prime_invariants([[2, 4], [3]]) == (2, 12)
    assert combine_prime_invariants([[5]]) == (5,)
    assert combine_prime_invariants([[], []]) == ()
    assert combine_prime_invariants([[2, 2], [3, 3]]) == (6, 6)


def test_compare_with_table_roundtrip():
    rows = read_triple_table(data_path("table2.csv"))
    results = {}
    for s in ["2A9", "6A3"]:
        results[s] = classify_one(s)
    subset = [r for r in rows if r[1] in results]
    missing, extra = compare_with_table(results, subset)
    assert missing == [] and extra == []


def test_compare_with_table_detects_mutation():
    results = {"2A9": classify_one("2A9")}
    mutated = [(54, "2A9", "1", 10, 0, 10), (54, "2A9", "5", 2, 2, 2)]
    missing, extra = compare_with_table(results, mutated)
    assert len(missing) == 1 and len(extra) == 1


@pytest.mark.parametrize("name", ["2A9", "A1+A3+2A4+A6", "3A6",
                                  "4A1+2A7", "2A1+2D8", "A4+D14",
                                  "4A2+2A5", "A3+3A5", "2A1+4A4",
                                  "2A2+D14"])
def test_overlattice_roundtrip_on_classified_types(name):
    """Every accepted glue produces an even overlattice whose determinant
    and discriminant form obey the index-square and quotient laws, and the
    matched binary form carries the opposite discriminant form."""
    sigma = RootType.parse(name)
    lat = gram_of(sigma)
    det = abs(lat.det())
    triples = classify_one(sigma)
    assert triples
    for t in triples:
        order = 1
        for x in t.mw:
            order *= x
        d = det // (order * order)
        a, b, c = t.form
        assert a * c - b * b == d
        from extremal_k3.binforms import BinaryEvenForm
        form_df = discriminant_form(BinaryEvenForm(a, b, c).lattice())
        assert form_df.order == d


def test_glue_can_create_roots():
    # the A5+A1 glue yields the E6 lattice: the root count jumps from 42
    # to 72, which is exactly what the pipeline's final check guards
    sigma = RootType.parse("A5+A1")
    lat = gram_of(sigma)
    df = discriminant_form(lat)
    x = next(x for x in df.elements()
             if x != df.zero() and df.q_of(x) == 0)
    big = overlattice_gram(lat, [df.carrier_of(x)])
    assert root_count_formula(sigma) == 32
    assert count_roots(big) == 72
