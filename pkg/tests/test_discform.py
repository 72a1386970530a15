"""Finite quadratic forms, isotropic subgroups, quotients, isomorphism."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extremal_k3.discform import (DiscriminantForm, NotPGroupError,
                                  direct_sum, discriminant_form,
                                  enumerate_isotropic,
                                  forms_isomorphic, invariant_factors,
                                  p_part, quotient_form, subgroup_invariants)
from extremal_k3.exact import count_roots, overlattice_gram
from extremal_k3.roottypes import RootType, gram_of


def df_of(name):
    return discriminant_form(gram_of(RootType.parse(name)))


def test_known_discriminant_groups():
    assert df_of("A1").orders == (2,)
    assert df_of("A1").q == (Fraction(3, 2),)
    assert df_of("A2").orders == (3,)
    assert df_of("A2").q == (Fraction(4, 3),)
    assert df_of("E8").is_trivial
    assert df_of("E7").orders == (2,)
    assert df_of("E6").orders == (3,)
    assert sorted(df_of("D8").orders) == [2, 2]
    assert sorted(df_of("A3").orders) == [4]


def test_group_order_equals_absolute_determinant():
    for name in ["A4", "D5", "2A3", "A2+E7", "D4+D6"]:
        lat = gram_of(RootType.parse(name))
        assert discriminant_form(lat).order == abs(lat.det())


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(["A1", "A2", "A3", "A5", "D4", "D5", "D8", "E6", "E7",
                        "A2+A3", "2A1+D4"]),
       st.data())
def test_q_b_polarization_identity(name, data):
    # q(x + y) = q(x) + q(y) + 2 b(x, y) in Q/2Z
    df = df_of(name)
    x = tuple(data.draw(st.integers(0, o - 1)) for o in df.orders)
    y = tuple(data.draw(st.integers(0, o - 1)) for o in df.orders)
    lhs = df.q_of(df.add(x, y))
    rhs = (df.q_of(x) + df.q_of(y) + 2 * df.b_of(x, y)) % 2
    assert lhs == rhs


def test_carriers_realize_the_form():
    lat = gram_of(RootType.parse("A5+D4"))
    df = discriminant_form(lat)
    for i, c in enumerate(df.carriers):
        assert lat.pairing(c, c) % 2 == df.q[i]
        for j, c2 in enumerate(df.carriers):
            assert lat.pairing(c, c2) % 1 == df.b[i][j]


def test_isotropic_enumeration_requires_p_group():
    with pytest.raises(NotPGroupError):
        enumerate_isotropic(df_of("A5"))  # order 6


def test_isotropic_subgroups_of_d8():
    df = df_of("D8")
    subs = enumerate_isotropic(df)
    orders = sorted(s.order for s, _ in subs)
    assert orders == [1, 2, 2]  # trivial + the two unimodular glues


def test_no_nontrivial_isotropic_in_d4():
    subs = enumerate_isotropic(df_of("D4"))
    assert [s.order for s, _ in subs] == [1]


def test_complement_is_the_orthogonal_subgroup():
    df = p_part(df_of("2A3"), 2)
    for sub, comp in enumerate_isotropic(df):
        expected = [z for z in df.elements()
                    if all(df.b_of(z, g) == 0 for g in sub.generators)]
        assert comp == expected


def test_quotient_form_matches_overlattice_discriminant():
    # gluing A5+A1 along the order-2 element produces the E6 form
    lat = gram_of(RootType.parse("A5+A1"))
    df = discriminant_form(lat)
    iso = [x for x in df.elements()
           if x != df.zero() and df.q_of(x) == 0]
    assert len(iso) == 1
    big = overlattice_gram(lat, [df.carrier_of(iso[0])])
    assert abs(big.det()) == 3
    assert count_roots(big) == 72
    assert discriminant_form(big).q == df_of("E6").q


def test_quotient_of_trivial_subgroup_is_identity():
    df = p_part(df_of("2A3"), 2)
    sub, comp = enumerate_isotropic(df)[0]
    assert sub.order == 1
    q = quotient_form(df, sub, comp)
    assert invariant_factors(q.orders) == invariant_factors(df.orders)


def test_invariant_factors():
    assert invariant_factors([2, 4, 3, 9, 2]) == [2, 6, 36]
    assert invariant_factors([]) == []
    assert invariant_factors([10, 10]) == [10, 10]


def test_forms_isomorphic_detects_square_classes():
    def cyc(n, q):
        return DiscriminantForm((n,), (Fraction(q) % 2,),
                                ((Fraction(q) % 1,),))
    assert forms_isomorphic(cyc(5, Fraction(2, 5)), cyc(5, Fraction(8, 5)))
    assert not forms_isomorphic(cyc(5, Fraction(2, 5)), cyc(5, Fraction(4, 5)))
    assert forms_isomorphic(cyc(5, Fraction(2, 5)), cyc(5, Fraction(2, 5)),
                            negate_second=True)


def test_forms_isomorphic_group_mismatch():
    assert not forms_isomorphic(df_of("A3"), df_of("2A1"))


def test_forms_isomorphic_rejects_long_forms():
    with pytest.raises(ValueError, match="length"):
        forms_isomorphic(df_of("3A1"), df_of("3A1"))


def test_direct_sum_and_p_part_are_inverse_decompositions():
    df = df_of("A1+A2")
    two, three = p_part(df, 2), p_part(df, 3)
    back = direct_sum(two, three)
    assert forms_isomorphic(back, df)


def test_subgroup_invariants():
    df = p_part(df_of("2A3+2A1"), 2)
    seen = set()
    for sub, _ in enumerate_isotropic(df):
        inv = subgroup_invariants(df, sub)
        prod = 1
        for x in inv:
            prod *= x
        assert prod == sub.order
        if len(inv) == 2:
            assert inv[1] % inv[0] == 0
        seen.add(tuple(inv))
    assert () in seen and (2,) in seen
