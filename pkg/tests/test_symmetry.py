"""Diagonal symmetry groups, duality, ages, junior counts."""

from fractions import Fraction as F

import pytest

from lgmirror import (
    NotASymmetry,
    age_and_fix,
    canonical_weights,
    cf,
    contains_g0,
    det,
    dual_group,
    g0,
    g0_group,
    gfin,
    group_from_generators,
    in_sl,
    is_sl_subgroup,
    junior_count,
    parse_group_spec,
    parse_polynomial,
    phase_vector,
    subgroup_fixing_coordinate,
    subgroups_containing_g0,
    transpose,
    trivial_group,
)

SAMPLE = [
    "x^2+y^3+z^4",
    "x^2+y^3+z^6",
    "x^2+x*y^3+y*z^5",
    "x^3*y+y^3*z+z^3*x",
    "x^5+y^5+z^5",
    "x^2+z*y^2+y*z^3",
    "x^6*y+y^3+z^2",
    "x^2+x*y^4+y*z^2",
]


def test_gfin_order():
    assert gfin(parse_polynomial("x^2+y^3+z^4")).order == 24


def test_gfin_contains_identity():
    G = gfin(parse_polynomial("x^2+y^3+z^4"))
    assert any(g.is_identity() for g in G.elements)


def test_gfin_loop_cyclic():
    G = gfin(parse_polynomial("x^3*y+y^3*z+z^3*x"))
    assert G.order == 28
    assert any(g.order() == 28 for g in G.elements)


def test_g0_values():
    assert g0(parse_polynomial("x^2+y^3+z^6")).phases == (F(1, 2), F(1, 3), F(1, 6))
    assert g0(parse_polynomial("x^2+x*y^3+y*z^5")).phases == (F(1, 2), F(1, 6), F(1, 6))


def test_age_of_g0_is_weight_sum():
    for text in SAMPLE:
        f = parse_polynomial(text)
        ws = canonical_weights(f)
        assert age_and_fix(g0(f)).age == sum(ws.q)


def test_group_from_generators_trivial():
    G = group_from_generators(parse_polynomial("x^2+y^3+z^4"), [])
    assert G.order == 1


def test_group_from_generators_seidel_dual():
    ft = parse_polynomial("x^2*y+y^3*z+z^5")
    G = group_from_generators(ft, [(F(1, 5), F(3, 5), F(1, 5))])
    assert G.order == 5


def test_group_from_generators_klein():
    f = parse_polynomial("x^2+y^2+z^6")  # 2k = 6
    G = group_from_generators(f, [(F(1, 2), F(1, 2), 0), (F(1, 2), 0, F(1, 2))])
    assert G.order == 4
    assert is_sl_subgroup(G)


def test_group_from_generators_rejects_non_symmetry():
    with pytest.raises(NotASymmetry):
        group_from_generators(parse_polynomial("x^2+y^3+z^4"), [(F(1, 5), 0, 0)])


def test_dual_group_values():
    f = parse_polynomial("x^2+x*y^3+y*z^5")
    GT = dual_group(f, g0_group(f))
    assert set(GT.elements) == set(
        group_from_generators(transpose(f), [(F(1, 5), F(3, 5), F(1, 5))]).elements)

    fl = parse_polynomial("x^3*y+y^3*z+z^3*x")
    GTl = dual_group(fl, g0_group(fl))
    assert set(GTl.elements) == set(
        group_from_generators(transpose(fl), [(F(1, 7), F(2, 7), F(4, 7))]).elements)


def test_dual_of_maximal_group_is_trivial():
    f = parse_polynomial("x^2+y^3+z^4")
    assert dual_group(f, gfin(f)).order == 1


def test_age_and_fix():
    r = age_and_fix(phase_vector([F(1, 5), F(3, 5), F(1, 5)]))
    assert (r.age, r.nfix, r.fixed) == (1, 0, frozenset())
    r = age_and_fix(phase_vector([0, 0, 0]))
    assert (r.age, r.nfix) == (0, 3)
    r = age_and_fix(phase_vector([F(3, 5), F(4, 5), F(3, 5)]))
    assert (r.age, r.nfix) == (2, 0)


def test_junior_count():
    f5 = parse_polynomial("x^2*y+y^3*z+z^5")
    assert junior_count(group_from_generators(f5, [(F(1, 5), F(3, 5), F(1, 5))])) == 2
    assert junior_count(trivial_group(parse_polynomial("x^2+y^3+z^4"))) == 0
    f7 = parse_polynomial("z*x^3+x*y^3+y*z^3")
    assert junior_count(group_from_generators(f7, [(F(1, 7), F(2, 7), F(4, 7))])) == 3


def test_subgroup_fixing_coordinate():
    f = parse_polynomial("x^2+y^3+z^4")
    G = group_from_generators(f, [(F(1, 2), 0, F(1, 2))])
    assert subgroup_fixing_coordinate(G, 1).order == 2
    assert subgroup_fixing_coordinate(G, 0).order == 1
    assert subgroup_fixing_coordinate(G, 2).order == 1
    assert subgroup_fixing_coordinate(trivial_group(f), 0).order == 1


def test_in_sl():
    assert in_sl(phase_vector([F(1, 2), 0, F(1, 2)]))
    assert not in_sl(g0(parse_polynomial("x^2+y^3+z^5")))  # sum 31/30


def test_index_group_spec():
    f = parse_polynomial("x^2+y^3+z^6")
    G2 = parse_group_spec(f, "index:3")
    G3 = parse_group_spec(f, "index:2")
    assert (G2.order, G3.order) == (12, 18)
    assert contains_g0(G2) and contains_g0(G3)


def test_subgroup_enumeration_bounds():
    f = parse_polynomial("x^2+y^3+z^6")
    groups = subgroups_containing_g0(f)
    assert [G.order for G in groups] == [6, 12, 18, 36]
    for G in groups:
        assert contains_g0(G)


# ---------------------------------------------------------------------------
# structural invariants over a representative sample

def test_duality_invariants():
    for text in SAMPLE:
        f = parse_polynomial(text)
        d = abs(det(f))
        for G in subgroups_containing_g0(f):
            GT = dual_group(f, G)
            assert G.order * GT.order == d
            assert is_sl_subgroup(GT)
            back = dual_group(transpose(f), GT)
            assert set(back.elements) == set(G.elements)
        assert dual_group(f, g0_group(f)).order == cf(f)


def test_dual_of_sl_group_contains_g0():
    f = parse_polynomial("x^5+y^5+z^5")
    G = parse_group_spec(f, "1/5(1,1,3)")
    assert is_sl_subgroup(G)
    assert contains_g0(dual_group(f, G))


def test_age_inverse_identity():
    for text in SAMPLE:
        f = parse_polynomial(text)
        for g in gfin(f).elements:
            a, b = age_and_fix(g), age_and_fix(-g)
            assert a.age + b.age == f.n - a.nfix


def test_sl3_fixed_locus_properties():
    for text in SAMPLE:
        f = parse_polynomial(text)
        GT = dual_group(f, g0_group(f))
        free = [g for g in GT.elements
                if not g.is_identity() and age_and_fix(g).nfix == 0]
        assert len(free) == 2 * junior_count(GT)
        for g in GT.elements:
            if not g.is_identity():
                assert age_and_fix(g).nfix in (0, 1)


def test_chain_and_loop_duals_are_cyclic():
    # pure chains: dual of the grading group is cyclic of order cf and has a
    # generator multiplying the chain head by e[1/cf]
    f = parse_polynomial("x^2+x*y^3+y*z^5")  # chain z -> y -> x, cf = 5
    GT = dual_group(f, g0_group(f))
    c = cf(f)
    gens = [g for g in GT.elements if g.order() == c]
    assert gens, "dual group not cyclic"
    head = 2  # variable z heads the chain
    assert any(g.phases[head] == F(1, c) and g.order() == c for g in GT.elements)

    # pure loops: for each coordinate some generator scales it by e[1/cf]
    fl = parse_polynomial("x^3*y+y^3*z+z^3*x")
    GTl = dual_group(fl, g0_group(fl))
    cl = cf(fl)
    assert any(g.order() == cl for g in GTl.elements)
    for i in range(3):
        assert any(g.phases[i] == F(1, cl) and g.order() == cl
                   for g in GTl.elements)
