from __future__ import annotations

from functools import lru_cache

import pytest
from hypothesis import given, settings, strategies as st

from latdiff.enumeration import operator_set
from latdiff.harness import default_catalog
from latdiff.lattice import atoms, build_boolean, build_chain, build_pentagon, build_quasi_antichain, is_chain, leq
from latdiff.operators import (
    FAMILY_KINDS, FamilyError, OperatorError, OperatorFamily, PROPERTIES, SizeMismatchError, UnsupportedShapeError,
    Weight, as_operator, chain_floor, chain_saturate, check_property, check_weight, floor_image, format_operator,
    identity, make_named, modify_at_top, named, property_flags, restrict_below_top, saturate_image, weight_violation,
)

M2, M3, L3, L4 = build_quasi_antichain(2), build_quasi_antichain(3), build_chain(3), build_chain(4)
SMALL = [l for l in default_catalog() if l.size <= 7]


@lru_cache(maxsize=None)
def members(name: str, weight: int = 1):
    l = next(l for l in SMALL if l.name == name)
    return sorted(operator_set(l, weight))


# ---------------------------------------------------------------- examples

def test_psi_b1_on_m3_rejected():
    psi = named(M3, "psi", 1)
    assert psi == (1, 1, 4, 4, 4)
    assert not check_weight(M3, psi, 1)
    assert weight_violation(M3, psi, 1) is not None


def test_theta_on_m2_rejected():
    theta = named(M2, "theta_m2_counterexample")
    assert theta == (1, 0, 1, 2)
    assert not check_weight(M2, theta, 1)


@pytest.mark.parametrize("l", SMALL, ids=lambda l: l.name)
def test_constants_are_difference_operators(l):
    for a in l.elements:
        assert check_weight(l, named(l, "constant", a), 1)


@pytest.mark.parametrize("l", SMALL, ids=lambda l: l.name)
def test_identity_is_derivation_with_every_property(l):
    d = identity(l)
    assert check_weight(l, d, 0)
    assert all(property_flags(l, d).values())


def test_tau_not_isotone():
    tau = named(L3, "tau", 1)
    assert tau == (2, 2, 1)
    assert not check_property(L3, tau, "isotone")
    assert not check_property(L3, tau, "idempotent")


def test_psi_increasing_on_m2():
    psi = named(M2, "psi", 1)
    assert psi == (1, 1, 3, 3)
    assert check_property(M2, psi, "increasing")


def test_eta_on_m3():
    assert make_named(M3, OperatorFamily("eta", (1, 2, 3))) == (4, 4, 3, 4, 1)


def test_phi_matrices_on_m2():
    assert make_named(M2, OperatorFamily("phi_a")) == (1, 0, 3, 2)
    assert make_named(M2, OperatorFamily("phi_b")) == (2, 3, 0, 1)
    assert check_weight(M2, named(M2, "phi_a"), 1)
    assert check_weight(M2, named(M2, "phi_b"), 1)


def test_constant_on_chain():
    assert named(L4, "constant", 2) == (2, 2, 2, 2)


def test_modify_at_top():
    c1 = named(M2, "constant", 3)
    assert modify_at_top(M2, c1, 0) == (3, 3, 3, 0)
    assert modify_at_top(M2, c1, 3) == c1
    c0 = named(L3, "constant", 0)
    assert not check_weight(L3, modify_at_top(L3, c0, 2), 1)
    with pytest.raises(OperatorError):
        modify_at_top(M2, c1, 7)


def test_chain_saturate_examples():
    c = named(L3, "constant", 1)
    assert chain_saturate(L3, c) == (1, 1, 2)
    assert check_weight(L3, chain_saturate(L3, c), 1)
    top_fixed = (2, 2, 2)
    assert chain_saturate(L3, top_fixed) == top_fixed
    assert chain_saturate(L3, identity(L3)) == identity(L3)


def test_chain_floor_examples():
    tau = named(L3, "tau", 1)
    assert chain_floor(L3, tau) == (1, 1, 1)
    assert check_weight(L3, chain_floor(L3, tau), 1)
    assert chain_floor(L4, identity(L4)) == named(L4, "constant", 3)


def test_chain_constructions_refuse_m3():
    d = tuple(M3.meet[x][1] for x in M3.elements)
    with pytest.raises(UnsupportedShapeError):
        chain_saturate(M3, d)
    with pytest.raises(UnsupportedShapeError):
        chain_floor(M3, d)
    assert not check_weight(M3, saturate_image(M3, d), 1)
    assert not check_weight(M3, floor_image(M3, d), 1)


def test_chain_constructions_need_member():
    with pytest.raises(OperatorError):
        chain_saturate(L3, (2, 1, 0))


def test_size_mismatch():
    with pytest.raises(SizeMismatchError):
        check_weight(M3, (0, 0, 0), 1)
    with pytest.raises(SizeMismatchError):
        check_property(M3, (0, 0, 0), "isotone")
    with pytest.raises(OperatorError):
        as_operator(L3, (0, 1, 3))


def test_weight_values():
    assert Weight(-1) is Weight.MINUS_ONE
    with pytest.raises(ValueError):
        Weight(2)
    with pytest.raises(ValueError):
        check_weight(L3, (0, 0, 0), 2)


def test_unknown_property():
    with pytest.raises(ValueError):
        check_property(L3, (0, 1, 2), "monotone")


@pytest.mark.parametrize("kind,params,match", [
    ("eta", (1, 1, 2), "u"),
    ("eta", (0, 1, 2), "b"),
    ("gamma", (1, 2, 3), None),
    ("phi_a", (), "M2"),
    ("lambda_a", (0,), "atom"),
    ("tau", (9,), None),
])
def test_family_side_conditions(kind, params, match):
    lattice = M2 if kind == "gamma" else (L4 if kind == "tau" else M3)
    with pytest.raises(FamilyError, match=match):
        make_named(lattice, OperatorFamily(kind, params))


def test_unknown_family_kind():
    with pytest.raises(FamilyError):
        OperatorFamily("zeta", ())


@pytest.mark.parametrize("m", [2, 3, 4])
def test_every_named_family_member_accepted(m):
    l = build_quasi_antichain(m)
    at = atoms(l)
    built = [named(l, "constant", a) for a in l.elements] + [named(l, "lambda_a", a) for a in at]
    for b in at:
        for u in at:
            if u == b:
                continue
            built.append(named(l, "beta", b, u))
            for v in at:
                if v != u:
                    built.append(named(l, "eta", b, u, v))
    for u in at:
        for v in at:
            if u != v:
                built.append(named(l, "theta", u, v))
                built.append(named(l, "alpha", u, v))
    if m >= 3:
        built.append(named(l, "gamma", at[0], at[1], at[2]))
    if m == 2:
        built += [named(l, "phi_a"), named(l, "phi_b")]
    assert all(check_weight(l, d, 1) for d in built)


def test_restrict_below_top():
    assert restrict_below_top((1, 2, 0, 3)) == (1, 2, 0)
    assert restrict_below_top((3, 2, 0, 3)) is None


def test_format_operator():
    assert format_operator(M2, (1, 0, 3, 2)) == "1 0 3 2"
    assert format_operator(M2, (1, 0, 3, 2), labels=True) == "[b1, 0, 1, b2]"


def test_family_kinds_listed():
    assert {"constant", "tau", "psi", "lambda_a", "eta", "beta", "gamma", "theta", "alpha", "phi_a", "phi_b",
            "theta_m2_counterexample"} == set(FAMILY_KINDS)
    assert set(PROPERTIES) == {"decreasing", "increasing", "isotone", "meet_homomorphism", "join_homomorphism",
                               "idempotent", "lattice_homomorphism"}


# ---------------------------------------------------------------- properties

def random_map(draw_lattice=st.sampled_from(SMALL)):
    return draw_lattice.flatmap(lambda l: st.tuples(
        st.just(l), st.tuples(*(st.integers(0, l.size - 1) for _ in range(l.size)))))


def member_of(weight=1):
    return st.sampled_from([l.name for l in SMALL]).flatmap(
        lambda name: st.tuples(st.just(next(l for l in SMALL if l.name == name)),
                               st.sampled_from(members(name, weight))))


@settings(max_examples=400)
@given(random_map())
def test_minus_one_agrees_with_zero(arg):
    l, d = arg
    assert check_weight(l, d, -1) == check_weight(l, d, 0)


@settings(max_examples=400)
@given(st.one_of(random_map(), member_of(1), member_of(0)))
def test_derivation_iff_decreasing_difference_operator(arg):
    l, d = arg
    assert check_weight(l, d, 0) == (check_weight(l, d, 1) and check_property(l, d, "decreasing"))


@settings(max_examples=300)
@given(st.sampled_from(SMALL).flatmap(lambda l: st.tuples(
    st.just(l), st.tuples(*(st.sampled_from([v for v in l.elements if leq(l, x, v)]) for x in l.elements)))))
def test_increasing_member_iff_meet_hom(arg):
    l, d = arg
    assert check_property(l, d, "increasing")
    assert check_weight(l, d, 1) == check_property(l, d, "meet_homomorphism")


@settings(max_examples=300)
@given(member_of(1))
def test_member_predicate_equivalences(arg):
    l, d = arg
    m = l.meet
    assert check_property(l, d, "isotone") == check_property(l, d, "meet_homomorphism")
    assert check_property(l, d, "join_homomorphism") == check_property(l, d, "lattice_homomorphism")
    fixes = all(d[m[d[x]][d[y]]] == m[d[x]][d[y]] for x in l.elements for y in l.elements)
    assert check_property(l, d, "idempotent") == fixes


@settings(max_examples=300)
@given(member_of(1))
def test_pointwise_consequences(arg):
    l, d = arg
    top, bot, j = l.top, l.bottom, l.join
    r = l.elements
    for x in r:
        if leq(l, x, d[top]):
            assert leq(l, x, d[x])
        if leq(l, d[top], x):
            assert leq(l, d[top], d[x])
        if leq(l, j[x][d[x]], d[bot]):
            assert j[x][d[x]] == d[bot]
        for y in r:
            if leq(l, x, y) and leq(l, y, d[top]):
                assert leq(l, d[x], d[y])


@settings(max_examples=200)
@given(member_of(1), st.data())
def test_lowering_top_image_stays_member(arg, data):
    l, d = arg
    u = data.draw(st.sampled_from([u for u in l.elements if leq(l, u, d[l.top])]))
    assert check_weight(l, modify_at_top(l, d, u), 1)


@settings(max_examples=300)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.just(build_chain(n)), st.tuples(*(st.integers(i, n - 1) for i in range(n - 1))))))
def test_chain_top_fixed_member_iff_increasing_isotone(arg):
    l, head = arg
    d = head + (l.top,)
    expected = check_property(l, d, "increasing") and check_property(l, d, "isotone")
    assert check_weight(l, d, 1) == expected


@pytest.mark.parametrize("l", SMALL, ids=lambda l: l.name)
def test_top_fixed_bottom_to_top_forces_constant(l):
    found = operator_set(l, 1, [(l.bottom, l.top), (l.top, l.top)])
    assert found == {named(l, "constant", l.top)}


@pytest.mark.parametrize("n", range(2, 7))
def test_bottom_to_top_on_chain_gives_tau(n):
    l = build_chain(n)
    assert operator_set(l, 1, [(0, n - 1)]) == {named(l, "tau", a) for a in l.elements}


@settings(max_examples=200)
@given(st.integers(1, 7).flatmap(lambda n: member_of_chain(n)))
def test_chain_constructions_preserve_membership(arg):
    l, d = arg
    assert is_chain(l)
    assert check_weight(l, chain_saturate(l, d), 1)
    assert check_weight(l, chain_floor(l, d), 1)


def member_of_chain(n):
    return st.tuples(st.just(build_chain(n)), st.sampled_from(_chain_members(n)))


@lru_cache(maxsize=None)
def _chain_members(n):
    return sorted(operator_set(build_chain(n), 1))


@pytest.mark.parametrize("l", [build_pentagon(), build_boolean(2), M3], ids=lambda l: l.name)
def test_unordered_pair_check_matches_full_ordered_check(l):
    def full(d):
        m, j = l.meet, l.join
        return all(d[m[x][y]] == j[j[m[d[x]][y]][m[x][d[y]]]][m[d[x]][d[y]]]
                   for x in l.elements for y in l.elements)
    for d in operator_set(l, 1):
        assert full(d)
    for d in [named(l, "psi", a) for a in l.elements]:
        assert check_weight(l, d, 1) == full(d)
