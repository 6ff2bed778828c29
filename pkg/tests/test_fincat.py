import random

import pytest
from hypothesis import given, strategies as st

from catnerve.fincat import (
    FinCategory,
    FunctorMap,
    Mor,
    identity_functor,
    validate_category,
    validate_functor,
)
from catnerve import fixtures as fx


def test_build_creates_identities_and_identity_rows():
    c = FinCategory.build("A", ["x", "y"], [("f", "x", "y")])
    assert c.identity == {"x": "id_x", "y": "id_y"}
    assert {m.name for m in c.morphisms} == {"id_x", "id_y", "f"}
    assert c.comp[("f", "id_x")] == "f"
    assert c.comp[("id_y", "f")] == "f"
    assert c.compose("id_y", "f") == "f"
    assert validate_category(c).ok


def test_build_never_overwrites_explicit_entries():
    # a deliberately wrong identity row must survive so validation can see it
    c = FinCategory.build(
        "A", ["x", "y"], [("f", "x", "y"), ("g", "x", "y")], {("id_y", "f"): "g"}
    )
    assert c.comp[("id_y", "f")] == "g"
    rep = validate_category(c)
    assert not rep.ok
    assert any(v.rule == "identity-law" for v in rep.violations)


def test_hom_set_declaration_order_and_errors():
    c = fx.counterexample_category()
    assert c.hom_set("x", "y") == ["f", "g"]
    assert c.hom_set("y", "x") == []
    with pytest.raises(ValueError):
        c.hom_set("x", "nope")
    with pytest.raises(ValueError):
        c.mor("nope")
    with pytest.raises(ValueError):
        c.compose("f", "h")  # not composable, no table entry


def test_validate_reports_each_rule():
    dup_obj = FinCategory("B", ["x", "x"], [Mor("id_x", "x", "x")], {"x": "id_x"}, {})
    assert any(v.rule == "objects-distinct" for v in validate_category(dup_obj).violations)

    dup_mor = FinCategory(
        "B", ["x"], [Mor("id_x", "x", "x"), Mor("id_x", "x", "x")], {"x": "id_x"},
        {("id_x", "id_x"): "id_x"},
    )
    assert any(v.rule == "morphisms-distinct" for v in validate_category(dup_mor).violations)

    dangling = FinCategory("B", ["x"], [Mor("id_x", "x", "x"), Mor("f", "x", "ghost")],
                           {"x": "id_x"}, {("id_x", "id_x"): "id_x"})
    assert any(v.rule == "endpoints" for v in validate_category(dangling).violations)

    no_id = FinCategory("B", ["x"], [], {}, {})
    assert any(v.rule == "identity" for v in validate_category(no_id).violations)

    bad_ref = FinCategory("B", ["x"], [Mor("id_x", "x", "x")], {"x": "id_x"},
                          {("id_x", "id_x"): "id_x", ("id_x", "ghost"): "id_x"})
    assert any(v.rule == "composition-reference" for v in validate_category(bad_ref).violations)


def test_composition_totality_message_format():
    c = FinCategory.build(
        "B", ["x", "y", "z"],
        [("f", "x", "y"), ("h", "y", "z")],  # missing (h, f) entry
    )
    rep = validate_category(c)
    assert not rep.ok
    assert "composition not total at (h, f)" in rep.messages()[0]


def test_validate_extraneous_and_endpoint_rules():
    c = FinCategory.build(
        "B", ["x", "y", "z"],
        [("f", "x", "y"), ("h", "y", "z"), ("k", "x", "z"), ("l", "y", "z")],
        {("h", "f"): "k", ("l", "f"): "k", ("f", "h"): "k", ("k", "f"): "k"},
    )
    rep = validate_category(c)
    rules = {v.rule for v in rep.violations}
    assert "composition-extraneous" in rules  # (f, h) and (k, f) are not composable
    assert rep.ok is False


def test_validate_wrong_composite_endpoints():
    c = FinCategory.build(
        "B", ["x", "y", "z"],
        [("f", "x", "y"), ("h", "y", "z"), ("w", "y", "z")],
        {("h", "f"): "w", ("w", "f"): "w"},
    )
    rep = validate_category(c)
    assert any(v.rule == "composition-endpoints" for v in rep.violations)


def test_validate_associativity():
    # f then h then p, with (p o h) o f forced different from p o (h o f)
    c = FinCategory.build(
        "B", ["x", "y", "z", "w"],
        [("f", "x", "y"), ("h", "y", "z"), ("p", "z", "w"),
         ("hf", "x", "z"), ("ph", "y", "w"), ("a", "x", "w"), ("b", "x", "w")],
        {("h", "f"): "hf", ("p", "h"): "ph",
         ("p", "hf"): "a", ("ph", "f"): "b"},
    )
    rep = validate_category(c)
    assert any(v.rule == "associativity" for v in rep.violations)


def test_opposite_is_involutive_and_swaps():
    c = fx.counterexample_category()
    op = c.opposite()
    assert op.mor("f").dom == "y" and op.mor("f").cod == "x"
    assert op.compose("f", "h") == "k"  # reversed table
    assert validate_category(op).ok
    assert op.opposite() == c
    assert op.name == "C^op" and op.opposite().name == "C"


def test_acyclic_and_poset_predicates():
    assert fx.counterexample_category().is_acyclic()
    assert not fx.counterexample_category().is_poset()  # f, g parallel
    assert fx.poset_v().is_poset()
    iso = FinCategory.build(
        "Iso", ["x", "y"], [("f", "x", "y"), ("g", "y", "x")],
        {("g", "f"): "id_x", ("f", "g"): "id_y"},
    )
    assert validate_category(iso).ok
    assert not iso.is_acyclic()


def test_structural_equality_ignores_name():
    a = fx.counterexample_category()
    b = FinCategory("renamed", a.objects, a.morphisms, a.identity, a.comp)
    assert a == b
    c = FinCategory.build("A", ["x"], [])
    assert a != c


def test_identity_functor_and_composition():
    c = fx.counterexample_category()
    f = identity_functor(c)
    assert f.is_identity()
    assert validate_functor(f).ok
    assert validate_functor(f).isomorphism is True
    assert f.after(f).is_identity()


def test_validate_functor_raises_on_dangling_targets():
    c = fx.poset_v()
    f = FunctorMap(c, c, {x: x for x in c.objects} | {"a": "ghost"},
                   {m.name: m.name for m in c.morphisms})
    with pytest.raises(ValueError):
        validate_functor(f)
    g = FunctorMap(c, c, {x: x for x in c.objects},
                   {m.name: m.name for m in c.morphisms} | {"ca": "ghost"})
    with pytest.raises(ValueError):
        validate_functor(g)


def test_validate_functor_reports_violations():
    c = fx.poset_v()
    # constant functor onto an idempotent that is not the identity
    m = FinCategory.build("M", ["s"], [("e", "s", "s")], {("e", "e"): "e"})
    assert validate_category(m).ok
    f = FunctorMap(c, m, {x: "s" for x in c.objects},
                   {n.name: "e" for n in c.morphisms})
    rep = validate_functor(f)
    assert any(v.rule == "preserves-identity" for v in rep.violations)
    assert rep.isomorphism is False

    partial = FunctorMap(c, c, {"a": "a"}, {})
    rep2 = validate_functor(partial)
    rules = {v.rule for v in rep2.violations}
    assert "object-map-total" in rules and "morphism-map-total" in rules


def test_validate_functor_composition_rule():
    c = fx.counterexample_category()
    m = {x: x for x in c.objects}
    mm = {n.name: n.name for n in c.morphisms}
    mm["k"] = "k"
    mm["g"] = "f"  # ok: endpoints still match, composition h o f = k preserved
    assert validate_functor(FunctorMap(c, c, m, mm)).ok
    mm2 = dict(mm)
    mm2["h"] = "id_y"  # breaks endpoints and composition
    rep = validate_functor(FunctorMap(c, c, m, mm2))
    assert not rep.ok


@given(st.integers(0, 10**9), st.integers(2, 7))
def test_random_posets_validate_and_dualize(seed, n):
    cat = fx.random_poset(random.Random(seed), n)
    assert validate_category(cat).ok
    assert cat.is_poset()
    assert cat.opposite().opposite() == cat
    assert validate_category(cat.opposite()).ok


@given(st.integers(0, 10**9), st.integers(2, 6))
def test_random_dag_categories_validate(seed, n):
    cat = fx.random_dag_category(random.Random(seed), n, max_morphisms=120)
    assert validate_category(cat).ok
    assert cat.is_acyclic()
