"""Finite categories presented by explicit composition tables.

Objects and morphisms are named by strings and every composite of a
composable pair is tabulated.  Construction is deliberately permissive:
the axioms are checked by ``validate_category``, which reports
violations instead of raising, so defective tables can be built,
inspected and tested.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence


@dataclass(frozen=True)
class Mor:
    """A named arrow with its two endpoints."""

    name: str
    dom: str
    cod: str


@dataclass(frozen=True)
class Violation:
    rule: str
    subject: tuple[str, ...]
    message: str


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of an axiom check; ``ok`` iff no violations were found.

    ``isomorphism`` is filled in by ``validate_functor`` only;
    ``details`` carries informational lines (never failures).
    """

    violations: tuple[Violation, ...] = ()
    isomorphism: Optional[bool] = None
    details: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def messages(self) -> list[str]:
        return [f"{v.rule}: {v.message}" for v in self.violations]


def _as_mor(m) -> Mor:
    return m if isinstance(m, Mor) else Mor(*m)


class FinCategory:
    """A finite category with an extensional composition table.

    ``comp`` maps a pair ``(g, f)`` with ``cod(f) == dom(g)`` to the
    name of the composite ``g after f``.  Instances are not mutated
    after construction.  Structural equality ignores ``name``.
    """

    def __init__(
        self,
        name: str,
        objects: Iterable[str],
        morphisms: Iterable,
        identity: Mapping[str, str],
        comp: Mapping[tuple[str, str], str],
    ):
        self.name = str(name)
        self.objects = tuple(objects)
        self.morphisms = tuple(_as_mor(m) for m in morphisms)
        self.identity = dict(identity)
        self.comp = dict(comp)
        self._mors = {m.name: m for m in self.morphisms}
        self._objset = frozenset(self.objects)
        self._idnames = frozenset(self.identity.values())
        self._hom: dict[tuple[str, str], list[str]] = {}
        self._by_dom: dict[str, list[Mor]] = {}
        for m in self.morphisms:
            self._hom.setdefault((m.dom, m.cod), []).append(m.name)
            self._by_dom.setdefault(m.dom, []).append(m)

    @classmethod
    def build(
        cls,
        name: str,
        objects: Iterable[str],
        morphisms: Iterable = (),
        comp: Optional[Mapping[tuple[str, str], str]] = None,
    ) -> "FinCategory":
        """Assemble a category from its non-identity data.

        Identities are created automatically (named ``id_<object>``) and
        identity compositions are completed; explicitly supplied entries
        are never overwritten, so deliberately broken tables survive.
        """
        objs = tuple(objects)
        declared = [_as_mor(m) for m in morphisms]
        identity = {x: f"id_{x}" for x in objs}
        mors = [Mor(identity[x], x, x) for x in objs] + declared
        table: dict[tuple[str, str], str] = dict(comp or {})
        for m in mors:
            if m.dom in identity:
                table.setdefault((m.name, identity[m.dom]), m.name)
            if m.cod in identity:
                table.setdefault((identity[m.cod], m.name), m.name)
        return cls(name, objs, mors, identity, table)

    # -- queries ---------------------------------------------------------

    def has_object(self, x: str) -> bool:
        return x in self._objset

    def has_morphism(self, name: str) -> bool:
        return name in self._mors

    def mor(self, name: str) -> Mor:
        try:
            return self._mors[name]
        except KeyError:
            raise ValueError(f"unknown morphism id: {name!r}") from None

    def hom_set(self, x: str, y: str) -> list[str]:
        """Morphisms x -> y in declaration order."""
        for obj in (x, y):
            if obj not in self._objset:
                raise ValueError(f"unknown object id: {obj!r}")
        return list(self._hom.get((x, y), ()))

    def compose(self, g: str, f: str) -> str:
        """Name of ``g after f``."""
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise ValueError(f"no tabulated composite for ({g}, {f})") from None

    def identity_name(self, x: str) -> str:
        try:
            return self.identity[x]
        except KeyError:
            raise ValueError(f"unknown object id: {x!r}") from None

    def is_identity(self, name: str) -> bool:
        return name in self._idnames

    def non_identities(self) -> list[Mor]:
        return [m for m in self.morphisms if m.name not in self._idnames]

    def morphisms_from(self, x: str) -> list[Mor]:
        return list(self._by_dom.get(x, ()))

    # -- constructions ---------------------------------------------------

    def opposite(self) -> "FinCategory":
        """Reverse every arrow; applying twice restores the original."""
        name = self.name[:-3] if self.name.endswith("^op") else self.name + "^op"
        mors = [Mor(m.name, m.cod, m.dom) for m in self.morphisms]
        comp = {(f, g): h for (g, f), h in self.comp.items()}
        return FinCategory(name, self.objects, mors, dict(self.identity), comp)

    # -- predicates ------------------------------------------------------

    def is_acyclic(self) -> bool:
        """No non-identity endomorphisms and no two-way connections."""
        for m in self.morphisms:
            if m.dom == m.cod and m.name != self.identity.get(m.dom):
                return False
        for (x, y) in self._hom:
            if x != y and (y, x) in self._hom:
                return False
        return True

    def is_poset(self) -> bool:
        """At most one morphism between any two objects, antisymmetric."""
        return all(len(ms) <= 1 for ms in self._hom.values()) and self.is_acyclic()

    # -- plumbing --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinCategory):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.morphisms == other.morphisms
            and self.identity == other.identity
            and self.comp == other.comp
        )

    __hash__ = None  # mutable dict fields; structural eq only

    def __repr__(self) -> str:
        return (
            f"FinCategory({self.name!r}, {len(self.objects)} objects, "
            f"{len(self.morphisms)} morphisms)"
        )


@dataclass(frozen=True)
class FunctorMap:
    """A functor given by explicit object and morphism dictionaries."""

    source: FinCategory
    target: FinCategory
    object_map: dict[str, str]
    morphism_map: dict[str, str]

    def apply_obj(self, x: str) -> str:
        return self.object_map[x]

    def apply_mor(self, f: str) -> str:
        return self.morphism_map[f]

    def after(self, other: "FunctorMap") -> "FunctorMap":
        """Composite ``self after other`` (``other`` acts first)."""
        if other.target != self.source:
            raise ValueError("functors are not composable")
        return FunctorMap(
            other.source,
            self.target,
            {x: self.object_map[y] for x, y in other.object_map.items()},
            {f: self.morphism_map[g] for f, g in other.morphism_map.items()},
        )

    def is_identity(self) -> bool:
        return (
            self.source == self.target
            and all(x == y for x, y in self.object_map.items())
            and all(f == g for f, g in self.morphism_map.items())
        )


def identity_functor(cat: FinCategory) -> FunctorMap:
    return FunctorMap(
        cat,
        cat,
        {x: x for x in cat.objects},
        {m.name: m.name for m in cat.morphisms},
    )


def validate_category(cat: FinCategory) -> ValidationReport:
    """Check all category axioms by full enumeration.

    Malformed structure (dangling ids, missing table entries) is
    reported, never thrown, so the report can name every defect at once.
    """
    v: list[Violation] = []
    add = v.append

    seen: set[str] = set()
    for x in cat.objects:
        if x in seen:
            add(Violation("objects-distinct", (x,), f"object id {x!r} declared twice"))
        seen.add(x)
    objset = set(cat.objects)

    mors: dict[str, Mor] = {}
    for m in cat.morphisms:
        if m.name in mors:
            add(Violation("morphisms-distinct", (m.name,), f"morphism id {m.name!r} declared twice"))
        mors[m.name] = m
        for end, side in ((m.dom, "domain"), (m.cod, "codomain")):
            if end not in objset:
                add(Violation("endpoints", (m.name,), f"morphism {m.name!r} has unknown {side} {end!r}"))

    for x in cat.objects:
        i = cat.identity.get(x)
        if i is None:
            add(Violation("identity", (x,), f"object {x!r} has no identity"))
        elif i not in mors:
            add(Violation("identity", (x, i), f"identity {i!r} of {x!r} is not a declared morphism"))
        else:
            m = mors[i]
            if m.dom != x or m.cod != x:
                add(Violation("identity", (x, i), f"identity {i!r} of {x!r} has endpoints {m.dom!r} -> {m.cod!r}"))
    for x in cat.identity:
        if x not in objset:
            add(Violation("identity", (x,), f"identity assigned to unknown object {x!r}"))

    for (g, f), h in cat.comp.items():
        missing = [n for n in (g, f, h) if n not in mors]
        if missing:
            add(Violation(
                "composition-reference", (g, f, h),
                f"entry ({g}, {f}) = {h} references unknown morphism(s) {missing}",
            ))
            continue
        if mors[f].cod != mors[g].dom:
            add(Violation("composition-extraneous", (g, f), f"composition defined for non-composable pair ({g}, {f})"))
            continue
        if mors[h].dom != mors[f].dom or mors[h].cod != mors[g].cod:
            add(Violation("composition-endpoints", (g, f, h), f"composite {h} of ({g}, {f}) has wrong endpoints"))

    by_dom: dict[str, list[Mor]] = {}
    for m in cat.morphisms:
        by_dom.setdefault(m.dom, []).append(m)
    for f in cat.morphisms:
        for g in by_dom.get(f.cod, ()):
            if (g.name, f.name) not in cat.comp:
                add(Violation("composition-totality", (g.name, f.name), f"composition not total at ({g.name}, {f.name})"))

    for m in cat.morphisms:
        i_dom = cat.identity.get(m.dom)
        i_cod = cat.identity.get(m.cod)
        if i_dom is not None and cat.comp.get((m.name, i_dom), m.name) != m.name:
            add(Violation("identity-law", (m.name,), f"{m.name} o {i_dom} = {cat.comp[(m.name, i_dom)]} != {m.name}"))
        if i_cod is not None and cat.comp.get((i_cod, m.name), m.name) != m.name:
            add(Violation("identity-law", (m.name,), f"{i_cod} o {m.name} = {cat.comp[(i_cod, m.name)]} != {m.name}"))

    for (g, f), gf in cat.comp.items():
        if g not in mors or f not in mors or gf not in mors:
            continue
        if mors[f].cod != mors[g].dom:
            continue
        for h in by_dom.get(mors[g].cod, ()):
            hg = cat.comp.get((h.name, g))
            left = cat.comp.get((h.name, gf))
            right = cat.comp.get((hg, f)) if hg is not None else None
            if hg is None or left is None or right is None:
                continue  # a totality violation already covers this triple
            if left != right:
                add(Violation(
                    "associativity", (h.name, g, f),
                    f"(({h.name} o {g}) o {f}) = {right} but ({h.name} o ({g} o {f})) = {left}",
                ))

    return ValidationReport(tuple(v))


def validate_functor(F: FunctorMap) -> ValidationReport:
    """Check functor axioms by full enumeration.

    Raises ValueError on dangling target ids; everything else is
    reported.  The report's ``isomorphism`` flag records whether both
    maps are bijections onto the target's objects and morphisms.
    """
    src, tgt = F.source, F.target
    v: list[Violation] = []
    add = v.append

    for x in src.objects:
        if x not in F.object_map:
            add(Violation("object-map-total", (x,), f"object {x!r} is not mapped"))
    for m in src.morphisms:
        if m.name not in F.morphism_map:
            add(Violation("morphism-map-total", (m.name,), f"morphism {m.name!r} is not mapped"))
    for x, fx in F.object_map.items():
        if not tgt.has_object(fx):
            raise ValueError(f"dangling target object id: {fx!r}")
    for f, ff in F.morphism_map.items():
        if not tgt.has_morphism(ff):
            raise ValueError(f"dangling target morphism id: {ff!r}")

    for m in src.morphisms:
        if m.name not in F.morphism_map or m.dom not in F.object_map or m.cod not in F.object_map:
            continue
        image = tgt.mor(F.morphism_map[m.name])
        if image.dom != F.object_map[m.dom] or image.cod != F.object_map[m.cod]:
            add(Violation(
                "preserves-endpoints", (m.name,),
                f"{m.name}: {m.dom} -> {m.cod} maps to {image.name}: {image.dom} -> {image.cod}",
            ))

    for x in src.objects:
        i = src.identity.get(x)
        if i is None or i not in F.morphism_map or x not in F.object_map:
            continue
        want = tgt.identity.get(F.object_map[x])
        if F.morphism_map[i] != want:
            add(Violation("preserves-identity", (x,), f"identity of {x!r} maps to {F.morphism_map[i]!r}, expected {want!r}"))

    for (g, f), h in src.comp.items():
        if any(n not in F.morphism_map for n in (g, f, h)):
            continue
        image = tgt.comp.get((F.morphism_map[g], F.morphism_map[f]))
        if image is None:
            add(Violation("preserves-composition", (g, f), f"images of ({g}, {f}) have no tabulated composite"))
        elif image != F.morphism_map[h]:
            add(Violation("preserves-composition", (g, f), f"F({g} o {f}) = {F.morphism_map[h]} but F({g}) o F({f}) = {image}"))

    obj_values = list(F.object_map.values())
    mor_values = list(F.morphism_map.values())
    iso = (
        len(obj_values) == len(set(obj_values)) == len(tgt.objects)
        and set(obj_values) == set(tgt.objects)
        and len(mor_values) == len(set(mor_values)) == len(tgt.morphisms)
        and set(mor_values) == {m.name for m in tgt.morphisms}
        and not v
    )
    return ValidationReport(tuple(v), isomorphism=iso)
