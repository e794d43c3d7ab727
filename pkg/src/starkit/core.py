"""Finite categories given as explicit composition tables.

A category is stored as an ordered list of objects, an ordered list of
morphisms (identities first, one per object, then the declared morphisms in
input order) and a total composition map over composable pairs.  Morphisms
are addressed by name; identities are implicit in the input format and are
auto-named ``1_<object>``.

All exists/forall searches in this package iterate in input order and report
the first witness, so results are deterministic for a fixed input.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidCategory


def identity_name(obj: str) -> str:
    return f"1_{obj}"


@dataclass(frozen=True)
class Morphism:
    name: str
    dom: str
    cod: str


@dataclass
class RawCategory:
    """An unvalidated composition table.

    ``morphisms`` lists declared (non-identity) morphisms as (name, dom, cod);
    ``compositions`` lists rows (g, f, h) meaning g after f equals h.  Rows
    for pairs involving an identity are rejected as redundant; the composite
    h may be an identity.
    """

    name: str
    objects: Sequence[str]
    morphisms: Sequence[tuple[str, str, str]]
    compositions: Sequence[tuple[str, str, str]]


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


@dataclass(frozen=True)
class ParallelPair:
    """An ordered pair of morphisms with common domain and codomain."""

    f1: str
    f2: str


@dataclass(frozen=True)
class ReflexiveGraph:
    """A parallel pair (d, c) with a common section e: d∘e = c∘e = identity."""

    d: str
    c: str
    e: str


@dataclass(frozen=True)
class MorphismFlags:
    mono: bool
    epi: bool
    split_mono: bool
    split_epi: bool
    iso: bool


class FinCategory:
    """A validated finite category.

    Instances are immutable after construction and hash by identity, which
    lets every expensive search cache its result per category.  Do not build
    directly; go through validate_category or the corpus loaders.
    """

    def __init__(self, name: str, objects: Sequence[str],
                 morphisms: Sequence[Morphism],
                 comp: dict[tuple[str, str], str]):
        self.name = name
        self.objects: tuple[str, ...] = tuple(objects)
        self.morphisms: tuple[Morphism, ...] = tuple(morphisms)
        self.identity: dict[str, str] = {x: identity_name(x) for x in self.objects}
        self._by_name: dict[str, Morphism] = {m.name: m for m in self.morphisms}
        self._comp = dict(comp)
        self._hom: dict[tuple[str, str], tuple[str, ...]] = {}
        self._from: dict[str, tuple[str, ...]] = {x: () for x in self.objects}
        self._to: dict[str, tuple[str, ...]] = {x: () for x in self.objects}
        for m in self.morphisms:
            key = (m.dom, m.cod)
            self._hom[key] = self._hom.get(key, ()) + (m.name,)
            self._from[m.dom] = self._from[m.dom] + (m.name,)
            self._to[m.cod] = self._to[m.cod] + (m.name,)
        self.morphism_names: tuple[str, ...] = tuple(m.name for m in self.morphisms)
        self._cache: dict = {}

    def __repr__(self) -> str:
        return (f"FinCategory({self.name!r}, {len(self.objects)} objects, "
                f"{len(self.morphisms)} morphisms)")

    # -- lookups ------------------------------------------------------------

    def morphism(self, name: str) -> Morphism:
        return self._by_name[name]

    def has_morphism(self, name: str) -> bool:
        return name in self._by_name

    def dom(self, name: str) -> str:
        return self._by_name[name].dom

    def cod(self, name: str) -> str:
        return self._by_name[name].cod

    def is_identity(self, name: str) -> bool:
        m = self._by_name[name]
        return m.dom == m.cod and name == self.identity[m.dom]

    def hom(self, x: str, y: str) -> tuple[str, ...]:
        return self._hom.get((x, y), ())

    def morphisms_from(self, x: str) -> tuple[str, ...]:
        return self._from[x]

    def morphisms_to(self, x: str) -> tuple[str, ...]:
        return self._to[x]

    def composable(self, g: str, f: str) -> bool:
        return self.cod(f) == self.dom(g)

    def compose(self, g: str, f: str) -> str:
        """g after f.  Raises KeyError on a non-composable pair."""
        return self._comp[(g, f)]

    def parallel_pairs(self) -> Iterator[ParallelPair]:
        """All ordered pairs of parallel morphisms, in input order."""
        for f1 in self.morphism_names:
            x, y = self.dom(f1), self.cod(f1)
            for f2 in self.hom(x, y):
                yield ParallelPair(f1, f2)

    def to_raw(self) -> RawCategory:
        """The canonical unvalidated form: declared morphisms and their rows."""
        declared = [(m.name, m.dom, m.cod) for m in self.morphisms
                    if not self.is_identity(m.name)]
        rows = [(g, f, h) for (g, f), h in sorted(self._comp.items())
                if not self.is_identity(g) and not self.is_identity(f)]
        return RawCategory(self.name, list(self.objects), declared, rows)

    def _memo(self, key, fn):
        try:
            return self._cache[key]
        except KeyError:
            value = fn()
            self._cache[key] = value
            return value


def validate_category(raw: RawCategory) -> FinCategory:
    """Check a raw table and build the category, or raise InvalidCategory.

    The three category axioms are verified exhaustively: identity laws hold
    by construction (identity rows are generated, not declared), typing is
    checked per composition row, and associativity is checked over every
    composable triple.
    """
    violations: list[Violation] = []

    objects = list(raw.objects)
    seen_obj = set()
    for x in objects:
        if x in seen_obj:
            violations.append(Violation("DuplicateName", f"object {x} declared twice"))
        seen_obj.add(x)

    id_names = {identity_name(x) for x in seen_obj}
    morphisms: list[Morphism] = [Morphism(identity_name(x), x, x) for x in objects
                                 if x in seen_obj]
    seen_mor = {m.name for m in morphisms}
    for name, dom, cod in raw.morphisms:
        if name in seen_mor or name in id_names:
            violations.append(Violation("DuplicateName", f"morphism {name} declared twice"))
            continue
        bad = False
        for end, label in ((dom, "domain"), (cod, "codomain")):
            if end not in seen_obj:
                violations.append(Violation("UnknownName", f"{label} {end} of morphism {name}"))
                bad = True
        if not bad:
            seen_mor.add(name)
            morphisms.append(Morphism(name, dom, cod))
    if violations:
        raise InvalidCategory(violations)

    by_name = {m.name: m for m in morphisms}
    is_id = {m.name: (m.name in id_names) for m in morphisms}
    comp: dict[tuple[str, str], str] = {}

    for g, f, h in raw.compositions:
        missing = [n for n in (g, f, h) if n not in by_name]
        if missing:
            for n in missing:
                violations.append(Violation("UnknownName", f"morphism {n} in row {g} {f} = {h}"))
            continue
        if is_id[g] or is_id[f]:
            violations.append(Violation(
                "RedundantIdentity", f"row {g} {f} = {h} mentions an identity operand"))
            continue
        if by_name[f].cod != by_name[g].dom:
            violations.append(Violation(
                "BadTyping", f"pair ({g}, {f}) is not composable"))
            continue
        if by_name[h].dom != by_name[f].dom or by_name[h].cod != by_name[g].cod:
            violations.append(Violation(
                "BadTyping", f"row {g} {f} = {h}: composite must go "
                f"{by_name[f].dom} -> {by_name[g].cod}"))
            continue
        if (g, f) in comp:
            violations.append(Violation(
                "DuplicateComposite", f"pair ({g}, {f}) given twice"))
            continue
        comp[(g, f)] = h

    nonids = [m for m in morphisms if not is_id[m.name]]
    for g in nonids:
        for f in nonids:
            if f.cod == g.dom and (g.name, f.name) not in comp:
                violations.append(Violation(
                    "MissingComposite", f"no row for pair ({g.name}, {f.name})"))
    if violations:
        raise InvalidCategory(violations)

    # Total table: identity rows are forced.
    for m in morphisms:
        comp[(m.name, identity_name(m.dom))] = m.name
        comp[(identity_name(m.cod), m.name)] = m.name

    for a in nonids:
        for b in nonids:
            if b.cod != a.dom:
                continue
            ab = comp[(a.name, b.name)]
            for c in nonids:
                if c.cod != b.dom:
                    continue
                bc = comp[(b.name, c.name)]
                if comp[(ab, c.name)] != comp[(a.name, bc)]:
                    violations.append(Violation(
                        "NonAssociative",
                        f"({a.name} {b.name}) {c.name} = {comp[(ab, c.name)]} but "
                        f"{a.name} ({b.name} {c.name}) = {comp[(a.name, bc)]}"))
    if violations:
        raise InvalidCategory(violations)

    return FinCategory(raw.name, objects, morphisms, comp)


class FullSubcategory:
    """The full subcategory of ``parent`` on a subset of its objects.

    The morphism set is derived: every parent morphism with both endpoints in
    the subset.  Names are shared with the parent, so restriction and
    extension of ideals are plain set operations on names.
    """

    def __init__(self, parent: FinCategory, objects: Sequence[str]):
        chosen = set(objects)
        unknown = chosen - set(parent.objects)
        if unknown:
            raise ValueError(f"objects not in {parent.name}: {sorted(unknown)}")
        self.parent = parent
        self.objects: tuple[str, ...] = tuple(x for x in parent.objects if x in chosen)
        self._category: FinCategory | None = None

    def __repr__(self) -> str:
        return f"FullSubcategory({self.parent.name!r}, {list(self.objects)})"

    @property
    def label(self) -> str:
        return f"{self.parent.name}[{','.join(self.objects)}]"

    @property
    def category(self) -> FinCategory:
        if self._category is None:
            keep = set(self.objects)
            morphisms = [m for m in self.parent.morphisms
                         if m.dom in keep and m.cod in keep]
            names = {m.name for m in morphisms}
            comp = {(g, f): h for (g, f), h in self.parent._comp.items()
                    if g in names and f in names}
            self._category = FinCategory(self.label, self.objects, morphisms, comp)
        return self._category

    def morphism_names(self) -> tuple[str, ...]:
        return self.category.morphism_names


def full_subcategory(parent: FinCategory, objects: Sequence[str]) -> FullSubcategory:
    return FullSubcategory(parent, objects)


def require_parallel(C: FinCategory, p: ParallelPair) -> None:
    for f in (p.f1, p.f2):
        if not C.has_morphism(f):
            raise ValueError(f"{f} is not a morphism of {C.name}")
    if C.dom(p.f1) != C.dom(p.f2) or C.cod(p.f1) != C.cod(p.f2):
        raise ValueError(f"({p.f1}, {p.f2}) is not a parallel pair in {C.name}")


def morphism_flags(C: FinCategory, f: str) -> MorphismFlags:
    """Mono/epi/split/iso status of f, decided by exhaustive search."""
    def compute():
        x, y = C.dom(f), C.cod(f)
        mono = True
        for w in C.objects:
            for a in C.hom(w, x):
                for b in C.hom(w, x):
                    if a != b and C.compose(f, a) == C.compose(f, b):
                        mono = False
        epi = True
        for w in C.objects:
            for a in C.hom(y, w):
                for b in C.hom(y, w):
                    if a != b and C.compose(a, f) == C.compose(b, f):
                        epi = False
        split_epi = any(C.compose(f, s) == C.identity[y] for s in C.hom(y, x))
        split_mono = any(C.compose(r, f) == C.identity[x] for r in C.hom(y, x))
        iso = any(C.compose(f, g) == C.identity[y] and C.compose(g, f) == C.identity[x]
                  for g in C.hom(y, x))
        return MorphismFlags(mono, epi, split_mono, split_epi, iso)

    return C._memo(("flags", f), compute)


def is_jointly_monic(C: FinCategory, p: ParallelPair) -> bool:
    require_parallel(C, p)
    x = C.dom(p.f1)
    for w in C.objects:
        for a in C.hom(w, x):
            for b in C.hom(w, x):
                if a == b:
                    continue
                if (C.compose(p.f1, a) == C.compose(p.f1, b)
                        and C.compose(p.f2, a) == C.compose(p.f2, b)):
                    return False
    return True


def enumerate_reflexive_graphs(C: FinCategory) -> tuple[ReflexiveGraph, ...]:
    """All triples (d, c, e) with d∘e = c∘e = identity, in input order."""
    def compute():
        out = []
        for d in C.morphism_names:
            g1, g0 = C.dom(d), C.cod(d)
            for c in C.hom(g1, g0):
                for e in C.hom(g0, g1):
                    if (C.compose(d, e) == C.identity[g0]
                            and C.compose(c, e) == C.identity[g0]):
                        out.append(ReflexiveGraph(d, c, e))
        return tuple(out)

    return C._memo("reflexive_graphs", compute)
