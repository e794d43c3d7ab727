"""Text corpus format, small-category enumeration, and counterexample search.

Grammar (line oriented, UTF-8, ``#`` comments, names ``[A-Za-z][A-Za-z0-9_]*``):

    category <name>
    objects <n1> <n2> ...
    mor <name> : <dom> -> <cod>
    comp <g> <f> = <h>          # g after f equals h; identities never appear
    end                         # as operands and are referenced as 1_<obj>
    ideal <name> on <target> = { <m1>, <m2>, ... }
    cover <name> on <cat> = { <obj1>, ... }

An ideal's target may be a category or a previously defined cover, in which
case the ideal lives on the cover's full subcategory.  The serializer emits
canonical order: objects, morphisms, composition rows, members, each sorted
lexicographically; parse then serialize is the identity on canonical files.
"""
from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass, field
from typing import Iterator

from .core import (FinCategory, FullSubcategory, RawCategory, identity_name,
                   morphism_flags, validate_category)
from .errors import BoundExceeded, CorpusSyntaxError, Exhausted, StarkitError
from .ideals import (CoverWitness, Ideal, MultiPointedCategory,
                     _env_bound, enumerate_ideals, has_all_kernels, is_ideal,
                     is_projective_cover, pointed_ideal, restrict_ideal,
                     extend_ideal)
from .limits import STRICT, is_regular_category
from .report import ERROR, FAIL
from .stars import is_normal_category, is_star_regular, reflexive_graphs_star_pi0

DEFAULT_ENUM_CAP = 6
DEFAULT_SEARCH_BUDGET = 1000

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_REF = re.compile(r"(?:1_)?[A-Za-z][A-Za-z0-9_]*\Z")
_CATEGORY = re.compile(r"category\s+(\S+)\s*\Z")
_OBJECTS = re.compile(r"objects\s+(.*)\Z")
_MOR = re.compile(r"mor\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)\s*\Z")
_COMP = re.compile(r"comp\s+(\S+)\s+(\S+)\s*=\s*(\S+)\s*\Z")
_IDEAL = re.compile(r"ideal\s+(\S+)\s+on\s+(\S+)\s*=\s*\{(.*)\}\s*\Z")
_COVER = re.compile(r"cover\s+(\S+)\s+on\s+(\S+)\s*=\s*\{(.*)\}\s*\Z")


class CorpusResolutionError(StarkitError):
    """A corpus block references a name that does not resolve."""


@dataclass
class CategoryBlock:
    raw: RawCategory


@dataclass
class IdealBlock:
    name: str
    on: str
    members: list[str]


@dataclass
class CoverBlock:
    name: str
    on: str
    objects: list[str]


@dataclass
class CorpusFile:
    header: list[str] = field(default_factory=list)
    blocks: list = field(default_factory=list)
    _cats: dict = field(default_factory=dict, compare=False, repr=False)
    _covers: dict = field(default_factory=dict, compare=False, repr=False)

    def _block(self, cls, name: str):
        for b in self.blocks:
            if isinstance(b, cls):
                label = b.raw.name if cls is CategoryBlock else b.name
                if label == name:
                    return b
        return None

    def category_names(self) -> list[str]:
        return [b.raw.name for b in self.blocks if isinstance(b, CategoryBlock)]

    def category(self, name: str) -> FinCategory:
        if name not in self._cats:
            b = self._block(CategoryBlock, name)
            if b is None:
                raise CorpusResolutionError(f"no category named {name}")
            self._cats[name] = validate_category(b.raw)
        return self._cats[name]

    def cover(self, name: str) -> CoverWitness:
        if name not in self._covers:
            b = self._block(CoverBlock, name)
            if b is None:
                raise CorpusResolutionError(f"no cover named {name}")
            cat = self.category(b.on)
            missing = [x for x in b.objects if x not in cat.objects]
            if missing:
                raise CorpusResolutionError(
                    f"cover {name} names unknown objects: {', '.join(missing)}")
            self._covers[name] = CoverWitness(cat, FullSubcategory(cat, b.objects))
        return self._covers[name]

    def ideal(self, name: str) -> Ideal:
        b = self._block(IdealBlock, name)
        if b is None:
            raise CorpusResolutionError(f"no ideal named {name}")
        if self._block(CategoryBlock, b.on) is not None:
            target = self.category(b.on)
        elif self._block(CoverBlock, b.on) is not None:
            target = self.cover(b.on).cover.category
        else:
            raise CorpusResolutionError(f"ideal {name} is on unknown target {b.on}")
        missing = [m for m in b.members if not target.has_morphism(m)]
        if missing:
            raise CorpusResolutionError(
                f"ideal {name} names unknown morphisms: {', '.join(missing)}")
        carrier = frozenset(b.members)
        if not is_ideal(target, carrier):
            raise CorpusResolutionError(
                f"ideal {name} is not composition-closed on {target.name}")
        return Ideal(target, carrier)


def _split_members(text: str, line_no: int) -> list[str]:
    body = text.strip()
    if not body:
        return []
    members = [part.strip() for part in body.split(",")]
    for m in members:
        if not _REF.match(m):
            raise CorpusSyntaxError(f"bad name {m!r}", line_no)
    return members


def parse(text: str) -> CorpusFile:
    header: list[str] = []
    blocks: list = []
    known_categories: set[str] = set()
    known_covers: set[str] = set()
    current: RawCategory | None = None
    stage = 0  # 0 objects, 1 mor, 2 comp
    in_header = True

    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if line.startswith("#"):
            if in_header:
                header.append(raw_line.rstrip())
            continue
        if not line:
            continue
        in_header = False
        word = line.split(None, 1)[0]

        if current is not None:
            if word == "objects":
                if stage != 0:
                    raise CorpusSyntaxError("objects after morphisms", line_no)
                m = _OBJECTS.match(line)
                names = m.group(1).split() if m else []
                if not names:
                    raise CorpusSyntaxError("objects line needs at least one name", line_no)
                for n in names:
                    if not _NAME.match(n):
                        raise CorpusSyntaxError(f"bad object name {n!r}", line_no)
                current.objects.extend(names)
            elif word == "mor":
                m = _MOR.match(line)
                if not m:
                    raise CorpusSyntaxError("expected: mor <name> : <dom> -> <cod>", line_no)
                for n in m.groups():
                    if not _NAME.match(n):
                        raise CorpusSyntaxError(f"bad name {n!r}", line_no)
                stage = max(stage, 1)
                current.morphisms.append((m.group(1), m.group(2), m.group(3)))
            elif word == "comp":
                m = _COMP.match(line)
                if not m:
                    raise CorpusSyntaxError("expected: comp <g> <f> = <h>", line_no)
                for n in m.groups():
                    if not _REF.match(n):
                        raise CorpusSyntaxError(f"bad name {n!r}", line_no)
                stage = 2
                current.compositions.append((m.group(1), m.group(2), m.group(3)))
            elif word == "end":
                known_categories.add(current.name)
                blocks.append(CategoryBlock(current))
                current, stage = None, 0
            else:
                raise CorpusSyntaxError(f"unexpected {word!r} inside category block", line_no)
            continue

        if word == "category":
            m = _CATEGORY.match(line)
            if not m or not _NAME.match(m.group(1)):
                raise CorpusSyntaxError("expected: category <name>", line_no)
            current = RawCategory(m.group(1), [], [], [])
            stage = 0
        elif word == "ideal":
            m = _IDEAL.match(line)
            if not m or not _NAME.match(m.group(1)):
                raise CorpusSyntaxError(
                    "expected: ideal <name> on <target> = { ... }", line_no)
            target = m.group(2)
            if target not in known_categories and target not in known_covers:
                raise CorpusSyntaxError(f"unknown target {target!r}", line_no)
            blocks.append(IdealBlock(m.group(1), target, _split_members(m.group(3), line_no)))
        elif word == "cover":
            m = _COVER.match(line)
            if not m or not _NAME.match(m.group(1)):
                raise CorpusSyntaxError("expected: cover <name> on <cat> = { ... }", line_no)
            if m.group(2) not in known_categories:
                raise CorpusSyntaxError(f"unknown category {m.group(2)!r}", line_no)
            known_covers.add(m.group(1))
            blocks.append(CoverBlock(m.group(1), m.group(2), _split_members(m.group(3), line_no)))
        else:
            raise CorpusSyntaxError(f"unexpected {word!r}", line_no)

    if current is not None:
        raise CorpusSyntaxError(f"category {current.name} not closed with end",
                                len(text.splitlines()) or 1)
    return CorpusFile(header, blocks)


def _render_set(items) -> str:
    inner = ", ".join(sorted(items))
    return "{ " + inner + " }" if inner else "{ }"


def _render_block(block) -> str:
    if isinstance(block, CategoryBlock):
        raw = block.raw
        lines = [f"category {raw.name}"]
        if raw.objects:
            lines.append("objects " + " ".join(sorted(raw.objects)))
        for name, dom, cod in sorted(raw.morphisms):
            lines.append(f"mor {name} : {dom} -> {cod}")
        for g, f, h in sorted(raw.compositions):
            lines.append(f"comp {g} {f} = {h}")
        lines.append("end")
        return "\n".join(lines)
    if isinstance(block, IdealBlock):
        return f"ideal {block.name} on {block.on} = {_render_set(block.members)}"
    if isinstance(block, CoverBlock):
        return f"cover {block.name} on {block.on} = {_render_set(block.objects)}"
    raise TypeError(f"not a corpus block: {block!r}")


def serialize(corpus: CorpusFile) -> str:
    chunks = []
    if corpus.header:
        chunks.append("\n".join(corpus.header))
    chunks.extend(_render_block(b) for b in corpus.blocks)
    return "\n\n".join(chunks) + "\n"


def category_block(C: FinCategory) -> CategoryBlock:
    return CategoryBlock(C.to_raw())


def ideal_block(name: str, on: str, members) -> IdealBlock:
    return IdealBlock(name, on, sorted(members))


def cover_block(name: str, on: str, objects) -> CoverBlock:
    return CoverBlock(name, on, sorted(objects))


# -- isomorphism and equivalence ---------------------------------------------

def _int_form(C: FinCategory):
    """(object count, non-identity types, composition table) in input order."""
    obj_index = {x: i for i, x in enumerate(C.objects)}
    nonids = [m for m in C.morphisms if not C.is_identity(m.name)]
    mor_index: dict[str, int] = {}
    for i, x in enumerate(C.objects):
        mor_index[C.identity[x]] = i
    for j, m in enumerate(nonids):
        mor_index[m.name] = len(C.objects) + j
    types = tuple((obj_index[m.dom], obj_index[m.cod]) for m in nonids)
    k = len(C.objects)
    table: dict[tuple[int, int], int] = {}
    for g in nonids:
        for f in nonids:
            if f.cod == g.dom:
                table[(mor_index[g.name], mor_index[f.name])] = \
                    mor_index[C.compose(g.name, f.name)]
    return k, types, table


def _canonical_key(k: int, types: tuple, table: dict) -> tuple:
    """Lexicographically smallest (k, types, table) over object relabellings
    and type-preserving morphism relabellings, with prefix early-abort."""
    m = len(types)
    best_types: tuple | None = None
    best_entries: tuple | None = None
    for sigma in itertools.permutations(range(k)):
        new_types = [(sigma[a], sigma[b]) for a, b in types]
        order = sorted(range(m), key=lambda j: new_types[j])
        sorted_types = tuple(new_types[j] for j in order)
        if best_types is not None and sorted_types > best_types:
            continue
        if best_types is None or sorted_types < best_types:
            best_types, best_entries = sorted_types, None
        groups: list[list[int]] = []
        for j in order:
            if groups and new_types[groups[-1][0]] == new_types[j]:
                groups[-1].append(j)
            else:
                groups.append([j])
        # composable (g, f) positions are type-determined, so fixed per sigma
        pair_positions = [(gp, fp) for gp in range(m) for fp in range(m)
                          if sorted_types[fp][1] == sorted_types[gp][0]]
        for perm_parts in itertools.product(*[itertools.permutations(g) for g in groups]):
            old_order = [j for part in perm_parts for j in part]
            new_of_old = list(sigma) + [0] * m
            for pos, j in enumerate(old_order):
                new_of_old[k + j] = k + pos
            entries: list[int] = []
            worse = False
            for idx, (gp, fp) in enumerate(pair_positions):
                old = table[(k + old_order[gp], k + old_order[fp])]
                entry = new_of_old[old]
                if best_entries is not None:
                    ref = best_entries[idx]
                    if entry > ref:
                        worse = True
                        break
                    if entry < ref:
                        best_entries = None  # strictly better prefix
                entries.append(entry)
            if worse:
                continue
            if best_entries is None:
                best_entries = tuple(entries)
    assert best_types is not None and best_entries is not None
    return (k, best_types, best_entries)


def canonical_key(C: FinCategory) -> tuple:
    """A complete isomorphism invariant: the minimal relabelled table."""
    def compute():
        k, types, table = _int_form(C)
        return _canonical_key(k, types, table)
    return C._memo("canonical_key", compute)


def are_isomorphic(C: FinCategory, D: FinCategory) -> bool:
    return canonical_key(C) == canonical_key(D)


def are_equivalent(C: FinCategory, D: FinCategory) -> bool:
    """Exhaustive search for a full, faithful, essentially surjective map."""
    def isomorphic_objects(E: FinCategory, x: str, y: str) -> bool:
        return x == y or any(morphism_flags(E, f).iso for f in E.hom(x, y))

    def search(obj_map: dict[str, str]) -> bool:
        for x in C.objects:
            for y in C.objects:
                if len(C.hom(x, y)) != len(D.hom(obj_map[x], obj_map[y])):
                    return False
        if not all(any(isomorphic_objects(D, obj_map[x], z) for x in C.objects)
                   for z in D.objects):
            return False
        mor_map: dict[str, str] = {}

        def functorial() -> bool:
            for g in mor_map:
                for f in mor_map:
                    if C.composable(g, f):
                        gf = C.compose(g, f)
                        if gf in mor_map and D.compose(mor_map[g], mor_map[f]) != mor_map[gf]:
                            return False
            return True

        def assign(index: int) -> bool:
            if index == len(C.morphisms):
                return True
            m = C.morphisms[index]
            if C.is_identity(m.name):
                options = [D.identity[obj_map[m.dom]]]
            else:
                used = {mor_map[o.name] for o in C.morphisms[:index]
                        if o.dom == m.dom and o.cod == m.cod}
                options = [cand for cand in D.hom(obj_map[m.dom], obj_map[m.cod])
                           if cand not in used]
            for cand in options:
                mor_map[m.name] = cand
                if functorial() and assign(index + 1):
                    return True
                del mor_map[m.name]
            return False

        return assign(0)

    for assignment in itertools.product(D.objects, repeat=len(C.objects)):
        if search(dict(zip(C.objects, assignment))):
            return True
    return False


# -- enumeration of small categories -----------------------------------------

def _fill_tables(k: int, types: tuple) -> Iterator[dict]:
    """All associative composition tables for k identities plus non-identity
    morphisms with the given (dom, cod) types.  Morphism index i < k is the
    identity of object i; index k + j is the j-th non-identity morphism.

    Backtracking with unit propagation: whenever a triple's equation has one
    unknown cell left, that cell is forced, so contradictions surface at the
    earliest possible node."""
    m = len(types)
    if m == 0:
        yield {}
        return
    dom = list(range(k)) + [t[0] for t in types]
    cod = list(range(k)) + [t[1] for t in types]
    nonids = list(range(k, k + m))
    pairs = [(g, f) for g in nonids for f in nonids if cod[f] == dom[g]]
    pidx = {p: i for i, p in enumerate(pairs)}
    total = len(pairs)
    candidates = []
    for g, f in pairs:
        cands = [h for h in range(k + m) if dom[h] == dom[f] and cod[h] == cod[g]]
        if not cands:
            return
        candidates.append(cands)

    if not pairs:
        yield {}
        return

    # Root symmetry pruning: before anything is assigned, non-identity
    # morphisms of equal type are interchangeable, so for the first cell we
    # keep one candidate per orbit under permutations fixing its operands.
    g0, f0 = pairs[0]
    seen_type: set[tuple[int, int]] = set()
    pruned = []
    for h in candidates[0]:
        if h < k or h in (g0, f0):
            pruned.append(h)
        elif (dom[h], cod[h]) not in seen_type:
            seen_type.add((dom[h], cod[h]))
            pruned.append(h)
    candidates[0] = pruned

    triples = [(a, b, c) for a in nonids for b in nonids if cod[b] == dom[a]
               for c in nonids if cod[c] == dom[b]]
    # A triple's equation touches pairs (a,b), (b,c), (T[a,b], c), (a, T[b,c]);
    # the last two are caught by matching on the fixed end of the pair.
    touching: list[list[tuple[int, int, int]]] = [[] for _ in range(total)]
    for t in triples:
        a, b, c = t
        affected = {pidx[(a, b)], pidx[(b, c)]}
        for i, (g, f) in enumerate(pairs):
            if f == c or g == a:
                affected.add(i)
        for i in affected:
            touching[i].append(t)

    table: list[int | None] = [None] * total

    def propagate(start: int, trail: list[int]) -> bool:
        queue = [start]
        while queue:
            qi = queue.pop()
            for a, b, c in touching[qi]:
                ab = b if a < k else a if b < k else table[pidx[(a, b)]]
                bc = c if b < k else b if c < k else table[pidx[(b, c)]]
                if ab is None or bc is None:
                    continue
                li = None if ab < k else pidx[(ab, c)]
                ri = None if bc < k else pidx[(a, bc)]
                left = c if li is None else table[li]
                right = a if ri is None else table[ri]
                if left is not None and right is not None:
                    if left != right:
                        return False
                elif left is not None:
                    table[ri] = left
                    trail.append(ri)
                    queue.append(ri)
                elif right is not None:
                    table[li] = right
                    trail.append(li)
                    queue.append(li)
        return True

    def extend(pos: int) -> Iterator[dict]:
        while pos < total and table[pos] is not None:
            pos += 1
        if pos == total:
            yield {pairs[i]: table[i] for i in range(total)}
            return
        for h in candidates[pos]:
            trail = [pos]
            table[pos] = h
            if propagate(pos, trail):
                yield from extend(pos + 1)
            for i in trail:
                table[i] = None

    yield from extend(0)


def _build_category(name: str, key: tuple) -> FinCategory:
    k, types, entries = key
    objects = [f"X{i}" for i in range(k)]
    morphisms = [(f"f{j}", f"X{t[0]}", f"X{t[1]}") for j, t in enumerate(types)]

    def mor_name(index: int) -> str:
        return identity_name(f"X{index}") if index < k else f"f{index - k}"

    rows = []
    pos = 0
    for g, gt in enumerate(types):
        for f, ft in enumerate(types):
            if ft[1] != gt[0]:
                continue
            rows.append((f"f{g}", f"f{f}", mor_name(entries[pos])))
            pos += 1
    assert pos == len(entries)
    return validate_category(RawCategory(name, objects, morphisms, rows))


def enumerate_categories(max_morphisms: int, cap: int | None = None) -> Iterator[FinCategory]:
    """All categories with at most max_morphisms morphisms (identities
    included), exhaustively, deduplicated up to isomorphism via canonical
    relabelling.  Emission order is deterministic."""
    limit = cap if cap is not None else _env_bound(DEFAULT_ENUM_CAP)
    if max_morphisms > limit:
        raise BoundExceeded(
            f"requested {max_morphisms} morphisms; enumeration cap is {limit}")
    count = 0
    for n in range(1, max_morphisms + 1):
        seen: set[tuple] = set()
        for k in range(1, n + 1):
            m = n - k
            type_space = list(itertools.product(range(k), repeat=2))
            for types in itertools.combinations_with_replacement(type_space, m):
                for table in _fill_tables(k, types):
                    key = _canonical_key(k, types, table)
                    if key in seen:
                        continue
                    seen.add(key)
                    count += 1
                    yield _build_category(f"C{count}", key)


def _random_category(rng: random.Random, lo: int, hi: int, name: str) -> FinCategory | None:
    """One attempt at a random valid category with morphism count in (lo, hi]."""
    n = rng.randint(lo + 1, hi)
    k = rng.randint(1, n)
    m = n - k
    types = tuple(sorted((rng.randrange(k), rng.randrange(k)) for _ in range(m)))
    dom = list(range(k)) + [t[0] for t in types]
    cod = list(range(k)) + [t[1] for t in types]
    objects = [f"X{i}" for i in range(k)]
    morphisms = [(f"f{j}", f"X{t[0]}", f"X{t[1]}") for j, t in enumerate(types)]
    rows = []
    for g in range(m):
        for f in range(m):
            if cod[k + f] != dom[k + g]:
                continue
            cands = [h for h in range(k + m)
                     if dom[h] == dom[k + f] and cod[h] == cod[k + g]]
            if not cands:
                return None
            h = rng.choice(cands)
            hname = identity_name(f"X{h}") if h < k else f"f{h - k}"
            rows.append((f"f{g}", f"f{f}", hname))
    try:
        return validate_category(RawCategory(name, objects, morphisms, rows))
    except StarkitError:
        return None


# -- counterexample search ----------------------------------------------------

def _nonempty_object_subsets(C: FinCategory):
    objs = C.objects
    for r in range(1, len(objs) + 1):
        yield from itertools.combinations(objs, r)


def _prop_pointed(C: FinCategory):
    N = pointed_ideal(C)
    if N is None:
        return None
    return [category_block(C), ideal_block("pt", C.name, N.members())]


def _prop_regular(C: FinCategory):
    if not is_regular_category(C).passed:
        return None
    return [category_block(C)]


def _prop_regular_thin(C: FinCategory):
    thin = all(len(C.hom(x, y)) <= 1 for x in C.objects for y in C.objects)
    if thin and is_regular_category(C).passed:
        return [category_block(C)]
    return None


def _prop_pointed_regular_not_normal(C: FinCategory):
    if pointed_ideal(C) is None or not is_regular_category(C).passed:
        return None
    report = is_normal_category(C)
    if report.verdict == ERROR:
        raise StarkitError(f"normality cross-check failed on {C.name}: {report.witnesses}")
    if report.verdict != FAIL:
        return None
    return [category_block(C), ideal_block("pt", C.name, pointed_ideal(C).members())]


def _prop_pi0_cover_not_star_regular(C: FinCategory):
    """A projective cover whose reflexive graphs satisfy star-pi0 for the
    restricted ideal while the ambient pair is not star-regular."""
    if not is_regular_category(C).passed:
        return None
    for N in enumerate_ideals(C):
        M = MultiPointedCategory(C, N)
        if not has_all_kernels(M, STRICT):
            continue
        left = is_star_regular(M)
        if left.verdict == ERROR:
            raise StarkitError(f"star-regularity cross-check failed on {C.name}")
        if left.passed:
            continue
        for objs in _nonempty_object_subsets(C):
            W = CoverWitness(C, FullSubcategory(C, objs))
            if not is_projective_cover(W).passed:
                continue
            MP = MultiPointedCategory(W.cover.category, restrict_ideal(W, N))
            ok, _ = reflexive_graphs_star_pi0(MP)
            if ok:
                return [category_block(C),
                        ideal_block("bad", C.name, N.members()),
                        cover_block("P", C.name, objs)]
    return None


def _prop_restrict_extend_not_adjoint(C: FinCategory):
    """An ideal whose restriction-extension round trip is incomparable with
    the ideal itself, in both directions."""
    if not is_regular_category(C).passed:
        return None
    for objs in _nonempty_object_subsets(C):
        W = CoverWitness(C, FullSubcategory(C, objs))
        if not is_projective_cover(W).passed:
            continue
        for N in enumerate_ideals(C):
            round_trip = extend_ideal(W, restrict_ideal(W, N)).carrier
            if not (round_trip <= N.carrier) and not (N.carrier <= round_trip):
                return [category_block(C),
                        ideal_block("N", C.name, N.members()),
                        cover_block("P", C.name, objs)]
    return None


PROPERTIES = {
    "pointed": _prop_pointed,
    "regular": _prop_regular,
    "regular-thin": _prop_regular_thin,
    "pointed-regular-not-normal": _prop_pointed_regular_not_normal,
    "pi0-cover-not-star-regular": _prop_pi0_cover_not_star_regular,
    "restrict-extend-not-adjoint": _prop_restrict_extend_not_adjoint,
}


def search_counterexample(prop: str, max_morphisms: int,
                          budget: int | None = None, seed: int = 0) -> CorpusFile:
    """First enumerated (then seeded-random, past the enumeration cap)
    category satisfying the named property, serialized with provenance.
    Raises Exhausted when the bound is reached without a witness."""
    if prop not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r}; known: {sorted(PROPERTIES)}")
    predicate = PROPERTIES[prop]
    limit = budget if budget is not None else DEFAULT_SEARCH_BUDGET
    cap = _env_bound(DEFAULT_ENUM_CAP)
    examined = 0
    enumeration_complete = True

    def witness(blocks) -> CorpusFile:
        header = [f"# witness for property {prop}",
                  f"# examined={examined} max_morphisms={max_morphisms} seed={seed}"]
        return CorpusFile(header, list(blocks))

    for C in enumerate_categories(min(max_morphisms, cap)):
        if examined >= limit:
            enumeration_complete = False
            break
        examined += 1
        blocks = predicate(C)
        if blocks is not None:
            return witness(blocks)

    if enumeration_complete and max_morphisms > cap and examined < limit:
        rng = random.Random(seed)
        attempts = 0
        while examined < limit and attempts < limit * 200:
            attempts += 1
            C = _random_category(rng, cap, max_morphisms, name=f"R{examined + 1}")
            if C is None:
                continue
            examined += 1
            blocks = predicate(C)
            if blocks is not None:
                return witness(blocks)
        enumeration_complete = False

    detail = ("search space exhausted" if enumeration_complete else "budget reached")
    raise Exhausted(
        f"no witness for {prop}: examined={examined} ({detail}) "
        f"max_morphisms={max_morphisms} budget={limit} seed={seed}")
