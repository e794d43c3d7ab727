"""Ideals of morphisms, kernels, saturation, and the cover-transfer laws.

An ideal is a set of morphisms closed under pre- and post-composition with
arbitrary morphisms.  A category together with an ideal is a multi-pointed
category; the ideal plays the role of the null morphisms.
"""
from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from itertools import combinations

from .core import FinCategory, FullSubcategory
from .errors import BoundExceeded, IdealClosureViolation, PreconditionFailed
from .limits import (STRICT, WEAK, image_factorization, is_regular_category,
                     pullback_cones, regular_epis)
from .report import FAIL, INAPPLICABLE, PASS, Report

DEFAULT_IDEAL_BOUND = 12
ENV_MAX_MORPHISMS = "STARKIT_MAX_MORPHISMS"


def _env_bound(default: int) -> int:
    value = os.environ.get(ENV_MAX_MORPHISMS)
    return int(value) if value else default


@dataclass(frozen=True)
class Ideal:
    """A composition-closed class of morphisms of a fixed category."""

    cat: FinCategory
    carrier: frozenset[str]
    provenance: str = field(default="", compare=False)

    def __contains__(self, name: str) -> bool:
        return name in self.carrier

    def __le__(self, other: "Ideal") -> bool:
        return self.carrier <= other.carrier

    def members(self) -> tuple[str, ...]:
        return tuple(sorted(self.carrier))

    def label(self) -> str:
        return "{" + ", ".join(self.members()) + "}"


@dataclass(frozen=True)
class MultiPointedCategory:
    cat: FinCategory
    ideal: Ideal

    def __post_init__(self):
        if self.ideal.cat is not self.cat:
            raise ValueError("ideal does not live on this category")
        if not is_ideal(self.cat, self.ideal.carrier):
            raise ValueError(f"{self.ideal.label()} is not an ideal of {self.cat.name}")


@dataclass(frozen=True)
class CoverWitness:
    """A full subcategory claimed to be a projective cover of its parent."""

    cat: FinCategory
    cover: FullSubcategory

    def __post_init__(self):
        if self.cover.parent is not self.cat:
            raise ValueError("cover does not live on this category")

    @property
    def key(self) -> tuple[str, ...]:
        return self.cover.objects


def is_ideal(C: FinCategory, carrier: frozenset[str] | set[str]) -> bool:
    for n in carrier:
        if not C.has_morphism(n):
            return False
        for f in C.morphisms_from(C.cod(n)):
            if C.compose(f, n) not in carrier:
                return False
        for h in C.morphisms_to(C.dom(n)):
            if C.compose(n, h) not in carrier:
                return False
    return True


def ideal_closure(C: FinCategory, gens) -> Ideal:
    """Smallest ideal containing the generators.

    One pass over all composites f∘g∘h with g a generator suffices, because
    the result is already closed; this is asserted.
    """
    carrier: set[str] = set()
    for g in gens:
        if not C.has_morphism(g):
            raise ValueError(f"{g} is not a morphism of {C.name}")
        for h in C.morphisms_to(C.dom(g)):
            gh = C.compose(g, h)
            for f in C.morphisms_from(C.cod(g)):
                carrier.add(C.compose(f, gh))
    assert is_ideal(C, carrier), "one-pass closure failed to reach a fixpoint"
    return Ideal(C, frozenset(carrier))


def kernels(M: MultiPointedCategory, f: str, mode: str) -> list[str]:
    """All (weak) kernels of f for the ideal: morphisms k into dom(f) with
    f∘k in the ideal, through which every such morphism factors (uniquely in
    strict mode).  Empty list means none exist."""
    if mode not in (WEAK, STRICT):
        raise ValueError(f"mode must be {WEAK!r} or {STRICT!r}, got {mode!r}")
    C = M.cat

    def compute():
        x = C.dom(f)
        candidates = [k for k in C.morphisms_to(x) if C.compose(f, k) in M.ideal]
        out = []
        for k in candidates:
            ok = True
            for other in candidates:
                n = sum(1 for u in C.hom(C.dom(other), C.dom(k))
                        if C.compose(k, u) == other)
                if (mode == WEAK and n < 1) or (mode == STRICT and n != 1):
                    ok = False
                    break
            if ok:
                out.append(k)
        return out

    return C._memo(("kernels", M.ideal.carrier, f, mode), compute)


def has_all_kernels(M: MultiPointedCategory, mode: str) -> bool:
    return all(kernels(M, f, mode) for f in M.cat.morphism_names)


def pointed_ideal(C: FinCategory) -> Ideal | None:
    """The unique ideal with exactly one member per hom-set, if it exists."""
    def compute():
        pairs = [(x, y) for x in C.objects for y in C.objects]
        if any(not C.hom(x, y) for x, y in pairs):
            return None
        chosen: dict[tuple[str, str], str] = {}

        def consistent(n: str) -> bool:
            x, y = C.dom(n), C.cod(n)
            for g in C.morphism_names:
                if C.dom(g) == y:
                    t = chosen.get((x, C.cod(g)))
                    if t is not None and C.compose(g, n) != t:
                        return False
                if C.cod(g) == x:
                    t = chosen.get((C.dom(g), y))
                    if t is not None and C.compose(n, g) != t:
                        return False
            return True

        solutions: list[frozenset[str]] = []

        def search(i: int) -> None:
            if solutions:
                return
            if i == len(pairs):
                solutions.append(frozenset(chosen.values()))
                return
            x, y = pairs[i]
            for n in C.hom(x, y):
                chosen[(x, y)] = n
                if consistent(n):
                    search(i + 1)
                del chosen[(x, y)]

        search(0)
        if not solutions:
            return None
        carrier = solutions[0]
        assert is_ideal(C, carrier)
        return Ideal(C, carrier, provenance="pointed")

    return C._memo("pointed_ideal", compute)


def restrict_ideal(W: CoverWitness, N: Ideal) -> Ideal:
    """The ideal of the cover subcategory obtained by intersection."""
    if N.cat is not W.cat:
        raise ValueError("ideal must live on the parent category")
    sub = W.cover.category
    carrier = N.carrier & set(sub.morphism_names)
    assert is_ideal(sub, carrier)
    return Ideal(sub, frozenset(carrier), provenance="restriction")


def extend_ideal(W: CoverWitness, N: Ideal) -> Ideal:
    """The extension of an ideal of the cover along regular-epi squares.

    f: X -> Y belongs iff some square f∘e = e'∘n commutes with e, e' regular
    epis out of cover objects and n in N.  The result of extending an ideal
    along a projective cover is again an ideal; a closure failure raises
    IdealClosureViolation and signals a bug, not a negative outcome.
    """
    C = W.cat
    sub = W.cover.category
    if N.cat is not sub:
        raise ValueError("ideal must live on the cover subcategory")

    def compute():
        epis = regular_epis(C)
        cover_objs = set(W.cover.objects)
        cover_epis_to: dict[str, list[str]] = {}
        for x in C.objects:
            cover_epis_to[x] = [e for e in C.morphisms_to(x)
                                if e in epis and C.dom(e) in cover_objs]
        carrier = set()
        for f in C.morphism_names:
            x, y = C.dom(f), C.cod(f)
            found = False
            for e in cover_epis_to[x]:
                fe = C.compose(f, e)
                for n in N.carrier:
                    if C.dom(n) != C.dom(e):
                        continue
                    for e2 in cover_epis_to[y]:
                        if C.dom(e2) != C.cod(n):
                            continue
                        if C.compose(e2, n) == fe:
                            found = True
                            break
                    if found:
                        break
                if found:
                    break
            if found:
                carrier.add(f)
        if not is_ideal(C, carrier):
            raise IdealClosureViolation(
                f"extension of {N.label()} along {W.cover.label} is not closed")
        return frozenset(carrier)

    carrier = C._memo(("extend", W.key, N.carrier), compute)
    return Ideal(C, carrier, provenance="extension")


def is_saturating(M: MultiPointedCategory, f: str) -> bool:
    """f saturates every ideal morphism into its codomain: each such n is
    covered, via a regular epi, by an ideal morphism into dom(f)."""
    C = M.cat

    def compute():
        epis = regular_epis(C)
        y = C.cod(f)
        for n in M.ideal.carrier:
            if C.cod(n) != y:
                continue
            ok = False
            for g in C.morphisms_to(C.dom(n)):
                if g not in epis:
                    continue
                ng = C.compose(n, g)
                for m in C.hom(C.dom(g), C.dom(f)):
                    if m in M.ideal and C.compose(f, m) == ng:
                        ok = True
                        break
                if ok:
                    break
            if not ok:
                return False
        return True

    return C._memo(("saturating", M.ideal.carrier, f), compute)


def regular_epis_saturating(M: MultiPointedCategory) -> bool:
    return all(is_saturating(M, f) for f in sorted(regular_epis(M.cat)))


def is_projective_cover(W: CoverWitness) -> Report:
    """(i) every cover object lifts along every regular epi; (ii) every
    object of the parent is covered by a regular epi from the cover."""
    C = W.cat

    def compute():
        t0 = time.perf_counter()
        epis = regular_epis(C)
        for p in W.cover.objects:
            for e in C.morphism_names:
                if e not in epis:
                    continue
                x, y = C.dom(e), C.cod(e)
                for g in C.hom(p, y):
                    if not any(C.compose(e, h) == g for h in C.hom(p, x)):
                        return Report(
                            "projective-cover", FAIL,
                            [f"cover object {p} has no lift of {g} along regular epi {e}"],
                            time.perf_counter() - t0)
        for x in C.objects:
            if not any(e in epis and C.dom(e) in set(W.cover.objects)
                       for e in C.morphisms_to(x)):
                return Report("projective-cover", FAIL,
                              [f"object {x} admits no regular epi from the cover"],
                              time.perf_counter() - t0)
        return Report("projective-cover", PASS, [], time.perf_counter() - t0)

    return C._memo(("projective_cover", W.key), compute)


def nc_kernel_via_cover(W: CoverWitness, N: Ideal, f: str) -> str:
    """Kernel of f for the extended ideal, built through the cover:
    cover the codomain, pull back, cover the pullback, take a weak kernel in
    the cover, and return the mono part of the image factorization.

    Raises PreconditionFailed naming the first missing ingredient.  The
    result is cross-checked against the direct strict-kernel search for the
    extended ideal by the test suite, not here.
    """
    C = W.cat
    sub = W.cover.category
    if N.cat is not sub:
        raise ValueError("ideal must live on the cover subcategory")
    if not is_projective_cover(W).passed:
        raise PreconditionFailed(f"{W.cover.label} is not a projective cover")

    epis = regular_epis(C)
    cover_objs = set(W.cover.objects)

    def first_cover_epi(target: str) -> str | None:
        for e in C.morphisms_to(target):
            if e in epis and C.dom(e) in cover_objs:
                return e
        return None

    r = first_cover_epi(C.cod(f))
    if r is None:
        raise PreconditionFailed(f"no cover epi onto {C.cod(f)}")
    cones = pullback_cones(C, f, r, STRICT)
    if not cones:
        raise PreconditionFailed(f"no pullback of {f} along {r}")
    cone = cones[0]
    p1, p2 = cone.leg("l"), cone.leg("r")
    q = first_cover_epi(cone.apex)
    if q is None:
        raise PreconditionFailed(f"no cover epi onto the pullback {cone.apex}")
    p2q = C.compose(p2, q)
    ks = kernels(MultiPointedCategory(sub, N), p2q, WEAK)
    if not ks:
        raise PreconditionFailed(f"no weak kernel of {p2q} in the cover")
    k = ks[0]
    p1qk = C.compose(C.compose(p1, q), k)
    factored = image_factorization(C, p1qk)
    if factored is None:
        raise PreconditionFailed(f"no image factorization of {p1qk}")
    return factored[1]


def enumerate_ideals(C: FinCategory, bound: int | None = None) -> list[Ideal]:
    """All ideals of C, as unions of principal closures, deduplicated and
    ordered by (size, members)."""
    limit = bound if bound is not None else _env_bound(DEFAULT_IDEAL_BOUND)
    if len(C.morphisms) > limit:
        raise BoundExceeded(
            f"{C.name} has {len(C.morphisms)} morphisms; ideal enumeration bound is {limit}")

    def compute():
        atoms = []
        seen = set()
        for g in C.morphism_names:
            a = ideal_closure(C, [g]).carrier
            if a not in seen:
                seen.add(a)
                atoms.append(a)
        carriers = {frozenset()}
        for r in range(1, len(atoms) + 1):
            for combo in combinations(atoms, r):
                carriers.add(frozenset().union(*combo))
        return sorted(carriers, key=lambda c: (len(c), tuple(sorted(c))))

    return [Ideal(C, c) for c in C._memo("all_ideals", compute)]


def verify_lemma_a(W: CoverWitness, N_P: Ideal, N_C: Ideal) -> Report:
    """The five transfer laws between an ideal on a projective cover and an
    ideal on its parent category, each checked exhaustively:

    (a) restriction of the extension of N_P is N_P again;
    (b) the cover has weak N_P-kernels iff the parent has strict kernels for
        the extension of N_P;
    (c) if the parent has strict N_C-kernels, the cover has weak kernels for
        the restriction of N_C and the extension of that restriction is
        contained in N_C (vacuous otherwise, reported as such);
    (d) N_C is contained in the extension of its restriction iff every
        regular epi of the parent is N_C-saturating;
    (e) every regular epi of the parent saturates the extension of N_P.
    """
    t0 = time.perf_counter()
    C = W.cat
    sub = W.cover.category
    if N_P.cat is not sub:
        raise ValueError("N_P must live on the cover subcategory")
    if N_C.cat is not C:
        raise ValueError("N_C must live on the parent category")
    if not is_projective_cover(W).passed:
        raise PreconditionFailed(f"{W.cover.label} is not a projective cover of {C.name}")
    if not is_regular_category(C).passed:
        return Report("lemma-a", INAPPLICABLE,
                      [f"{C.name} is not regular; the transfer laws presuppose "
                       "a regular parent"], time.perf_counter() - t0)

    witnesses: list[str] = []
    failures: list[str] = []
    MP = MultiPointedCategory(sub, N_P)

    ext_NP = extend_ideal(W, N_P)
    if restrict_ideal(W, ext_NP).carrier == N_P.carrier:
        witnesses.append("(a) holds")
    else:
        failures.append(
            f"(a) restrict(extend(N_P)) = {restrict_ideal(W, ext_NP).label()} "
            f"but N_P = {N_P.label()}")

    lhs_b = has_all_kernels(MP, WEAK)
    rhs_b = has_all_kernels(MultiPointedCategory(C, ext_NP), STRICT)
    if lhs_b == rhs_b:
        witnesses.append(f"(b) holds: both sides {lhs_b}")
    else:
        failures.append(f"(b) cover weak kernels = {lhs_b} but extended strict kernels = {rhs_b}")

    MC = MultiPointedCategory(C, N_C)
    if has_all_kernels(MC, STRICT):
        res_NC = restrict_ideal(W, N_C)
        ok_wk = has_all_kernels(MultiPointedCategory(sub, res_NC), WEAK)
        ok_sub = extend_ideal(W, res_NC).carrier <= N_C.carrier
        if ok_wk and ok_sub:
            witnesses.append("(c) holds")
        else:
            failures.append(
                f"(c) weak restricted kernels = {ok_wk}, "
                f"extend(restrict(N_C)) <= N_C is {ok_sub}")
    else:
        witnesses.append("(c) vacuous: parent lacks strict N_C-kernels")

    lhs_d = N_C.carrier <= extend_ideal(W, restrict_ideal(W, N_C)).carrier
    rhs_d = regular_epis_saturating(MC)
    if lhs_d == rhs_d:
        witnesses.append(f"(d) holds: both sides {lhs_d}")
    else:
        failures.append(f"(d) N_C <= extend(restrict(N_C)) is {lhs_d} "
                        f"but regular epis saturating is {rhs_d}")

    if regular_epis_saturating(MultiPointedCategory(C, ext_NP)):
        witnesses.append("(e) holds")
    else:
        bad = next(f for f in sorted(regular_epis(C))
                   if not is_saturating(MultiPointedCategory(C, ext_NP), f))
        failures.append(f"(e) regular epi {bad} does not saturate the extension of N_P")

    elapsed = time.perf_counter() - t0
    if failures:
        return Report("lemma-a", FAIL, failures, elapsed)
    return Report("lemma-a", PASS, witnesses, elapsed)


def _galois_holds(left: list[Ideal], right: list[Ideal], fwd, bwd) -> bool:
    """fwd left adjoint to bwd: fwd(m) <= n iff m <= bwd(n), over all pairs."""
    for m in left:
        fm = fwd(m)
        for n in right:
            if (fm <= n.carrier) != (m.carrier <= bwd(n)):
                return False
    return True


def sample_ideals(C: FinCategory, cap: int = 64) -> list[Ideal]:
    """A deterministic sample of the ideal lattice for categories too large
    for full enumeration: bottom, top, every principal closure, and pairwise
    unions of principals up to the cap."""
    carriers = {frozenset(), frozenset(C.morphism_names)}
    atoms: list[frozenset] = []
    for g in C.morphism_names:
        a = ideal_closure(C, [g]).carrier
        if a not in carriers:
            carriers.add(a)
            atoms.append(a)
    for a, b in combinations(atoms, 2):
        if len(carriers) >= cap:
            break
        carriers.add(a | b)
    ordered = sorted(carriers, key=lambda c: (len(c), tuple(sorted(c))))
    return [Ideal(C, c) for c in ordered]


def verify_galois_and_iso(W: CoverWitness, bound: int | None = None) -> Report:
    """Classify the ideal lattices on both sides of a projective cover and
    verify the two Galois connections plus the lattice isomorphism between
    cover ideals with weak kernels and parent ideals that both admit kernels
    and saturate regular epis.

    The adjunction orientation is detected empirically and reported, not
    hard-coded; ideals mapped outside the stated sublattices are failures.
    Past the ideal-enumeration bound the checks run on a deterministic sample
    of generator closures instead of the full lattice, noted in the report.
    """
    t0 = time.perf_counter()
    C = W.cat
    sub = W.cover.category

    def report(verdict, witnesses):
        return Report("galois", verdict, witnesses, time.perf_counter() - t0)

    if not is_regular_category(C).passed:
        return report(INAPPLICABLE, [f"{C.name} is not regular"])
    if not is_projective_cover(W).passed:
        return report(INAPPLICABLE, [f"{W.cover.label} is not a projective cover"])

    sampled = False
    try:
        ideals_C = enumerate_ideals(C, bound)
        ideals_P = enumerate_ideals(sub, bound)
    except BoundExceeded:
        sampled = True
        ideals_C = sample_ideals(C)
        ideals_P = sample_ideals(sub)

    I_s = [n for n in ideals_C if regular_epis_saturating(MultiPointedCategory(C, n))]
    I_k = [n for n in ideals_C if has_all_kernels(MultiPointedCategory(C, n), STRICT)]
    I_wk = [m for m in ideals_P if has_all_kernels(MultiPointedCategory(sub, m), WEAK)]
    I_sk = [n for n in I_s if n in I_k]

    witnesses = [
        ("sampled " if sampled else "") +
        f"ideals: parent={len(ideals_C)} cover={len(ideals_P)}",
        f"I_s={len(I_s)} I_k={len(I_k)} I_s&I_k={len(I_sk)} I_wk={len(I_wk)}",
    ]
    failures: list[str] = []

    def ext(m: Ideal) -> frozenset[str]:
        return extend_ideal(W, m).carrier

    def res(n: Ideal) -> frozenset[str]:
        return restrict_ideal(W, n).carrier

    # Monotonicity of both maps on the full lattices.
    for a in ideals_C:
        for b in ideals_C:
            if a.carrier <= b.carrier and not res(a) <= res(b):
                failures.append(f"restriction not monotone at {a.label()} <= {b.label()}")
    for a in ideals_P:
        for b in ideals_P:
            if a.carrier <= b.carrier and not ext(a) <= ext(b):
                failures.append(f"extension not monotone at {a.label()} <= {b.label()}")

    # Maps must land in the stated sublattices (property checked directly,
    # since in sampled mode the image need not be a sampled ideal).
    def saturates(carrier: frozenset) -> bool:
        return regular_epis_saturating(MultiPointedCategory(C, Ideal(C, carrier)))

    def admits_kernels(carrier: frozenset) -> bool:
        return has_all_kernels(MultiPointedCategory(C, Ideal(C, carrier)), STRICT)

    def admits_weak_kernels(carrier: frozenset) -> bool:
        return has_all_kernels(MultiPointedCategory(sub, Ideal(sub, carrier)), WEAK)

    for m in ideals_P:
        if not saturates(ext(m)):
            failures.append(f"extension of {m.label()} leaves I_s")
    for m in I_wk:
        if not admits_kernels(ext(m)):
            failures.append(f"extension of weak-kernel ideal {m.label()} leaves I_k")
    for n in I_k:
        if not admits_weak_kernels(res(n)):
            failures.append(f"restriction of kernel ideal {n.label()} leaves I_wk")

    # Connection between the full cover lattice and I_s: detect orientation.
    c1_res_left = _galois_holds(I_s, ideals_P, lambda n: res(n), lambda m: ext(m))
    c1_ext_left = _galois_holds(ideals_P, I_s, lambda m: ext(m), lambda n: res(n))
    if c1_res_left or c1_ext_left:
        direction = ("restriction" if c1_res_left else "") + (
            "|extension" if c1_ext_left else "")
        witnesses.append(f"connection I(P)~I_s(C): left adjoint = {direction.strip('|')}")
    else:
        failures.append("no Galois orientation holds between I(P) and I_s(C)")

    # Connection between I_wk and I_k: detect orientation.
    c2_ext_left = _galois_holds(I_wk, I_k, lambda m: ext(m), lambda n: res(n))
    c2_res_left = _galois_holds(I_k, I_wk, lambda n: res(n), lambda m: ext(m))
    if c2_ext_left or c2_res_left:
        direction = ("extension" if c2_ext_left else "") + (
            "|restriction" if c2_res_left else "")
        witnesses.append(f"connection I_wk(P)~I_k(C): left adjoint = {direction.strip('|')}")
    else:
        failures.append("no Galois orientation holds between I_wk(P) and I_k(C)")

    # The isomorphism: both round trips are identities on the sublattices.
    for n in I_sk:
        if ext(Ideal(sub, res(n))) != n.carrier:
            failures.append(f"extend(restrict({n.label()})) differs from it on I_s&I_k")
    for m in I_wk:
        if res(Ideal(C, ext(m))) != m.carrier:
            failures.append(f"restrict(extend({m.label()})) differs from it on I_wk")

    if failures:
        return report(FAIL, failures)
    return report(PASS, witnesses)
