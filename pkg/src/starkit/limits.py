"""Weak and strict finite limits, coequalizers, regular epis, regularity.

Everything here is decided by exhaustive search over the composition table.
A cone over a diagram is stored with labelled legs so that diagrams with
repeated objects (kernel pairs, products X x X) are representable.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from .core import FinCategory, ParallelPair, morphism_flags, require_parallel
from .report import FAIL, PASS, Report

WEAK = "weak"
STRICT = "strict"


@dataclass(frozen=True)
class Diagram:
    """A diagram carved out of C: a set of its objects and morphisms.

    The shape is the selection itself, one node per chosen object.  Limits of
    shapes that repeat an object are reached through the wrappers below.
    """

    objects: tuple[str, ...]
    morphisms: tuple[str, ...] = ()


@dataclass(frozen=True)
class Cone:
    apex: str
    legs: tuple[tuple[str, str], ...]  # sorted (node label, morphism) pairs

    def leg(self, label: str) -> str:
        for lab, m in self.legs:
            if lab == label:
                return m
        raise KeyError(label)


def _check_mode(mode: str) -> None:
    if mode not in (WEAK, STRICT):
        raise ValueError(f"mode must be {WEAK!r} or {STRICT!r}, got {mode!r}")


def _all_cones(C: FinCategory, nodes: list[tuple[str, str]],
               edges: list[tuple[str, str, str]]) -> list[Cone]:
    labels = [lab for lab, _ in nodes]
    objs = {lab: obj for lab, obj in nodes}
    cones: list[Cone] = []
    for apex in C.objects:
        choices = [C.hom(apex, objs[lab]) for lab in labels]
        if any(len(c) == 0 for c in choices):
            continue
        stack = [()]
        for options in choices:
            stack = [partial + (m,) for partial in stack for m in options]
        for assignment in stack:
            legs = dict(zip(labels, assignment))
            if all(C.compose(m, legs[src]) == legs[dst] for src, dst, m in edges):
                cones.append(Cone(apex, tuple(sorted(legs.items()))))
    return cones


def _factorizations(C: FinCategory, src: Cone, dst: Cone) -> list[str]:
    return [u for u in C.hom(src.apex, dst.apex)
            if all(C.compose(m_dst, u) == m_src
                   for (_, m_dst), (_, m_src) in zip(dst.legs, src.legs))]


def _limit_cones(C: FinCategory, nodes: list[tuple[str, str]],
                 edges: list[tuple[str, str, str]], mode: str) -> list[Cone]:
    _check_mode(mode)
    cones = _all_cones(C, nodes, edges)
    out = []
    for cand in cones:
        ok = True
        for other in cones:
            n = len(_factorizations(C, other, cand))
            if (mode == WEAK and n < 1) or (mode == STRICT and n != 1):
                ok = False
                break
        if ok:
            out.append(cand)
    return out


def limit_cones(C: FinCategory, diagram: Diagram, mode: str) -> list[Cone]:
    """All (weak) limit cones of the diagram; empty list means none exists.

    Weak mode keeps every cone through which all cones factor; strict mode
    additionally requires each factorization to be unique.
    """
    for x in diagram.objects:
        if x not in C.objects:
            raise ValueError(f"{x} is not an object of {C.name}")
    chosen = set(diagram.objects)
    edges = []
    for m in diagram.morphisms:
        if C.dom(m) not in chosen or C.cod(m) not in chosen:
            raise ValueError(f"diagram morphism {m} has an endpoint outside the selection")
        edges.append((C.dom(m), C.cod(m), m))
    nodes = [(x, x) for x in diagram.objects]
    return _limit_cones(C, nodes, edges, mode)


def terminal_cones(C: FinCategory, mode: str) -> list[Cone]:
    def compute():
        return _limit_cones(C, [], [], mode)
    return C._memo(("terminal", mode), compute)


def product_cones(C: FinCategory, x: str, y: str, mode: str) -> list[Cone]:
    """Binary product cones, legs labelled l and r."""
    def compute():
        return _limit_cones(C, [("l", x), ("r", y)], [], mode)
    return C._memo(("product", x, y, mode), compute)


def equalizer_cones(C: FinCategory, p: ParallelPair, mode: str) -> list[Cone]:
    """Equalizer cones of (f1, f2); the equalizing morphism is leg e."""
    require_parallel(C, p)

    def compute():
        x, y = C.dom(p.f1), C.cod(p.f1)
        return _limit_cones(C, [("e", x), ("t", y)],
                            [("e", "t", p.f1), ("e", "t", p.f2)], mode)
    return C._memo(("equalizer", p.f1, p.f2, mode), compute)


def pullback_cones(C: FinCategory, f: str, g: str, mode: str) -> list[Cone]:
    """Pullback cones of the cospan f: X -> Z <- Y :g, legs l (to X) and r (to Y)."""
    if C.cod(f) != C.cod(g):
        raise ValueError(f"({f}, {g}) is not a cospan")

    def compute():
        return _limit_cones(
            C,
            [("l", C.dom(f)), ("m", C.cod(f)), ("r", C.dom(g))],
            [("l", "m", f), ("r", "m", g)], mode)
    return C._memo(("pullback", f, g, mode), compute)


def kernel_pair_cones(C: FinCategory, f: str, mode: str) -> list[Cone]:
    """Kernel pair cones of f (the pullback of f against itself), legs p1, p2."""
    def compute():
        return _limit_cones(
            C,
            [("p1", C.dom(f)), ("m", C.cod(f)), ("p2", C.dom(f))],
            [("p1", "m", f), ("p2", "m", f)], mode)
    return C._memo(("kernel_pair", f, mode), compute)


def kernel_pairs(C: FinCategory, f: str, mode: str) -> list[ParallelPair]:
    return [ParallelPair(cone.leg("p1"), cone.leg("p2"))
            for cone in kernel_pair_cones(C, f, mode)]


def has_weak_finite_limits(C: FinCategory) -> bool:
    """True iff C has a weak terminal, weak binary products and weak equalizers.

    These generate all weak finite limits: fold the node objects with weak
    binary products, then weakly equalize one edge condition at a time; each
    step only ever adds equations, so earlier ones survive.
    """
    def compute():
        if not terminal_cones(C, WEAK):
            return False
        for i, x in enumerate(C.objects):
            for y in C.objects[i:]:
                if not product_cones(C, x, y, WEAK):
                    return False
        for p in C.parallel_pairs():
            if p.f1 > p.f2:
                continue  # equalizers are symmetric in the pair
            if not equalizer_cones(C, p, WEAK):
                return False
        return True

    return C._memo("has_weak_finite_limits", compute)


def coequalizes(C: FinCategory, g: str, p: ParallelPair) -> bool:
    return C.compose(g, p.f1) == C.compose(g, p.f2)


def is_coequalizer(C: FinCategory, q: str, p: ParallelPair) -> bool:
    """Direct universal-property check: q coequalizes p and every
    coequalizing morphism factors through q exactly once."""
    require_parallel(C, p)
    if C.dom(q) != C.cod(p.f1) or not coequalizes(C, q, p):
        return False
    for g in C.morphisms_from(C.cod(p.f1)):
        if not coequalizes(C, g, p):
            continue
        n = sum(1 for u in C.hom(C.cod(q), C.cod(g)) if C.compose(u, q) == g)
        if n != 1:
            return False
    return True


def coequalizer(C: FinCategory, p: ParallelPair) -> str | None:
    """The first morphism (in input order) that is a coequalizer of p."""
    require_parallel(C, p)

    def compute():
        for q in C.morphisms_from(C.cod(p.f1)):
            if is_coequalizer(C, q, p):
                return q
        return None

    return C._memo(("coequalizer", p.f1, p.f2), compute)


def regular_epis(C: FinCategory) -> frozenset[str]:
    """All morphisms that are a coequalizer of some parallel pair."""
    def compute():
        out = set()
        for f in C.morphism_names:
            flags = morphism_flags(C, f)
            if not flags.epi:
                continue  # a coequalizer is always an epimorphism
            if flags.split_epi:
                out.add(f)  # split epi q with section s is a coequalizer of (s q, 1)
                continue
            x = C.dom(f)
            found = False
            for w in C.objects:
                for u in C.hom(w, x):
                    for v in C.hom(w, x):
                        if is_coequalizer(C, f, ParallelPair(u, v)):
                            found = True
                            break
                    if found:
                        break
                if found:
                    break
            if found:
                out.add(f)
        return frozenset(out)

    return C._memo("regular_epis", compute)


def is_regular_epi(C: FinCategory, f: str) -> bool:
    return f in regular_epis(C)


def image_factorization(C: FinCategory, f: str) -> tuple[str, str] | None:
    """One factorization f = m∘e with e a regular epi and m a mono, if any."""
    def compute():
        x, y = C.dom(f), C.cod(f)
        epis = regular_epis(C)
        for mid in C.objects:
            for e in C.hom(x, mid):
                if e not in epis:
                    continue
                for m in C.hom(mid, y):
                    if morphism_flags(C, m).mono and C.compose(m, e) == f:
                        return (e, m)
        return None

    return C._memo(("image", f), compute)


def is_regular_category(C: FinCategory) -> Report:
    """Finite limits, coequalizers of kernel pairs, pullback-stable regular epis."""
    def compute():
        t0 = time.perf_counter()

        def report(verdict, witnesses):
            return Report("regular-category", verdict, witnesses,
                          time.perf_counter() - t0)

        if not terminal_cones(C, STRICT):
            return report(FAIL, ["no terminal object"])
        for i, x in enumerate(C.objects):
            for y in C.objects[i:]:
                if not product_cones(C, x, y, STRICT):
                    return report(FAIL, [f"no product {x} x {y}"])
        for p in C.parallel_pairs():
            if p.f1 > p.f2:
                continue
            if not equalizer_cones(C, p, STRICT):
                return report(FAIL, [f"no equalizer of ({p.f1}, {p.f2})"])

        for f in C.morphism_names:
            pairs = kernel_pairs(C, f, STRICT)
            if not pairs:
                return report(FAIL, [f"no kernel pair of {f}"])
            if coequalizer(C, pairs[0]) is None:
                return report(FAIL, [f"kernel pair of {f} has no coequalizer"])

        epis = regular_epis(C)
        for f in C.morphism_names:
            if f not in epis:
                continue
            for g in C.morphism_names:
                if C.cod(g) != C.cod(f):
                    continue
                cones = pullback_cones(C, f, g, STRICT)
                if not cones:
                    return report(FAIL, [f"no pullback of {f} along {g}"])
                proj = cones[0].leg("r")
                if proj not in epis:
                    return report(FAIL, [
                        f"pullback of regular epi {f} along {g} has "
                        f"non-regular projection {proj}"])
        return report(PASS, [])

    return C._memo("is_regular_category", compute)
