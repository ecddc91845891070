"""Sylow subgroups and their number.

One Sylow p-subgroup is grown from a random cyclic p-subgroup; the count
v_p(G) is the size of its orbit under conjugation by the generators of G,
with subgroups keyed by their sorted element list.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from . import kernels as K
from .numtheory import p_part
from .permcore import (DEFAULT_ENUMERATION_CAP, CapExceededError, GeneratedGroup,
                       bfs_elements)

DEFAULT_ORBIT_CAP = 10 ** 6
BRUTEFORCE_LIMIT = 5000
DEFAULT_SEED = 0


class SylowInvariantError(RuntimeError):
    """A computed count broke one of Sylow's theorems: an internal bug."""


@dataclass
class SylowReport:
    p: int
    a: int
    subgroup: GeneratedGroup
    v_p: int
    normalizer_order: int

    def as_dict(self) -> dict:
        return {"p": self.p, "a": self.a, "v_p": self.v_p,
                "normalizer_order": self.normalizer_order}


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _cyclic(y: tuple) -> list[tuple]:
    out = [tuple(range(len(y)))]
    x = y
    while not K.is_identity(x):
        out.append(x)
        x = K.compose(x, y)
    return out


def _seed_element(G: GeneratedGroup, p: int, rng: random.Random, tries: int = 10000):
    for _ in range(tries):
        x = G.random_tuple(rng)
        o = K.perm_order(x)
        k = p_part(o, p)
        if k:
            return K.power(x, o // p ** k)
    return None


def sylow_elements(G: GeneratedGroup, p: int, seed=DEFAULT_SEED,
                   cap: int = DEFAULT_ENUMERATION_CAP) -> tuple[list[tuple], frozenset]:
    """Generators and element set of one Sylow p-subgroup of G."""
    n = G.order()
    a = p_part(n, p)
    ident = tuple(range(G.degree))
    if a == 0:
        return [], frozenset([ident])
    target = p ** a
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)

    y = _seed_element(G, p, rng)
    if y is None:
        gens, elems = [], {ident}
    else:
        gens, elems = [y], set(_cyclic(y))
    if len(elems) == target:
        return gens, frozenset(elems)

    # Grow P by p-elements normalizing it; each such y gives <P, y> = P<y>,
    # again a p-group.  A proper p-subgroup of a Sylow subgroup Q always has
    # such an element in N_Q(P) \ P, so every full pass makes progress.
    candidates = G.element_tuples(cap)
    while len(elems) < target:
        grew = False
        for y in candidates:
            if y in elems:
                continue
            o = K.perm_order(y)
            if not _is_p_power(o, p):
                continue
            yinv = K.invert(y)
            if not all(K.conjugate(s, y, yinv) in elems for s in gens):
                continue
            powers = _cyclic(y)
            elems = {K.compose(x, yk) for yk in powers for x in elems}
            gens.append(y)
            grew = True
            if len(elems) == target:
                break
        if not grew:
            raise SylowInvariantError(f"Sylow {p}-ascent stalled at order {len(elems)}")
    return gens, frozenset(elems)


def sylow_subgroup(G: GeneratedGroup, p: int, seed=DEFAULT_SEED,
                   cap: int = DEFAULT_ENUMERATION_CAP) -> GeneratedGroup:
    gens, _ = sylow_elements(G, p, seed, cap)
    return GeneratedGroup(G.degree, gens)


def _check(report: SylowReport, n: int) -> SylowReport:
    p, a, v = report.p, report.a, report.v_p
    if v % p != 1 % p or (n // p ** a) % v or v * report.normalizer_order != n:
        raise SylowInvariantError(f"Sylow invariants broken: |G|={n}, {report.as_dict()}")
    return report


def count_sylow(G: GeneratedGroup, p: int, seed=DEFAULT_SEED,
                cap: int = DEFAULT_ENUMERATION_CAP,
                orbit_cap: int = DEFAULT_ORBIT_CAP) -> SylowReport:
    """v_p(G) as the conjugation-orbit size of one Sylow p-subgroup."""
    n = G.order()
    a = p_part(n, p)
    gens, elems = sylow_elements(G, p, seed, cap)
    P = GeneratedGroup(G.degree, gens)
    if a == 0:
        return SylowReport(p, 0, P, 1, n)
    conj = [(g, K.invert(g)) for g in G._gens]
    start = tuple(sorted(elems))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for key in frontier:
            for g, ginv in conj:
                c = K.conjugate_key(key, g, ginv)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
                    if len(seen) > orbit_cap:
                        raise CapExceededError("orbit cap", orbit_cap, len(seen))
        frontier = nxt
    v = len(seen)
    return _check(SylowReport(p, a, P, v, n // v), n)


def count_sylow_bruteforce(G: GeneratedGroup, p: int, seed=DEFAULT_SEED) -> int:
    """Distinct conjugates g^-1 P g over every g in G, enumerated by closure."""
    if G.order() > BRUTEFORCE_LIMIT:
        raise CapExceededError("brute-force order limit", BRUTEFORCE_LIMIT, G.order())
    _, elems = sylow_elements(G, p, seed)
    P = tuple(elems)
    keys = set()
    for g in bfs_elements(G):
        keys.add(K.conjugate_key(P, g, K.invert(g)))
    return len(keys)
