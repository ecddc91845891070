"""Derived series, solvability, nilpotency and normality tests."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import kernels as K
from .permcore import GeneratedGroup, Permutation, StabilizerChain


class NotInGroupError(ValueError):
    pass


@dataclass
class DerivedSeries:
    """G, G', G'', ... stopping at the trivial group or at the first repeated order.

    For a perfect group the last term repeats the one before it.
    """

    terms: list
    terminated_at_trivial: bool

    @property
    def orders(self) -> list[int]:
        return [t.order() for t in self.terms]

    @property
    def solvable(self) -> bool:
        return self.terminated_at_trivial


def _tuples(elems: Iterable) -> list[tuple]:
    return [e.images if isinstance(e, Permutation) else tuple(e) for e in elems]


def normal_closure(G: GeneratedGroup, S: Iterable) -> GeneratedGroup:
    """Smallest subgroup containing S and normalized by every generator of G."""
    seeds = _tuples(S)
    for s in seeds:
        if not G.contains(s):
            raise NotInGroupError(f"{Permutation._raw(s)} is not an element of the group")
    conj_by = [(g, K.invert(g)) for g in G._gens]
    chain = StabilizerChain(G.degree)
    gens = []
    queue = list(reversed(seeds))
    while queue:
        x = queue.pop()
        if chain.extend(x):
            gens.append(x)
            queue.extend(K.conjugate(x, g, ginv) for g, ginv in conj_by)
    return GeneratedGroup(G.degree, gens, chain=chain)


def commutator(a: tuple, b: tuple) -> tuple:
    """[a, b] = a^-1 b^-1 a b."""
    return K.compose(K.compose(K.invert(a), K.invert(b)), K.compose(a, b))


def derived_subgroup(G: GeneratedGroup) -> GeneratedGroup:
    gens = G._gens
    comms = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(G, comms)


def derived_series(G: GeneratedGroup) -> DerivedSeries:
    terms = [G]
    while terms[-1].order() > 1:
        D = derived_subgroup(terms[-1])
        terms.append(D)
        if D.order() == terms[-2].order():
            return DerivedSeries(terms, False)
    return DerivedSeries(terms, True)


def is_solvable(G: GeneratedGroup) -> bool:
    return derived_series(G).solvable


def is_abelian(G: GeneratedGroup) -> bool:
    gens = G._gens
    return all(K.compose(a, b) == K.compose(b, a)
               for i, a in enumerate(gens) for b in gens[i + 1:])


def is_normal(G: GeneratedGroup, H: GeneratedGroup) -> bool:
    for h in H._gens:
        if not G.contains(h):
            raise NotInGroupError("H is not a subgroup of G")
    for g in G._gens:
        ginv = K.invert(g)
        for h in H._gens:
            if not H.contains(K.conjugate(h, g, ginv)):
                return False
    return True


def is_nilpotent(G: GeneratedGroup, **kw) -> bool:
    """Nilpotent iff every Sylow subgroup is normal, i.e. v_p(G) = 1 for all p."""
    from .numtheory import factorize
    from .sylow import count_sylow

    return all(count_sylow(G, p, **kw).v_p == 1 for p in factorize(G.order()))
