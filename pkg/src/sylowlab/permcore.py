"""Permutations, generated groups and the Schreier-Sims stabilizer chain.

Convention: products act left to right, so ``a * b`` maps point ``i`` to
``b(a(i))``.  Points are 0-based internally and 1-based in every text form
(cycle notation, group files, CLI output).
"""
from __future__ import annotations

import random
import re
import threading
from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Iterator, Optional, Sequence

from . import kernels as K

DEFAULT_ENUMERATION_CAP = 2 ** 20


class ParseError(ValueError):
    """Base class for cycle-notation and group-file errors."""


class CycleSyntaxError(ParseError):
    pass


class RepeatedPointError(ParseError):
    pass


class PointRangeError(ParseError):
    pass


class GroupFileError(ParseError):
    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where += f"{path}"
        if line is not None:
            where += f":{line}"
        super().__init__(f"{where}: {message}" if where else message)


class DegreeMismatchError(ValueError):
    pass


class CapExceededError(RuntimeError):
    """A configured size cap was exceeded; names the cap and the offending size."""

    def __init__(self, cap_name, cap, size):
        self.cap_name = cap_name
        self.cap = cap
        self.size = size
        super().__init__(f"{cap_name} exceeded: size {size} > cap {cap}")


class Permutation:
    """A bijection of ``{0..degree-1}`` stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images

    @classmethod
    def _raw(cls, images: tuple) -> "Permutation":
        obj = cls.__new__(cls)
        obj.images = images
        return obj

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_one_based(cls, images: Iterable[int]) -> "Permutation":
        return cls(x - 1 for x in images)

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Permutation":
        return parse_cycles(text, degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def one_based(self) -> list:
        return [x + 1 for x in self.images]

    def is_identity(self) -> bool:
        return K.is_identity(self.images)

    def order(self) -> int:
        return K.perm_order(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def __pow__(self, k: int) -> "Permutation":
        return Permutation._raw(K.power(self.images, k))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"

    def __str__(self):
        return format_cycles(self)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply ``a`` then ``b``."""
    if a.degree != b.degree:
        raise DegreeMismatchError(f"degrees differ: {a.degree} vs {b.degree}")
    return Permutation._raw(K.compose(a.images, b.images))


def inverse(a: Permutation) -> Permutation:
    return Permutation._raw(K.invert(a.images))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation with 1-based points, e.g. ``"(1 2 3)(4 5)"``."""
    if degree < 1:
        raise PointRangeError(f"degree must be positive, got {degree}")
    s = text.strip()
    if not s:
        raise CycleSyntaxError("empty cycle text")
    images = list(range(degree))
    seen = set()
    pos = 0
    for m in _CYCLE_RE.finditer(s):
        if s[pos:m.start()].strip():
            raise CycleSyntaxError(f"unexpected text {s[pos:m.start()]!r} in {text!r}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        points = []
        for tok in body:
            if not tok.isdigit():
                raise CycleSyntaxError(f"bad point {tok!r} in {text!r}")
            x = int(tok)
            if not 1 <= x <= degree:
                raise PointRangeError(f"point {x} out of range 1..{degree}")
            if x in seen:
                raise RepeatedPointError(f"point {x} repeated in {text!r}")
            seen.add(x)
            points.append(x - 1)
        for i, x in enumerate(points):
            images[x] = points[(i + 1) % len(points)]
    if s[pos:].strip() or pos == 0:
        raise CycleSyntaxError(f"malformed cycle notation {text!r}")
    return Permutation._raw(tuple(images))


def format_cycles(a: Permutation) -> str:
    """Canonical cycle notation: cycles led by their least point, fixed points omitted."""
    images = a.images
    seen = [False] * len(images)
    parts = []
    for i in range(len(images)):
        if seen[i] or images[i] == i:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(str(j + 1))
            j = images[j]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) or "()"


@dataclass
class Level:
    """One level of a stabilizer chain.

    ``trans[b]`` carries ``point`` to ``b``; ``inv[b]`` is its inverse.
    Elements are raw image tuples.
    """

    point: int
    gens: list = field(default_factory=list)
    orbit: list = field(default_factory=list)
    trans: dict = field(default_factory=dict)
    inv: dict = field(default_factory=dict)
    checked: set = field(default_factory=set, repr=False)


class StabilizerChain:
    """Base and strong generating set built by deterministic Schreier-Sims.

    The chain only grows, through :meth:`extend`; once attached to a
    :class:`GeneratedGroup` it is treated as frozen.
    """

    def __init__(self, degree: int):
        self.degree = degree
        self.levels: list[Level] = []
        self._strong: list[tuple] = []
        self._base: list[int] = []
        self._invs: list[dict] = []

    @property
    def base(self) -> list[int]:
        return list(self._base)

    @property
    def strong_generators(self) -> list[Permutation]:
        return [Permutation._raw(g) for g in self._strong]

    @property
    def order(self) -> int:
        n = 1
        for lvl in self.levels:
            n *= len(lvl.orbit)
        return n

    def sift(self, g: tuple) -> tuple[tuple, int]:
        return K.sift(g, self._base, self._invs, 0)

    def contains(self, g: tuple) -> bool:
        res, j = K.sift(g, self._base, self._invs, 0)
        return j == len(self._base) and K.is_identity(res)

    def extend(self, g: tuple) -> bool:
        """Add ``g`` to the group; returns False when it was already a member."""
        res, j = K.sift(g, self._base, self._invs, 0)
        if K.is_identity(res):
            return False
        if j == len(self._base):
            self._new_level(K.first_moved(res))
        for lvl in range(j + 1):
            self._add_gen(lvl, res)
        self._strong.append(res)
        self._complete(j)
        return True

    def _new_level(self, point: int) -> None:
        ident = tuple(range(self.degree))
        lvl = Level(point=point, orbit=[point], trans={point: ident}, inv={point: ident})
        self.levels.append(lvl)
        self._base.append(point)
        self._invs.append(lvl.inv)

    def _add_gen(self, i: int, g: tuple) -> None:
        lvl = self.levels[i]
        lvl.gens.append(g)
        orbit, trans, inv = lvl.orbit, lvl.trans, lvl.inv
        compose = K.compose
        n_old = len(orbit)
        for idx in range(n_old):
            b = orbit[idx]
            c = g[b]
            if c not in trans:
                u = compose(trans[b], g)
                trans[c] = u
                inv[c] = K.invert(u)
                orbit.append(c)
        idx = n_old
        while idx < len(orbit):
            b = orbit[idx]
            for s in lvl.gens:
                c = s[b]
                if c not in trans:
                    u = compose(trans[b], s)
                    trans[c] = u
                    inv[c] = K.invert(u)
                    orbit.append(c)
            idx += 1

    def _complete(self, i: int) -> None:
        compose, sift, is_identity = K.compose, K.sift, K.is_identity
        while i >= 0:
            lvl = self.levels[i]
            restart = None
            for b in list(lvl.orbit):
                u = lvl.trans[b]
                for si, s in enumerate(lvl.gens):
                    if (b, si) in lvl.checked:
                        continue
                    h = compose(compose(u, s), lvl.inv[s[b]])
                    res, j = sift(h, self._base, self._invs, i + 1)
                    if is_identity(res):
                        lvl.checked.add((b, si))
                        continue
                    if j == len(self._base):
                        self._new_level(K.first_moved(res))
                    for lv in range(i + 1, j + 1):
                        self._add_gen(lv, res)
                    self._strong.append(res)
                    restart = j
                    break
                if restart is not None:
                    break
            i = i - 1 if restart is None else restart


def build_chain(G: "GeneratedGroup") -> StabilizerChain:
    chain = StabilizerChain(G.degree)
    for g in G._gens:
        chain.extend(g)
    return chain


class GeneratedGroup:
    """A permutation group given by generators, with a lazily built chain."""

    def __init__(self, degree: int, generators: Sequence = (),
                 chain: Optional[StabilizerChain] = None):
        if degree < 1:
            raise ValueError(f"degree must be positive, got {degree}")
        gens = []
        for g in generators:
            images = g.images if isinstance(g, Permutation) else tuple(g)
            if len(images) != degree:
                raise DegreeMismatchError(
                    f"generator of degree {len(images)} in group of degree {degree}")
            if not K.is_identity(images) and images not in gens:
                gens.append(images)
        self.degree = degree
        self._gens: list[tuple] = gens
        self._chain = chain
        self._lock = threading.Lock()

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[str]) -> "GeneratedGroup":
        return cls(degree, [parse_cycles(c, degree) for c in cycles])

    @classmethod
    def trivial(cls, degree: int) -> "GeneratedGroup":
        return cls(degree, [])

    @property
    def generators(self) -> list[Permutation]:
        return [Permutation._raw(g) for g in self._gens]

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    self._chain = build_chain(self)
        return self._chain

    def order(self) -> int:
        return self.chain.order

    def contains(self, g) -> bool:
        images = g.images if isinstance(g, Permutation) else tuple(g)
        if len(images) != self.degree:
            raise DegreeMismatchError(
                f"element of degree {len(images)} vs group of degree {self.degree}")
        return self.chain.contains(images)

    __contains__ = contains

    def element_tuples(self, cap: int = DEFAULT_ENUMERATION_CAP) -> list[tuple]:
        size = self.order()
        if size > cap:
            raise CapExceededError("enumeration cap", cap, size)
        return K.product_enumerate(
            [list(lvl.trans.values()) for lvl in self.chain.levels], self.degree)

    def elements(self, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Permutation]:
        for t in self.element_tuples(cap):
            yield Permutation._raw(t)

    def random_tuple(self, rng: random.Random) -> tuple:
        g = tuple(range(self.degree))
        for lvl in reversed(self.chain.levels):
            g = K.compose(g, lvl.trans[rng.choice(lvl.orbit)])
        return g

    def random_element(self, rng: random.Random) -> Permutation:
        """Uniform random element: one transversal element per chain level."""
        return Permutation._raw(self.random_tuple(rng))

    def orbit(self, point: int) -> tuple[list[int], dict]:
        return orbit(self, point)

    def is_trivial(self) -> bool:
        return not self._gens

    def __repr__(self):
        gens = ", ".join(format_cycles(g) for g in self.generators) or "()"
        return f"GeneratedGroup(degree={self.degree}, generators=[{gens}])"


def orbit(G: GeneratedGroup, point: int) -> tuple[list[int], dict[int, Permutation]]:
    """Orbit of a 0-based point and a transversal ``{y: element carrying point to y}``."""
    if not 0 <= point < G.degree:
        raise PointRangeError(f"point {point + 1} out of range 1..{G.degree}")
    pts, trans = K.orbit_transversal(G._gens, point, G.degree)
    return pts, {y: Permutation._raw(u) for y, u in trans.items()}


def bfs_elements(G: GeneratedGroup, cap: int = DEFAULT_ENUMERATION_CAP) -> list[tuple]:
    """All elements by closure under the generators; independent of the chain."""
    out = K.bfs_closure(G._gens, G.degree, cap)
    if out is None:
        raise CapExceededError("enumeration cap", cap, f">{cap}")
    return out


def order(G: GeneratedGroup) -> int:
    return G.order()


def contains(G: GeneratedGroup, g: Permutation) -> bool:
    return G.contains(g)


def elements(G: GeneratedGroup, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Permutation]:
    return G.elements(cap)


def random_element(G: GeneratedGroup, rng: random.Random) -> Permutation:
    return G.random_element(rng)


def divides_factorial(G: GeneratedGroup) -> bool:
    return factorial(G.degree) % G.order() == 0


# -- group file format -------------------------------------------------------

def parse_group_text(text: str, path=None) -> GeneratedGroup:
    """Parse the ``degree N`` + one-generator-per-line format."""
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree" or not parts[1].isdigit():
                raise GroupFileError("expected 'degree N' header", path, lineno)
            degree = int(parts[1])
            if degree < 1:
                raise GroupFileError("degree must be positive", path, lineno)
            continue
        try:
            gens.append(parse_cycles(line, degree))
        except ParseError as exc:
            raise GroupFileError(str(exc), path, lineno) from None
    if degree is None:
        raise GroupFileError("missing 'degree N' header", path, None)
    return GeneratedGroup(degree, gens)


def load_group(path) -> GeneratedGroup:
    with open(path, encoding="utf-8") as fh:
        return parse_group_text(fh.read(), path=str(path))


def format_group(G: GeneratedGroup, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"degree {G.degree}")
    gens = G.generators or [Permutation.identity(G.degree)]
    lines.extend(format_cycles(g) for g in gens)
    return "\n".join(lines) + "\n"
