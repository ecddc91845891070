"""Concrete groups as permutation groups, and closed-form order/count formulas.

Dihedral groups follow the order convention: ``dihedral(m)`` has order m.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import factorial, gcd

from .ffield import (FieldSpec, all_elements, field as gf, frobenius_power,
                     multiplicative_generator)
from .numtheory import factorize, is_prime
from .permcore import GeneratedGroup, Permutation, format_group, parse_cycles

FAMILIES = ("Alternating", "Symmetric", "PSL2", "PSL3", "Suzuki", "Cyclic",
            "Dihedral", "DirectProduct", "SL2", "Affine")


class CatalogError(ValueError):
    pass


@dataclass
class CatalogEntry:
    family: str
    parameters: dict
    group: GeneratedGroup
    expected_order: int
    name: str

    def verify(self) -> bool:
        return self.group.order() == self.expected_order

    def export(self, path=None) -> str:
        text = format_group(self.group, comments=[
            f"{self.name}: family {self.family}, parameters {self.parameters}",
            f"expected order {self.expected_order}",
        ])
        if path is not None:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
        return text


def _cycle(points) -> str:
    return "(" + " ".join(str(x) for x in points) + ")"


def symmetric(n: int) -> CatalogEntry:
    if not 2 <= n <= 12:
        raise CatalogError(f"symmetric degree must be in 2..12, got {n}")
    G = GeneratedGroup.from_cycles(n, ["(1 2)", _cycle(range(1, n + 1))])
    return CatalogEntry("Symmetric", {"n": n}, G, factorial(n), f"S{n}")


def alternating(n: int) -> CatalogEntry:
    if not 2 <= n <= 12:
        raise CatalogError(f"alternating degree must be in 2..12, got {n}")
    if n == 2:
        G = GeneratedGroup.trivial(2)
    else:
        long_cycle = range(1, n + 1) if n % 2 else range(2, n + 1)
        G = GeneratedGroup.from_cycles(n, ["(1 2 3)", _cycle(long_cycle)])
    return CatalogEntry("Alternating", {"n": n}, G, factorial(n) // 2, f"A{n}")


def cyclic(n: int) -> CatalogEntry:
    if n < 1:
        raise CatalogError(f"cyclic order must be positive, got {n}")
    G = GeneratedGroup.from_cycles(n, [_cycle(range(1, n + 1))] if n > 1 else [])
    return CatalogEntry("Cyclic", {"n": n}, G, n, f"C{n}")


def dihedral(m: int) -> CatalogEntry:
    """Dihedral group of ORDER m, acting on m/2 points (m = 2, 4 use 2 and 4 points)."""
    if m < 2 or m % 2:
        raise CatalogError(f"dihedral order must be even and >= 2, got {m}")
    k = m // 2
    if k == 1:
        G = GeneratedGroup.from_cycles(2, ["(1 2)"])
    elif k == 2:
        G = GeneratedGroup.from_cycles(4, ["(1 2)(3 4)", "(1 3)(2 4)"])
    else:
        refl = "".join(_cycle((i, k + 2 - i)) for i in range(2, (k + 1) // 2 + 1) if i != k + 2 - i)
        G = GeneratedGroup.from_cycles(k, [_cycle(range(1, k + 1)), refl or "()"])
    return CatalogEntry("Dihedral", {"m": m}, G, m, f"D{m}")


def direct_product(entries: list) -> CatalogEntry:
    if not entries:
        raise CatalogError("direct product needs at least one factor")
    degree = sum(e.group.degree for e in entries)
    gens = []
    offset = 0
    for e in entries:
        d = e.group.degree
        for g in e.group._gens:
            images = list(range(degree))
            for i, x in enumerate(g):
                images[offset + i] = offset + x
            gens.append(tuple(images))
        offset += d
    expected = 1
    for e in entries:
        expected *= e.expected_order
    name = "x".join(e.name for e in entries)
    return CatalogEntry("DirectProduct", {"factors": [e.name for e in entries]},
                        GeneratedGroup(degree, gens), expected, name)


def affine(p: int, k: int) -> CatalogEntry:
    """x -> a x + b over GF(p) with a in the order-k subgroup of GF(p)*; order p*k."""
    if not is_prime(p) or k < 1 or (p - 1) % k:
        raise CatalogError(f"affine group needs prime p and k | p-1, got p={p}, k={k}")
    F = gf(p)
    lam = multiplicative_generator(F) ** ((p - 1) // k)
    shift = tuple((x + 1) % p for x in range(p))
    scale = tuple((lam * F.element(x)).to_int() for x in range(p))
    return CatalogEntry("Affine", {"p": p, "k": k}, GeneratedGroup(p, [shift, scale]),
                        p * k, f"AGL1({p})_{k}" if k != p - 1 else f"AGL1({p})")


def _points_index(points):
    return {pt: i for i, pt in enumerate(points)}


def _q_check(q: int, lo: int, hi: int) -> FieldSpec:
    f = factorize(q) if q >= 2 else {}
    if len(f) != 1 or not lo <= q <= hi:
        raise CatalogError(f"q must be a prime power in {lo}..{hi}, got {q}")
    try:
        return gf(q)
    except ValueError as exc:
        raise CatalogError(str(exc)) from None


def psl2_order(q: int) -> int:
    return q * (q * q - 1) // gcd(2, q - 1)


def psl2(q: int) -> CatalogEntry:
    """PSL(2,q) on the q+1 points of the projective line.

    Point ``x.to_int()`` is the affine point [x:1]; point ``q`` is [1:0].
    Generators: x -> x+1, x -> mu x (mu = lambda^2 for odd q, lambda for even q),
    and x -> -1/x.
    """
    F = _q_check(q, 4, 32)
    inf = q
    lam = multiplicative_generator(F)
    mu = lam * lam if q % 2 else lam
    one = F.one()
    els = list(all_elements(F))
    shift = tuple((x + one).to_int() for x in els) + (inf,)
    scale = tuple((mu * x).to_int() for x in els) + (inf,)
    weyl = tuple(inf if x.is_zero() else (-(x.inverse())).to_int() for x in els) + (0,)
    G = GeneratedGroup(q + 1, [shift, scale, weyl])
    return CatalogEntry("PSL2", {"q": q}, G, psl2_order(q), f"PSL(2,{q})")


def psl3_3() -> CatalogEntry:
    """PSL(3,3) = SL(3,3) on the 13 points of the projective plane over GF(3).

    Row vectors, normalized so the first nonzero coordinate is 1, act by v -> v M.
    """
    p = 3
    points = [v for v in product(range(p), repeat=3) if any(v) and v[next(i for i in range(3) if v[i])] == 1]
    index = _points_index(points)

    def normalize(v):
        lead = next(c for c in v if c)
        inv = pow(lead, -1, p)
        return tuple(c * inv % p for c in v)

    def perm(M):
        return tuple(index[normalize(tuple(sum(v[i] * M[i][j] for i in range(3)) % p for j in range(3)))]
                     for v in points)

    transvection = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    shift = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    G = GeneratedGroup(13, [perm(transvection), perm(shift)])
    return CatalogEntry("PSL3", {"q": 3}, G, 5616, "PSL(3,3)")


def sl2_vectors(q: int) -> CatalogEntry:
    """SL(2,q), q prime, acting on the q^2 - 1 nonzero vectors of GF(q)^2."""
    if not is_prime(q) or q > 7:
        raise CatalogError(f"sl2 supports primes q <= 7, got {q}")
    points = [v for v in product(range(q), repeat=2) if any(v)]
    index = _points_index(points)

    def perm(M):
        return tuple(index[tuple(sum(v[i] * M[i][j] for i in range(2)) % q for j in range(2))]
                     for v in points)

    G = GeneratedGroup(len(points), [perm([[1, 1], [0, 1]]), perm([[0, 1], [q - 1, 0]])])
    return CatalogEntry("SL2", {"q": q}, G, q * (q * q - 1), f"SL(2,{q})")


def suzuki_order(q: int) -> int:
    return (q - 1) * q * q * (q * q + 1)


def suzuki_8() -> CatalogEntry:
    """Sz(8) on its ovoid of 65 points.

    Point 0 is infinity, the column vector (0,0,0,1); point 1 + 8a + b is
    (1, a, b, a^2 t(a) + ab + t(b)) with t(x) = x^4 (so t(t(x)) = x^2) and
    a, b read as field encodings.  Generators are matrices acting on column
    vectors: two unipotents S(a, 0), the torus diag(1, l, l t(l), l^2 t(l))
    and the antidiagonal involution swapping infinity with (0, 0).
    """
    q, m = 8, 1
    F = gf(q)
    z, o = F.zero(), F.one()

    def th(a):
        return frobenius_power(a, m + 1)

    def f(a, b):
        return a * a * th(a) + a * b + th(b)

    els = list(all_elements(F))
    points = [(z, z, z, o)] + [(o, a, b, f(a, b)) for a in els for b in els]
    index = _points_index(points)

    def normalize(v):
        lead = next(c for c in v if not c.is_zero()).inverse()
        return tuple(c * lead for c in v)

    def perm(M):
        out = []
        for v in points:
            w = tuple(sum((M[i][j] * v[j] for j in range(4)), z) for i in range(4))
            out.append(index[normalize(w)])
        return tuple(out)

    def unipotent(a, b):
        return [[o, z, z, z], [a, o, z, z], [b, th(a), o, z],
                [f(a, b), a * th(a) + b, a, o]]

    lam = multiplicative_generator(F)
    torus = [[o, z, z, z], [z, lam, z, z], [z, z, lam * th(lam), z],
             [z, z, z, lam * lam * th(lam)]]
    swap = [[z, z, z, o], [z, z, o, z], [z, o, z, z], [o, z, z, z]]
    x = F.gen()
    gens = [perm(unipotent(o, z)), perm(unipotent(x, z)), perm(torus), perm(swap)]
    return CatalogEntry("Suzuki", {"q": q, "m": m, "r": 2 ** (m + 1)},
                        GeneratedGroup(65, gens), suzuki_order(q), "Sz(8)")


# -- closed-form formulas ----------------------------------------------------

def _require_odd_prime(p):
    if not (is_prime(p) and p % 2):
        raise CatalogError(f"expected an odd prime, got {p}")


def formula_v2_psl2_even(p: int) -> int:
    """Sylow 2-subgroup count of L2(2^p): 2^p + 1."""
    _require_odd_prime(p)
    return 2 ** p + 1


@dataclass
class CandidatePair:
    candidates: tuple
    realized: int | None = None
    note: str = ""

    @property
    def realized_matches(self) -> bool | None:
        return None if self.realized is None else self.realized in self.candidates


def formula_v2_psl2_odd(q: int) -> CandidatePair:
    """The pair {q^2 - 1, (q^3 - q)/24} offered for v2 of L2(q), q odd."""
    f = factorize(q) if q >= 2 else {}
    if q < 5 or q % 2 == 0 or len(f) != 1:
        raise CatalogError(f"expected an odd prime power >= 5, got {q}")
    return CandidatePair((q * q - 1, (q ** 3 - q) // 24))


def v2_psl2_odd_exact(q: int) -> int:
    """True v2 of PSL(2,q), q odd: Klein-four Sylow with A4 normalizer when
    q = +-3 mod 8, otherwise a self-normalizing dihedral Sylow of order (q^2-1)_2 / 2."""
    if q % 8 in (3, 5):
        return psl2_order(q) // 12
    two_part = 2 ** factorize(q * q - 1)[2]
    return psl2_order(q) // (two_part // 2)


def formula_v3_psl2_3p(p: int) -> int:
    """v3 of L2(3^p): q + 1 with q = 3^p."""
    _require_odd_prime(p)
    return 3 ** p + 1


def formula_vr_psl2_even(q: int, r: int) -> CandidatePair:
    """Pair {q(q+1)/2, q(q-1)/2} for an odd prime r | q^2 - 1 in L2(q), q even.

    The realized branch is |G| / 2(q-1) = q(q+1)/2 when r | q-1, else q(q-1)/2.
    """
    if q < 4 or q & (q - 1):
        raise CatalogError(f"expected a power of 2 >= 4, got {q}")
    if not (is_prime(r) and r % 2 and (q * q - 1) % r == 0):
        raise CatalogError(f"{r} is not an odd prime divisor of q^2 - 1 = {q * q - 1}")
    plus, minus = q * (q + 1) // 2, q * (q - 1) // 2
    return CandidatePair((plus, minus), plus if (q - 1) % r == 0 else minus)


def formula_vr_psl2_odd(q: int, r: int) -> CandidatePair:
    """Same pair for L2(q), q odd, r an odd prime dividing q^2 - 1 (so r is not the characteristic)."""
    f = factorize(q) if q >= 2 else {}
    if q < 5 or q % 2 == 0 or len(f) != 1:
        raise CatalogError(f"expected an odd prime power >= 5, got {q}")
    if not (is_prime(r) and r % 2 and (q * q - 1) % r == 0):
        raise CatalogError(f"{r} is not an odd prime divisor of q^2 - 1 = {q * q - 1}")
    plus, minus = q * (q + 1) // 2, q * (q - 1) // 2
    return CandidatePair((plus, minus), plus if (q - 1) % r == 0 else minus)


@dataclass
class SuzukiFormulas:
    q: int
    m: int
    r: int
    order: int
    v2: int
    T_order: int
    v5: int
    sylow5_torus_order: int
    v5_exact: int

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def formula_suzuki(q: int) -> SuzukiFormulas:
    """Order and Sylow counts of Sz(q), q = 2^(2m+1), r = 2^(m+1).

    ``v5`` is |G| / 4(q - r + 1).  The cyclic torus of order q - r + 1 holds the
    Sylow 5-subgroup only when 5 divides q - r + 1; otherwise 5 divides
    q + r + 1, and ``v5_exact`` uses that torus instead.
    """
    e = q.bit_length() - 1
    if q < 8 or q != 2 ** e or e % 2 == 0:
        raise CatalogError(f"Suzuki q must be 2^(2m+1) >= 8, got {q}")
    m = (e - 1) // 2
    r = 2 ** (m + 1)
    order = suzuki_order(q)
    t_order = 4 * (q - r + 1)
    torus = q - r + 1 if (q - r + 1) % 5 == 0 else q + r + 1
    return SuzukiFormulas(q=q, m=m, r=r, order=order, v2=q * q + 1, T_order=t_order,
                          v5=order // t_order, sylow5_torus_order=torus,
                          v5_exact=order // (4 * torus))


@dataclass
class FamilyDescriptor:
    key: str
    name: str
    constraint: str
    parameters: list = field(default_factory=list)

    def admits(self, n: int) -> bool:
        return _ADMITS[self.key](n)


_ADMITS = {
    "A5": lambda n: n == 5,
    "L2(2^p)": lambda p: is_prime(p) and p % 2 == 1,
    "L2(3^p)": lambda p: is_prime(p) and p % 2 == 1,
    "L2(p)": lambda p: is_prime(p) and p > 5 and p % 5 == 2,
    "L3(3)": lambda n: n == 3,
    "Sz(q)": lambda q: q >= 8 and q & (q - 1) == 0 and (q.bit_length() - 1) % 2 == 1,
}


def minimal_simple_list() -> list[FamilyDescriptor]:
    """Minimal simple groups, as enumerated with their parameter constraints."""
    return [
        FamilyDescriptor("A5", "alternating group of degree 5", "n = 5", [5]),
        FamilyDescriptor("L2(2^p)", "PSL(2, 2^p)", "p an odd prime", [3, 5]),
        FamilyDescriptor("L2(3^p)", "PSL(2, 3^p)", "p an odd prime", [3, 5]),
        FamilyDescriptor("L2(p)", "PSL(2, p)", "p > 5 prime, p = 2 (mod 5)", [7, 17]),
        FamilyDescriptor("L3(3)", "PSL(3, 3)", "q = 3", [3]),
        FamilyDescriptor("Sz(q)", "Suzuki group 2B2(q)", "q = 2^(2m+1) >= 8", [8, 32, 128]),
    ]


# family name + parameters -> entry, for the command line
def build(family: str, **params) -> CatalogEntry:
    fam = family.lower()
    try:
        if fam in ("alternating", "a"):
            return alternating(int(params["n"]))
        if fam in ("symmetric", "s"):
            return symmetric(int(params["n"]))
        if fam == "cyclic":
            return cyclic(int(params["n"]))
        if fam == "dihedral":
            return dihedral(int(params["m"]))
        if fam == "psl2":
            return psl2(int(params["q"]))
        if fam == "psl3":
            if int(params.get("q", 3)) != 3:
                raise CatalogError("psl3 supports q = 3 only")
            return psl3_3()
        if fam == "suzuki":
            if int(params.get("q", 8)) != 8:
                raise CatalogError("Suzuki permutation groups are built for q = 8 only")
            return suzuki_8()
        if fam == "sl2":
            return sl2_vectors(int(params["q"]))
        if fam == "affine":
            return affine(int(params["p"]), int(params["k"]))
    except KeyError as exc:
        raise CatalogError(f"family {family} needs parameter {exc.args[0]}") from None
    raise CatalogError(f"unknown family {family!r}")


def formula_row(family: str, **params) -> dict:
    """Closed-form order and Sylow counts for one catalog family member."""
    fam = family.lower()
    if fam == "suzuki":
        return formula_suzuki(int(params.get("q", 8))).as_dict()
    if fam == "psl2":
        q = int(params["q"])
        f = factorize(q) if q >= 2 else {}
        if len(f) != 1 or q < 4:
            raise CatalogError(f"q must be a prime power >= 4, got {q}")
        (char, _), = f.items()
        row = {"q": q, "degree": q + 1, "order": psl2_order(q), "v": {char: q + 1}}
        odd = sorted(r for r in factorize(q * q - 1) if r != 2)
        if q % 2 == 0:
            row["v"][2] = q + 1
            for r in odd:
                row["v"][r] = formula_vr_psl2_even(q, r).realized
        else:
            row["v2_candidates"] = list(formula_v2_psl2_odd(q).candidates)
            row["v"][2] = v2_psl2_odd_exact(q)
            for r in odd:
                row["v"][r] = formula_vr_psl2_odd(q, r).realized
        row["v"] = {str(p): v for p, v in sorted(row["v"].items())}
        return row
    entry = build(family, **params)
    return {"name": entry.name, "degree": entry.group.degree, "order": entry.expected_order}
