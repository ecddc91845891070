"""Arithmetic in GF(p^e) with a fixed table of irreducible moduli.

Elements are coefficient vectors (lowest degree first) reduced modulo the
field's modulus.  Every table entry is checked for irreducibility when
first used; a failing entry is a configuration error, not a user error.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from .numtheory import factorize


class FieldError(ValueError):
    pass


class FieldConfigError(RuntimeError):
    """A built-in modulus failed its irreducibility self-check."""


# q -> modulus coefficients, lowest degree first, monic
MODULI = {
    4: (1, 1, 1),          # x^2 + x + 1
    8: (1, 1, 0, 1),       # x^3 + x + 1
    16: (1, 1, 0, 0, 1),   # x^4 + x + 1
    32: (1, 0, 1, 0, 0, 1),  # x^5 + x^2 + 1
    9: (1, 0, 1),          # x^2 + 1
    27: (1, 2, 0, 1),      # x^3 + 2x + 1
    25: (2, 4, 1),         # x^2 + 4x + 2
    49: (3, 1, 1),         # x^2 + x + 3
}


def _polymod(a: list, m: tuple, p: int) -> list:
    a = list(a)
    dm = len(m) - 1
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k] % p
        if c:
            for j in range(dm + 1):
                a[k - dm + j] = (a[k - dm + j] - c * m[j]) % p
    out = [x % p for x in a[:dm]]
    return out + [0] * (dm - len(out))


def is_irreducible(modulus: tuple, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..e//2."""
    e = len(modulus) - 1
    for d in range(1, e // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = tuple(low) + (1,)
            if not any(_polymod(modulus, divisor, p)):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    p: int
    e: int
    modulus: tuple

    @property
    def q(self) -> int:
        return self.p ** self.e

    def __post_init__(self):
        if len(self.modulus) != self.e + 1 or self.modulus[-1] != 1:
            raise FieldConfigError(f"modulus {self.modulus} is not monic of degree {self.e}")
        if not is_irreducible(self.modulus, self.p):
            raise FieldConfigError(f"modulus {self.modulus} reducible over GF({self.p})")

    def element(self, value) -> "FieldElement":
        """Element from an int (base-p digits, lowest first) or coefficient vector."""
        if isinstance(value, int):
            if not 0 <= value < self.q:
                # integers outside the digit range are read as prime-field scalars
                value = value % self.p
            coeffs = []
            for _ in range(self.e):
                coeffs.append(value % self.p)
                value //= self.p
            return FieldElement(self, tuple(coeffs))
        coeffs = [c % self.p for c in value]
        if len(coeffs) > self.e:
            coeffs = _polymod(coeffs, self.modulus, self.p)
        return FieldElement(self, tuple(coeffs) + (0,) * (self.e - len(coeffs)))

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.e)

    def one(self) -> "FieldElement":
        return self.element(1)

    def gen(self) -> "FieldElement":
        """The class of x in a proper extension field."""
        if self.e == 1:
            raise FieldError("prime field has no polynomial generator x")
        return FieldElement(self, (0, 1) + (0,) * (self.e - 2))

    def __repr__(self):
        return f"GF({self.q})"


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    coeffs: tuple

    def _check(self, other):
        if isinstance(other, int):
            return self.spec.element(other % self.spec.p)
        if other.spec != self.spec:
            raise FieldError(f"mixed fields {self.spec} and {other.spec}")
        return other

    def __add__(self, other):
        other = self._check(other)
        p = self.spec.p
        return FieldElement(self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.spec.p
        return FieldElement(self.spec, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        p, e = self.spec.p, self.spec.e
        prod = [0] * (2 * e - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return FieldElement(self.spec, tuple(_polymod(prod, self.spec.modulus, p)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.spec.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in " + repr(self.spec))
        return self ** (self.spec.q - 2)

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_int(self) -> int:
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.spec.p + c
        return n

    def __repr__(self):
        if self.spec.e == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(mono if c == 1 and i else f"{c}{'' if i == 0 else '*'}{mono if i else ''}")
        return " + ".join(reversed(terms)) or "0"


def _prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    f = factorize(q)
    if len(f) != 1:
        raise FieldError(f"{q} is not a prime power")
    (p, e), = f.items()
    return p, e


@lru_cache(maxsize=None)
def field(q: int) -> FieldSpec:
    p, e = _prime_power(q)
    if e == 1:
        return FieldSpec(p, 1, (0, 1))
    if q not in MODULI:
        raise FieldError(f"GF({q}) has no built-in modulus; supported: {sorted(MODULI)}")
    return FieldSpec(p, e, MODULI[q])


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def frobenius_power(a: FieldElement, k: int) -> FieldElement:
    """a^(p^k)."""
    return a ** (a.spec.p ** k)


def all_elements(spec: FieldSpec) -> Iterator[FieldElement]:
    """All q elements in integer-encoding order, zero first."""
    for n in range(spec.q):
        yield spec.element(n)


def multiplicative_generator(spec: FieldSpec) -> FieldElement:
    """Least element (in encoding order) of multiplicative order q-1."""
    q = spec.q
    primes = list(factorize(q - 1)) if q > 2 else []
    for a in all_elements(spec):
        if a.is_zero():
            continue
        if all(a ** ((q - 1) // r) != spec.one() for r in primes):
            return a
    raise FieldConfigError(f"no multiplicative generator in {spec}")


def check_table() -> None:
    """Irreducibility self-check of every built-in modulus."""
    for q in MODULI:
        field(q)
