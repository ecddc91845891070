"""Integer helpers: trial-division factorization for group orders."""


def factorize(n: int) -> dict[int, int]:
    """Prime factorization ``{p: a}`` of a positive integer, primes ascending."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def p_part(n: int, p: int) -> int:
    """Exponent a with p^a dividing n exactly."""
    if n < 1:
        raise ValueError(f"p_part needs a positive integer, got {n}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    a = 0
    while n % p == 0:
        n //= p
        a += 1
    return a
