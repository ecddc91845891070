"""Pure-Python permutation kernels.

Permutations are plain tuples of 0-based images; ``a[i]`` is the image of
point ``i``.  Products act left to right: ``compose(a, b)`` applies ``a``
first, then ``b``.  The compiled module ``_ckernels`` exposes the same
functions with the same semantics.
"""
from math import gcd

BACKEND = "python"


def identity(n):
    return tuple(range(n))


def compose(a, b):
    return tuple([b[i] for i in a])


def invert(a):
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


def is_identity(a):
    for i, j in enumerate(a):
        if i != j:
            return False
    return True


def first_moved(a):
    """First point moved by ``a``, or -1 for the identity."""
    for i, j in enumerate(a):
        if i != j:
            return i
    return -1


def conjugate(x, g, ginv):
    """``g^-1 * x * g`` under left-to-right action."""
    return tuple([g[x[k]] for k in ginv])


def conjugate_key(elems, g, ginv):
    """Sorted tuple of the conjugates of every element of ``elems`` by ``g``."""
    return tuple(sorted([tuple([g[x[k]] for k in ginv]) for x in elems]))


def perm_order(a):
    n = len(a)
    seen = [False] * n
    result = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = a[j]
            length += 1
        result = result * length // gcd(result, length)
    return result


def power(a, k):
    n = len(a)
    if k < 0:
        a = invert(a)
        k = -k
    result = tuple(range(n))
    base = a
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def sift(g, base, inverses, start):
    """Strip ``g`` through chain levels ``start..``.

    ``inverses[l]`` maps each orbit point ``b`` of level ``l`` to the inverse
    of the transversal element carrying ``base[l]`` to ``b``.  Returns the
    residue and the level at which sifting stopped (``len(base)`` when it
    ran through every level).
    """
    h = g
    for level in range(start, len(base)):
        inv = inverses[level].get(h[base[level]])
        if inv is None:
            return h, level
        h = tuple([inv[i] for i in h])
    return h, len(base)


def orbit_transversal(gens, point, n):
    """Orbit of ``point`` with a transversal, in breadth-first discovery order."""
    trans = {point: tuple(range(n))}
    orbit = [point]
    i = 0
    while i < len(orbit):
        b = orbit[i]
        u = trans[b]
        for s in gens:
            c = s[b]
            if c not in trans:
                trans[c] = tuple([s[k] for k in u])
                orbit.append(c)
        i += 1
    return orbit, trans


def bfs_closure(gens, n, cap):
    """All elements of ``<gens>`` by breadth-first closure.

    Returns None when the element count would exceed ``cap``.
    """
    ident = tuple(range(n))
    seen = {ident}
    out = [ident]
    i = 0
    while i < len(out):
        x = out[i]
        for s in gens:
            y = tuple([s[k] for k in x])
            if y not in seen:
                if len(out) >= cap:
                    return None
                seen.add(y)
                out.append(y)
        i += 1
    return out


def product_enumerate(transversals, n):
    """Every product ``u_{k-1} * ... * u_0`` with ``u_l`` drawn from level ``l``."""
    elems = [tuple(range(n))]
    for trans in reversed(transversals):
        elems = [tuple([u[k] for k in x]) for x in elems for u in trans]
    return elems
