# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled permutation kernels; drop-in for ``_pykernels``."""
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM, PyTuple_GET_ITEM, PyTuple_GET_SIZE
from cpython.ref cimport Py_INCREF, PyObject
from cpython.long cimport PyLong_AsSsize_t
from libc.stdlib cimport malloc, free
from math import gcd

BACKEND = "cython"


cdef inline Py_ssize_t _at(tuple t, Py_ssize_t i):
    return PyLong_AsSsize_t(<object>PyTuple_GET_ITEM(t, i))


cdef inline tuple _compose(tuple a, tuple b):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(a), i
    cdef tuple out = PyTuple_New(n)
    cdef PyObject* v
    for i in range(n):
        v = PyTuple_GET_ITEM(b, _at(a, i))
        Py_INCREF(<object>v)
        PyTuple_SET_ITEM(out, i, <object>v)
    return out


cdef inline tuple _conj(tuple x, tuple g, tuple ginv):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(x), i
    cdef tuple out = PyTuple_New(n)
    cdef PyObject* v
    for i in range(n):
        v = PyTuple_GET_ITEM(g, _at(x, _at(ginv, i)))
        Py_INCREF(<object>v)
        PyTuple_SET_ITEM(out, i, <object>v)
    return out


def identity(Py_ssize_t n):
    return tuple(range(n))


def compose(tuple a, tuple b):
    return _compose(a, b)


def invert(tuple a):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(a), i
    cdef list inv = [0] * n
    for i in range(n):
        inv[_at(a, i)] = i
    return tuple(inv)


def is_identity(tuple a):
    cdef Py_ssize_t i
    for i in range(PyTuple_GET_SIZE(a)):
        if _at(a, i) != i:
            return False
    return True


def first_moved(tuple a):
    cdef Py_ssize_t i
    for i in range(PyTuple_GET_SIZE(a)):
        if _at(a, i) != i:
            return i
    return -1


def conjugate(tuple x, tuple g, tuple ginv):
    return _conj(x, g, ginv)


def conjugate_key(elems, tuple g, tuple ginv):
    cdef list out = []
    cdef tuple x
    for x in elems:
        out.append(_conj(x, g, ginv))
    out.sort()
    return tuple(out)


def perm_order(tuple a):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(a), start, j, length
    cdef char* seen = <char*>malloc(n + 1)
    result = 1
    try:
        for j in range(n):
            seen[j] = 0
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = 1
                j = _at(a, j)
                length += 1
            if length > 1:
                result = result * length // gcd(result, length)
    finally:
        free(seen)
    return result


def power(tuple a, k):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(a)
    if k < 0:
        a = invert(a)
        k = -k
    cdef tuple result = tuple(range(n))
    cdef tuple base = a
    while k:
        if k & 1:
            result = _compose(result, base)
        base = _compose(base, base)
        k >>= 1
    return result


def sift(tuple g, base, list inverses, Py_ssize_t start):
    cdef tuple h = g
    cdef Py_ssize_t level, nb = len(base)
    cdef dict inv_level
    for level in range(start, nb):
        inv_level = <dict>inverses[level]
        inv = inv_level.get(<object>PyTuple_GET_ITEM(h, base[level]))
        if inv is None:
            return h, level
        h = _compose(h, <tuple>inv)
    return h, nb


def orbit_transversal(gens, Py_ssize_t point, Py_ssize_t n):
    cdef dict trans = {point: tuple(range(n))}
    cdef list orbit = [point]
    cdef list glist = list(gens)
    cdef Py_ssize_t i = 0
    cdef tuple u, s
    while i < len(orbit):
        b = orbit[i]
        u = <tuple>trans[b]
        for s in glist:
            c = <object>PyTuple_GET_ITEM(s, b)
            if c not in trans:
                trans[c] = _compose(u, s)
                orbit.append(c)
        i += 1
    return orbit, trans


def bfs_closure(gens, Py_ssize_t n, Py_ssize_t cap):
    cdef tuple ident = tuple(range(n))
    cdef set seen = {ident}
    cdef list out = [ident]
    cdef list glist = list(gens)
    cdef Py_ssize_t i = 0
    cdef tuple x, y, s
    while i < len(out):
        x = <tuple>out[i]
        for s in glist:
            y = _compose(x, s)
            if y not in seen:
                if len(out) >= cap:
                    return None
                seen.add(y)
                out.append(y)
        i += 1
    return out


def product_enumerate(transversals, Py_ssize_t n):
    cdef list elems = [tuple(range(n))]
    cdef list nxt
    cdef tuple x, u
    for trans in reversed(list(transversals)):
        nxt = []
        for x in elems:
            for u in trans:
                nxt.append(_compose(x, u))
        elems = nxt
    return elems
