# cython: language_level=3
"""Compiled term-arithmetic kernels; drop-in for schurhr.kernels._ref.

Exponent tuples are summed at the C level; coefficient arithmetic stays in
Python objects so exact ints and Fractions work unchanged.
"""

from cpython.dict cimport PyDict_GetItem, PyDict_SetItem, PyDict_DelItem
from cpython.long cimport PyLong_AsLong, PyLong_FromLong
from cpython.object cimport PyObject
from cpython.ref cimport Py_INCREF
from cpython.tuple cimport (PyTuple_GET_ITEM, PyTuple_GET_SIZE, PyTuple_New,
                            PyTuple_SET_ITEM)

BACKEND = "cython"

DEF MAXVARS = 64


cdef inline tuple _tuple_add(tuple ea, tuple eb, Py_ssize_t n):
    cdef tuple key = PyTuple_New(n)
    cdef Py_ssize_t i
    cdef object v
    for i in range(n):
        v = PyLong_FromLong(
            PyLong_AsLong(<object> PyTuple_GET_ITEM(ea, i))
            + PyLong_AsLong(<object> PyTuple_GET_ITEM(eb, i))
        )
        Py_INCREF(v)
        PyTuple_SET_ITEM(key, i, v)
    return key


cdef inline int _accumulate(dict out, tuple key, object c) except -1:
    cdef PyObject* prev = PyDict_GetItem(out, key)
    cdef object s
    if prev is NULL:
        PyDict_SetItem(out, key, c)
    else:
        s = (<object> prev) + c
        if s:
            PyDict_SetItem(out, key, s)
        else:
            PyDict_DelItem(out, key)
    return 0


def mul_terms(dict a, dict b):
    """Product of two term dicts with the same exponent length."""
    if len(a) > len(b):
        a, b = b, a
    cdef dict out = {}
    cdef list bitems = list(b.items())
    cdef tuple ea, eb, key, item
    cdef object ca, cb
    cdef Py_ssize_t n = 0, j, nb = len(bitems)
    for ea, ca in a.items():
        n = PyTuple_GET_SIZE(ea)
        for j in range(nb):
            item = <tuple> bitems[j]
            eb = <tuple> PyTuple_GET_ITEM(item, 0)
            cb = <object> PyTuple_GET_ITEM(item, 1)
            key = _tuple_add(ea, eb, n)
            _accumulate(out, key, ca * cb)
    return out


def mul_terms_capped(dict a, dict b, tuple caps):
    """Like mul_terms, but drops any monomial whose exponent exceeds caps."""
    if len(a) > len(b):
        a, b = b, a
    cdef Py_ssize_t n = PyTuple_GET_SIZE(caps)
    if n > MAXVARS:
        raise ValueError("too many variables for the compiled kernel")
    cdef long caps_c[MAXVARS]
    cdef long sums[MAXVARS]
    cdef Py_ssize_t i, j
    for i in range(n):
        caps_c[i] = PyLong_AsLong(<object> PyTuple_GET_ITEM(caps, i))
    cdef dict out = {}
    cdef list bitems = list(b.items())
    cdef tuple ea, eb, key, item
    cdef object ca, cb, v
    cdef Py_ssize_t nb = len(bitems)
    cdef bint over
    for ea, ca in a.items():
        for j in range(nb):
            item = <tuple> bitems[j]
            eb = <tuple> PyTuple_GET_ITEM(item, 0)
            cb = <object> PyTuple_GET_ITEM(item, 1)
            over = False
            for i in range(n):
                sums[i] = (PyLong_AsLong(<object> PyTuple_GET_ITEM(ea, i))
                           + PyLong_AsLong(<object> PyTuple_GET_ITEM(eb, i)))
                if sums[i] > caps_c[i]:
                    over = True
                    break
            if over:
                continue
            key = PyTuple_New(n)
            for i in range(n):
                v = PyLong_FromLong(sums[i])
                Py_INCREF(v)
                PyTuple_SET_ITEM(key, i, v)
            _accumulate(out, key, ca * cb)
    return out


def add_scaled(dict acc, dict terms, object coeff=1):
    """In place acc += coeff * terms; removes entries that cancel to zero."""
    if not coeff:
        return acc
    cdef tuple e
    cdef object c
    cdef bint unit = coeff == 1
    for e, c in terms.items():
        if unit:
            _accumulate(acc, e, c)
        else:
            _accumulate(acc, e, coeff * c)
    return acc
