"""Pure-Python term-arithmetic kernels.

Terms are dicts mapping exponent tuples (plain ints, fixed length) to
nonzero exact coefficients (int or Fraction).  These three functions are
the hot inner loops of the whole package; ``schurhr.kernels._fast`` is a
compiled drop-in replacement with identical semantics.
"""

import operator

BACKEND = "python"


def mul_terms(a, b):
    """Product of two term dicts with the same exponent length."""
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    add = operator.add
    bitems = list(b.items())
    for ea, ca in a.items():
        for eb, cb in bitems:
            key = tuple(map(add, ea, eb))
            c = ca * cb
            prev = get(key)
            if prev is None:
                out[key] = c
            else:
                s = prev + c
                if s:
                    out[key] = s
                else:
                    del out[key]
    return out


def mul_terms_capped(a, b, caps):
    """Like mul_terms, but drops any monomial whose exponent exceeds caps."""
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    add = operator.add
    bitems = list(b.items())
    for ea, ca in a.items():
        for eb, cb in bitems:
            key = tuple(map(add, ea, eb))
            over = False
            for x, cap in zip(key, caps):
                if x > cap:
                    over = True
                    break
            if over:
                continue
            c = ca * cb
            prev = get(key)
            if prev is None:
                out[key] = c
            else:
                s = prev + c
                if s:
                    out[key] = s
                else:
                    del out[key]
    return out


def add_scaled(acc, terms, coeff=1):
    """In place acc += coeff * terms; removes entries that cancel to zero."""
    if not coeff:
        return acc
    get = acc.get
    if coeff == 1:
        for e, c in terms.items():
            prev = get(e)
            if prev is None:
                acc[e] = c
            else:
                s = prev + c
                if s:
                    acc[e] = s
                else:
                    del acc[e]
    else:
        for e, c in terms.items():
            c = coeff * c
            prev = get(e)
            if prev is None:
                acc[e] = c
            else:
                s = prev + c
                if s:
                    acc[e] = s
                else:
                    del acc[e]
    return acc
