"""Schur polynomials in the elementary-symmetric determinant convention.

Two independent routes are provided: the determinant of the matrix with
entries c_{lam_r - r + s} (c_i = i-th elementary symmetric polynomial), and
the monomial expansion whose coefficient at x^alpha counts semistandard
tableaux of the conjugate shape.  In this convention s_lam in e variables
vanishes exactly when lam_1 > e.

Shift expansions: s_lam(x_1 + t, ..., x_e + t) = sum_i s_lam^(i)(x) t^i
defines the derived polynomials s_lam^(i), homogeneous of degree |lam| - i.
"""

import threading
from math import comb

from .errors import PreconditionError
from .partitions import Partition, dual_in_box, ssyt_weight_counts
from .polyring import MultiPoly, elementary, poly_det

_cache_lock = threading.Lock()
_jt_cache = {}
_derived_cache = {}


def clear_caches():
    with _cache_lock:
        _jt_cache.clear()
        _derived_cache.clear()


def schur_jt(lam, e):
    """Schur polynomial via the elementary-symmetric determinant."""
    lam = Partition(lam)
    e = int(e)
    key = (lam.normalized, e)
    with _cache_lock:
        hit = _jt_cache.get(key)
    if hit is not None:
        return hit
    parts = lam.normalized
    n = len(parts)
    if n == 0:
        result = MultiPoly.one(e)
    else:
        rows = [
            [elementary(parts[r] - r + s, e) for s in range(n)] for r in range(n)
        ]
        result = poly_det(rows)
    with _cache_lock:
        _jt_cache[key] = result
    return result


def schur_ssyt(lam, e):
    """Schur polynomial via semistandard tableaux of the conjugate shape."""
    lam = Partition(lam)
    e = int(e)
    counts = ssyt_weight_counts(lam.conjugate(), e)
    return MultiPoly(e, counts)


def derived_all(lam, e):
    """All shift-expansion coefficients (s_lam^(0), ..., s_lam^(|lam|))."""
    lam = Partition(lam)
    e = int(e)
    key = (lam.normalized, e)
    with _cache_lock:
        hit = _derived_cache.get(key)
    if hit is not None:
        return hit
    b = lam.weight
    s = schur_jt(lam, e)
    # lift to e+1 variables (the last one is t) and shift every x_j by t
    lifted = MultiPoly._raw(e + 1, {exps + (0,): c for exps, c in s.terms.items()})
    t = MultiPoly.variable(e, e + 1)
    repl = [MultiPoly.variable(j, e + 1) + t for j in range(e)] + [t]
    shifted = lifted.substitute(repl)
    buckets = [{} for _ in range(b + 1)]
    for exps, c in shifted.terms.items():
        buckets[exps[e]][exps[:e]] = c
    result = tuple(MultiPoly._raw(e, terms) for terms in buckets)
    with _cache_lock:
        _derived_cache[key] = result
    return result


def derived_schur(lam, i, e):
    """s_lam^(i) in e variables; zero outside 0 <= i <= |lam|."""
    lam = Partition(lam)
    i = int(i)
    if i < 0 or i > lam.weight:
        return MultiPoly.zero(int(e))
    return derived_all(lam, e)[i]


def dual_reversal_check(lam, e, N):
    """Exact check of s_lam(x) = (x1*...*xe)^N * s_dual(1/x) in the e x N box."""
    lam = Partition(lam)
    e, N = int(e), int(N)
    if lam.first > e:
        raise PreconditionError(f"largest part {lam.first} exceeds {e}")
    if lam.length > N:
        raise PreconditionError(f"partition needs more than {N} rows")
    bar = dual_in_box(lam, e, N)
    return schur_jt(bar, e).box_reverse(N) == schur_jt(lam, e)


# -- symbolic identities for small weights ---------------------------------

def _c(i, e):
    return elementary(i, e)


def _low_degree_identities(e):
    """The closed forms of every derived Schur polynomial of weight <= 3."""
    one = MultiPoly.one(e)
    c1, c2, c3 = _c(1, e), _c(2, e), _c(3, e)
    return [
        ("s(1)", (1,), 0, c1),
        ("s(1)^1", (1,), 1, e * one),
        ("s(2)", (2,), 0, c2),
        ("s(2)^1", (2,), 1, (e - 1) * c1),
        ("s(2)^2", (2,), 2, comb(e, 2) * one),
        ("s(1,1)", (1, 1), 0, c1 * c1 - c2),
        ("s(1,1)^1", (1, 1), 1, (e + 1) * c1),
        ("s(1,1)^2", (1, 1), 2, comb(e + 1, 2) * one),
        ("s(3)", (3,), 0, c3),
        ("s(3)^1", (3,), 1, (e - 2) * c2),
        ("s(3)^2", (3,), 2, comb(e - 1, 2) * c1),
        ("s(3)^3", (3,), 3, comb(e, 3) * one),
        ("s(2,1)", (2, 1), 0, c1 * c2 - c3),
        ("s(2,1)^1", (2, 1), 1, 2 * c2 + (e - 1) * (c1 * c1)),
        ("s(2,1)^2", (2, 1), 2, (e * e - 1) * c1),
        ("s(2,1)^3", (2, 1), 3, 2 * comb(e + 1, 3) * one),
        ("s(1,1,1)", (1, 1, 1), 0, c1 * c1 * c1 - 2 * (c1 * c2) + c3),
        ("s(1,1,1)^1", (1, 1, 1), 1, (e + 2) * (c1 * c1 - c2)),
        ("s(1,1,1)^2", (1, 1, 1), 2, comb(e + 2, 2) * c1),
        ("s(1,1,1)^3", (1, 1, 1), 3, comb(e + 2, 3) * one),
    ]


def derived_table_check(e):
    """Verify the weight <= 3 closed forms against the shift expansion.

    Returns a list of (identity name, bool); requires e >= 3 so that none
    of the closed forms degenerate.
    """
    e = int(e)
    if e < 3:
        raise PreconditionError("the closed-form table needs at least 3 variables")
    report = []
    for name, lam, i, rhs in _low_degree_identities(e):
        report.append((name, derived_schur(lam, i, e) == rhs))
    return report


def elementary_row_check(p, e):
    """Verify s_(p)^(i) = binom(e-p+i, i) * c_{p-i} for all 0 <= i <= p <= e."""
    p, e = int(p), int(e)
    if not 0 <= p <= e:
        raise PreconditionError("need 0 <= p <= e")
    ok = True
    for i in range(p + 1):
        expected = comb(e - p + i, i) * elementary(p - i, e)
        ok = ok and derived_schur((p,), i, e) == expected
    return ok


def to_elementary_basis(p):
    """Express a symmetric polynomial in elementary symmetric polynomials.

    Returns a dict mapping exponent tuples over (c_1, ..., c_e) to rational
    coefficients.  Classical leading-term elimination in lex order.
    """
    if not p.is_symmetric():
        raise ValueError("polynomial is not symmetric")
    e = p.nvars
    elems = [elementary(i, e) for i in range(e + 1)]
    out = {}
    rest = p
    while not rest.is_zero:
        lead = max(rest.terms)  # lex order; symmetric => weakly decreasing
        c = rest.terms[lead]
        padded = lead + (0,)
        key = tuple(padded[i] - padded[i + 1] for i in range(e))
        prod = MultiPoly.one(e)
        for i, k in enumerate(key):
            for _ in range(k):
                prod = prod * elems[i + 1]
        out[key] = c
        rest = rest - c * prod
    return out


def format_elementary(basis_terms):
    """Human-readable rendering of a to_elementary_basis result."""
    from .rationals import fmt_q

    if not basis_terms:
        return "0"
    chunks = []
    for key in sorted(basis_terms, key=lambda k: (sum((i + 1) * x for i, x in enumerate(k)), k), reverse=True):
        c = basis_terms[key]
        mono = "*".join(
            f"c{i + 1}^{x}" if x > 1 else f"c{i + 1}"
            for i, x in enumerate(key)
            if x
        )
        neg = c < 0
        c = -c if neg else c
        if not mono:
            body = fmt_q(c)
        elif c == 1:
            body = mono
        else:
            body = f"{fmt_q(c)}*{mono}"
        if not chunks:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(chunks)
