"""Intersection forms on the degree-(1,1) lattice and exact inertia.

Eigenvalues of a rational symmetric matrix are irrational in general, but
the inertia triple (positive, negative, zero counts) is computable exactly
by congruence reduction, which is all the Hodge-Riemann style predicates
need.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeMismatchError, SpaceMismatchError
from .rationals import canon, fmt_q, parse_q


@dataclass(frozen=True)
class InertiaTriple:
    """Counts of positive, negative and zero eigenvalues."""

    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def dim(self):
        return self.n_plus + self.n_minus + self.n_zero

    def to_json(self):
        return {"n_plus": self.n_plus, "n_minus": self.n_minus, "n_zero": self.n_zero}


def _as_matrix(m):
    rows = [[parse_q(x) for x in row] for row in m]
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix is not square")
    return rows


def check_symmetric(m):
    rows = _as_matrix(m)
    n = len(rows)
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise ValueError(f"matrix is not symmetric at ({i},{j})")
    return rows


def intersection_form(omega, space=None):
    """Matrix of (a, b) -> integral of a * omega * b over the hyperplane basis.

    omega must be homogeneous of degree dim - 2; anything else is rejected
    (silent projection would hide bugs upstream).
    """
    if space is None:
        space = omega.space
    elif omega.space != space:
        raise SpaceMismatchError(f"{omega.space!r} vs {space!r}")
    if omega.is_zero:
        pass
    elif not omega.is_homogeneous:
        raise DegreeMismatchError(
            f"class has mixed degrees {omega.degrees()}, expected {space.dim - 2}"
        )
    elif omega.degree() != space.dim - 2:
        raise DegreeMismatchError(
            f"class has degree {omega.degree()}, expected {space.dim - 2}"
        )
    basis = space.h11_basis()
    k = space.k
    partial = [omega * t for t in basis]
    mat = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            v = (partial[i] * basis[j]).integrate()
            mat[i][j] = mat[j][i] = v
    return tuple(tuple(row) for row in mat)


def inertia(m):
    """Exact inertia by symmetric congruence reduction.

    Nonzero diagonal entries serve as 1x1 pivots; when the active diagonal
    is entirely zero, a nonzero off-diagonal entry spans a hyperbolic 2x2
    block contributing (1, 1, 0).
    """
    a = [[Fraction(x) for x in row] for row in check_symmetric(m)]
    active = list(range(len(a)))
    n_plus = n_minus = n_zero = 0
    while active:
        pivot = next((p for p in active if a[p][p] != 0), None)
        if pivot is not None:
            d = a[pivot][pivot]
            if d > 0:
                n_plus += 1
            else:
                n_minus += 1
            rest = [q for q in active if q != pivot]
            col = {q: a[q][pivot] for q in rest}
            for i in rest:
                ci = col[i]
                if ci:
                    row_i = a[i]
                    for j in rest:
                        cj = col[j]
                        if cj:
                            row_i[j] -= ci * cj / d
            active = rest
            continue
        hyper = None
        for ii, p in enumerate(active):
            for q in active[ii + 1:]:
                if a[p][q] != 0:
                    hyper = (p, q)
                    break
            if hyper:
                break
        if hyper is None:
            n_zero += len(active)
            break
        p, q = hyper
        b = a[p][q]
        n_plus += 1
        n_minus += 1
        rest = [r for r in active if r not in (p, q)]
        colp = {r: a[r][p] for r in rest}
        colq = {r: a[r][q] for r in rest}
        for i in rest:
            row_i = a[i]
            for j in rest:
                row_i[j] -= (colp[i] * colq[j] + colq[i] * colp[j]) / b
        active = rest
    return InertiaTriple(n_plus, n_minus, n_zero)


def is_hr(m):
    """Nondegenerate with exactly one positive eigenvalue."""
    t = inertia(m)
    return t.n_zero == 0 and t.n_plus == 1


def is_weak_hr(m):
    """At most one positive eigenvalue and not negative definite."""
    t = inertia(m)
    return t.n_plus <= 1 and (t.n_plus == 1 or t.n_zero >= 1)


def rational_det(m):
    """Exact determinant of a square rational matrix (Gaussian elimination)."""
    rows = [[Fraction(x) for x in row] for row in _as_matrix(m)]
    n = len(rows)
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if pivot is None:
            return 0
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det *= rows[c][c]
        inv = 1 / rows[c][c]
        for r in range(c + 1, n):
            f = rows[r][c] * inv
            if f:
                for cc in range(c, n):
                    rows[r][cc] -= f * rows[c][cc]
    return canon(det)


def congruence_transform(m, s):
    """S^T M S for testing that inertia is a congruence invariant."""
    a = _as_matrix(m)
    st = _as_matrix(s)
    n = len(a)
    ms = [[sum(a[i][k] * st[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    out = [
        [canon(sum(st[k][i] * ms[k][j] for k in range(n))) for j in range(n)]
        for i in range(n)
    ]
    return tuple(tuple(row) for row in out)


def matrix_to_json(m):
    return [[fmt_q(x) for x in row] for row in m]
