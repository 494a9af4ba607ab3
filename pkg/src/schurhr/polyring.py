"""Sparse multivariate polynomials over exact rationals.

Monomials are exponent tuples; coefficients are int or Fraction, never
float and never stored when zero.  The canonical term order is graded
lexicographic (descending), used for serialization, printing and exact
division.
"""

from fractions import Fraction
from math import factorial

from . import kernels
from .errors import DegreeMismatchError
from .rationals import canon, fmt_q, parse_q


def _glex(exps):
    return (sum(exps), exps)


class MultiPoly:
    """Immutable sparse polynomial in a fixed number of variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        nvars = int(nvars)
        if nvars < 0:
            raise ValueError("variable count must be nonnegative")
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(int(x) for x in exps)
                if len(exps) != nvars:
                    raise ValueError(f"exponent {exps} does not have length {nvars}")
                if any(x < 0 for x in exps):
                    raise ValueError(f"negative exponent in {exps}")
                c = canon(c)
                if c:
                    clean[exps] = clean.get(exps, 0) + c
                    if not clean[exps]:
                        del clean[exps]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def _raw(cls, nvars, terms):
        """Trusted constructor: terms already clean."""
        self = object.__new__(cls)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", terms)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, c, nvars):
        c = canon(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def one(cls, nvars):
        return cls.constant(1, nvars)

    @classmethod
    def variable(cls, j, nvars):
        if not 0 <= j < nvars:
            raise ValueError(f"variable index {j} out of range for {nvars} variables")
        e = tuple(1 if i == j else 0 for i in range(nvars))
        return cls._raw(nvars, {e: 1})

    @classmethod
    def monomial(cls, exps, c, nvars=None):
        exps = tuple(int(x) for x in exps)
        return cls(len(exps) if nvars is None else nvars, {exps: c})

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def coefficient(self, exps):
        """Coefficient of the monomial with the given exponents (0 if absent)."""
        exps = tuple(int(x) for x in exps)
        if len(exps) != self.nvars:
            raise ValueError(f"exponent {exps} does not have length {self.nvars}")
        return self.terms.get(exps, 0)

    def total_degree(self):
        """Largest exponent sum, or -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_degree(self):
        """Common degree of all terms; raises if not homogeneous.

        The zero polynomial is homogeneous of every degree; returns -1.
        """
        degs = {sum(e) for e in self.terms}
        if not degs:
            return -1
        if len(degs) > 1:
            raise DegreeMismatchError(f"polynomial is not homogeneous: degrees {sorted(degs)}")
        return degs.pop()

    @property
    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def per_variable_degrees(self):
        """Tuple of max exponents per variable (zeros for the zero poly)."""
        out = [0] * self.nvars
        for e in self.terms:
            for j, x in enumerate(e):
                if x > out[j]:
                    out[j] = x
        return tuple(out)

    def sorted_terms(self):
        """Terms in canonical (graded-lex descending) order."""
        return sorted(self.terms.items(), key=lambda kv: _glex(kv[0]), reverse=True)

    # -- arithmetic --------------------------------------------------------

    def _check_compat(self, other):
        if self.nvars != other.nvars:
            raise ValueError(f"variable counts differ: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other, self.nvars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_compat(other)
        out = dict(self.terms)
        kernels.add_scaled(out, other.terms)
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other, self.nvars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_compat(other)
        out = dict(self.terms)
        kernels.add_scaled(out, other.terms, -1)
        return MultiPoly._raw(self.nvars, out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_compat(other)
        return MultiPoly._raw(self.nvars, kernels.mul_terms(self.terms, other.terms))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        c = canon(c)
        if not c:
            return MultiPoly.zero(self.nvars)
        return MultiPoly._raw(
            self.nvars, {e: canon(v * c) for e, v in self.terms.items()}
        )

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.one(self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other, self.nvars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    # -- the operators used by the verifiers --------------------------------

    def evaluate(self, point):
        """Exact value at a rational point."""
        point = [parse_q(x) for x in point]
        if len(point) != self.nvars:
            raise ValueError(f"point has length {len(point)}, expected {self.nvars}")
        powers = [{} for _ in range(self.nvars)]

        def pw(j, k):
            memo = powers[j]
            v = memo.get(k)
            if v is None:
                v = point[j] ** k
                memo[k] = v
            return v

        total = 0
        for e, c in self.terms.items():
            v = c
            for j, x in enumerate(e):
                if x:
                    v = v * pw(j, x)
            total += v
        return canon(total)

    def substitute(self, replacements):
        """Simultaneous substitution; one replacement polynomial per variable.

        All replacements must share a variable count, which becomes the
        variable count of the result.
        """
        replacements = list(replacements)
        if len(replacements) != self.nvars:
            raise ValueError(
                f"need {self.nvars} replacement polynomials, got {len(replacements)}"
            )
        if not replacements:
            return self
        m = replacements[0].nvars
        for r in replacements:
            if r.nvars != m:
                raise ValueError("replacement polynomials disagree in variable count")
        pow_memo = {}

        def rp(j, k):
            key = (j, k)
            v = pow_memo.get(key)
            if v is None:
                v = rp(j, k - 1) * replacements[j] if k > 1 else replacements[j]
                pow_memo[key] = v
            return v

        acc = {}
        one = MultiPoly.one(m)
        for e, c in self.terms.items():
            prod = one
            for j, x in enumerate(e):
                if x:
                    prod = prod * rp(j, x)
            kernels.add_scaled(acc, prod.terms, c)
        return MultiPoly._raw(m, acc)

    def partial(self, j):
        """Exact partial derivative with respect to variable j."""
        if not 0 <= j < self.nvars:
            raise ValueError(f"variable index {j} out of range")
        out = {}
        for e, c in self.terms.items():
            x = e[j]
            if x:
                key = e[:j] + (x - 1,) + e[j + 1:]
                out[key] = canon(c * x)
        return MultiPoly._raw(self.nvars, out)

    def partial_multi(self, alpha):
        """Iterated partial derivative by a multi-exponent alpha."""
        alpha = tuple(int(a) for a in alpha)
        if len(alpha) != self.nvars:
            raise ValueError(f"alpha has length {len(alpha)}, expected {self.nvars}")
        p = self
        for j, a in enumerate(alpha):
            for _ in range(a):
                p = p.partial(j)
        return p

    def normalize(self):
        """Divide each coefficient by the factorial of its exponent vector."""
        out = {}
        for e, c in self.terms.items():
            f = 1
            for x in e:
                if x > 1:
                    f *= factorial(x)
            out[e] = canon(Fraction(c) / f) if f > 1 else c
        return MultiPoly._raw(self.nvars, out)

    def denormalize(self):
        """Inverse of normalize: multiply coefficients by exponent factorials."""
        out = {}
        for e, c in self.terms.items():
            f = 1
            for x in e:
                if x > 1:
                    f *= factorial(x)
            out[e] = canon(c * f)
        return MultiPoly._raw(self.nvars, out)

    def box_reverse(self, eprime):
        """Mirror exponents inside the box [0, eprime]^nvars.

        The result q satisfies q(x) = x1^eprime * ... * xe^eprime * p(1/x);
        requires eprime to bound every per-variable degree, and is an
        involution whenever that holds.
        """
        eprime = int(eprime)
        degs = self.per_variable_degrees()
        if any(d > eprime for d in degs):
            raise ValueError(
                f"box size {eprime} is below a per-variable degree {max(degs)}"
            )
        out = {tuple(eprime - x for x in e): c for e, c in self.terms.items()}
        return MultiPoly._raw(self.nvars, out)

    def truncate_box(self, eprime):
        """Drop all terms with any exponent above eprime."""
        eprime = int(eprime)
        out = {e: c for e, c in self.terms.items() if max(e, default=0) <= eprime}
        return MultiPoly._raw(self.nvars, out)

    def hessian_of_partial(self, alpha):
        """Symmetric matrix M of the quadratic form d^alpha p = (1/2) x^T M x.

        Requires p homogeneous of degree d and |alpha| = d - 2.
        """
        d = self.homogeneous_degree()
        alpha = tuple(int(a) for a in alpha)
        if len(alpha) != self.nvars:
            raise ValueError(f"alpha has length {len(alpha)}, expected {self.nvars}")
        if any(a < 0 for a in alpha):
            raise ValueError("alpha entries must be nonnegative")
        if d >= 0 and sum(alpha) != d - 2:
            raise DegreeMismatchError(
                f"|alpha| = {sum(alpha)} but the polynomial has degree {d}"
            )
        q = self.partial_multi(alpha)
        e = self.nvars
        mat = [[0] * e for _ in range(e)]
        for exps, c in q.terms.items():
            support = [j for j, x in enumerate(exps) if x]
            if len(support) == 1:
                j = support[0]
                mat[j][j] = canon(2 * c)
            else:
                i, j = support
                mat[i][j] = mat[j][i] = c
        return tuple(tuple(row) for row in mat)

    def is_symmetric(self):
        """Exact symmetry test via all adjacent transpositions."""
        for j in range(self.nvars - 1):
            swapped = {}
            for e, c in self.terms.items():
                key = e[:j] + (e[j + 1], e[j]) + e[j + 2:]
                swapped[key] = c
            if swapped != self.terms:
                return False
        return True

    # -- presentation ------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"x{j + 1}^{x}" if x > 1 else f"x{j + 1}"
                for j, x in enumerate(e)
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

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self})"

    def to_json(self):
        return [
            {"exponents": list(e), "coeff": fmt_q(c)} for e, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data, nvars):
        terms = {tuple(t["exponents"]): parse_q(t["coeff"]) for t in data}
        return cls(nvars, terms)


def elementary(i, e):
    """i-th elementary symmetric polynomial in e variables.

    Zero outside 0 <= i <= e; the constant 1 at i = 0.
    """
    i, e = int(i), int(e)
    if i < 0 or i > e:
        return MultiPoly.zero(e)
    if i == 0:
        return MultiPoly.one(e)
    terms = {}
    # iterative Pascal-style build keeps this linear in the output size
    rows = [{(0,) * e: 1}] + [{} for _ in range(i)]
    for j in range(e):
        xj = tuple(1 if k == j else 0 for k in range(e))
        for p in range(min(i, j + 1), 0, -1):
            extra = kernels.mul_terms(rows[p - 1], {xj: 1})
            kernels.add_scaled(rows[p], extra)
    return MultiPoly._raw(e, rows[i])


def div_exact(a, b):
    """Exact quotient a / b in the polynomial ring; raises if not divisible."""
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    a._check_compat(b)
    lead_b = max(b.terms, key=_glex)
    cb = b.terms[lead_b]
    rem = dict(a.terms)
    quo = {}
    while rem:
        lead = max(rem, key=_glex)
        diff = tuple(x - y for x, y in zip(lead, lead_b))
        if any(x < 0 for x in diff):
            raise ArithmeticError("polynomials do not divide exactly")
        c = canon(Fraction(rem[lead]) / Fraction(cb)) if cb != 1 else rem[lead]
        quo[diff] = c
        kernels.add_scaled(rem, kernels.mul_terms({diff: c}, b.terms), -1)
    return MultiPoly._raw(a.nvars, quo)


def poly_det(rows):
    """Determinant of a square MultiPoly matrix by fraction-free elimination.

    Bareiss one-step elimination with row pivoting; every division is exact
    in the ring, keeping intermediate polynomials small and deterministic.
    """
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    nvars = rows[0][0].nvars
    m = [list(r) for r in rows]
    for r in m:
        if len(r) != n:
            raise ValueError("matrix is not square")
    sign = 1
    prev = MultiPoly.one(nvars)
    for k in range(n - 1):
        if m[k][k].is_zero:
            for r in range(k + 1, n):
                if not m[r][k].is_zero:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero(nvars)
        pivot = m[k][k]
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                num = pivot * m[r][c] - m[r][k] * m[k][c]
                m[r][c] = num if prev == 1 else div_exact(num, prev)
            m[r][k] = MultiPoly.zero(nvars)
        prev = pivot
    result = m[n - 1][n - 1]
    return result if sign == 1 else -result
