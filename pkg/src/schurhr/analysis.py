"""Theorem-level verifiers: positivity of characteristic numbers, Hodge-index
style inequalities, log-concave sequences, Polya-frequency machinery and
Lorentzian certification.

Everything here is exact; verdicts are booleans or rational numbers, never
floating point.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, lcm

from .bundles import (SplitBundle, chern_all, class_is_nef,
                      derived_schur_class, derived_schur_classes, schur_class)
from .cohomology import CohClass, Space
from .errors import DegreeMismatchError, PreconditionError
from .partitions import Partition, dual_in_box
from .polyring import MultiPoly
from .quadforms import inertia, intersection_form, is_hr, is_weak_hr
from .rationals import canon, fmt_q, parse_q
from .realroots import has_only_real_roots
from .schur import derived_all, schur_jt

# ---------------------------------------------------------------------------
# sequences


@dataclass(frozen=True)
class Sequence:
    """Finite rational sequence with a provenance label."""

    values: tuple
    provenance: str = ""
    start: int = 0

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(canon(parse_q(v)) for v in self.values))

    def to_json(self):
        return {
            "values": [fmt_q(v) for v in self.values],
            "provenance": self.provenance,
            "start": self.start,
        }


def log_concavity_violations(seq):
    """Interior indices where a[i-1] * a[i+1] > a[i]^2, or a negativity flag."""
    vals = seq.values if isinstance(seq, Sequence) else tuple(seq)
    bad = [("negative", i) for i, v in enumerate(vals) if v < 0]
    if bad:
        return bad
    return [
        ("log-concavity", i)
        for i in range(1, len(vals) - 1)
        if vals[i - 1] * vals[i + 1] > vals[i] * vals[i]
    ]


def is_log_concave(seq):
    """Nonnegative and a[i-1] * a[i+1] <= a[i]^2 at every interior index."""
    return not log_concavity_violations(seq)


def is_ultra_log_concave(values):
    """Newton's strengthening for length e+1: the sequence a_i / binom(e, i)
    is log-concave (implies plain log-concavity for binomial-type data)."""
    vals = [parse_q(v) for v in values]
    e = len(vals) - 1
    if any(v < 0 for v in vals):
        return False
    normed = [Fraction(v) / comb(e, i) for i, v in enumerate(vals)]
    return all(
        normed[i - 1] * normed[i + 1] <= normed[i] ** 2 for i in range(1, e)
    )


# ---------------------------------------------------------------------------
# positivity of characteristic numbers


def fl_positivity(E, lam, i):
    """Integral of the i-th shift slice of the Schur class of a nef bundle.

    Requires |lam| = dim + i; the value is guaranteed nonnegative for nef
    input, but the caller does the asserting.
    """
    lam = Partition(lam)
    i = int(i)
    if not E.is_nef():
        raise PreconditionError("bundle is not nef")
    d = E.space.dim
    if lam.weight != d + i:
        raise DegreeMismatchError(f"|lam| = {lam.weight}, expected dim + i = {d + i}")
    return derived_schur_class(lam, i, E).integrate()


def monomial_positivity(bundles, lams, orders):
    """Integral of a product of derived Schur classes of nef bundles."""
    if not bundles:
        raise ValueError("need at least one bundle")
    space = bundles[0].space
    total_deg = 0
    for E in bundles:
        if E.space != space:
            raise PreconditionError("bundles live on different spaces")
        if not E.is_nef():
            raise PreconditionError("bundle is not nef")
    lams = [Partition(l) for l in lams]
    orders = [int(i) for i in orders]
    if not len(bundles) == len(lams) == len(orders):
        raise ValueError("bundles, partitions and orders must align")
    total_deg = sum(l.weight - i for l, i in zip(lams, orders))
    if total_deg != space.dim:
        raise DegreeMismatchError(
            f"total degree {total_deg} does not match dim {space.dim}"
        )
    prod = CohClass.unit(space)
    for E, lam, i in zip(bundles, lams, orders):
        prod = prod * derived_schur_class(lam, i, E)
        if prod.is_zero:
            break
    return prod.integrate()


# ---------------------------------------------------------------------------
# Hodge-index style inequalities


@dataclass(frozen=True)
class InequalityResult:
    lhs: object
    rhs: object
    ok: bool

    def to_json(self):
        return {"lhs": fmt_q(self.lhs), "rhs": fmt_q(self.rhs), "ok": self.ok}


def hodge_index_check(omega, alpha, beta, space=None):
    """int a^2 O * int b^2 O <= (int a b O)^2 for weak-HR O and int b^2 O >= 0."""
    if space is None:
        space = omega.space
    q = intersection_form(omega, space)
    if not is_weak_hr(q):
        raise PreconditionError("form does not have the weak one-positive-eigenvalue shape")
    bb = (beta * omega * beta).integrate()
    if bb < 0:
        raise PreconditionError("need int beta^2 omega >= 0")
    aa = (alpha * omega * alpha).integrate()
    ab = (alpha * omega * beta).integrate()
    lhs = canon(aa * bb)
    rhs = canon(ab * ab)
    return InequalityResult(lhs, rhs, lhs <= rhs)


def schur_hodge_improved_check(E, h, lam, alpha):
    """The sharpened two-term inequality for a nef bundle and nef h:

    int a^2 s'(E) * int h s(E)  <=  2 * int a h s'(E) * int a s(E)

    with s the Schur class of lam (|lam| = dim - 1) and s' its first shift
    slice.
    """
    lam = Partition(lam)
    d = E.space.dim
    if lam.weight != d - 1:
        raise DegreeMismatchError(f"|lam| = {lam.weight}, expected dim - 1 = {d - 1}")
    if not E.is_nef():
        raise PreconditionError("bundle is not nef")
    if not class_is_nef(h):
        raise PreconditionError("h is not nef")
    classes = derived_schur_classes(lam, E, imax=1)
    s0, s1 = classes[0], classes[1]
    lhs = canon((alpha * alpha * s1).integrate() * (h * s0).integrate())
    rhs = canon(2 * (alpha * h * s1).integrate() * (alpha * s0).integrate())
    return InequalityResult(lhs, rhs, lhs <= rhs)


# ---------------------------------------------------------------------------
# Khovanskii-Tessier style sequences


def kt_sequence(E, F, lam, mu):
    """i -> int s_lam^(|lam|+|mu|-dim-i)(E) * s_mu^(i)(F) over its support."""
    lam, mu = Partition(lam), Partition(mu)
    if E.space != F.space:
        raise PreconditionError("bundles live on different spaces")
    if not (E.is_nef() and F.is_nef()):
        raise PreconditionError("both bundles must be nef")
    d = E.space.dim
    if lam.weight + mu.weight < d:
        raise PreconditionError(
            f"|lam| + |mu| = {lam.weight + mu.weight} must be at least dim = {d}"
        )
    lo = max(0, mu.weight - d)
    hi = min(mu.weight, lam.weight + mu.weight - d)
    sE = derived_schur_classes(lam, E)
    sF = derived_schur_classes(mu, F)
    values = []
    for i in range(lo, hi + 1):
        j = lam.weight + mu.weight - d - i
        values.append((sE[j] * sF[i]).integrate())
    return Sequence(tuple(values), provenance="kt", start=lo)


def chern_power_sequence(E, h):
    """i -> int c_i(E) h^(dim - i), the rank-one-direction special case."""
    if not E.is_nef():
        raise PreconditionError("bundle is not nef")
    if not class_is_nef(h):
        raise PreconditionError("h is not nef")
    d = E.space.dim
    cs = chern_all(E)
    values = []
    hp = [CohClass.unit(E.space)]
    for _ in range(d):
        hp.append(hp[-1] * h)
    for i in range(min(E.rank, d) + 1):
        values.append((cs[i] * hp[d - i]).integrate())
    return Sequence(tuple(values), provenance="chern-powers", start=0)


def derived_value_sequence(lam, x):
    """i -> s_lam^(i)(x) at a nonnegative rational point."""
    lam = Partition(lam)
    x = [parse_q(v) for v in x]
    if any(v < 0 for v in x):
        raise PreconditionError("point must be coordinatewise nonnegative")
    polys = derived_all(lam, len(x))
    return Sequence(
        tuple(p.evaluate(x) for p in polys), provenance="derived-values", start=0
    )


def pair_value_sequence(lam, mu, d, x, y):
    """i -> s_lam^(|lam|+|mu|-d+i)(x) * s_mu^(i)(y) over its support."""
    lam, mu = Partition(lam), Partition(mu)
    d = int(d)
    if d > lam.weight + mu.weight:
        raise PreconditionError("need d <= |lam| + |mu|")
    x = [parse_q(v) for v in x]
    y = [parse_q(v) for v in y]
    if any(v < 0 for v in x) or any(v < 0 for v in y):
        raise PreconditionError("points must be coordinatewise nonnegative")
    shift = lam.weight + mu.weight - d
    lo = max(0, -shift)
    hi = min(mu.weight, lam.weight - shift)
    if hi < lo:
        return Sequence((), provenance="pair-values", start=0)
    px = derived_all(lam, len(x))
    py = derived_all(mu, len(y))
    vx = [p.evaluate(x) for p in px]
    vy = [p.evaluate(y) for p in py]
    values = tuple(canon(vx[shift + i] * vy[i]) for i in range(lo, hi + 1))
    return Sequence(values, provenance="pair-values", start=lo)


# ---------------------------------------------------------------------------
# Polya frequency machinery


@dataclass(frozen=True)
class PolyaSequence:
    """Nonnegative rational sequence mu_0, ..., mu_N."""

    values: tuple

    def __init__(self, values):
        vals = tuple(canon(parse_q(v)) for v in values)
        if any(v < 0 for v in vals):
            raise ValueError("entries must be nonnegative")
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return len(self.values)


def _int_values(values):
    """Clear denominators (positive scaling preserves every minor sign)."""
    den = lcm(*(Fraction(v).denominator for v in values)) if values else 1
    return [int(Fraction(v) * den) for v in values]


def _int_det(rows):
    m = [list(r) for r in rows]
    n = len(m)
    sign, prev = 1, 1
    for c in range(n - 1):
        if m[c][c] == 0:
            for r in range(c + 1, n):
                if m[r][c] != 0:
                    m[c], m[r] = m[r], m[c]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(c + 1, n):
            for cc in range(c + 1, n):
                m[r][cc] = (m[c][c] * m[r][cc] - m[r][c] * m[c][cc]) // prev
            m[r][c] = 0
        prev = m[c][c]
    return sign * m[-1][-1]


def _base_window_minors_nonneg(mu):
    """Every minor of the square Toeplitz window (mu[i-j]), i,j < len(mu)."""
    L = len(mu)
    T = [[mu[i - j] if 0 <= i - j < L else 0 for j in range(L)] for i in range(L)]
    memo = {}

    def det(rows, cols):
        if not rows:
            return 1
        key = (rows, cols)
        v = memo.get(key)
        if v is not None:
            return v
        c = cols[-1]
        rest = cols[:-1]
        total = 0
        m = len(rows)
        for k, r in enumerate(rows):
            entry = T[r][c]
            if entry:
                sub = det(rows[:k] + rows[k + 1:], rest)
                if sub:
                    total += ((-1) ** (m - 1 - k)) * entry * sub
        memo[key] = total
        return total

    idx = range(L)
    for r in range(1, L + 1):
        for rows in itertools.combinations(idx, r):
            for cols in itertools.combinations(idx, r):
                # outside the band staircase the minor vanishes identically
                if any(cols[k] > rows[k] or rows[k] > cols[k] + L - 1 for k in range(r)):
                    continue
                if det(rows, cols) < 0:
                    return False
    return True


def _virtual_h(mu, depth):
    """Integer multiples of the formal inverse-series coefficients of mu.

    Treating mu as elementary-symmetric values e_i, this is h_m scaled by
    mu_0^m: the sign pattern of the virtual complete homogeneous sequence.
    """
    mu0 = mu[0]
    g = [1]
    for m in range(1, depth + 1):
        s = 0
        for i in range(1, min(m, len(mu) - 1) + 1):
            s += (-1) ** (i - 1) * mu[i] * mu0 ** (i - 1) * g[m - i]
        g.append(s)
    return g


def _schur_family_nonneg(mu, width_cap, h_cap):
    """Nonnegativity of all virtual straight Schur evaluations of mu.

    Any minor of the (zero-extended) Toeplitz matrix of mu is a skew Schur
    determinant in the virtual variables, and skew Schur functions expand
    positively into straight ones, so checking straight shapes decides total
    nonnegativity.  Shapes have at most len(mu) - 1 rows; the width is the
    only truncated direction (negative minors of rational non-PF sequences
    always appear at modest width in practice, but width_cap is exposed).
    """
    L = len(mu)
    g = _virtual_h(mu, h_cap + L + 2)
    if any(x < 0 for x in g):
        return False  # single-row shapes, checked deep
    maxrows = L - 1

    def shapes(width, rows):
        if rows == 0:
            yield ()
            return
        for w in range(width, 0, -1):
            for rest in shapes(w, rows - 1):
                yield (w,) + rest
        yield ()

    for lam in shapes(width_cap, maxrows):
        k = len(lam)
        if k < 2:
            continue  # rows 0 and 1 are covered by g itself
        rows = [
            [g[lam[i] - i + j] if lam[i] - i + j >= 0 else 0 for j in range(k)]
            for i in range(k)
        ]
        if _int_det(rows) < 0:
            return False
    return True


def polya_check_minors(mus, width_cap=12, h_cap=60):
    """Total nonnegativity of the Toeplitz matrix of the sequence.

    Checks every minor of the literal square window, then the equivalent
    straight virtual-Schur family of the zero-extended matrix in both
    orientations (reversal preserves the property).  Length is capped at 8;
    the root-counting route has no cap.
    """
    mus = mus if isinstance(mus, PolyaSequence) else PolyaSequence(mus)
    if len(mus) > 8:
        raise PreconditionError("minor test is capped at sequence length 8")
    vals = _int_values(list(mus.values))
    while vals and vals[0] == 0:
        vals.pop(0)
    while vals and vals[-1] == 0:
        vals.pop()
    if len(vals) <= 1:
        return True
    if not _base_window_minors_nonneg(vals):
        return False
    return _schur_family_nonneg(vals, width_cap, h_cap) and _schur_family_nonneg(
        vals[::-1], width_cap, h_cap
    )


def polya_check_roots(mus):
    """Real-rootedness of the generating polynomial (roots are automatically
    nonpositive when the coefficients are nonnegative)."""
    mus = mus if isinstance(mus, PolyaSequence) else PolyaSequence(mus)
    return has_only_real_roots(list(mus.values))


def polya_combination_class(lam, E, h, mus):
    """sum_i mu_i s_lam^(i)(E) h^i for |lam| = dim - 2."""
    lam = Partition(lam)
    d = E.space.dim
    if lam.weight != d - 2:
        raise DegreeMismatchError(f"|lam| = {lam.weight}, expected dim - 2 = {d - 2}")
    if not E.is_nef():
        raise PreconditionError("bundle is not nef")
    if not class_is_nef(h):
        raise PreconditionError("h is not nef")
    mus = mus if isinstance(mus, PolyaSequence) else PolyaSequence(mus)
    derived = derived_schur_classes(lam, E)
    total = CohClass.zero(E.space)
    hp = CohClass.unit(E.space)
    for i, c in enumerate(mus.values):
        if i > lam.weight:
            break
        if c:
            total = total + (derived[i] * hp).scale(c)
        if i < len(mus.values) - 1:
            hp = hp * h
    return total


# ---------------------------------------------------------------------------
# the product-of-projective-planes convex mix example


def convex_mix_form(E, t, lam_a, lam_b):
    """Intersection form of (1-t) s_{lam_a}(E) + t s_{lam_b}(E)."""
    t = parse_q(t)
    omega = schur_class(lam_a, E).scale(1 - t) + schur_class(lam_b, E).scale(t)
    return intersection_form(omega)


def p2p3_convex_example(t):
    """The rank-3 bundle O(1,0) + O(1,0) + O(0,1) on P^2 x P^3, mixing the
    top Chern class with the full column Schur class.

    For t strictly between 0 and 1/2 the form gains a second positive
    eigenvalue, so convex mixes do not stay in the one-positive-eigenvalue
    cone.
    """
    t = parse_q(t)
    space = Space([2, 3])
    E = SplitBundle(space, [(1, 0), (1, 0), (0, 1)])
    mat = convex_mix_form(E, t, (3,), (1, 1, 1))
    expected = ((t, 2 * t), (2 * t, 1 + 2 * t))
    return {
        "t": t,
        "space": space,
        "bundle": E,
        "matrix": mat,
        "matches_closed_form": mat == expected,
        "inertia": inertia(mat),
        "is_hr": is_hr(mat),
        "is_weak_hr": is_weak_hr(mat),
    }


def twisted_schur_form(E, lam, h_coeffs, t):
    """Intersection form of s_lam(E twisted by t * h)."""
    t = parse_q(t)
    delta = [t * parse_q(c) for c in h_coeffs]
    return intersection_form(schur_class(lam, E.twisted_by(delta)))


# ---------------------------------------------------------------------------
# Lorentzian certification


@dataclass(frozen=True)
class LorentzianReport:
    ok: bool
    mode: str
    epsilon: object = None
    nonpositive_coefficients: tuple = field(default_factory=tuple)
    bad_hessians: tuple = field(default_factory=tuple)

    def to_json(self):
        return {
            "ok": self.ok,
            "mode": self.mode,
            "epsilon": None if self.epsilon is None else fmt_q(self.epsilon),
            "nonpositive_coefficients": [list(e) for e in self.nonpositive_coefficients],
            "bad_hessians": [
                {"alpha": list(a), "inertia": t.to_json()} for a, t in self.bad_hessians
            ],
        }


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _strict_report(p, mode, epsilon):
    d = p.homogeneous_degree()
    if d < 2:
        raise PreconditionError("need a homogeneous polynomial of degree >= 2")
    e = p.nvars
    bad_coeffs = tuple(
        sorted(mu for mu, c in p.terms.items() if c <= 0)
    )
    bad_h = []
    for alpha in _compositions(d - 2, e):
        t = inertia(p.hessian_of_partial(alpha))
        if not (t.n_plus == 1 and t.n_zero == 0):
            bad_h.append((alpha, t))
    return LorentzianReport(
        ok=not bad_coeffs and not bad_h,
        mode=mode,
        epsilon=epsilon,
        nonpositive_coefficients=bad_coeffs[:16],
        bad_hessians=tuple(bad_h[:16]),
    )


def lorentzian_witness(p, epsilon):
    """Strictly-Lorentzian candidate converging to p as epsilon -> 0.

    Un-normalize, mirror in the box of side max(vars, degree), shift every
    variable by epsilon times the variable sum, re-truncate to the box (the
    shift piles exponents above it; those coefficients never enter the
    quadratic slices), mirror back and normalize.
    """
    epsilon = parse_q(epsilon)
    d = p.homogeneous_degree()
    if d < 2:
        raise PreconditionError("need a homogeneous polynomial of degree >= 2")
    e = p.nvars
    box = max(e, d)
    q = p.denormalize().box_reverse(box)
    total = MultiPoly.zero(e)
    for j in range(e):
        total = total + MultiPoly.variable(j, e)
    repl = [MultiPoly.variable(j, e) + epsilon * total for j in range(e)]
    q_eps = q.substitute(repl)
    p_eps = q_eps.truncate_box(box).box_reverse(box)
    return p_eps.normalize()


def lorentzian_check(p, mode="strict", epsilon=Fraction(1, 100)):
    """Strict test of p itself, or of the epsilon-perturbed witness."""
    if mode == "strict":
        return _strict_report(p, "strict", None)
    if mode == "perturbed":
        epsilon = parse_q(epsilon)
        return _strict_report(lorentzian_witness(p, epsilon), "perturbed", epsilon)
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# the coefficient-extraction bridge


def lemma_bridge_check(p, eprime, alpha):
    """Hessian of the alpha-partial of the normalization of p versus the
    coefficient matrix of the box mirror: exact entrywise equality of

        hessian(d^alpha N(p))  and  ([q x_i x_j]_beta)_{i,j}

    with q the mirror of p in the box of side eprime and beta = eprime - alpha.
    """
    d = p.homogeneous_degree()
    if d < 2:
        raise PreconditionError("need a homogeneous polynomial of degree >= 2")
    e = p.nvars
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != e or any(a < 0 for a in alpha):
        raise PreconditionError(f"alpha must be {e} nonnegative integers")
    if sum(alpha) != d - 2:
        raise DegreeMismatchError(f"|alpha| = {sum(alpha)}, expected {d - 2}")
    eprime = int(eprime)
    if eprime < max(p.per_variable_degrees(), default=0):
        raise PreconditionError("eprime must bound every per-variable degree")
    q = p.box_reverse(eprime)
    beta = tuple(eprime - a for a in alpha)
    mat = []
    for i in range(e):
        row = []
        for j in range(e):
            exps = list(beta)
            exps[i] -= 1
            exps[j] -= 1
            row.append(q.coefficient(exps) if min(exps) >= 0 else 0)
        mat.append(tuple(row))
    return p.normalize().hessian_of_partial(alpha) == tuple(mat)


def hessian_vs_intersection(lam, e, N, alpha, epsilon):
    """The geometric side of the Lorentzian argument, checked exactly.

    Builds the product of projective spaces with factor dimensions N - alpha_j,
    the rank-e sum of the factor hyperplane bundles twisted by epsilon times
    the total hyperplane class, and compares the intersection form of the
    box-dual Schur class against the Hessian of the corresponding
    alpha-partial of the normalized perturbed mirror polynomial.
    """
    lam = Partition(lam)
    e, N = int(e), int(N)
    epsilon = parse_q(epsilon)
    if not (lam.first <= e <= N):
        raise PreconditionError("need lam_1 <= e <= N")
    if lam.length > N:
        raise PreconditionError(f"partition needs more than {N} rows")
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != e or any(a < 0 for a in alpha):
        raise PreconditionError(f"alpha must be {e} nonnegative integers")
    if sum(alpha) != lam.weight - 2:
        raise DegreeMismatchError(f"|alpha| = {sum(alpha)}, expected {lam.weight - 2}")
    beta = tuple(N - a for a in alpha)
    if any(b < 1 for b in beta):
        raise PreconditionError("every N - alpha_j must be at least 1")

    bar = dual_in_box(lam, e, N)
    q = schur_jt(bar, e)
    total = MultiPoly.zero(e)
    for j in range(e):
        total = total + MultiPoly.variable(j, e)
    repl = [MultiPoly.variable(j, e) + epsilon * total for j in range(e)]
    q_eps = q.substitute(repl)
    p_eps = q_eps.truncate_box(N).box_reverse(N)
    hess = p_eps.normalize().hessian_of_partial(alpha)

    space = Space(beta)
    lines = [tuple(1 if i == j else 0 for i in range(e)) for j in range(e)]
    bundle = SplitBundle(space, lines, (epsilon,) * e)
    form = intersection_form(schur_class(bar, bundle), space)
    return hess == form
