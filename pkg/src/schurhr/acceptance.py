"""The acceptance suite: every exit criterion as a deterministic check.

Each criterion is a function (seed, workers) -> record dict; randomized
criteria derive per-instance streams from the master seed, so reports are
byte-identical for a fixed seed regardless of worker count.  Instance
sharding preserves order (ordered pool map).
"""

import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import analysis, quadforms, schur
from .bundles import (SplitBundle, chern, chern_all, chern_twist_rule,
                      schur_class)
from .cohomology import CohClass, Space
from .partitions import Partition, partitions_in_box, partitions_of, partitions_up_to
from .polyring import MultiPoly
from .quadforms import intersection_form, is_hr, is_weak_hr
from .rationals import fmt_q

DEFAULT_SEED = 42


def _rng(seed, label):
    return random.Random(f"{seed}:{label}")


def _rand_fraction(rng, lo, hi, max_den=3):
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def _rand_space(rng, dmin=2, dmax=6, kmax=3):
    d = rng.randint(dmin, dmax)
    k = rng.randint(1, min(kmax, d))
    cuts = sorted(rng.sample(range(1, d), k - 1)) if k > 1 else []
    factors = []
    prev = 0
    for c in cuts + [d]:
        factors.append(c - prev)
        prev = c
    return Space(factors)


def _rand_partition(rng, weight, max_part=None, max_len=None):
    if weight == 0:
        return Partition()
    pool = list(partitions_of(weight, max_part=max_part, max_len=max_len))
    return rng.choice(pool)


def _rand_nef_bundle(rng, space, rank, max_line=2, twist=True):
    lines = [
        tuple(rng.randint(0, max_line) for _ in range(space.k)) for _ in range(rank)
    ]
    tw = (
        tuple(_rand_fraction(rng, 0, 1) for _ in range(space.k))
        if twist and rng.random() < 0.5
        else None
    )
    return SplitBundle(space, lines, tw)


def _rand_h11(rng, space, nonneg=False, lo=-2, hi=2):
    coeffs = [
        _rand_fraction(rng, 0 if nonneg else lo, hi) for _ in range(space.k)
    ]
    return CohClass.linear(space, coeffs)


def _run_sharded(fn, n, seed, label, workers):
    args = [(seed, label, i) for i in range(n)]
    if workers <= 1:
        results = [fn(a) for a in args]
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            chunk = max(1, n // (workers * 4))
            results = list(ex.map(fn, args, chunksize=chunk))
    return [f for r in results for f in r]


def _record(cid, name, checks, failures):
    return {
        "id": cid,
        "name": name,
        "ok": not failures,
        "checks": checks,
        "failures": failures[:20],
    }


# -- criterion 1: the convex-mix form on P2 x P3 ----------------------------

def crit_convex_mix(seed, workers=1):
    failures = []
    rng = _rng(seed, "mix")
    ts = [Fraction(1, 10), Fraction(1, 4), Fraction(1, 3)]
    ts += [Fraction(rng.randint(1, 9), 20) for _ in range(3)]
    checks = 0
    for t in ts:
        res = analysis.p2p3_convex_example(t)
        checks += 1
        if not res["matches_closed_form"]:
            failures.append(f"matrix at t={t} differs from closed form")
        if 0 < t < Fraction(1, 2):
            if res["inertia"] != quadforms.InertiaTriple(2, 0, 0):
                failures.append(f"inertia at t={t} is {res['inertia']}")
    return _record(1, "convex-mix-form", checks, failures)


# -- criterion 2: low-degree closed forms -----------------------------------

def crit_low_degree_table(seed, workers=1):
    failures = []
    checks = 0
    for e in (3, 4, 5):
        for name, ok in schur.derived_table_check(e):
            checks += 1
            if not ok:
                failures.append(f"{name} fails at e={e}")
    for e in range(1, 6):
        for p in range(0, e + 1):
            checks += 1
            if not schur.elementary_row_check(p, e):
                failures.append(f"single-row rule fails at p={p}, e={e}")
    return _record(2, "low-degree-closed-forms", checks, failures)


# -- criterion 3: determinant route equals tableau route ---------------------

def _crit3_one(args):
    seed, label, i = args
    lam, e = _CRIT3_CASES[i]
    if schur.schur_jt(lam, e) != schur.schur_ssyt(lam, e):
        return [f"mismatch at lam={list(lam.parts)}, e={e}"]
    return []


_CRIT3_CASES = [
    (lam, e) for lam in partitions_up_to(8) for e in range(1, 5)
]


def crit_jt_equals_ssyt(seed, workers=1):
    failures = _run_sharded(_crit3_one, len(_CRIT3_CASES), seed, "jt", workers)
    return _record(3, "determinant-vs-tableaux", len(_CRIT3_CASES), failures)


# -- criterion 4: box-dual reversal ------------------------------------------

def crit_dual_reversal(seed, workers=1):
    failures = []
    n = 100
    for i in range(n):
        rng = _rng(seed, f"dual:{i}")
        e = rng.randint(1, 4)
        N = rng.randint(1, 5)
        lam = rng.choice(list(partitions_in_box(e, N)))
        if not schur.dual_reversal_check(lam, e, N):
            failures.append(f"reversal fails: lam={list(lam.parts)}, e={e}, N={N}")
    return _record(4, "box-dual-reversal", n, failures)


# -- criterion 5: twist rule vs root expansion -------------------------------

def _crit5_one(args):
    seed, label, i = args
    rng = _rng(seed, f"twist:{i}")
    space = _rand_space(rng)
    rank = rng.randint(1, 4)
    lines = [
        tuple(rng.randint(-2, 3) for _ in range(space.k)) for _ in range(rank)
    ]
    delta = tuple(_rand_fraction(rng, -4, 4) for _ in range(space.k))
    E = SplitBundle(space, lines, delta)
    out = []
    for p in range(rank + 1):
        if chern(E, p) != chern_twist_rule(E, p):
            out.append(f"instance {i}: p={p} disagrees")
    # composing twists must equal adding them
    extra = tuple(_rand_fraction(rng, -2, 2) for _ in range(space.k))
    lhs = chern_all(E.twisted_by(extra))
    rhs = chern_all(SplitBundle(space, lines, tuple(a + b for a, b in zip(delta, extra))))
    if lhs != rhs:
        out.append(f"instance {i}: twist composition disagrees")
    return out


def crit_twist_rule(seed, workers=1):
    n = 200
    failures = _run_sharded(_crit5_one, n, seed, "twist", workers)
    return _record(5, "twist-rule-vs-roots", n, failures)


# -- criterion 6: positivity of the characteristic numbers -------------------

def _crit6_one(args):
    seed, label, i = args
    rng = _rng(seed, f"fl:{i}")
    space = _rand_space(rng)
    d = space.dim
    e = rng.randint(1, 4)
    E = _rand_nef_bundle(rng, space, e)
    imax = max(0, min(2, 8 - d))
    order = rng.randint(0, imax)
    max_part = e if rng.random() < 0.9 else e + 1
    lam = _rand_partition(rng, d + order, max_part=max_part)
    v = analysis.fl_positivity(E, lam, order)
    if v < 0:
        return [f"instance {i}: integral {fmt_q(v)} < 0"]
    return []


def _crit6m_one(args):
    seed, label, i = args
    rng = _rng(seed, f"flm:{i}")
    space = _rand_space(rng, dmin=2, dmax=6)
    d = space.dim
    p = rng.randint(1, 3)
    degs = []
    rem = d
    for j in range(p - 1):
        degs.append(rng.randint(0, rem))
        rem -= degs[-1]
    degs.append(rem)
    bundles, lams, orders = [], [], []
    for deg in degs:
        e = rng.randint(1, 3)
        order = rng.randint(0, 1) if deg + 1 <= 8 else 0
        bundles.append(_rand_nef_bundle(rng, space, e))
        lams.append(_rand_partition(rng, deg + order, max_part=e))
        orders.append(order)
    v = analysis.monomial_positivity(bundles, lams, orders)
    if v < 0:
        return [f"monomial instance {i}: integral {fmt_q(v)} < 0"]
    return []


def crit_fl_positivity(seed, workers=1):
    f1 = _run_sharded(_crit6_one, 500, seed, "fl", workers)
    f2 = _run_sharded(_crit6m_one, 200, seed, "flm", workers)
    return _record(6, "characteristic-number-positivity", 700, f1 + f2)


# -- criterion 7: one positive eigenvalue under ample twists -----------------

def _crit7_one(args):
    seed, label, i = args
    rng = _rng(seed, f"hr:{i}")
    space = _rand_space(rng)
    d = space.dim
    e = rng.randint(1, 4)
    E = _rand_nef_bundle(rng, space, e)
    lam = _rand_partition(rng, d - 2, max_part=e)
    h = [rng.randint(1, 2) for _ in range(space.k)]
    out = []
    t = Fraction(rng.randint(1, 8), rng.randint(1, 8))
    t = min(t, Fraction(1))
    mat = analysis.twisted_schur_form(E, lam, h, t)
    if not is_hr(mat):
        # finitely many bad twists are possible; one fresh draw must land well
        t2 = Fraction(rng.randint(1, 16), 17)
        mat2 = analysis.twisted_schur_form(E, lam, h, t2)
        if not is_hr(mat2):
            out.append(f"instance {i}: not HR at t={t} nor t={t2}")
    mat0 = intersection_form(schur_class(lam, E), space)
    if not is_weak_hr(mat0):
        out.append(f"instance {i}: untwisted form not weak-HR")
    return out


def _crit7m_one(args):
    seed, label, i = args
    rng = _rng(seed, f"hrm:{i}")
    space = _rand_space(rng, dmin=3, dmax=6)
    d = space.dim
    p = rng.randint(1, 2)
    degs = []
    rem = d - 2
    for j in range(p - 1):
        degs.append(rng.randint(0, rem))
        rem -= degs[-1]
    degs.append(rem)
    omega = CohClass.unit(space)
    for deg in degs:
        e = rng.randint(1, 3)
        E = _rand_nef_bundle(rng, space, e)
        omega = omega * schur_class(_rand_partition(rng, deg, max_part=e), E)
    if not is_weak_hr(intersection_form(omega, space)):
        return [f"monomial instance {i}: product form not weak-HR"]
    return []


def crit_hr_predicates(seed, workers=1):
    f1 = _run_sharded(_crit7_one, 200, seed, "hr", workers)
    f2 = _run_sharded(_crit7m_one, 100, seed, "hrm", workers)
    return _record(7, "hodge-riemann-predicates", 300, f1 + f2)


# -- criterion 8: log-concave sequences --------------------------------------

def _crit8_kt_one(args):
    seed, label, i = args
    rng = _rng(seed, f"kt:{i}")
    space = _rand_space(rng)
    d = space.dim
    eE, eF = rng.randint(1, 3), rng.randint(1, 3)
    E = _rand_nef_bundle(rng, space, eE)
    F = _rand_nef_bundle(rng, space, eF)
    wl = rng.randint(1, 6)
    wm = rng.randint(max(1, d - wl), 6)
    lam = _rand_partition(rng, wl, max_part=eE)
    mu = _rand_partition(rng, wm, max_part=eF)
    seq = analysis.kt_sequence(E, F, lam, mu)
    if not analysis.is_log_concave(seq):
        return [f"kt instance {i} not log-concave: {[fmt_q(v) for v in seq.values]}"]
    return []


def _crit8_seq_chunk(args):
    seed, label, c = args
    out = []
    for i in range(c * 25, (c + 1) * 25):
        rng = _rng(seed, f"seq:{i}")
        e = rng.randint(1, 4)
        lam = _rand_partition(rng, rng.randint(1, 6), max_part=e)
        x = [_rand_fraction(rng, 0, 10) for _ in range(e)]
        if not analysis.is_log_concave(analysis.derived_value_sequence(lam, x)):
            out.append(f"derived values not log-concave at instance {i}")
        rng2 = _rng(seed, f"pair:{i}")
        e1, e2 = rng2.randint(1, 3), rng2.randint(1, 3)
        lam1 = _rand_partition(rng2, rng2.randint(1, 5), max_part=e1)
        mu1 = _rand_partition(rng2, rng2.randint(1, 5), max_part=e2)
        d = rng2.randint(1, lam1.weight + mu1.weight)
        x1 = [_rand_fraction(rng2, 0, 10) for _ in range(e1)]
        y1 = [_rand_fraction(rng2, 0, 10) for _ in range(e2)]
        if not analysis.is_log_concave(
            analysis.pair_value_sequence(lam1, mu1, d, x1, y1)
        ):
            out.append(f"pair values not log-concave at instance {i}")
    return out


def crit_kt_log_concavity(seed, workers=1):
    f1 = _run_sharded(_crit8_kt_one, 200, seed, "kt", workers)
    f2 = _run_sharded(_crit8_seq_chunk, 40, seed, "seq", workers)
    failures = f1 + f2
    checks = 200 + 2000
    # Newton's ultra-log-concavity for the single-row shapes
    for e in range(1, 6):
        rng = _rng(seed, f"newton:{e}")
        for _ in range(20):
            x = [_rand_fraction(rng, 0, 9) for _ in range(e)]
            seq = analysis.derived_value_sequence((e,), x)
            checks += 1
            if not analysis.is_ultra_log_concave(seq.values):
                failures.append(f"ultra-log-concavity fails at e={e}, x={x}")
    return _record(8, "log-concave-sequences", checks, failures)


# -- criterion 9: index-type inequalities ------------------------------------

def _crit9_hi_one(args):
    seed, label, i = args
    rng = _rng(seed, f"hi:{i}")
    space = _rand_space(rng)
    d = space.dim
    e = rng.randint(1, 4)
    E = _rand_nef_bundle(rng, space, e)
    lam = _rand_partition(rng, d - 2, max_part=e)
    omega = schur_class(lam, E)
    alpha = _rand_h11(rng, space)
    beta = _rand_h11(rng, space, nonneg=True, hi=2)
    res = analysis.hodge_index_check(omega, alpha, beta, space)
    if not res.ok:
        return [f"hodge-index violated at instance {i}: {fmt_q(res.lhs)} > {fmt_q(res.rhs)}"]
    return []


def _crit9_imp_one(args):
    seed, label, i = args
    rng = _rng(seed, f"imp:{i}")
    space = _rand_space(rng)
    d = space.dim
    e = rng.randint(1, 4)
    E = _rand_nef_bundle(rng, space, e)
    lam = _rand_partition(rng, d - 1, max_part=e)
    h = _rand_h11(rng, space, nonneg=True, hi=2)
    alpha = _rand_h11(rng, space)
    res = analysis.schur_hodge_improved_check(E, h, lam, alpha)
    if not res.ok:
        return [f"improved inequality violated at instance {i}: {fmt_q(res.lhs)} > {fmt_q(res.rhs)}"]
    return []


def crit_index_inequalities(seed, workers=1):
    f1 = _run_sharded(_crit9_hi_one, 300, seed, "hi", workers)
    f2 = _run_sharded(_crit9_imp_one, 300, seed, "imp", workers)
    return _record(9, "index-type-inequalities", 600, f1 + f2)


# -- criterion 10: Polya frequency suite --------------------------------------

_NASTY = [
    (1, 1, 1),
    (2, 3, 2),
    (5, 6, 2),
    (2, 6, 5),
    (5, 4, 1),
    (1, 1, 1, 1),
    (3, 9, 7),
    (1, 2, 2, 1),
    (1, 1, 1, 1, 1, 1),
]


def _polya_corpus_item(rng, kind):
    from math import comb

    if kind == 0:  # scaled binomial row
        n = rng.randint(1, 5)
        c = _rand_fraction(rng, 1, 5)
        return [c * comb(n, k) for k in range(n + 1)]
    if kind == 1:  # product of linear factors with nonnegative roots
        k = rng.randint(1, 5)
        coeffs = [Fraction(1)]
        for _ in range(k):
            t = _rand_fraction(rng, 0, 4)
            nxt = [Fraction(0)] * (len(coeffs) + 1)
            for j, a in enumerate(coeffs):
                nxt[j] += a * t
                nxt[j + 1] += a
            coeffs = nxt
        return coeffs
    L = rng.randint(2, 6)  # adversarial random draw
    return [_rand_fraction(rng, 0, 9) for _ in range(L)]


def _crit10_agree_one(args):
    seed, label, i = args
    rng = _rng(seed, f"polya:{i}")
    if i < len(_NASTY):
        vals = list(_NASTY[i])
    elif i < 30 + len(_NASTY):
        vals = _polya_corpus_item(rng, 0)
    elif i < 60 + len(_NASTY):
        vals = _polya_corpus_item(rng, 1)
    else:
        vals = _polya_corpus_item(rng, 2)
    minors = analysis.polya_check_minors(vals)
    roots = analysis.polya_check_roots(vals)
    if minors != roots:
        return [
            f"route disagreement at instance {i}: minors={minors}, roots={roots},"
            f" seq={[fmt_q(v) for v in vals]}"
        ]
    return []


def _crit10_comb_one(args):
    seed, label, i = args
    rng = _rng(seed, f"pcomb:{i}")
    space = _rand_space(rng, dmin=4, dmax=6)
    d = space.dim
    e = rng.randint(1, 3)
    E = _rand_nef_bundle(rng, space, e)
    lam = _rand_partition(rng, d - 2, max_part=e)
    h = CohClass.linear(space, [rng.randint(0, 2) for _ in range(space.k)])
    coeffs = [Fraction(1)]
    for _ in range(d - 2):
        t = _rand_fraction(rng, 0, 3)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for j, a in enumerate(coeffs):
            nxt[j] += a * t
            nxt[j + 1] += a
        coeffs = nxt
    omega = analysis.polya_combination_class(lam, E, h, coeffs)
    if not is_weak_hr(intersection_form(omega, space)):
        return [f"PF combination not weak-HR at instance {i}"]
    return []


def crit_polya_suite(seed, workers=1):
    n_agree = 200
    f1 = _run_sharded(_crit10_agree_one, n_agree, seed, "polya", workers)
    f2 = _run_sharded(_crit10_comb_one, 100, seed, "pcomb", workers)
    failures = f1 + f2
    checks = n_agree + 100
    for t in (Fraction(1, 10), Fraction(1, 4), Fraction(2, 5)):
        checks += 1
        res = analysis.p2p3_convex_example(t)
        if res["is_weak_hr"]:
            failures.append(f"non-PF mix unexpectedly weak-HR at t={t}")
    return _record(10, "polya-frequency-suite", checks, failures)


# -- criterion 11: Lorentzian certification -----------------------------------

_CRIT11_CASES = [
    (lam, e)
    for e in (1, 2, 3)
    for w in range(2, 7)
    for lam in partitions_of(w, max_part=e)
]


def _crit11_lor_one(args):
    seed, label, i = args
    lam, e = _CRIT11_CASES[i]
    p = schur.schur_jt(lam, e).normalize()
    rep = analysis.lorentzian_check(p, "perturbed", Fraction(1, 100))
    if not rep.ok:
        rep = analysis.lorentzian_check(p, "perturbed", Fraction(1, 1000))
        if not rep.ok:
            return [f"perturbed certification fails: lam={list(lam.parts)}, e={e}"]
    return []


def _crit11_bridge_one(args):
    seed, label, i = args
    rng = _rng(seed, f"bridge:{i}")
    e = rng.randint(1, 3)
    d = rng.randint(2, 5)
    nterms = rng.randint(1, 6)
    terms = {}
    for _ in range(nterms):
        exps = [0] * e
        for _ in range(d):
            exps[rng.randrange(e)] += 1
        terms[tuple(exps)] = rng.randint(-3, 3)
    p = MultiPoly(e, terms)
    if p.is_zero:
        p = MultiPoly.variable(0, e) ** d
    alpha = [0] * e
    for _ in range(d - 2):
        alpha[rng.randrange(e)] += 1
    eprime = max(p.per_variable_degrees()) + rng.randint(0, 2)
    if not analysis.lemma_bridge_check(p, eprime, alpha):
        return [f"bridge identity fails at instance {i}"]
    return []


def _crit11_hvi_one(args):
    seed, label, i = args
    rng = _rng(seed, f"hvi:{i}")
    e = rng.randint(2, 3)
    w = rng.randint(2, 5)
    lam = _rand_partition(rng, w, max_part=e)
    # every factor dimension N - alpha_j must stay positive
    N = max(e, lam.length, rng.randint(e, 4), 1 + -(-(w - 2) // e))
    alpha = [0] * e
    for _ in range(w - 2):
        j = rng.randrange(e)
        if alpha[j] >= N - 1:
            j = min(range(e), key=lambda m: alpha[m])
        alpha[j] += 1
    eps = rng.choice([Fraction(0), Fraction(1, 100), Fraction(1, 10), _rand_fraction(rng, 0, 1, 9)])
    if not analysis.hessian_vs_intersection(lam, e, N, alpha, eps):
        return [f"hessian/form identity fails at instance {i}"]
    return []


def crit_lorentzian(seed, workers=1):
    f1 = _run_sharded(_crit11_lor_one, len(_CRIT11_CASES), seed, "lor", workers)
    f2 = _run_sharded(_crit11_bridge_one, 50, seed, "bridge", workers)
    f3 = _run_sharded(_crit11_hvi_one, 50, seed, "hvi", workers)
    checks = len(_CRIT11_CASES) + 100
    return _record(11, "lorentzian-certification", checks, f1 + f2 + f3)


# -- registry -----------------------------------------------------------------

CRITERIA = [
    (1, crit_convex_mix),
    (2, crit_low_degree_table),
    (3, crit_jt_equals_ssyt),
    (4, crit_dual_reversal),
    (5, crit_twist_rule),
    (6, crit_fl_positivity),
    (7, crit_hr_predicates),
    (8, crit_kt_log_concavity),
    (9, crit_index_inequalities),
    (10, crit_polya_suite),
    (11, crit_lorentzian),
]


def run_all(seed=DEFAULT_SEED, workers=1, criteria=None):
    """Run the suite; deterministic report for a fixed seed."""
    wanted = set(criteria) if criteria else {cid for cid, _ in CRITERIA}
    records = []
    for cid, fn in CRITERIA:
        if cid in wanted:
            records.append(fn(seed, workers))
    return {
        "seed": seed,
        "ok": all(r["ok"] for r in records),
        "criteria": records,
    }
