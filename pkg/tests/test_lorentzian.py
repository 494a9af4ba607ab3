"""Lorentzian certification and the coefficient-extraction identities."""

import random
from fractions import Fraction

import pytest

from schurhr.analysis import (hessian_vs_intersection, lemma_bridge_check,
                              lorentzian_check, lorentzian_witness)
from schurhr.errors import DegreeMismatchError, PreconditionError
from schurhr.partitions import partitions_of
from schurhr.polyring import MultiPoly
from schurhr.schur import schur_jt


def test_strict_examples():
    xy = MultiPoly(2, {(1, 1): 1})
    rep = lorentzian_check(xy, "strict")
    assert rep.ok
    sq = MultiPoly(2, {(2, 0): 1, (0, 2): 1})
    rep = lorentzian_check(sq, "strict")
    assert not rep.ok
    # the failure is recorded: the Hessian has two positive eigenvalues
    assert rep.bad_hessians and rep.bad_hessians[0][1].n_plus == 2
    # a negative coefficient is also rejected outright
    neg = MultiPoly(2, {(1, 1): -1})
    assert lorentzian_check(neg, "strict").nonpositive_coefficients == ((1, 1),)


def test_strict_rejects_inhomogeneous_or_linear():
    with pytest.raises(DegreeMismatchError):
        lorentzian_check(MultiPoly(2, {(2, 0): 1, (1, 0): 1}), "strict")
    with pytest.raises(PreconditionError):
        lorentzian_check(MultiPoly(2, {(1, 0): 1}), "strict")


def test_normalized_column_shape_needs_the_perturbation():
    p = schur_jt((1, 1), 2).normalize()
    assert not lorentzian_check(p, "strict").ok
    rep = lorentzian_check(p, "perturbed", Fraction(1, 100))
    assert rep.ok and rep.mode == "perturbed"


def test_witness_converges_to_the_input():
    p = schur_jt((2, 1), 2).normalize()
    assert lorentzian_witness(p, 0) == p
    w = lorentzian_witness(p, Fraction(1, 100))
    assert w != p
    assert w.homogeneous_degree() == p.homogeneous_degree()


def test_perturbed_certification_across_shapes():
    for e in (1, 2, 3):
        for w in range(2, 6):
            for lam in partitions_of(w, max_part=e):
                p = schur_jt(lam, e).normalize()
                rep = lorentzian_check(p, "perturbed", Fraction(1, 100))
                assert rep.ok, (lam, e)


def test_bridge_examples():
    assert lemma_bridge_check(schur_jt((1, 1), 2), 2, (0, 0))
    assert lemma_bridge_check(MultiPoly(2, {(2, 1): 1}), 2, (1, 0))
    # a vanishing coefficient must appear as zero on both sides
    p = MultiPoly(2, {(3, 0): 1, (0, 3): 1})
    assert lemma_bridge_check(p, 3, (1, 0))


def test_bridge_holds_for_arbitrary_sign_patterns():
    rng = random.Random(71)
    for _ in range(60):
        e = rng.randint(1, 3)
        d = rng.randint(2, 5)
        terms = {}
        for _ in range(rng.randint(1, 6)):
            exps = [0] * e
            for _ in range(d):
                exps[rng.randrange(e)] += 1
            terms[tuple(exps)] = rng.randint(-4, 4)
        p = MultiPoly(e, terms)
        if p.is_zero:
            continue
        alpha = [0] * e
        for _ in range(d - 2):
            alpha[rng.randrange(e)] += 1
        eprime = max(p.per_variable_degrees()) + rng.randint(0, 2)
        assert lemma_bridge_check(p, eprime, alpha)


def test_bridge_rejects_small_box():
    p = schur_jt((2, 1), 2)  # per-variable degree 2
    with pytest.raises(PreconditionError):
        lemma_bridge_check(p, 1, (1, 0))


def test_hessian_vs_intersection_examples():
    assert hessian_vs_intersection((1, 1), 2, 2, (0, 0), Fraction(1, 100))
    assert hessian_vs_intersection((2,), 2, 2, (0, 0), Fraction(1, 10))
    assert hessian_vs_intersection((1, 1), 2, 2, (0, 0), 0)


def test_hessian_vs_intersection_bigger_cases():
    assert hessian_vs_intersection((2, 1), 2, 3, (1, 0), Fraction(1, 7))
    assert hessian_vs_intersection((2, 2), 3, 3, (1, 1, 0), Fraction(2, 5))
    assert hessian_vs_intersection((3, 2), 3, 4, (1, 1, 1), Fraction(1, 100))


def test_hessian_vs_intersection_preconditions():
    with pytest.raises(PreconditionError):
        hessian_vs_intersection((3,), 2, 2, (0, 0), 0)  # first part above e
    with pytest.raises(DegreeMismatchError):
        hessian_vs_intersection((2, 2), 2, 2, (1, 0), 0)  # |alpha| wrong
    with pytest.raises(PreconditionError):
        hessian_vs_intersection((2, 2), 2, 2, (2, 0), 0)  # factor would collapse
