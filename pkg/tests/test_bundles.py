"""Split twisted bundles: Chern classes, characteristic classes, nefness."""

import random
from fractions import Fraction

import pytest

from schurhr.bundles import (SplitBundle, char_class, chern, chern_all,
                             chern_twist_rule, class_is_ample, class_is_nef,
                             derived_schur_class, derived_schur_classes,
                             schur_class)
from schurhr.cohomology import CohClass, Space
from schurhr.polyring import MultiPoly, elementary
from schurhr.schur import schur_jt


def _p2p3_bundle():
    X = Space([2, 3])
    return X, SplitBundle(X, [(1, 0), (1, 0), (0, 1)])


def test_chern_examples():
    X, E = _p2p3_bundle()
    a, b = X.h11_basis()
    assert chern(E, 1) == 2 * a + b
    assert chern(E, 3) == a * a * b
    assert chern(E, 0) == CohClass.unit(X)
    assert chern(E, 4).is_zero
    assert chern(E, -1).is_zero


def test_twist_rule_first_class():
    X, E = _p2p3_bundle()
    delta = (Fraction(1, 2), Fraction(1, 3))
    Ed = E.twisted_by(delta)
    d_class = CohClass.linear(X, delta)
    assert chern(Ed, 1) == chern(E, 1) + 3 * d_class
    assert chern_twist_rule(Ed, 1) == chern(Ed, 1)


def test_twist_rule_agrees_with_roots_randomly():
    rng = random.Random(13)
    for _ in range(40):
        X = Space([rng.randint(1, 3), rng.randint(1, 3)])
        rank = rng.randint(1, 4)
        lines = [tuple(rng.randint(-2, 2) for _ in range(2)) for _ in range(rank)]
        delta = tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(2))
        E = SplitBundle(X, lines, delta)
        for p in range(rank + 1):
            assert chern(E, p) == chern_twist_rule(E, p)


def test_twist_composition():
    X, E = _p2p3_bundle()
    d1 = (Fraction(1, 2), 0)
    d2 = (Fraction(1, 3), 1)
    lhs = E.twisted_by(d1).twisted_by(d2)
    rhs = E.twisted_by((Fraction(5, 6), 1))
    assert lhs == rhs
    assert chern_all(lhs) == chern_all(rhs)


def test_whitney_formula_on_split_sums():
    rng = random.Random(17)
    X = Space([2, 2])
    for _ in range(20):
        twist = (Fraction(rng.randint(0, 2), 2), Fraction(rng.randint(0, 2), 3))
        E = SplitBundle(X, [(1, 0), (0, 1)], twist)
        F = SplitBundle(X, [(rng.randint(0, 2), rng.randint(0, 2))], twist)
        EF = E.direct_sum(F)
        ce, cf, cef = chern_all(E), chern_all(F), chern_all(EF)
        total_e = sum(ce[1:], ce[0])
        total_f = sum(cf[1:], cf[0])
        total_ef = sum(cef[1:], cef[0])
        assert total_ef == total_e * total_f


def test_char_class_examples():
    X, E = _p2p3_bundle()
    a, b = X.h11_basis()
    c1sq = elementary(1, 3) * elementary(1, 3)
    assert char_class(c1sq, E) == 4 * (a * a) + 4 * (a * b) + b * b
    s111 = schur_jt((1, 1, 1), 3)
    expected = 3 * (a * a * b) + 2 * (a * b * b) + b * b * b
    assert char_class(s111, E) == expected
    assert schur_class((1, 1, 1), E) == expected
    assert schur_class((4,), E).is_zero  # first part above the rank


def test_char_class_rejects_asymmetric():
    X, E = _p2p3_bundle()
    with pytest.raises(ValueError):
        char_class(MultiPoly(3, {(2, 1, 0): 1}), E)


def test_derived_classes_edges():
    X, E = _p2p3_bundle()
    lam = (1, 1, 1)
    classes = derived_schur_classes(lam, E)
    assert classes[0] == schur_class(lam, E)
    top = classes[3]
    assert top == CohClass.unit(X).scale(top.coefficient((0, 0)))
    assert top.coefficient((0, 0)) > 0
    assert derived_schur_class(lam, 5, E).is_zero


def test_expansion_identity_in_the_twist():
    # the Schur class of a twisted bundle expands into shift slices
    rng = random.Random(23)
    X, E = _p2p3_bundle()
    for lam in [(1, 1), (2, 1), (1, 1, 1), (3,)]:
        classes = derived_schur_classes(lam, E)
        for _ in range(4):
            delta = tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(2))
            dc = CohClass.linear(X, delta)
            lhs = schur_class(lam, E.twisted_by(delta))
            rhs = CohClass.zero(X)
            power = CohClass.unit(X)
            for i, cls in enumerate(classes):
                rhs = rhs + cls * power
                power = power * dc
            assert lhs == rhs


def test_schur_class_agrees_with_monomial_evaluation():
    # two genuinely independent routes: the determinant in the ring of
    # Chern classes versus term-by-term evaluation of the polynomial at
    # the roots
    rng = random.Random(19)
    for _ in range(15):
        X = Space([rng.randint(1, 3), rng.randint(1, 2)])
        rank = rng.randint(1, 3)
        lines = [tuple(rng.randint(0, 2) for _ in range(2)) for _ in range(rank)]
        twist = tuple(Fraction(rng.randint(0, 3), rng.randint(1, 3)) for _ in range(2))
        E = SplitBundle(X, lines, twist)
        w = rng.randint(1, min(5, X.dim + 1))
        from schurhr.acceptance import _rand_partition

        lam = _rand_partition(rng, w, max_part=rank)
        assert schur_class(lam, E) == char_class(schur_jt(lam, rank), E)


def test_derived_class_agrees_with_monomial_evaluation():
    from schurhr.schur import derived_schur

    X, E = _p2p3_bundle()
    for lam in [(2, 1), (1, 1, 1), (2, 2)]:
        for i in range(sum(lam) + 1):
            poly = derived_schur(lam, i, E.rank)
            assert derived_schur_class(lam, i, E) == char_class(poly, E)


def test_is_nef():
    X = Space([2, 3])
    assert SplitBundle(X, [(1, 0), (0, 1)]).is_nef()
    assert not SplitBundle(X, [(-1, 0)]).is_nef()
    assert SplitBundle(X, [(-1, 2)], (Fraction(3, 2), 0)).is_nef()


def test_class_nef_and_ample():
    X = Space([2, 3])
    a, b = X.h11_basis()
    assert class_is_nef(a)
    assert class_is_nef(CohClass.zero(X))
    assert not class_is_nef(a - b)
    assert class_is_ample(a + b)
    assert not class_is_ample(a)


def test_serialization_round_trip():
    X, E = _p2p3_bundle()
    data = E.to_json()
    assert data == {"lines": [[1, 0], [1, 0], [0, 1]], "twist": ["0", "0"]}
    assert SplitBundle.from_json(data, X) == E
