"""Positivity, index inequalities and log-concave sequences."""

import random
from fractions import Fraction

import pytest

from schurhr.analysis import (Sequence, chern_power_sequence,
                              derived_value_sequence, fl_positivity,
                              hodge_index_check, is_log_concave,
                              is_ultra_log_concave, kt_sequence,
                              log_concavity_violations, monomial_positivity,
                              pair_value_sequence, schur_hodge_improved_check,
                              twisted_schur_form)
from schurhr.bundles import SplitBundle, schur_class
from schurhr.cohomology import CohClass, Space
from schurhr.errors import DegreeMismatchError, PreconditionError
from schurhr.quadforms import intersection_form, is_hr, is_weak_hr


def _p2_bundle():
    X = Space([2])
    return X, SplitBundle(X, [(1,), (1,)])


def _p2p3_bundle():
    X = Space([2, 3])
    return X, SplitBundle(X, [(1, 0), (1, 0), (0, 1)])


def test_fl_positivity_examples():
    X, E = _p2_bundle()
    assert fl_positivity(E, (1, 1), 0) == 3
    assert fl_positivity(E, (2, 1), 1) >= 0
    assert fl_positivity(E, (3,), 1) == 0  # first part above the rank


def test_fl_positivity_preconditions():
    X, E = _p2_bundle()
    with pytest.raises(DegreeMismatchError):
        fl_positivity(E, (1, 1), 1)
    bad = SplitBundle(X, [(-1,)])
    with pytest.raises(PreconditionError):
        fl_positivity(bad, (1, 1), 0)


def test_monomial_positivity_reduces_to_single():
    X, E = _p2_bundle()
    assert monomial_positivity([E], [(1, 1)], [0]) == fl_positivity(E, (1, 1), 0)


def test_monomial_positivity_example():
    X = Space([3])
    E1 = SplitBundle(X, [(1,), (1,)])
    E2 = SplitBundle(X, [(2,)])
    v = monomial_positivity([E1, E2], [(2,), (1,)], [0, 0])
    assert v >= 0
    assert monomial_positivity([E1, E2], [(3,), (0,)], [0, 0]) == 0


def test_hodge_index_equality_case():
    P3 = Space([3])
    t = P3.h11_basis()[0]
    res = hodge_index_check(t, t, t, P3)
    assert res.lhs == res.rhs == 1
    assert res.ok


def test_hodge_index_on_product_example():
    X, E = _p2p3_bundle()
    a, b = X.h11_basis()
    omega = schur_class((1, 1, 1), E)
    res = hodge_index_check(omega, a, b, X)
    assert (res.lhs, res.rhs) == (3, 4)
    assert res.ok
    res2 = hodge_index_check(omega, a - 2 * b, b, X)
    assert (res2.lhs, res2.rhs) == (15, 16)
    assert res2.ok


def test_hodge_index_precondition_failure_is_loud():
    X = Space([2, 2])
    a, b = X.h11_basis()
    # two positive eigenvalues: the pairing of a^2 + b^2 style forms
    omega = a * a + b * b
    with pytest.raises(PreconditionError):
        hodge_index_check(omega, a, b, X)


def test_improved_inequality_examples():
    P3 = Space([3])
    E = SplitBundle(P3, [(1,), (1,)])
    t = P3.h11_basis()[0]
    res = schur_hodge_improved_check(E, t, (1, 1), t)
    assert (res.lhs, res.rhs) == (18, 36)
    assert res.ok
    zero = CohClass.zero(P3)
    res0 = schur_hodge_improved_check(E, t, (1, 1), zero)
    assert res0.lhs == res0.rhs == 0
    assert res0.ok


def test_improved_inequality_on_product():
    X, E = _p2p3_bundle()
    a, b = X.h11_basis()
    res = schur_hodge_improved_check(E, a + b, (2, 1, 1), a - b)
    assert res.ok


def test_kt_sequence_example():
    X, E = _p2_bundle()
    seq = kt_sequence(E, E, (1, 1), (1, 1))
    assert seq.values == (9, 36, 9)
    assert seq.start == 0
    assert is_log_concave(seq)


def test_kt_sequence_range_and_preconditions():
    X, E = _p2_bundle()
    with pytest.raises(PreconditionError):
        kt_sequence(E, E, (1,), (0,))  # weights below the dimension
    F = SplitBundle(X, [(-1,)])
    with pytest.raises(PreconditionError):
        kt_sequence(E, F, (1, 1), (1, 1))


def test_single_row_shapes_give_elementary_slices():
    # on the single-row shape the shift slices are the lower Chern classes
    from schurhr.schur import derived_schur
    from schurhr.polyring import elementary

    for e in range(1, 5):
        for i in range(e + 1):
            assert derived_schur((e,), i, e) == elementary(e - i, e)


def test_chern_power_sequence_log_concave():
    rng = random.Random(41)
    for _ in range(20):
        X = Space([rng.randint(1, 3), rng.randint(1, 3)])
        E = SplitBundle(
            X,
            [
                tuple(rng.randint(0, 2) for _ in range(2))
                for _ in range(rng.randint(1, 4))
            ],
        )
        h = CohClass.linear(X, [rng.randint(0, 2) for _ in range(2)])
        assert is_log_concave(chern_power_sequence(E, h))


def test_is_log_concave_examples():
    assert is_log_concave(Sequence((1, 2, 3, 2, 1)))
    assert not is_log_concave(Sequence((1, 1, 2)))
    assert is_log_concave(Sequence((1, 3, 3, 1)))
    assert log_concavity_violations(Sequence((1, 1, 2))) == [("log-concavity", 1)]
    assert not is_log_concave([1, -1, 1])


def test_log_concavity_with_interior_zeros():
    # the bare defining inequality: interior zeros are fine when a
    # neighbouring product vanishes too
    assert is_log_concave([1, 0, 0, 1])
    assert not is_log_concave([1, 0, 1])


def test_derived_value_sequence_examples():
    seq = derived_value_sequence((1, 1), (1, 1))
    assert seq.values == (3, 6, 3)
    assert is_log_concave(seq)
    seq0 = derived_value_sequence((1, 1), (0, 0))
    assert seq0.values == (0, 0, 3)
    with pytest.raises(PreconditionError):
        derived_value_sequence((1, 1), (-1, 1))


def test_pair_value_sequence_examples():
    seq = pair_value_sequence((1,), (1,), 2, (1,), (1,))
    assert seq.values == (1, 1)
    assert is_log_concave(seq)
    zero = pair_value_sequence((2, 1), (1, 1), 4, (0, 0, 0), (1, 2))
    assert is_log_concave(zero)


def test_pair_value_sequence_fuzz():
    rng = random.Random(43)
    for _ in range(120):
        e1, e2 = rng.randint(1, 3), rng.randint(1, 3)
        from schurhr.acceptance import _rand_partition

        lam = _rand_partition(rng, rng.randint(1, 5), max_part=e1)
        mu = _rand_partition(rng, rng.randint(1, 5), max_part=e2)
        d = rng.randint(1, lam.weight + mu.weight)
        x = [Fraction(rng.randint(0, 10), rng.randint(1, 3)) for _ in range(e1)]
        y = [Fraction(rng.randint(0, 10), rng.randint(1, 3)) for _ in range(e2)]
        assert is_log_concave(pair_value_sequence(lam, mu, d, x, y))


def test_ultra_log_concavity_of_elementary_values():
    rng = random.Random(47)
    for e in range(1, 6):
        for _ in range(10):
            x = [Fraction(rng.randint(0, 9), rng.randint(1, 2)) for _ in range(e)]
            seq = derived_value_sequence((e,), x)
            assert is_ultra_log_concave(seq.values)


def test_twisted_forms_are_hr_for_positive_twists():
    rng = random.Random(53)
    X, E = _p2p3_bundle()
    for lam in [(3,), (1, 1, 1), (2, 1)]:
        for _ in range(5):
            t = Fraction(rng.randint(1, 8), rng.randint(1, 8))
            mat = twisted_schur_form(E, lam, (1, 1), min(t, Fraction(1)))
            assert is_hr(mat)
        assert is_weak_hr(intersection_form(schur_class(lam, E), X))
