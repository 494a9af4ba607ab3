"""Schur polynomials: determinant route, tableau route, shift expansions."""

import random
import threading
from fractions import Fraction

import pytest

from schurhr.partitions import Partition, partitions_in_box, partitions_up_to
from schurhr.polyring import MultiPoly, elementary
from schurhr.schur import (derived_all, derived_schur, derived_table_check,
                           dual_reversal_check, elementary_row_check,
                           format_elementary, schur_jt, schur_ssyt,
                           to_elementary_basis)


def test_jt_examples():
    assert schur_jt((1, 1), 2) == MultiPoly(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    c1, c2, c3 = (elementary(i, 3) for i in (1, 2, 3))
    assert schur_jt((1, 1, 1), 3) == c1 * c1 * c1 - 2 * (c1 * c2) + c3
    assert schur_jt((2, 1), 2) == MultiPoly(2, {(2, 1): 1, (1, 2): 1})


def test_jt_vanishes_iff_first_part_exceeds_vars():
    for lam in partitions_up_to(6):
        for e in (1, 2, 3):
            assert schur_jt(lam, e).is_zero == (lam.first > e)


def test_jt_stable_under_trailing_zeros():
    assert schur_jt((2, 1), 2) == schur_jt((2, 1, 0, 0), 2)


def test_ssyt_route_examples():
    assert schur_ssyt((1, 1), 2) == schur_jt((1, 1), 2)
    # in the elementary-determinant convention the single column carries the
    # pure power; the single row dies once its first part exceeds the
    # variable count
    assert schur_ssyt((1, 1, 1), 1) == MultiPoly(1, {(3,): 1})
    assert schur_ssyt((3,), 1).is_zero
    p = schur_ssyt((2, 1), 3)
    # seven support monomials carrying eight tableaux in total
    assert len(p.terms) == 7
    assert sum(p.terms.values()) == 8
    assert p.coefficient((1, 1, 1)) == 2
    assert p.coefficient((2, 1, 0)) == 1


def test_two_routes_agree_small_sweep():
    for lam in partitions_up_to(6):
        for e in (1, 2, 3):
            assert schur_jt(lam, e) == schur_ssyt(lam, e)


def test_derived_examples_match_closed_forms():
    assert derived_schur((1, 1), 1, 2) == 3 * elementary(1, 2)
    assert derived_schur((1, 1), 2, 2) == MultiPoly.constant(3, 2)
    assert derived_schur((2,), 1, 4) == 3 * elementary(1, 4)


def test_derived_out_of_range_is_zero():
    assert derived_schur((2, 1), -1, 2).is_zero
    assert derived_schur((2, 1), 4, 2).is_zero
    assert derived_schur((2, 1), 0, 2) == schur_jt((2, 1), 2)


def test_derived_defining_identity_at_random_points():
    rng = random.Random(11)
    for lam in [(2, 1), (1, 1, 1), (3, 2)]:
        for e in (2, 3):
            polys = derived_all(lam, e)
            for _ in range(5):
                point = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(e)]
                t = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                lhs = schur_jt(lam, e).evaluate([v + t for v in point])
                rhs = sum(p.evaluate(point) * t**i for i, p in enumerate(polys))
                assert lhs == rhs


def test_derived_coefficients_nonnegative():
    for lam in partitions_up_to(6):
        for e in (1, 2, 3):
            for p in derived_all(lam, e):
                assert all(c > 0 for c in p.terms.values())


def test_derived_top_coefficient_positive_constant():
    for lam, e in [((2, 1), 3), ((1, 1), 2), ((3,), 3)]:
        lam = Partition(lam)
        top = derived_all(lam, e)[lam.weight]
        assert top.total_degree() == 0
        assert top.coefficient((0,) * e) > 0


def test_derived_table_all_pass():
    for e in (3, 4, 5):
        report = derived_table_check(e)
        assert len(report) == 20
        assert all(ok for _, ok in report)


def test_derived_table_needs_three_vars():
    with pytest.raises(ValueError):
        derived_table_check(2)


def test_elementary_row_identity():
    for e in range(1, 6):
        for p in range(e + 1):
            assert elementary_row_check(p, e)


def test_dual_reversal_examples():
    assert dual_reversal_check((2, 1), 2, 2)
    assert dual_reversal_check((0,), 3, 1)
    assert dual_reversal_check((2, 2), 2, 3)


def test_dual_reversal_random_boxes():
    rng = random.Random(7)
    for _ in range(40):
        e = rng.randint(1, 4)
        N = rng.randint(1, 5)
        lam = rng.choice(list(partitions_in_box(e, N)))
        assert dual_reversal_check(lam, e, N)


def test_elementary_basis_round_trip():
    p = schur_jt((1, 1, 1), 3)
    basis = to_elementary_basis(p)
    rebuilt = MultiPoly.zero(3)
    for key, c in basis.items():
        term = MultiPoly.one(3)
        for i, k in enumerate(key):
            for _ in range(k):
                term = term * elementary(i + 1, 3)
        rebuilt = rebuilt + c * term
    assert rebuilt == p
    assert format_elementary(basis) == "c1^3 - 2*c1*c2 + c3"


def test_cache_is_thread_safe():
    from schurhr import schur as schur_mod

    schur_mod.clear_caches()
    results = []

    def work():
        results.append(schur_jt((3, 2, 1), 3))

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)
