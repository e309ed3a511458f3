"""Tests for external-number arithmetic, order, classification and shadows.

Minkowski soundness and the order definition are checked against a
representative-sampling oracle: members of alpha are rep + g with g drawn from
the neutrix near its threshold.
"""

from fractions import Fraction as F

import pytest

from solidus.errors import NotLimitedError, NotZerolessError
from solidus.external import (
    Classification,
    EXT_ONE,
    EXT_ZERO,
    as_external,
    canonicalize,
    classify,
    ext_abs,
    ext_add,
    ext_compare,
    ext_disjoint,
    ext_div,
    ext_inv,
    ext_member,
    ext_mul,
    ext_neg,
    ext_sub,
    ext_subset,
    is_limited,
    is_zeroless,
    magnitude,
    neutrix_part,
    pure,
    render_external,
    shadow,
    unity,
)
from solidus.field import ONE_POLY, Ordering, PreciseNum, RHO, RhoPoly
from solidus.neutrix import (
    FULL,
    INFINITESIMALS,
    LIMITED,
    NX_ZERO,
    closed_cut,
    nx_add,
    nx_scale,
    open_cut,
)

rp = RhoPoly.rho_power


def near_threshold_members(nx):
    """Group elements of nx with degrees hugging the threshold."""
    if nx == NX_ZERO:
        return [PreciseNum.of(0)]
    if nx == FULL:
        return [PreciseNum.of(x) for x in (0, 1, rp(3), rp(-3, -2))]
    q = nx.q
    out = [PreciseNum.of(0), PreciseNum.of(rp(q - 1, 2)), PreciseNum.of(rp(q - F(1, 2), -1))]
    if nx == closed_cut(q):
        out.append(PreciseNum.of(rp(q)))
        out.append(PreciseNum.of(rp(q, -3)))
    return out


def members(alpha):
    return [alpha.rep + g for g in near_threshold_members(alpha.nx)]


class TestCanonicalize:
    def test_absorption_into_limited(self):
        x = canonicalize(rp(1) + RhoPoly.constant(3) + rp(-1), LIMITED)
        assert x.rep == PreciseNum.of(rp(1))
        assert x.nx == LIMITED
        # oracle: the dropped tail is a member of the neutrix
        assert ext_member(rp(1) + RhoPoly.constant(3) + rp(-1), x)

    def test_zero_neutrix_keeps_ratio(self):
        ratio = PreciseNum(ONE_POLY, RhoPoly.from_terms([(1, 1), (0, 1)]))
        assert canonicalize(ratio, NX_ZERO).rep == ratio

    def test_series_absorption(self):
        geometric = PreciseNum.of(1) / (PreciseNum.of(1) - PreciseNum.of(rp(-1)))
        x = canonicalize(geometric, INFINITESIMALS)
        assert x == canonicalize(1, INFINITESIMALS)

    def test_threshold_term_survives_open_cut(self):
        x = canonicalize(rp(0), INFINITESIMALS)
        assert x.rep == 1
        y = canonicalize(rp(0), LIMITED)
        assert y.rep.is_zero()

    def test_full_collapses_rep(self):
        assert canonicalize(rp(2, 5), FULL).rep.is_zero()

    def test_equal_iff_same_parts(self):
        assert canonicalize(3 + 0, LIMITED) == canonicalize(5, LIMITED)
        assert canonicalize(rp(1), LIMITED) != canonicalize(rp(1), INFINITESIMALS)


class TestAddSub:
    def test_neutrix_max_then_absorb(self):
        a = canonicalize(rp(1), LIMITED)
        b = canonicalize(3, INFINITESIMALS)
        assert ext_add(a, b) == canonicalize(rp(1), LIMITED)

    def test_zero_identity(self):
        a = canonicalize(rp(2) + RhoPoly.constant(1), open_cut(-1))
        assert ext_add(a, EXT_ZERO) == a

    def test_self_subtraction_leaves_magnitude(self):
        a = canonicalize(5, INFINITESIMALS)
        assert ext_sub(a, a) == pure(INFINITESIMALS)

    def test_neg_keeps_neutrix(self):
        a = canonicalize(rp(1), LIMITED)
        assert ext_neg(a).rep == -a.rep and ext_neg(a).nx == LIMITED

    def test_minkowski_soundness_add(self):
        a = canonicalize(rp(1), LIMITED)
        b = canonicalize(3, INFINITESIMALS)
        s = ext_add(a, b)
        for x in members(a):
            for y in members(b):
                assert ext_member(x + y, s)


class TestMul:
    def test_one_plus_o_squared(self):
        a = canonicalize(1, INFINITESIMALS)
        sq = ext_mul(a, a)
        assert sq == a
        for x in members(a):
            for y in members(a):
                assert ext_member(x * y, sq)

    def test_unity_identity(self):
        a = canonicalize(rp(2) + RhoPoly.constant(-4), closed_cut(1))
        assert ext_mul(a, EXT_ONE) == a

    def test_rho_plus_limited_squared(self):
        a = canonicalize(rp(1), LIMITED)
        assert ext_mul(a, a) == canonicalize(rp(2), closed_cut(1))

    def test_zero_annihilates_even_full(self):
        assert ext_mul(EXT_ZERO, pure(FULL)) == EXT_ZERO

    def test_magnitude_of_product(self):
        a = canonicalize(rp(1), LIMITED)
        b = canonicalize(2, INFINITESIMALS)
        prod = ext_mul(a, b)
        expected = nx_add(
            nx_add(nx_scale(a.rep, b.nx), nx_scale(b.rep, a.nx)),
            nx_scale(PreciseNum.of(1), INFINITESIMALS),
        )
        assert neutrix_part(prod) == expected == open_cut(1)


class TestInverse:
    def test_rho_plus_limited(self):
        a = canonicalize(rp(1), LIMITED)
        inv = ext_inv(a)
        assert inv == canonicalize(rp(-1), closed_cut(-2))
        # multiply-back oracle
        assert ext_mul(a, inv) == unity(a) == canonicalize(1, closed_cut(-1))

    def test_precise(self):
        assert ext_inv(canonicalize(2)) == canonicalize(F(1, 2))

    def test_pure_neutrix_rejected(self):
        with pytest.raises(NotZerolessError):
            ext_inv(pure(LIMITED))
        with pytest.raises(NotZerolessError):
            ext_div(EXT_ONE, EXT_ZERO)

    def test_inverse_contract_on_ratio_rep(self):
        b = canonicalize(PreciseNum(ONE_POLY, RhoPoly.from_terms([(1, 1), (0, -1)])))
        assert ext_mul(b, ext_inv(b)) == EXT_ONE


class TestCompare:
    def test_zero_below_infinitesimals(self):
        assert ext_compare(EXT_ZERO, pure(INFINITESIMALS)) is Ordering.LT

    def test_reflexive(self):
        a = canonicalize(rp(1) + RhoPoly.constant(2), INFINITESIMALS)
        assert ext_compare(a, a) is Ordering.EQ

    def test_inclusion_order(self):
        a = canonicalize(1, INFINITESIMALS)
        b = canonicalize(1, LIMITED)
        assert ext_compare(a, b) is Ordering.LT
        # representative-sampling oracle: every member of a is <= some member of b
        top_of_b = b.rep + PreciseNum.of(rp(0, 3))
        for x in members(a):
            assert x <= top_of_b

    def test_sign_order(self):
        assert canonicalize(3, INFINITESIMALS) < canonicalize(4, INFINITESIMALS)
        assert canonicalize(rp(1)) > canonicalize(10**9, LIMITED)

    def test_full_is_top(self):
        m = pure(FULL)
        assert canonicalize(rp(5), closed_cut(2)) < m
        assert ext_compare(m, m) is Ordering.EQ


class TestSetPredicates:
    def test_member(self):
        assert ext_member(3, pure(LIMITED))
        assert not ext_member(rp(1), pure(LIMITED))
        assert ext_member(RhoPoly.constant(1) + rp(-1), canonicalize(1, INFINITESIMALS))

    def test_disjoint_and_subset(self):
        a = canonicalize(1, INFINITESIMALS)
        b = canonicalize(1, LIMITED)
        c = canonicalize(rp(1), INFINITESIMALS)
        assert ext_subset(a, b) and not ext_subset(b, a)
        assert ext_disjoint(a, c)
        assert not ext_disjoint(a, b)

    def test_trichotomy_samples(self):
        pairs = [
            (canonicalize(1, INFINITESIMALS), canonicalize(1, LIMITED)),
            (canonicalize(0), canonicalize(2)),
            (canonicalize(5, INFINITESIMALS), canonicalize(-5, INFINITESIMALS)),
            (pure(LIMITED), canonicalize(rp(1), LIMITED)),
        ]
        for a, b in pairs:
            relations = [ext_disjoint(a, b), ext_subset(a, b), ext_subset(b, a)]
            assert any(relations)
            if a != b:
                assert sum(relations) == 1


class TestClassifyUnity:
    def test_neutrix_part(self):
        assert neutrix_part(canonicalize(3, INFINITESIMALS)) == INFINITESIMALS
        assert magnitude(canonicalize(3, INFINITESIMALS)) == pure(INFINITESIMALS)

    def test_unity_of_rho_plus_limited(self):
        assert unity(canonicalize(rp(1), LIMITED)) == canonicalize(1, closed_cut(-1))

    def test_classify(self):
        assert classify(canonicalize(5)) is Classification.PRECISE
        assert classify(pure(LIMITED)) is Classification.PURE_NEUTRIX
        assert classify(pure(FULL)) is Classification.PURE_NEUTRIX
        assert classify(canonicalize(1, INFINITESIMALS)) is Classification.ZEROLESS_NONPRECISE

    def test_zeroless_predicate(self):
        assert is_zeroless(canonicalize(5))
        assert not is_zeroless(EXT_ZERO)
        assert not is_zeroless(pure(FULL))
        assert is_zeroless(canonicalize(rp(1), LIMITED))


class TestShadow:
    def test_absorbs_infinitesimal_tail(self):
        x = canonicalize(RhoPoly.constant(3) + rp(-1))
        assert shadow(x) == canonicalize(3, INFINITESIMALS)

    def test_zero(self):
        assert shadow(EXT_ZERO) == pure(INFINITESIMALS)

    def test_unlimited_rejected(self):
        with pytest.raises(NotLimitedError):
            shadow(canonicalize(rp(1)))
        with pytest.raises(NotLimitedError):
            shadow(pure(FULL))

    def test_is_limited(self):
        assert is_limited(canonicalize(F(7, 2), LIMITED))
        assert not is_limited(canonicalize(rp(F(1, 2))))
        assert not is_limited(canonicalize(0, closed_cut(1)))


class TestAbsAndRender:
    def test_abs(self):
        a = canonicalize(-3, INFINITESIMALS)
        assert ext_abs(a) == canonicalize(3, INFINITESIMALS)
        assert ext_abs(pure(LIMITED)) == pure(LIMITED)

    def test_render(self):
        assert render_external(canonicalize(rp(1), LIMITED)) == "rho + L"
        assert render_external(pure(INFINITESIMALS)) == "o"
        assert render_external(canonicalize(5)) == "5"
        assert render_external(EXT_ZERO) == "0"

    def test_as_external_coercions(self):
        assert as_external(3) == canonicalize(3)
        assert as_external(LIMITED) == pure(LIMITED)
        assert as_external(RHO) == canonicalize(rp(1))


class TestAxiomShapedIdentities:
    def test_distributivity_with_magnitude_correction(self):
        x = canonicalize(1, INFINITESIMALS)
        y = canonicalize(1)
        z = canonicalize(-1)
        lhs = ext_add(ext_mul(x, y), ext_mul(x, z))
        naive = ext_mul(x, ext_add(y, z))
        corrected = ext_add(
            ext_add(naive, ext_mul(magnitude(x), y)), ext_mul(magnitude(x), z)
        )
        assert lhs == corrected == pure(INFINITESIMALS)
        assert naive == EXT_ZERO and naive != lhs

    def test_unity_is_multiplicative(self):
        a = canonicalize(rp(1), LIMITED)
        b = canonicalize(1, INFINITESIMALS)
        assert unity(ext_mul(a, b)) == ext_mul(unity(a), unity(b))
