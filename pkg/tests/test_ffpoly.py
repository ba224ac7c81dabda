import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from asmt.errors import DomainError
from asmt.ffpoly import (
    NEG_INF,
    FiniteField,
    FpPoly,
    IntPoly,
    factor_degrees,
    factor_over_fp,
    gf,
    is_irreducible_fp,
    is_squarefree_q,
    rational_roots,
    sturm_real_root_count,
)
from oracles import bisection_real_roots


def _product(factors, p):
    out = FpPoly.one(p)
    for fac, m in factors:
        for _ in range(m):
            out = out * fac
    return out


def _has_root_in_extension(poly, j):
    F = gf(poly.p, j)
    return any(F.evaluate(poly.coeffs, x) == 0 for x in F.elements())


def _certified_irreducible(poly):
    # no roots over F_{p^j}, j <= deg/2, rules out every factor of degree <= deg/2
    return all(not _has_root_in_extension(poly, j) for j in range(1, poly.degree // 2 + 1))


class TestIntPoly:
    def test_zero_is_empty_with_neg_inf_degree(self):
        z = IntPoly([0, 0])
        assert z.coeffs == () and z.degree == NEG_INF and str(z) == "[0]"

    def test_parse_roundtrip(self):
        p = IntPoly.parse("[1, 0,0,0,0,1]")
        assert p.coeffs == (1, 0, 0, 0, 0, 1) and str(p) == "[1,0,0,0,0,1]"

    @pytest.mark.parametrize("bad", ["[1,2", "{1:2}", "[1.5]", "[true]"])
    def test_parse_rejects(self, bad):
        with pytest.raises(DomainError):
            IntPoly.parse(bad)

    def test_arithmetic(self):
        x = IntPoly.x()
        assert (x + 1) * (x - 1) == IntPoly((-1, 0, 1))
        assert ((x + 1) ** 3).coeffs == (1, 3, 3, 1)
        assert IntPoly((1, 2, 3)).derivative() == IntPoly((2, 6))
        assert IntPoly((6, 4)).primitive_part() == IntPoly((3, 2))
        assert IntPoly((1, -1, 0, 0, 0, 1))(2) == 31

    def test_pretty(self):
        assert IntPoly((1, -1, 0, 0, 0, 1)).pretty() == "x^5 - x + 1"
        assert IntPoly().pretty() == "0"


class TestFactorization:
    def test_x5_x_1_over_f2(self):
        fac = factor_over_fp(FpPoly(2, (1, 1, 0, 0, 0, 1)))
        assert [(f.coeffs, m) for f, m in fac] == [((1, 1, 1), 1), ((1, 0, 1, 1), 1)]
        assert all(_certified_irreducible(f) for f, _ in fac)

    def test_x2_minus_1_over_f3(self):
        fac = factor_over_fp(FpPoly(3, (-1, 0, 1)))
        assert [f.coeffs for f, _ in fac] == [(1, 1), (2, 1)]

    def test_x2_plus_1_irreducible_over_f3(self):
        fac = factor_over_fp(FpPoly(3, (1, 0, 1)))
        assert [(f.coeffs, m) for f, m in fac] == [((1, 0, 1), 1)]
        assert all(FpPoly(3, (1, 0, 1))(a) for a in range(3))

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            factor_over_fp(FpPoly(5, ()))

    def test_repeated_and_inseparable_factors(self):
        p = 3
        f = FpPoly(p, (1, 1)) * FpPoly(p, (1, 1)) * FpPoly(p, (0, 0, 0, 1)) * FpPoly(p, (2, 0, 0, 1))
        fac = factor_over_fp(f)
        assert _product(fac, p) == f.monic()
        assert factor_degrees(f) == tuple(sorted(d for g, m in fac for d in [g.degree] * m))

    def test_cantor_zassenhaus_path(self):
        # p^d above the exhaustive limit forces the randomized split
        p = 101
        f = FpPoly(p, (3, 5, 0, 7, 1, 1, 9))
        fac = factor_over_fp(f)
        assert _product(fac, p) == f.monic()
        assert all(is_irreducible_fp(g) for g, _ in fac)

    @given(
        st.sampled_from([2, 3, 5, 7]),
        st.lists(st.integers(0, 100), min_size=2, max_size=8),
    )
    def test_reexpansion(self, p, coeffs):
        f = FpPoly(p, coeffs)
        if f.degree < 1:
            return
        fac = factor_over_fp(f)
        assert _product(fac, p) == f.monic()
        for g, _ in fac:
            assert g.leading == 1
            if g.degree <= 6:
                assert _certified_irreducible(g)


class TestFields:
    @pytest.mark.parametrize(
        "p,k,mod",
        [(2, 2, (1, 1, 1)), (2, 3, (1, 1, 0, 1)), (2, 6, (1, 1, 0, 0, 0, 0, 1)), (3, 2, (1, 0, 1))],
    )
    def test_defining_polynomials(self, p, k, mod):
        assert gf(p, k).modulus.coeffs == mod

    @pytest.mark.parametrize(
        "p,k", [(2, 1), (2, 2), (2, 3), (2, 4), (2, 6), (3, 1), (3, 2), (3, 3), (5, 2), (7, 2), (11, 2)]
    )
    def test_frobenius_is_a_bijection(self, p, k):
        F = gf(p, k)
        images = {F.frobenius(a) for a in F.elements()}
        assert images == set(F.elements())

    @pytest.mark.parametrize("p,k", [(2, 2), (3, 2), (2, 3), (5, 2)])
    def test_field_axioms(self, p, k):
        F = gf(p, k)
        els = list(F.elements())
        for a, b in itertools.product(els, repeat=2):
            assert F.mul(a, b) == F.mul(b, a)
            assert F.sub(F.add(a, b), b) == a
        for a in els[1:]:
            assert F.mul(a, F.inv(a)) == 1
        a, b, c = els[-1], els[len(els) // 2], els[1]
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))

    def test_reducible_modulus_rejected(self):
        with pytest.raises(DomainError):
            FiniteField(3, 2, (2, 0, 1))  # t^2 - 1

    def test_element_wrapper(self):
        F = gf(2, 2)
        t = F(2)
        assert t * t == t + 1
        assert (t**3).value == 1
        assert (t / t).value == 1


class TestRationalPolys:
    def test_squarefree_examples(self):
        assert is_squarefree_q(IntPoly((9, 0, 2, 0, 1)))
        assert not is_squarefree_q(IntPoly((1, -2, 1)))
        assert not is_squarefree_q(IntPoly((4, 4, 5, 2, 1)))
        with pytest.raises(DomainError):
            is_squarefree_q(IntPoly())

    def test_sturm_examples(self):
        assert sturm_real_root_count(IntPoly((-1, 0, 1))) == 2
        assert sturm_real_root_count(IntPoly((1, 0, 1))) == 0
        assert sturm_real_root_count(IntPoly((1, -1, 0, 0, 0, 1))) == 1
        assert bisection_real_roots([1, -1, 0, 0, 0, 1]) == 1

    def test_sturm_rejects_repeated_roots(self):
        with pytest.raises(DomainError):
            sturm_real_root_count(IntPoly((1, -2, 1)))

    def test_rational_roots(self):
        assert rational_roots(IntPoly((-2, 1, 1))) == [Fraction(-2), Fraction(1)]
        assert rational_roots(IntPoly((1, 0, 0, 0, 0, 0, 1))) == []
        assert rational_roots(IntPoly((0, -1, 2))) == [Fraction(0), Fraction(1, 2)]

    @given(st.lists(st.integers(-9, 9), min_size=2, max_size=5))
    def test_square_is_never_squarefree(self, coeffs):
        P = IntPoly(coeffs)
        if P.degree < 1:
            return
        assert not is_squarefree_q(P * P)

    @given(st.lists(st.integers(-20, 20), min_size=6, max_size=6))
    def test_sturm_matches_bisection(self, coeffs):
        P = IntPoly(coeffs)
        if P.degree < 1 or not is_squarefree_q(P):
            return
        r = sturm_real_root_count(P)
        assert r == bisection_real_roots(P.coeffs)
        assert (P.degree - r) % 2 == 0
