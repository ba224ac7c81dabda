import csv
import io
import itertools
import json
import random

import pytest
from hypothesis import given, strategies as st

from asmt.errors import DomainError
from asmt.weyl import (
    IDENTITY,
    POSITIVE_ROOTS,
    RHO,
    S_A,
    S_B,
    W0_M,
    Character,
    WeylElement,
    act,
    chamber_rays,
    coroot_pairings,
    chamber_csv,
    chamber_data,
    chamber_json,
    half_sum_positive_roots,
    hodge_tate_weights,
    is_g_dominant,
    is_m_dominant,
    jh_weight,
    kappa_w,
    kostant_representatives,
    minimal_coset_representatives,
    mu_pairing,
    random_character,
    slope_bound,
    w_lambda,
    weyl_group,
)

LAM = Character(1, 1, -2)
REGULAR = Character(0, -2, -2)

characters = st.builds(Character, st.integers(-30, 30), st.integers(-30, 30), st.integers(-30, 30))


def _markers(records):
    return sorted((r["x"], r["y"]) for r in records if r["kind"] == "marker")


class TestCharacters:
    def test_parse(self):
        assert Character.parse("1,1,-2") == LAM
        assert Character.parse("(1,1;-2)") == LAM
        assert Character.parse("1,1", default_w="neg") == LAM
        assert Character.parse("1,2") == Character(1, 2, 0)
        for bad in ["1", "a,b", "1,2,3,4"]:
            with pytest.raises(DomainError):
                Character.parse(bad)

    def test_lattice_parity(self):
        assert LAM.in_lattice
        assert not RHO.in_lattice
        assert str(RHO) == "(-1,-2;0)"

    def test_mu_pairing(self):
        assert mu_pairing(Character(0, 0, 2)) == 1
        assert mu_pairing(Character(1, 1, 2)) == 0
        with pytest.raises(DomainError):
            mu_pairing(RHO)

    @given(characters, characters)
    def test_mu_pairing_is_linear(self, a, b):
        if a.in_lattice and b.in_lattice:
            assert mu_pairing(a + b) == mu_pairing(a) + mu_pairing(b)


class TestWeylGroup:
    def test_generator_actions(self):
        assert act(S_A, Character(1, 2, 0)) == Character(2, 1, 0)
        assert act(S_B, Character(1, 2, 0)) == Character(-1, 2, 0)
        assert act(WeylElement.parse("s_b s_a s_b"), Character(0, -1, -2)) == Character(1, 0, -2)

    def test_order_and_lengths(self):
        W = weyl_group()
        assert len(W) == 8 and len(set(W)) == 8
        assert sorted(w.length for w in W) == [0, 1, 1, 2, 2, 3, 3, 4]

    def test_action_is_a_group_action(self):
        rng = random.Random(5)
        ks = [random_character(rng) for _ in range(100)]
        for u, v in itertools.product(weyl_group(), repeat=2):
            for k in ks:
                assert act(u * v, k) == act(u, act(v, k))

    def test_inverse(self):
        for w in weyl_group():
            assert w * w.inverse() == IDENTITY

    def test_parse_and_str(self):
        assert str(WeylElement.parse("bab")) == "s_b s_a s_b"
        assert WeylElement.parse("1") == IDENTITY
        with pytest.raises(DomainError):
            WeylElement.parse("abc")


class TestRootDatum:
    def test_rho(self):
        assert half_sum_positive_roots() == RHO

    def test_dominance_examples(self):
        assert is_m_dominant(Character(2, 2, 2)) and not is_g_dominant(Character(2, 2, 2))
        assert is_m_dominant(Character(0, -1, -2)) and is_g_dominant(Character(0, -1, -2))
        assert not is_m_dominant(Character(1, 2, 0))

    def test_dominance_matches_coroots(self):
        for k1, k2 in itertools.product(range(-6, 7), repeat=2):
            k = Character(k1, k2, 0)
            assert is_g_dominant(k) == all(c >= 0 for c in coroot_pairings(k))

    def test_kostant_representatives(self):
        reps = kostant_representatives()
        assert [w.length for w in reps] == [0, 1, 2, 3]
        assert reps[0] == IDENTITY and reps[1] == S_B
        assert str(reps[3]) == "s_b s_a s_b"
        assert set(reps) == set(minimal_coset_representatives())
        assert W0_M == S_A

    def test_kostant_property(self):
        for k1, k2 in itertools.product(range(-8, 1), repeat=2):
            k = Character(k1, k2, 0)
            if not is_g_dominant(k):
                continue
            for w in kostant_representatives():
                assert is_m_dominant(act(w, k))


class TestKappa:
    def test_table(self):
        got = [kappa_w(LAM, w) for w in kostant_representatives()]
        assert got == [Character(2, 2, 2), Character(2, 2, 2), Character(1, 1, 2), Character(1, 1, 2)]

    def test_stabilizer(self):
        assert set(w_lambda(LAM)) == {IDENTITY, S_B}
        assert len(w_lambda(-RHO)) == 8
        assert w_lambda(Character(0, -1, -1)) == [IDENTITY]

    def test_minus_rho_is_fixed(self):
        assert {kappa_w(-RHO, w) for w in kostant_representatives()} == {Character(1, 2, 0)}

    @given(characters)
    def test_constant_on_stabilizer_cosets(self, lam):
        reps = kostant_representatives()
        stab = w_lambda(lam)
        for w in reps:
            coset = {w * u for u in stab}
            for v in reps:
                if v in coset:
                    assert kappa_w(lam, v) == kappa_w(lam, w)

    def test_mu_pairing_vanishes_on_the_higher_weights(self):
        reps = kostant_representatives()
        assert mu_pairing(kappa_w(LAM, reps[2])) == mu_pairing(kappa_w(LAM, reps[3])) == 0


class TestSlopes:
    def test_examples(self):
        assert slope_bound(Character(0, 0, 0), IDENTITY) == Character(-3, -3, 0)
        w0 = WeylElement.parse("abab")
        assert slope_bound(Character(0, 0, 0), w0) == act(w0.inverse(), act(S_A, RHO)) + RHO

    @given(characters, st.lists(st.integers(0, 5), min_size=4, max_size=4))
    def test_slope_of_jh_weight(self, lam, n):
        for w in kostant_representatives():
            shift = Character(0, 0, 0)
            for c, r in zip(n, POSITIVE_ROOTS):
                shift = shift + c * r
            assert slope_bound(jh_weight(lam, w, n), w) == -lam + shift

    @given(characters)
    def test_jh_weight_matches_kappa(self, lam):
        for w in kostant_representatives():
            lhs = -act(w.inverse(), act(S_A, kappa_w(lam, w)))
            assert lhs == jh_weight(lam, w)

    def test_jh_weight_root_shift(self):
        base = jh_weight(LAM, IDENTITY)
        shifted = jh_weight(LAM, IDENTITY, {0: 1})
        assert (shifted.k1 - shifted.k2) == (base.k1 - base.k2) - 2
        with pytest.raises(DomainError):
            jh_weight(LAM, IDENTITY, [1, -1, 0, 0])


class TestHodgeTate:
    def test_examples(self):
        assert hodge_tate_weights(2).weights == (0, 0, 1, 1) and not hodge_tate_weights(2).regular
        assert hodge_tate_weights(3).weights == (0, 1, 2, 3) and hodge_tate_weights(3).regular
        assert hodge_tate_weights(10).weights == (0, 8, 9, 17)
        with pytest.raises(DomainError):
            hodge_tate_weights(1)


class TestChambers:
    def test_markers_for_the_example(self):
        assert _markers(chamber_data(LAM)) == [(1, 1), (1, 1), (2, 2), (2, 2)]

    def test_regular_reference_weight(self):
        assert _markers(chamber_data(REGULAR)) == [(0, -2), (2, -2), (5, 1), (5, 3)]

    def test_minus_rho_collapses(self):
        assert _markers(chamber_data(-RHO)) == [(1, 2)] * 4

    def test_structure(self):
        recs = chamber_data(LAM)
        vertex = [r for r in recs if r["kind"] == "vertex"]
        assert [(v["x"], v["y"]) for v in vertex] == [(1, 2)]
        assert sorted(r["label"] for r in recs if r["kind"] == "chamber") == ["^0w", "^1w", "^2w", "^3w"]
        rays = {(r["x"], r["y"]) for r in recs if r["kind"] == "ray"}
        assert rays == {d for pair in chamber_rays().values() for d in pair}
        assert all(r["y"] <= r["x"] for r in recs if r["kind"] == "dot")

    def test_rays_bound_the_markers(self):
        # each chamber is the cone at -rho spanned by its two rays; its marker lies inside
        rays = chamber_rays()
        for i, w in enumerate(kostant_representatives()):
            k = kappa_w(REGULAR, w)
            x, y = k.k1 - 1, k.k2 - 2
            (a, b), (c, d) = rays[f"^{i}w"]
            det = a * d - b * c
            s, t = (x * d - y * c) / det, (a * y - b * x) / det
            assert s >= 0 and t >= 0

    def test_serializations(self):
        recs = chamber_data(LAM)
        rows = list(csv.DictReader(io.StringIO(chamber_csv(recs))))
        assert len(rows) == len(recs) and set(rows[0]) == {"kind", "x", "y", "label"}
        assert json.loads(chamber_json(recs)) == recs
