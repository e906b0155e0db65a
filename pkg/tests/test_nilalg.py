import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ktgw.nilalg import (
    GENERATORS,
    H3Class,
    HomologyClass,
    GroupElem,
    IDENTITY,
    LieAlgElem,
    N1,
    N2,
    N3,
    N4,
    S1,
    S2,
    ZERO,
    aut_apply,
    bch_mul,
    bracket,
    exp,
    group_inv,
    group_mul,
    h2_pushforward,
    h3_pushforward,
    in_lattice,
    invert_word,
    log,
    word_matrix,
)
from oracles import (
    commutator_oracle,
    exp_oracle,
    group_mul_oracle,
    random_group,
    random_lattice_group,
    random_lie,
    random_plucker_class,
    random_word,
)

fractions_st = st.fractions(min_value=-30, max_value=30, max_denominator=12)
lie_st = st.builds(LieAlgElem, fractions_st, fractions_st, fractions_st,
                   fractions_st)


class TestBracket:
    def test_examples(self):
        assert bracket(N2, N1) == N4
        assert bracket(N1, N1) == ZERO
        rng = random.Random(0)
        for _ in range(20):
            assert bracket(N3, random_lie(rng)) == ZERO
            assert bracket(N4, random_lie(rng)) == ZERO

    def test_matches_matrix_commutator(self):
        rng = random.Random(1)
        for _ in range(1000):
            X, Y = random_lie(rng), random_lie(rng)
            assert bracket(X, Y) == commutator_oracle(X, Y)

    def test_antisymmetry_and_bilinearity(self):
        rng = random.Random(2)
        for _ in range(200):
            X, Y, Z = (random_lie(rng) for _ in range(3))
            assert bracket(X, Y) == -bracket(Y, X)
            assert bracket(X + Y, Z) == bracket(X, Z) + bracket(Y, Z)

    def test_two_step_nilpotency(self):
        rng = random.Random(3)
        for _ in range(300):
            X, Y, Z = (random_lie(rng) for _ in range(3))
            assert bracket(X, bracket(Y, Z)) == ZERO
            assert bracket(bracket(X, Y), Z) == ZERO


class TestGroup:
    def test_mul_examples(self):
        a = GroupElem(1, 0, 0, 0)
        b = GroupElem(0, 1, 0, 0)
        assert group_mul(a, b) == GroupElem(1, 1, 1, 0)
        assert group_mul(b, a) == GroupElem(1, 1, 0, 0)
        rng = random.Random(4)
        for _ in range(20):
            g = random_group(rng)
            assert group_mul(IDENTITY, g) == g
            assert group_mul(g, IDENTITY) == g

    def test_mul_matches_matrix_product(self):
        rng = random.Random(5)
        for _ in range(1000):
            a, b = random_group(rng), random_group(rng)
            assert group_mul(a, b) == group_mul_oracle(a, b)

    def test_associativity_and_inverse(self):
        rng = random.Random(6)
        for _ in range(200):
            a, b, c = (random_group(rng) for _ in range(3))
            assert group_mul(group_mul(a, b), c) == group_mul(a, group_mul(b, c))
            assert group_mul(a, group_inv(a)) == IDENTITY
            assert group_mul(group_inv(a), a) == IDENTITY


class TestExpLog:
    def test_exp_examples(self):
        assert exp(ZERO) == IDENTITY
        assert exp(N1 + N2) == GroupElem(1, 1, Fraction(1, 2), 0)
        assert exp(N4) == GroupElem(0, 0, 1, 0)

    def test_log_examples(self):
        assert log(IDENTITY) == ZERO
        assert log(GroupElem(1, 1, Fraction(1, 2), 0)) == N1 + N2
        assert log(GroupElem(0, 0, 1, 0)) == N4

    def test_exp_matches_matrix_exponential(self):
        rng = random.Random(7)
        for _ in range(500):
            X = random_lie(rng)
            assert exp(X) == exp_oracle(X)

    @given(lie_st)
    def test_log_exp_roundtrip(self, X):
        assert log(exp(X)) == X

    def test_exp_log_roundtrip_random(self):
        rng = random.Random(8)
        for _ in range(1000):
            g = random_group(rng)
            assert exp(log(g)) == g


class TestBch:
    def test_examples(self):
        assert bch_mul(N1, N2) == N1 + N2 - Fraction(1, 2) * N4
        rng = random.Random(9)
        for _ in range(20):
            X = random_lie(rng)
            assert bch_mul(X, ZERO) == X
        assert bch_mul(N3, N4) == N3 + N4

    @given(lie_st, lie_st)
    def test_exp_homomorphism(self, X, Y):
        assert exp(bch_mul(X, Y)) == group_mul(exp(X), exp(Y))


class TestLattice:
    def test_examples(self):
        assert in_lattice(GroupElem(1, 1, 1, 0))
        assert not in_lattice(GroupElem(Fraction(1, 2), 0, 0, 0))
        assert in_lattice(GroupElem(0, 0, 0, 3))

    def test_lattice_closed_under_product(self):
        rng = random.Random(10)
        for _ in range(200):
            a = random_lattice_group(rng)
            b = random_lattice_group(rng)
            assert in_lattice(group_mul(a, b))
            assert in_lattice(group_inv(a))


class TestAutomorphisms:
    def test_examples(self):
        assert aut_apply([S1], GroupElem(1, 0, 0, 0)) == GroupElem(0, 1, 0, 0)
        assert aut_apply([S2], GroupElem(0, 1, 0, 0)) == GroupElem(1, 1, 1, 0)
        rng = random.Random(11)
        for _ in range(20):
            g = random_group(rng)
            assert aut_apply([], g) == g

    def test_generator_inverses(self):
        rng = random.Random(12)
        for token in GENERATORS:
            word = (token,) + invert_word([token])
            for _ in range(50):
                g = random_group(rng)
                assert aut_apply(word, g) == g

    def test_word_inverse(self):
        rng = random.Random(13)
        for _ in range(200):
            w = random_word(rng)
            g = random_group(rng)
            assert aut_apply(w + invert_word(w), g) == g

    def test_group_homomorphism(self):
        rng = random.Random(14)
        for _ in range(300):
            w = random_word(rng)
            a, b = random_group(rng), random_group(rng)
            assert aut_apply(w, group_mul(a, b)) == group_mul(
                aut_apply(w, a), aut_apply(w, b))

    def test_preserves_lattice(self):
        rng = random.Random(15)
        for _ in range(300):
            w = random_word(rng)
            g = random_lattice_group(rng)
            assert in_lattice(aut_apply(w, g))

    def test_projection_compatibility(self):
        rng = random.Random(16)
        for _ in range(300):
            w = random_word(rng)
            g = random_group(rng)
            mat = word_matrix(w)
            out = aut_apply(w, g)
            assert out.x == mat[0][0] * g.x + mat[0][1] * g.y
            assert out.y == mat[1][0] * g.x + mat[1][1] * g.y

    def test_rejects_unknown_token(self):
        with pytest.raises(ValueError):
            aut_apply(["nope"], IDENTITY)


class TestH2Pushforward:
    def test_examples(self):
        assert h2_pushforward([S1], HomologyClass(1, 0, 0, 0)) == \
            HomologyClass(0, 1, 0, 0)
        assert h2_pushforward([S2], HomologyClass(0, 1, 0, 1)) == \
            HomologyClass(1, 1, 1, 1)
        A = HomologyClass(3, -2, 6, -4)
        assert h2_pushforward([], A) == A

    def test_preserves_plucker(self):
        rng = random.Random(17)
        for _ in range(300):
            A = random_plucker_class(rng)
            w = random_word(rng)
            B = h2_pushforward(w, A)
            assert B.a13 * B.a24 == B.a14 * B.a23

    def test_word_inverse(self):
        rng = random.Random(18)
        for _ in range(200):
            A = random_plucker_class(rng)
            w = random_word(rng)
            assert h2_pushforward(invert_word(w), h2_pushforward(w, A)) == A


class TestH3Pushforward:
    def test_examples(self):
        assert h3_pushforward([S1], H3Class(1, 0, 0)) == H3Class(0, 1, 0)
        C = H3Class(5, -7, 0)
        assert h3_pushforward([], C) == C
        assert h3_pushforward([S2], H3Class(1, 1, 0)) == H3Class(2, 1, 0)

    def test_rejects_nonzero_e124(self):
        with pytest.raises(ValueError):
            h3_pushforward([S1], H3Class(1, 0, 1))

    def test_matches_h2_matrix_action(self):
        rng = random.Random(19)
        for _ in range(200):
            w = random_word(rng)
            mat = word_matrix(w)
            e134 = Fraction(rng.randint(-20, 20), rng.randint(1, 4))
            e234 = Fraction(rng.randint(-20, 20), rng.randint(1, 4))
            out = h3_pushforward(w, H3Class(e134, e234, 0))
            assert out.e134 == mat[0][0] * e134 + mat[0][1] * e234
            assert out.e234 == mat[1][0] * e134 + mat[1][1] * e234
