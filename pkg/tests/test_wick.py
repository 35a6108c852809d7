"""Symbolic quaternion Gaussian moments: oracle vs rule-based reduction."""

import random
from fractions import Fraction
from itertools import product

import pytest

from quatmoments import (MomentExpr, ResourceLimitError, bare_word, const,
                         enumerate_wick_pairings, full_moment,
                         isserlis_moment, re_words, real_gaussian,
                         wick_reduce, zvar)
from quatmoments.quaternion import I, J, Quat


def pairings(expr):
    return list(enumerate_wick_pairings(expr))


class TestPairingEnumeration:
    def test_four_equal_variables(self):
        assert len(pairings(bare_word([zvar(1)] * 4))) == 3

    def test_ids_must_match(self):
        expr = bare_word([zvar(1), zvar(2), zvar(1), zvar(2)])
        assert pairings(expr) == [((0, 2), (1, 3))]

    def test_odd_occurrences_yield_nothing(self):
        assert pairings(bare_word([zvar(1), zvar(2), zvar(3)])) == []

    def test_canonical_order(self):
        expr = bare_word([zvar(1)] * 4)
        assert pairings(expr) == [
            ((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]

    def test_conjugation_does_not_restrict(self):
        expr = bare_word([zvar(1), zvar(1, True)])
        assert len(pairings(expr)) == 1


class TestIsserlisOracle:
    def test_z_squared(self):
        assert isserlis_moment(bare_word([zvar(1), zvar(1)])) == Quat(-2)

    def test_z_zbar(self):
        assert isserlis_moment(bare_word([zvar(1), zvar(1, True)])) == Quat(4)

    def test_z_fourth(self):
        assert isserlis_moment(bare_word([zvar(1)] * 4)) == Quat(0)

    def test_with_constants(self):
        expr = bare_word([zvar(1), const(I), zvar(1), const(J)])
        assert isserlis_moment(expr) == 2 * (I * J)

    def test_empty_expression(self):
        assert isserlis_moment(MomentExpr(())) == Quat(1)

    def test_real_gaussian_variance(self):
        xi = real_gaussian(1, variance=2)
        assert isserlis_moment(bare_word([xi, xi])) == Quat(2)
        assert isserlis_moment(bare_word([xi] * 4)) == Quat(12)  # 3 v^2

    def test_real_gaussian_fraction_variance(self):
        xi = real_gaussian(1, variance=Fraction(1, 2))
        assert isserlis_moment(bare_word([xi, xi])) == Quat(Fraction(1, 2))

    def test_position_bound(self):
        with pytest.raises(ResourceLimitError):
            isserlis_moment(bare_word([zvar(1)] * 14))

    def test_mixed_kind_same_id_rejected(self):
        expr = bare_word([zvar(1), real_gaussian(1)])
        with pytest.raises(ValueError):
            isserlis_moment(expr)


def random_quat(rng):
    return Quat(*(rng.randint(-6, 6) for _ in range(4)))


class TestGaussianPairIdentities:
    """E(Z q1 Z q2), E(Z q1 Zbar q2) and their real-part forms, checked
    against the component oracle on random constant pairs."""

    def test_identities_on_random_pairs(self):
        rng = random.Random(101)
        z, zb = zvar(1), zvar(1, True)
        for _ in range(200):
            q1, q2 = random_quat(rng), random_quat(rng)
            c1, c2 = const(q1), const(q2)
            assert isserlis_moment(bare_word([z, c1, z, c2])) == \
                -2 * (q1.conj() * q2)
            assert isserlis_moment(bare_word([z, c1, zb, c2])) == \
                2 * ((q1 + q1.conj()) * q2)
            assert isserlis_moment(re_words([z, c1], [zb, c2])) == \
                Quat((q1 * q2).re())
            assert isserlis_moment(re_words([z, c1], [z, c2])) == \
                Quat((q1.conj() * q2).re())


class TestWickReduce:
    def test_base_cases(self):
        e = re_words([zvar(1), zvar(1, True)])
        assert wick_reduce(e, pairings(e)[0]) == 4
        e = re_words([zvar(1), zvar(1)])
        assert wick_reduce(e, pairings(e)[0]) == -2
        e = re_words([zvar(1)], [zvar(1)])
        assert wick_reduce(e, pairings(e)[0]) == 1

    def test_rejects_position_reuse(self):
        e = re_words([zvar(1), zvar(1), zvar(1), zvar(1)])
        with pytest.raises(ValueError):
            wick_reduce(e, ((0, 1), (1, 3)))

    def test_rejects_id_mismatch(self):
        e = re_words([zvar(1), zvar(2), zvar(1), zvar(2)])
        with pytest.raises(ValueError):
            wick_reduce(e, ((0, 1), (2, 3)))

    def test_rejects_constants(self):
        e = bare_word([zvar(1), const(I), zvar(1)])
        with pytest.raises(ValueError):
            wick_reduce(e, ((0, 1),))

    def test_rejects_real_factors(self):
        xi = real_gaussian(1)
        e = re_words([xi, xi])
        with pytest.raises(ValueError):
            wick_reduce(e, ((0, 1),))


def all_small_exprs(max_positions, max_ids=2):
    """Every block structure, id assignment and conjugation pattern up
    to the given size (not deduplicated)."""
    def compositions(total):
        if total == 0:
            yield ()
            return
        for first in range(1, total + 1):
            for rest in compositions(total - first):
                yield (first,) + rest

    for total in range(0, max_positions + 1):
        for sizes in compositions(total):
            for ids in product(range(1, max_ids + 1), repeat=total):
                for conj in product((False, True), repeat=total):
                    words = []
                    pos = 0
                    for j in sizes:
                        words.append(tuple(
                            zvar(ids[p], conj[p])
                            for p in range(pos, pos + j)))
                        pos += j
                    yield MomentExpr(tuple(words))


class TestOracleEquivalence:
    def test_small_exhaustive(self):
        # Full (undeduplicated) sweep at small size; the wide sweep runs
        # in the acceptance suite.
        checked = 0
        for expr in all_small_exprs(4):
            oracle = isserlis_moment(expr)
            total = sum(wick_reduce(expr, p)
                        for p in enumerate_wick_pairings(expr))
            assert oracle == Quat(total), expr
            checked += 1
        assert checked > 500

    def test_realness_of_re_products(self):
        rng = random.Random(5)
        for _ in range(100):
            sizes = [rng.randint(1, 3) for _ in range(rng.randint(1, 3))]
            words = [tuple(zvar(rng.randint(1, 2), rng.random() < 0.5)
                           for _ in range(j)) for j in sizes]
            assert isserlis_moment(MomentExpr(tuple(words))).is_real()

    def test_cyclic_invariance(self):
        rng = random.Random(17)
        for _ in range(80):
            j = rng.randint(2, 5)
            word = [zvar(rng.randint(1, 2), rng.random() < 0.5)
                    for _ in range(j)]
            base = full_moment(re_words(word, [zvar(1), zvar(1, True)]))
            for r in range(1, j):
                rotated = word[r:] + word[:r]
                assert full_moment(
                    re_words(rotated, [zvar(1), zvar(1, True)])) == base

    def test_block_order_invariance(self):
        rng = random.Random(23)
        for _ in range(60):
            words = [tuple(zvar(rng.randint(1, 3), rng.random() < 0.5)
                           for _ in range(rng.randint(1, 3)))
                     for _ in range(3)]
            e1 = MomentExpr(tuple(words))
            e2 = MomentExpr(tuple(reversed(words)))
            assert isserlis_moment(e1) == isserlis_moment(e2)

    def test_conjugating_every_occurrence_preserves_law(self):
        rng = random.Random(31)
        for _ in range(60):
            total = rng.choice((2, 4))
            word = [zvar(1, rng.random() < 0.5) for _ in range(total)]
            flipped = [zvar(1, not f.conjugated) for f in word]
            assert isserlis_moment(bare_word(word)) == \
                isserlis_moment(bare_word(flipped))


class TestFullMoment:
    def test_matches_oracle_with_constants(self):
        expr = re_words([zvar(1), const(I), zvar(1), const(J)],
                        [zvar(2), zvar(2, True)])
        assert full_moment(expr) == isserlis_moment(expr)

    def test_bare_value_matches_re_value_when_real(self):
        word = [zvar(1), zvar(2), zvar(1), zvar(2)]
        assert full_moment(bare_word(word)) == full_moment(re_words(word))

    def test_dipoles(self):
        for n in range(1, 5):
            words = []
            for k in range(1, n + 1):
                words.extend(([zvar(k)], [zvar(k)]))
            assert full_moment(re_words(*words)) == Quat(1)

    def test_real_gaussian_path(self):
        # Products mixing a variance-2 real factor with quaternions take
        # the per-pairing oracle route.
        xi = real_gaussian(1, variance=2)
        expr = re_words([xi, zvar(2), xi, zvar(2, True)])
        assert full_moment(expr) == isserlis_moment(expr)
