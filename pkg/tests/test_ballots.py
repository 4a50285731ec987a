"""Distance-weight ballot rules, tallies and Schur parameters."""

import random
from fractions import Fraction as F

import pytest

from wreathvote import ballots as bl
from wreathvote import combinatorics as cb
from wreathvote import decomposition as dc
from wreathvote import ratlinalg as la


class TestScoringMatrix:
    def test_2wr2_borda_row(self):
        M = bl.scoring_matrix(bl.named_weights("borda_like", 2, 2))
        assert [int(x) for x in M[0]] == [2, 1, 1, 0]

    def test_3wr3_borda_row_head(self):
        # first nine entries follow the disagreement counts from (1_1,2_1,3_1)
        M = bl.scoring_matrix(bl.named_weights("borda_like", 3, 3))
        assert [int(x) for x in M[0][:9]] == [3, 2, 2, 2, 1, 1, 2, 1, 1]

    def test_constant_weights(self):
        M = bl.scoring_matrix(bl.distance_weights(2, 2, [1, 1, 1]))
        assert all(x == 1 for row in M for x in row)

    def test_symmetry(self):
        M = bl.scoring_matrix(bl.distance_weights(3, 2, [5, F(1, 2), -2]))
        assert M == la.transpose(M)


class TestTally:
    def test_single_ballot(self):
        t = bl.tally_committee_ballots(bl.named_weights("borda_like", 2, 2), [1, 0, 0, 0])
        assert [int(x) for x in t.scores] == [2, 1, 1, 0]
        assert t.winners == (0,)

    def test_pairing_weights_tie(self):
        t = bl.tally_committee_ballots(bl.distance_weights(2, 2, [1, 0, 1]), [1, 0, 0, 0])
        assert [int(x) for x in t.scores] == [1, 0, 0, 1]
        assert t.winners == (0, 3)

    def test_empty_profile(self):
        t = bl.tally_committee_ballots(bl.named_weights("borda_like", 2, 2), [0, 0, 0, 0])
        assert t.winners == (0, 1, 2, 3)

    def test_matches_matrix_product(self):
        rng = random.Random(11)
        w = bl.distance_weights(3, 2, [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3)])
        p = la.as_vector([F(rng.randint(-5, 5)) for _ in range(9)])
        t = bl.tally_committee_ballots(w, p)
        assert t.scores == la.matvec(bl.scoring_matrix(w), p)


class TestNamedWeights:
    def test_values(self):
        assert list(bl.named_weights("borda_like", 2, 2).a) == [2, 1, 0]
        assert list(bl.named_weights("approval_nondisjoint", 4, 4).a) == [1, 1, 1, 1, 0]
        assert list(bl.named_weights("alternating", 4, 3).a) == [1, -1, 1, -1]
        assert list(bl.named_weights("complement_pair", 2, 4).a) == [1, 0, 0, 0, 1]
        assert list(bl.named_weights("parity_even", 2, 4).a) == [1, 0, 1, 0, 1]
        assert list(bl.named_weights("first_last", 5, 3).a) == [1, 0, 0, 1]

    def test_m_restrictions(self):
        with pytest.raises(ValueError):
            bl.named_weights("complement_pair", 3, 3)
        with pytest.raises(ValueError):
            bl.named_weights("parity_even", 4, 2)
        with pytest.raises(ValueError):
            bl.named_weights("no_such_rule", 2, 2)


class TestSchurParameters:
    @pytest.mark.parametrize("m", [2, 3, 4])
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_borda_like(self, m, n):
        params = bl.schur_parameters(bl.named_weights("borda_like", m, n))
        expected = [n * m ** (n - 1), m ** (n - 1)] + [0] * (n - 1)
        assert list(params.lam) == expected

    def test_pairing_2wr2(self):
        params = bl.schur_parameters(bl.distance_weights(2, 2, [1, 0, 1]))
        assert list(params.lam) == [2, 0, 2]

    def test_approval_4wr4(self):
        params = bl.schur_parameters(bl.named_weights("approval_nondisjoint", 4, 4))
        assert list(params.lam) == [175, 27, -9, 3, -1]

    @pytest.mark.parametrize("m, n", [(3, 2), (2, 3), (3, 3), (4, 2)])
    def test_approval_closed_form(self, m, n):
        params = bl.schur_parameters(bl.named_weights("approval_nondisjoint", m, n))
        expected = [m**n - (m - 1) ** n] + [
            (-1) ** (k + 1) * (m - 1) ** (n - k) for k in range(1, n + 1)
        ]
        assert list(params.lam) == expected

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_complement_pair(self, n):
        params = bl.schur_parameters(bl.named_weights("complement_pair", 2, n))
        assert list(params.lam) == [2 if k % 2 == 0 else 0 for k in range(n + 1)]

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_parity_even_kills_middle(self, n):
        params = bl.schur_parameters(bl.named_weights("parity_even", 2, n))
        assert [k for k in range(n + 1) if params.lam[k] != 0] == [0, n]

    @pytest.mark.parametrize("n", [2, 3])
    def test_alternating_4(self, n):
        params = bl.schur_parameters(bl.named_weights("alternating", 4, n))
        assert list(params.lam) == [(-1) ** (i + n) * 2**n for i in range(n + 1)]

    @pytest.mark.parametrize("m, n", [(2, 2), (3, 2), (2, 3)])
    def test_scalar_on_every_spanning_vector(self, m, n):
        # the scalar must hold for all spanning vectors, not just the probe
        rng = random.Random(42)
        w = bl.distance_weights(m, n, [F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(n + 1)])
        params = bl.schur_parameters(w)
        M = bl.scoring_matrix(w)
        for k in range(n + 1):
            for c in cb.enumerate_committees(m, n):
                v = dc.component_vector(m, n, k, c).vector
                assert la.matvec(M, v) == la.vec_scale(params.lam[k], v)

    def test_argmax_unchanged_by_constant_shift(self):
        rng = random.Random(9)
        for _ in range(20):
            a = [F(rng.randint(-4, 4)) for _ in range(3)]
            shift = F(rng.randint(1, 5))
            p = [F(rng.randint(0, 6)) for _ in range(4)]
            t1 = bl.tally_committee_ballots(bl.distance_weights(2, 2, a), p)
            t2 = bl.tally_committee_ballots(
                bl.distance_weights(2, 2, [x + shift for x in a]), p
            )
            assert t1.winners == t2.winners


class TestIndicatorWeightSupports:
    @pytest.mark.parametrize("m, n", [(2, 2), (3, 2), (2, 3)])
    def test_support_matches_profile_expansion(self, m, n):
        # the by-distance indicator [0,..,1,..,0], read as a vector in the
        # committee space, must occupy exactly the components whose
        # spanning profiles appear in its expansion over the profile basis
        base = cb.enumerate_committees(m, n)[0]
        profiles = [dc.distance_profile(m, n, k).values for k in range(n + 1)]
        for k0 in range(n + 1):
            indicator = [F(1) if d == k0 else F(0) for d in range(n + 1)]
            coeffs = la.solve(la.transpose(profiles), indicator)
            expansion_support = tuple(k for k, c in enumerate(coeffs) if c != 0)
            placed = dc.profile_vector(m, n, la.as_vector(indicator), base)
            report = dc.decompose_result(m, n, placed)
            assert report.support() == expansion_support


class TestAnalyzeRule:
    def test_approval_reverses_pair_information(self):
        # middle-heavy profile around one committee under the approval rule
        base = (0, 0, 0, 0)
        p1 = dc.component_vector(4, 4, 1, base).vector
        p2 = dc.component_vector(4, 4, 2, base).vector
        profile = la.vec_add(p1, p2)
        assert dc.profile_vector(4, 4, la.as_vector([66, 26, 2, -6, 2]), base) == profile
        analysis = bl.analyze_rule_on_profile(
            bl.named_weights("approval_nondisjoint", 4, 4), profile
        )
        scores = analysis.scores.input
        target = dc.profile_vector(4, 4, la.as_vector([-18, 6, 14, 6, -18]), base)
        ratio = scores[0] / target[0]
        assert ratio == 9
        assert scores == la.vec_scale(ratio, target)
        assert analysis.effects[2] == "reversed"
        assert analysis.effects[1] == "amplified"

    def test_trivial_profile_stays_trivial(self):
        analysis = bl.analyze_rule_on_profile(
            bl.named_weights("borda_like", 2, 2), [3, 3, 3, 3]
        )
        assert analysis.profile.support() == (0,)
        assert analysis.scores.support() == (0,)
