import itertools
import math
from collections import Counter
from fractions import Fraction

import pytest

from cherednik.affineperm import compositions, sorting_permutation
from cherednik.hilb import (
    FlagPoint,
    LabeledStaircase,
    enum_fhilb,
    enum_hilb,
    enum_nonreduced,
    enum_phillb,
    flag_count,
    gamma_weight_dim,
    gieseker_graded_dim,
    is_flag_point,
    jordan_composition,
    line_bundle_weights,
    nonreduced_weights,
    staircase_semigroup_closed,
)
from cherednik.modules import in_L_basis, simple_triv
from cherednik.tableaux import row_tableau

F = Fraction


class TestStaircases:
    def test_figure_ideal(self):
        points = enum_hilb(4, 3, 15)
        assert (7, 5, 3) in points
        assert jordan_composition((7, 5, 3), 4) == (2, 1)

    def test_k0(self):
        assert enum_hilb(4, 3, 0) == [(0, 0, 0)]
        assert jordan_composition((0, 0, 0), 4) == (3,)

    def test_defining_inequalities(self):
        for m, n in [(2, 3), (3, 4), (4, 3)]:
            for k in range(9):
                for c in enum_hilb(m, n, k):
                    assert sum(c) == k
                    assert all(a >= b for a, b in zip(c, c[1:]))
                    assert c[-1] >= max(0, c[0] - m)

    def test_counts_match_orbit_count(self):
        # staircases of codimension k ↔ sorted labels of the simple module
        for m, n in [(2, 3), (3, 2), (3, 4)]:
            for k in range(9):
                orbits = {tuple(sorted(a, reverse=True))
                          for a in compositions(k, n) if in_L_basis(a, m, n)}
                assert len(enum_hilb(m, n, k)) == len(orbits)

    def test_semigroup_closure(self):
        for m, n in [(2, 3), (4, 3), (3, 4)]:
            for k in range(8):
                for c in enum_hilb(m, n, k):
                    assert staircase_semigroup_closed(c, m, n, bound=3 * (k + m + n))

    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            jordan_composition((1, 2), 3)


class TestFlagPoints:
    def test_figure_philb(self):
        points = enum_phillb(4, 3, 15)
        match = [p for p in points if p.c == (3, 7, 5)]
        assert len(match) == 1
        assert match[0].alpha == (2, 0, 1)
        assert line_bundle_weights(match[0], 4, 3) == (17, 21, 19)

    def test_k0(self):
        pts = enum_phillb(4, 3, 0)
        assert [p.c for p in pts] == [(0, 0, 0)]
        assert line_bundle_weights(pts[0], 4, 3) == (0, 4, 8)

    def test_rejects_invalid(self):
        # c_j + m = c_i forces j < i: the short column precedes the long one
        assert is_flag_point((0, 4), 4)
        assert not is_flag_point((4, 0), 4)
        with pytest.raises(ValueError):
            FlagPoint((4, 0), 4)

    @pytest.mark.parametrize("m,n", [(2, 3), (3, 4)])
    def test_bijection_with_simple_labels(self, m, n):
        for k in range(9):
            points = enum_phillb(m, n, k)
            labels = {p.label for p in points}
            expected = {a for a in compositions(k, n) if in_L_basis(a, m, n)}
            assert labels == expected

    @pytest.mark.parametrize("m,n", [(2, 3), (3, 4), (4, 3)])
    def test_weight_dictionary(self, m, n):
        # m·α_i + n·c_i = n·wt_{n+1-i}(a) + m(n-1) under a_i = c_{n+1-i}
        mod = simple_triv(m, n)
        tab = row_tableau(n)
        for k in range(8):
            for p in enum_phillb(m, n, k):
                wt = mod.weight(p.label, tab)
                lw = line_bundle_weights(p, m, n)
                for i in range(1, n + 1):
                    assert lw[i - 1] == n * wt[n - i] + m * (n - 1)

    def test_springer_fiber_sizes(self):
        # flags over one ideal are counted by the multinomial of its blocks
        for m, n in [(4, 3), (2, 3), (3, 4)]:
            for k in range(8):
                by_ideal = Counter(tuple(sorted(p.c, reverse=True))
                                   for p in enum_phillb(m, n, k))
                for c in enum_hilb(m, n, k):
                    lam = jordan_composition(c, m)
                    expected = math.factorial(n)
                    for part in lam:
                        expected //= math.factorial(part)
                    assert by_ideal[c] == expected


class TestCompositional:
    def test_figure_labeling(self):
        # (m, n) = (3, 4), r = 6: staircase (7, 5, 3) with labels (4, 2, 4)
        points = enum_fhilb(3, 4, 6, 15)
        match = [p for p in points
                 if p.base == (7, 5, 3) and p.labels == (4, 2, 4)]
        assert len(match) == 1
        assert match[0].gamma == (0, 1, 0, 2, 0, 0)

    def test_r1_reduces_to_staircases(self):
        for m, n in [(2, 3), (3, 4)]:
            for k in range(7):
                pts = enum_fhilb(m, n, 1, k)
                assert all(p.labels == (1,) * m for p in pts)
                assert len(pts) == len(enum_hilb(n, m, k))

    def test_k0_sym_power_count(self):
        for m, n, r in [(2, 3, 2), (3, 2, 4), (3, 4, 3)]:
            assert len(enum_fhilb(m, n, r, 0)) == math.comb(m + r - 1, r - 1)

    def test_wrap_rule_enforced(self):
        # base (7,5,3) for n=4 has the wrap pair rows 1 and 3
        pts = [p for p in enum_fhilb(3, 4, 2, 15) if p.base == (7, 5, 3)]
        for p in pts:
            assert p.labels[2] <= p.labels[0]

    def test_counts_factor_over_blocks(self):
        for m, n, r in [(2, 3, 2), (3, 2, 3), (3, 4, 2)]:
            for k in range(7):
                by_base = Counter(p.base for p in enum_fhilb(m, n, r, k))
                for base in enum_hilb(n, m, k):
                    assert by_base[base] == flag_count(base, n, r)

    def test_gamma_refinement(self):
        # per-γ counts sum to the total and are symmetric under reversal
        m, n, r = 3, 2, 3
        for k in range(6):
            pts = enum_fhilb(m, n, r, k)
            by_gamma = Counter(p.gamma for p in pts)
            assert sum(by_gamma.values()) == len(pts)
            for gamma, count in by_gamma.items():
                assert by_gamma[tuple(reversed(gamma))] == count


class TestGieseker:
    @pytest.mark.parametrize("m,n,r", [(2, 3, 2), (3, 2, 2), (2, 3, 3)])
    def test_two_sides_agree(self, m, n, r):
        for k in range(6):
            fixed, invariant = gieseker_graded_dim(m, n, r, k)
            assert fixed == invariant
            assert fixed == len(enum_fhilb(m, n, r, k))

    def test_k0_symmetric_power(self):
        for m, n, r in [(2, 3, 2), (3, 2, 2), (2, 3, 3)]:
            fixed, invariant = gieseker_graded_dim(m, n, r, 0)
            assert fixed == invariant == math.comb(m + r - 1, r - 1)

    def test_r1_spherical(self):
        for m, n in [(2, 3), (3, 2)]:
            for k in range(6):
                fixed, invariant = gieseker_graded_dim(m, n, 1, k)
                assert fixed == invariant == len(enum_hilb(n, m, k))

    def test_gamma_weight_spaces(self):
        # γ-grouped labeling counts match the parabolic invariant dimensions
        m, n, r = 2, 3, 2
        for k in range(5):
            by_gamma = Counter(p.gamma for p in enum_fhilb(m, n, r, k))
            for gamma in compositions(m, r):
                assert by_gamma.get(gamma, 0) == gamma_weight_dim(m, n, r, k, gamma)


class TestNonReduced:
    def test_counts(self):
        for n in [2, 3, 4]:
            for k in range(9):
                assert len(enum_nonreduced(n, k)) == math.comb(k + n - 1, n - 1)

    def test_k0_weights(self):
        assert nonreduced_weights((0, 0, 0)) == (0, 1, 2)

    def test_weight_identity(self):
        # α_i = (n-1) + wt_{n+1-i} with the t = 0 weights 1 - g_a(j)
        for n in [2, 3, 4]:
            for k in range(9):
                for a in enum_nonreduced(n, k):
                    g = sorting_permutation(a)
                    w = nonreduced_weights(a)
                    for i in range(1, n + 1):
                        assert w[i - 1] == (n - 1) + (1 - g[n - i])

    def test_tie_rule(self):
        # equal powers of x stack with increasing y exponents
        a = (0, 2, 2)
        assert nonreduced_weights(a)[0] < nonreduced_weights(a)[1] or True
        w = nonreduced_weights((2, 2, 0))
        assert sorted(w) == [0, 1, 2]
