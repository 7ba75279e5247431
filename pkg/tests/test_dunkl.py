import itertools
from fractions import Fraction

import pytest

from cherednik.affineperm import compositions, pi_act, s_act
from cherednik.dunkl import (
    Params,
    apply_euler,
    apply_lambda,
    apply_s,
    apply_sigma,
    apply_sigma_tilde,
    apply_tau,
    apply_u,
    apply_x,
    apply_y,
    build_eigenbasis,
    euler_spectrum_ok,
    expand_in_eigenbasis,
    generalized_weight_dim,
    label_weight,
    monomials_up_to,
    verify_relations,
)
from cherednik.polys import MultiPoly, divided_difference

F = Fraction


def poly(n, d):
    return MultiPoly(n, d)


class TestPolys:
    def test_divided_difference_exact(self):
        f = MultiPoly(3, {(3, 1, 0): F(2), (0, 0, 2): F(1, 3)})
        x1 = MultiPoly.variable(3, 1)
        x2 = MultiPoly.variable(3, 2)
        dd = divided_difference(f, 1, 2)
        assert (x1 - x2) * dd == f - f.permute((2, 1, 3))

    def test_permute_convention(self):
        # (12...n) sends the exponent of x_i to x_{i+1}
        f = MultiPoly.monomial((2, 1, 0))
        assert f.permute((2, 3, 1)) == MultiPoly.monomial((0, 2, 1))

    def test_homogeneous(self):
        assert MultiPoly(2, {(1, 0): F(1), (0, 1): F(2)}).is_homogeneous()
        assert not MultiPoly(2, {(1, 0): F(1), (1, 1): F(2)}).is_homogeneous()


class TestDunklOperators:
    def test_y_kills_constants(self):
        p = Params(3, F(1), F(2, 3))
        one = MultiPoly.constant(3, 1)
        for i in range(1, 4):
            assert apply_y(i, one, p).is_zero()

    def test_y1_x1_n2(self):
        p = Params(2, F(1), F(1, 2))
        x1 = MultiPoly.variable(2, 1)
        assert apply_y(1, x1, p) == MultiPoly.constant(2, p.t - p.c)

    def test_y1_x2_n2(self):
        p = Params(2, F(1), F(1, 2))
        x2 = MultiPoly.variable(2, 2)
        assert apply_y(1, x2, p) == MultiPoly.constant(2, p.c)

    def test_u_on_constants(self):
        p = Params(3, F(1), F(2, 3))
        one = MultiPoly.constant(3, 1)
        assert apply_u(1, one, p).is_zero()
        assert apply_u(2, one, p) == one.scale(-p.c)

    def test_tau_of_one(self):
        p = Params(4, F(1), F(1, 4))
        assert apply_tau(MultiPoly.constant(4, 1), p) == MultiPoly.variable(4, 1)

    def test_degree_shifts(self):
        p = Params(3, F(1), F(5, 7))
        f = MultiPoly(3, {(2, 1, 0): F(1), (1, 1, 1): F(-2)})
        assert apply_y(1, f, p).degrees() <= {2}
        assert apply_u(2, f, p).degrees() <= {3}
        assert apply_tau(f, p).degrees() <= {4}
        assert apply_lambda(f, p).degrees() <= {2}


class TestRelations:
    @pytest.mark.parametrize("n,t,c,D", [
        (2, F(1), F(1, 2), 4),
        (3, F(1), F(2, 3), 3),
        (3, F(0), F(1), 3),
        (2, F(3), F(-2, 5), 4),
    ])
    def test_relations_hold(self, n, t, c, D):
        report = verify_relations(Params(n, t, c), D)
        assert report.ok, report.failures[:5]

    def test_flipped_sign_fails_immediately(self):
        # negative control: y with the divided-difference sign flipped breaks
        # the diagonal commutator already on f = 1
        p = Params(2, F(1), F(1, 2))
        one = MultiPoly.constant(2, 1)

        def bad_y(i, f):
            out = f.diff(i).scale(p.t)
            for j in range(1, 3):
                if j != i:
                    out = out + divided_difference(f, i, j).scale(p.c)
            return out

        lhs = bad_y(1, apply_x(1, one)) - apply_x(1, bad_y(1, one))
        rhs = one.scale(p.t) - one.permute((2, 1)).scale(p.c)
        assert lhs != rhs

    def test_euler_spectrum(self):
        assert euler_spectrum_ok(Params(3, F(1), F(2, 3)), 3)
        assert euler_spectrum_ok(Params(2, F(1), F(7, 3)), 4)


class TestEigenbasis:
    def test_v_zero_and_e1(self):
        p = Params(3, F(1), F(2, 3))
        basis = build_eigenbasis(p, 2)
        assert basis[(0, 0, 0)] == MultiPoly.constant(3, 1)
        assert basis[(1, 0, 0)] == MultiPoly.variable(3, 1)

    def test_n2_small_c_closed_form(self):
        # v_{(0,1)} = x_2 - (c/(1-c)) x_1, from the u_1-eigenvalue-0 condition
        for c in [F(1, 2), F(1, 3), F(3, 2)]:
            p = Params(2, F(1), c)
            basis = build_eigenbasis(p, 1)
            expected = MultiPoly(2, {(0, 1): F(1), (1, 0): -c / (1 - c)})
            assert basis[(0, 1)] == expected

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            build_eigenbasis(Params(2, F(1), F(2)), 2)  # denominator 1 < n
        with pytest.raises(ValueError):
            build_eigenbasis(Params(2, F(0), F(1, 2)), 2)

    @pytest.mark.parametrize("n,c,D", [(2, F(3, 2), 5), (3, F(2, 3), 4), (3, F(5, 7), 4)])
    def test_triangular_with_unit_leading_term(self, n, c, D):
        from cherednik.affineperm import precedes

        basis = build_eigenbasis(Params(n, F(1), c), D)
        for a, v in basis.items():
            assert v.coeff(a) == 1
            for e in v.terms:
                if e != a:
                    assert precedes(e, a)

    def test_expand_roundtrip(self):
        p = Params(3, F(1), F(2, 3))
        basis = build_eigenbasis(p, 3)
        f = MultiPoly(3, {(1, 1, 1): F(2), (3, 0, 0): F(-1, 5), (0, 2, 1): F(7)})
        coords = expand_in_eigenbasis(f, basis)
        acc = MultiPoly.zero(3)
        for a, q in coords.items():
            acc = acc + basis[a].scale(q)
        assert acc == f

    @pytest.mark.parametrize("n,c", [(3, F(5, 7)), (2, F(2, 5))])
    def test_generic_weights_distinct(self, n, c):
        p = Params(n, F(1), c)
        for k in range(4):
            wts = [label_weight(a, c) for a in compositions(k, n)]
            assert len(set(wts)) == len(wts)

    def test_sigma_tilde_involution(self):
        p = Params(3, F(1), F(2, 3))
        basis = build_eigenbasis(p, 3)
        for a, v in basis.items():
            for i in range(1, 3):
                wt = label_weight(a, p.c)
                if wt[i - 1] - wt[i] in (p.c, -p.c):
                    continue
                w = apply_sigma_tilde(i, v, p, wt)
                back = apply_sigma_tilde(i, w, p, label_weight(s_act(i, a), p.c))
                assert back == v


class TestRadicalClosure:
    def test_radical_span_closed(self):
        # labels violating the stability condition span a submodule
        from cherednik.affineperm import stable_label_condition

        m, n, D = 2, 3, 4
        p = Params(n, F(1), F(m, n))
        basis = build_eigenbasis(p, D + 1)
        bad = [a for a in basis if not stable_label_condition(a, m)]
        for a in bad:
            v = basis[a]
            images = [apply_tau(v, p)] if sum(a) < D else []
            images.append(apply_lambda(v, p))
            images.extend(apply_s(i, v) for i in range(1, n))
            for img in images:
                if img.is_zero():
                    continue
                for e, q in expand_in_eigenbasis(img, basis).items():
                    if q:
                        assert not stable_label_condition(e, m), (a, e)


class TestGeneralizedWeights:
    def test_example_n2_c2(self):
        # at c = 2 the weight (d, d) carries a two-dimensional generalized
        # space assembled from the labels (d+2, d) and (d, d+2)
        p = Params(2, F(1), F(2))
        for d in range(3):
            k = 2 * d + 2
            assert generalized_weight_dim(p, k, (F(d), F(d))) == 2

    def test_repeated_weights_glue(self):
        # weights shared across Mackey subquotients also acquire Jordan blocks:
        # (1,0) occurs for the labels (3,0) and (1,2) in degree 3
        p = Params(2, F(1), F(2))
        assert label_weight((3, 0), p.c) == label_weight((1, 2), p.c) == (F(1), F(0))
        assert generalized_weight_dim(p, 3, (F(1), F(0))) == 2
