"""Brute-force realization of the rational Cherednik algebra of S_n acting
on C^n, by exact Dunkl operators on polynomials.

This module is the ground truth the combinatorial weight-basis formulas are
checked against: every algebra relation can be verified as an operator
identity on monomials, and the simultaneous eigenbasis of the commuting
degree-zero elements u_i can be constructed explicitly by intertwiners.

Conventions.  The lowering operators act by

    y_i f = t ∂_i f - c Σ_{j≠i} (f - (ij)f)/(x_i - x_j),

which makes [y_i, x_i] = t - c Σ_{j≠i}(ij) and [y_i, x_j] = c (ij); the
relation suite is the build-time proof that this sign convention is the
right one.  Degree-zero elements, shift operators and intertwiners:

    u_i = x_i y_i - c Σ_{j<i} (ij),     τ = x_1 (12...n),
    λ = (12...n)^{-1} y_1,              σ_i = s_i - c/(u_i - u_{i+1}).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .affineperm import (
    compositions,
    min_coset_rep,
    pi_act,
    s_act,
    sorting_permutation,
    transposition,
)
from .linalg import mat_pow, mat_stack, mat_sub_scalar, nullspace
from .polys import MultiPoly, divided_difference


@dataclass(frozen=True)
class Params:
    """Algebra parameters; n ≥ 2, t and c exact rationals."""

    n: int
    t: Fraction
    c: Fraction

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need n >= 2")
        object.__setattr__(self, "t", Fraction(self.t))
        object.__setattr__(self, "c", Fraction(self.c))


def apply_y(i: int, f: MultiPoly, p: Params) -> MultiPoly:
    """Dunkl operator y_i; lowers homogeneous degree by one."""
    out = f.diff(i).scale(p.t)
    for j in range(1, p.n + 1):
        if j != i:
            out = out - divided_difference(f, i, j).scale(p.c)
    return out


def apply_x(i: int, f: MultiPoly) -> MultiPoly:
    return f.mul_variable(i)


def apply_transposition(i: int, j: int, f: MultiPoly) -> MultiPoly:
    return f.permute(transposition(f.n, i, j))


def apply_s(i: int, f: MultiPoly) -> MultiPoly:
    """Simple reflection s_i = (i, i+1)."""
    return apply_transposition(i, i + 1, f)


def apply_u(i: int, f: MultiPoly, p: Params) -> MultiPoly:
    out = apply_x(i, apply_y(i, f, p))
    for j in range(1, i):
        out = out - apply_transposition(j, i, f).scale(p.c)
    return out


def _long_cycle(n: int) -> tuple[int, ...]:
    return tuple(range(2, n + 1)) + (1,)


def apply_tau(f: MultiPoly, p: Params) -> MultiPoly:
    return f.permute(_long_cycle(p.n)).mul_variable(1)


def apply_lambda(f: MultiPoly, p: Params) -> MultiPoly:
    from .affineperm import perm_inverse

    return apply_y(1, f, p).permute(perm_inverse(_long_cycle(p.n)))


def apply_sigma(i: int, f: MultiPoly, p: Params, wt: Sequence[Fraction]) -> MultiPoly:
    """Intertwiner on a u-eigenvector with the given weight."""
    d = wt[i - 1] - wt[i]
    if d == 0:
        raise ValueError(f"intertwiner undefined: wt_{i} = wt_{i+1}")
    return apply_s(i, f) - f.scale(p.c / d)


def apply_sigma_tilde(i: int, f: MultiPoly, p: Params, wt: Sequence[Fraction]) -> MultiPoly:
    """Renormalized intertwiner (squares to the identity on eigenvectors)."""
    d = wt[i - 1] - wt[i]
    if d + p.c == 0:
        raise ValueError(f"renormalized intertwiner undefined: wt diff = -c at i={i}")
    return apply_sigma(i, f, p, wt).scale(d / (d + p.c))


def apply_euler(f: MultiPoly, p: Params) -> MultiPoly:
    """Σ x_i y_i + n/2 - c Σ_{i<j} (ij)."""
    out = f.scale(Fraction(p.n, 2))
    for i in range(1, p.n + 1):
        out = out + apply_x(i, apply_y(i, f, p))
    for i in range(1, p.n + 1):
        for j in range(i + 1, p.n + 1):
            out = out - apply_transposition(i, j, f).scale(p.c)
    return out


# ---------------------------------------------------------------------------
# relation suite

Check = Callable[[MultiPoly], MultiPoly]


def relation_checks(p: Params) -> list[tuple[str, Check]]:
    """All defining relations as (name, f ↦ LHS f - RHS f) pairs."""
    n, t, c = p.n, p.t, p.c
    checks: list[tuple[str, Check]] = []

    def y(i):
        return lambda f: apply_y(i, f, p)

    def x(i):
        return lambda f: apply_x(i, f)

    def u(i):
        return lambda f: apply_u(i, f, p)

    def s(i):
        return lambda f: apply_s(i, f)

    tau = lambda f: apply_tau(f, p)
    lam = lambda f: apply_lambda(f, p)

    def chain(*ops):
        def run(f):
            for op in reversed(ops):
                f = op(f)
            return f
        return run

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            checks.append((f"y{i}_y{j}_commute",
                           lambda f, i=i, j=j: chain(y(i), y(j))(f) - chain(y(j), y(i))(f)))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                checks.append((f"y{i}_x{i}_commutator",
                               lambda f, i=i: chain(y(i), x(i))(f) - chain(x(i), y(i))(f)
                               - f.scale(t)
                               + sum((apply_transposition(i, j2, f).scale(c)
                                      for j2 in range(1, n + 1) if j2 != i),
                                     MultiPoly.zero(n))))
            else:
                checks.append((f"y{i}_x{j}_commutator",
                               lambda f, i=i, j=j: chain(y(i), x(j))(f) - chain(x(j), y(i))(f)
                               - apply_transposition(i, j, f).scale(c)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            checks.append((f"u{i}_u{j}_commute",
                           lambda f, i=i, j=j: chain(u(i), u(j))(f) - chain(u(j), u(i))(f)))
    for i in range(1, n):
        checks.append((f"s{i}_u{i}_exchange",
                       lambda f, i=i: chain(s(i), u(i))(f) - chain(u(i + 1), s(i))(f)
                       - f.scale(c)))
    for j in range(1, n):
        for i in range(1, n + 1):
            if i != j and i != j + 1:
                checks.append((f"s{j}_u{i}_commute",
                               lambda f, i=i, j=j: chain(s(j), u(i))(f) - chain(u(i), s(j))(f)))
    for i in range(1, n):
        checks.append((f"tau_u{i}_shift",
                       lambda f, i=i: chain(tau, u(i))(f) - chain(u(i + 1), tau)(f)))
    checks.append(("tau_u_wrap",
                   lambda f: chain(tau, u(n))(f) - chain(u(1), tau)(f) + tau(f).scale(t)))
    for i in range(2, n + 1):
        checks.append((f"lambda_u{i}_shift",
                       lambda f, i=i: chain(lam, u(i))(f) - chain(u(i - 1), lam)(f)))
    checks.append(("lambda_u_wrap",
                   lambda f: chain(lam, u(1))(f) - chain(u(n), lam)(f) - lam(f).scale(t)))
    for i in range(2, n):
        checks.append((f"s{i}_tau_shift",
                       lambda f, i=i: chain(s(i), tau)(f) - chain(tau, s(i - 1))(f)))
    if n >= 2:
        checks.append(("s1_tau_square",
                       lambda f: chain(s(1), tau, tau)(f) - chain(tau, tau, s(n - 1))(f)))
    for i in range(1, n - 1):
        checks.append((f"s{i}_lambda_shift",
                       lambda f, i=i: chain(s(i), lam)(f) - chain(lam, s(i + 1))(f)))
    if n >= 2:
        checks.append(("s_lambda_square",
                       lambda f: chain(s(n - 1), lam, lam)(f) - chain(lam, lam, s(1))(f)))
    checks.append(("tau_lambda_u1", lambda f: chain(tau, lam)(f) - u(1)(f)))
    checks.append(("lambda_tau_un", lambda f: chain(lam, tau)(f) - u(n)(f) - f.scale(t)))
    checks.append(("cross_tau_lambda",
                   lambda f: chain(lam, s(1), tau)(f) - chain(tau, s(n - 1), lam)(f)
                   - f.scale(c)))

    def no_u(f):
        # λτ - t = (s_{n-1}...s_1) τλ (s_1...s_{n-1}) - c Σ_i (i, n), i.e. the
        # conjugate of τλ = u_1 to position n
        lhs = chain(lam, tau)(f)
        desc = [s(i) for i in range(n - 1, 0, -1)]     # written order s_{n-1} ... s_1
        word = desc + [tau, lam] + list(reversed(desc))
        rhs = chain(*word)(f) + f.scale(t)
        for i in range(1, n):
            rhs = rhs - apply_transposition(i, n, f).scale(c)
        return lhs - rhs

    checks.append(("presentation_without_u", no_u))

    for i in range(1, n):
        checks.append((f"s{i}_involution", lambda f, i=i: chain(s(i), s(i))(f) - f))
    for i in range(1, n - 1):
        checks.append((f"s{i}_braid",
                       lambda f, i=i: chain(s(i), s(i + 1), s(i))(f)
                       - chain(s(i + 1), s(i), s(i + 1))(f)))
    return checks


@dataclass
class RelationReport:
    params: Params
    max_degree: int
    checked: int = 0
    failures: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def monomials_up_to(n: int, max_degree: int) -> list[tuple[int, ...]]:
    out = []
    for d in range(max_degree + 1):
        out.extend(compositions(d, n))
    return out


def verify_relations(p: Params, max_degree: int) -> RelationReport:
    """Apply every defining relation to every monomial of degree ≤ max_degree."""
    report = RelationReport(p, max_degree)
    checks = relation_checks(p)
    for e in monomials_up_to(p.n, max_degree):
        f = MultiPoly.monomial(e)
        for name, check in checks:
            report.checked += 1
            if not check(f).is_zero():
                report.failures.append((name, e))
    return report


def euler_spectrum_ok(p: Params, max_degree: int) -> bool:
    """At t = 1 the Euler element acts on degree d by d + n/2 - c·n(n-1)/2."""
    if p.t != 1:
        raise ValueError("internal grading requires t = 1")
    for e in monomials_up_to(p.n, max_degree):
        f = MultiPoly.monomial(e)
        expect = sum(e) + Fraction(p.n, 2) - p.c * Fraction(p.n * (p.n - 1), 2)
        if apply_euler(f, p) != f.scale(expect):
            return False
    return True


# ---------------------------------------------------------------------------
# eigenbasis of the Dunkl-Opdam subalgebra

def eigenbasis_admissible(p: Params) -> bool:
    """t = 1 and either c = m/n coprime positive or denominator(c) > n."""
    return p.t == 1 and (
        (p.c.denominator == p.n and p.c > 0) or p.c.denominator > p.n
    )


def label_weight(a: Sequence[int], c: Fraction) -> tuple[Fraction, ...]:
    """wt_i = a_i - (g_a(i) - 1)·c, the u-weight of the eigenvector v_a."""
    g = sorting_permutation(a)
    return tuple(Fraction(a[i]) - (g[i] - 1) * c for i in range(len(a)))


def build_eigenbasis(p: Params, max_degree: int,
                     check_eigen: bool = True) -> dict[tuple[int, ...], MultiPoly]:
    """The u-eigenvectors v_a = x^a + (≺-lower terms) for all ||a|| ≤ max_degree.

    Built inductively: rotate the first nonzero entry of a to the end with
    one power removed, apply τ, and walk it back with intertwiners.
    """
    if not eigenbasis_admissible(p):
        raise ValueError(
            f"eigenbasis needs t=1 and c=m/n (coprime, positive) or denominator > n; got {p}")
    n = p.n
    basis: dict[tuple[int, ...], MultiPoly] = {(0,) * n: MultiPoly.constant(n, 1)}
    for d in range(1, max_degree + 1):
        for a in compositions(d, n):
            i0 = next(i for i in range(n) if a[i])
            a_star = a[:i0] + a[i0 + 1:] + (a[i0] - 1,)
            v = apply_tau(basis[a_star], p)
            label = pi_act(a_star)
            for j in range(1, i0 + 1):
                v = apply_sigma(j, v, p, label_weight(label, p.c))
                label = s_act(j, label)
            assert label == a
            basis[a] = v
            if check_eigen:
                wt = label_weight(a, p.c)
                for i in range(1, n + 1):
                    if apply_u(i, v, p) != v.scale(wt[i - 1]):
                        raise AssertionError(f"v_{a} is not a u_{i}-eigenvector")
    return basis


@lru_cache(maxsize=None)
def _window_key(e: tuple[int, ...]) -> tuple[int, ...]:
    return min_coset_rep(e).window


def expand_in_eigenbasis(f: MultiPoly,
                         basis: dict[tuple[int, ...], MultiPoly]
                         ) -> dict[tuple[int, ...], Fraction]:
    """Coordinates of a polynomial in the (unitriangular) eigenbasis."""
    coords: dict[tuple[int, ...], Fraction] = {}
    rem = f
    while not rem.is_zero():
        # the ≺-greatest monomial present is the window-lex smallest
        top = min(rem.terms, key=_window_key)
        q = rem.terms[top]
        coords[top] = q
        rem = rem - basis[top].scale(q)
    return coords


# ---------------------------------------------------------------------------
# generalized weight spaces (non-semisimple parameters)

def monomial_basis(n: int, degree: int) -> list[tuple[int, ...]]:
    return sorted(compositions(degree, n))


def u_matrix(p: Params, i: int, degree: int) -> list[list[Fraction]]:
    """Matrix of u_i on degree-d monomials; column j is the image of basis[j]."""
    basis = monomial_basis(p.n, degree)
    index = {e: r for r, e in enumerate(basis)}
    mat = [[Fraction(0)] * len(basis) for _ in basis]
    for col, e in enumerate(basis):
        img = apply_u(i, MultiPoly.monomial(e), p)
        for ee, q in img.terms.items():
            mat[index[ee]][col] = q
    return mat


def generalized_weight_dim(p: Params, degree: int,
                           wt: Sequence[Fraction]) -> int:
    """dim of the simultaneous generalized eigenspace at the weight."""
    dim = len(monomial_basis(p.n, degree))
    blocks = [mat_pow(mat_sub_scalar(u_matrix(p, i + 1, degree), Fraction(wt[i])), dim)
              for i in range(p.n)]
    return len(nullspace(mat_stack(blocks), dim))


def generalized_weight_basis(p: Params, degree: int,
                             wt: Sequence[Fraction]) -> list[list[Fraction]]:
    dim = len(monomial_basis(p.n, degree))
    blocks = [mat_pow(mat_sub_scalar(u_matrix(p, i + 1, degree), Fraction(wt[i])), dim)
              for i in range(p.n)]
    return nullspace(mat_stack(blocks), dim)
