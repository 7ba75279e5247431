"""Verification suites: each function checks one falsifiable claim bundle
end to end and reports pass/fail lines.  The command-line front end and the
acceptance tests both run these.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .affineperm import compositions, stable_label_condition
from .dunkl import (
    Params,
    apply_lambda,
    apply_s,
    apply_tau,
    apply_u,
    build_eigenbasis,
    expand_in_eigenbasis,
    generalized_weight_basis,
    label_weight,
    monomial_basis,
    u_matrix,
    verify_relations,
)
from .linalg import mat_mul, mat_stack, mat_sub_scalar, nullspace, solve_in_span
from .hilb import (
    enum_fhilb,
    enum_hilb,
    enum_nonreduced,
    enum_phillb,
    gieseker_graded_dim,
    jordan_composition,
    line_bundle_weights,
    nonreduced_weights,
)
from .modules import (
    bgg_exactness_report,
    in_L_basis,
    mackey_weight_multiset,
    module_relations_ok,
    simple_triv,
    standard_module,
    t0_standard,
    vector,
)
from .tableaux import hook_shape, partitions, row_tableau, has_repeated_content


@dataclass
class SuiteResult:
    name: str
    ok: bool = True
    lines: list[str] = field(default_factory=list)

    def check(self, condition: bool, message: str) -> bool:
        tag = "ok" if condition else "FAIL"
        self.lines.append(f"  [{tag}] {message}")
        if not condition:
            self.ok = False
        return condition


RELATION_CONFIGS = [
    (2, Fraction(1), Fraction(1, 2)),
    (3, Fraction(1), Fraction(2, 3)),
    (3, Fraction(1), Fraction(5, 7)),
    (4, Fraction(1), Fraction(3, 4)),
    (3, Fraction(0), Fraction(1)),
]


def relation_suite(configs=None, max_degree: int = 5) -> SuiteResult:
    """Every defining relation, applied to every monomial of bounded degree."""
    res = SuiteResult("relations")
    for n, t, c in (configs or RELATION_CONFIGS):
        report = verify_relations(Params(n, t, c), max_degree)
        res.check(report.ok,
                  f"n={n} t={t} c={c} degree<={max_degree}: "
                  f"{report.checked} identities"
                  + ("" if report.ok else f", first failure {report.failures[0]}"))
    return res


ORACLE_ACT_PAIRS = [(2, 3), (3, 2), (3, 4), (5, 3)]


def oracle_act_suite(m: int, n: int, max_degree: int = 6) -> SuiteResult:
    """The Dunkl eigenbasis exists and every generator matrix in it equals
    the combinatorial action."""
    res = SuiteResult(f"oracle-vs-act m={m} n={n}")
    p = Params(n, Fraction(1), Fraction(m, n))
    basis = build_eigenbasis(p, max_degree)          # asserts eigenvector property
    res.lines.append(f"  eigenbasis built for ||a|| <= {max_degree} "
                     f"({len(basis)} labels, eigen-checked)")
    mod = standard_module((n,), Fraction(m, n))
    tab = row_tableau(n)
    mismatches = 0
    for d in range(max_degree + 1):
        for a in compositions(d, n):
            v = basis[a]
            images = [(("u", i), apply_u(i, v, p)) for i in range(1, n + 1)]
            images += [(("s", i), apply_s(i, v)) for i in range(1, n)]
            images.append(("lambda", apply_lambda(v, p)))
            if d < max_degree:
                images.append(("tau", apply_tau(v, p)))
            for gen, img in images:
                oracle_side = expand_in_eigenbasis(img, basis)
                act_side = {b: q for (b, _), q in
                            mod.act(gen, vector(a, tab)).items()}
                if act_side != {b: q for b, q in oracle_side.items() if q}:
                    mismatches += 1
    res.check(mismatches == 0, f"all generator matrices agree (degrees <= {max_degree})")
    return res


SIMPLE_DIM_PAIRS = [(2, 3), (3, 2), (3, 4), (4, 3), (5, 2)]


def simple_dim_suite(pairs=None) -> SuiteResult:
    """#{a in the simple label set : a_1 = 0, a_i < m} = m^{n-1}."""
    res = SuiteResult("simple-dimension")
    for m, n in (pairs or SIMPLE_DIM_PAIRS):
        count = sum(
            1 for a in itertools.product(range(m + 1), repeat=n - 1)
            if max(a, default=0) < m and in_L_basis((0,) + a, m, n))
        res.check(count == m ** (n - 1), f"m={m} n={n}: {count} = {m}^{n - 1}")
    return res


def figures_suite() -> SuiteResult:
    """Bit-exact reproduction of the worked examples."""
    from .affineperm import (
        coset_factorization,
        coset_factorization_transpose,
        is_m_restricted,
        is_m_stable,
        min_coset_rep,
        omega_from_basis,
        sort_labels,
    )

    res = SuiteResult("figures")
    res.check((7, 5, 3) in enum_hilb(4, 3, 15)
              and jordan_composition((7, 5, 3), 4) == (2, 1),
              "staircase c=(7,5,3) at k=15 on {x^4=y^3}, blocks (2,1)")
    flags = [p for p in enum_phillb(4, 3, 15) if p.c == (3, 7, 5)]
    res.check(bool(flags) and flags[0].alpha == (2, 0, 1),
              "flag point c=(3,7,5) with alpha=(2,0,1)")
    order_rows = {
        1: [(1, 0, 0), (0, 1, 0), (0, 0, 1)],
        2: [(1, 1, 0), (1, 0, 1), (2, 0, 0), (0, 1, 1), (0, 2, 0), (0, 0, 2)],
        3: [(1, 1, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1), (1, 0, 2),
            (3, 0, 0), (0, 2, 1), (0, 1, 2), (0, 3, 0), (0, 0, 3)],
    }
    res.check(all(sort_labels(list(compositions(k, 3))) == chain
                  for k, chain in order_rows.items()),
              "order tables for n=3, k <= 3")
    labeled = [p for p in enum_fhilb(3, 4, 6, 15)
               if p.base == (7, 5, 3) and p.labels == (4, 2, 4)]
    res.check(bool(labeled) and labeled[0].gamma == (0, 1, 0, 2, 0, 0),
              "length-6 flag labeling with gamma=(0,1,0,2,0,0)")
    w = min_coset_rep((0, 2, 0, 0, 1))
    res.check(w.window == (1, 3, 4, 10, 12)
              and coset_factorization(w) == (3, 3, 1)
              and coset_factorization_transpose(w) == (3, 2, 2),
              "w_{(0,2,0,0,1)} = [1,3,4,10,12], nu=(3,3,1), nu^T=(3,2,2)")
    omega = omega_from_basis((0, 1, 0, 0, 2), 3)
    res.check(omega.inverse().window == (0, 4, 3, 6, 2)
              and is_m_restricted(omega.inverse(), 3)
              and is_m_stable(omega, 3),
              "omega^{-1} = [0,4,3,6,2] is 3-restricted")
    return res


PHILB_PAIRS = [(2, 3), (3, 4)]


def philb_bijection_suite(m: int, n: int, max_k: int = 10) -> SuiteResult:
    """Parabolic fixed points match the simple labels, counts and weights."""
    res = SuiteResult(f"philb-bijection m={m} n={n}")
    mod = simple_triv(m, n)
    tab = row_tableau(n)
    for k in range(max_k + 1):
        points = enum_phillb(m, n, k)
        expected = [a for a in compositions(k, n) if in_L_basis(a, m, n)]
        count_ok = len(points) == len(expected) and \
            {p.label for p in points} == set(expected)
        weight_ok = all(
            line_bundle_weights(p, m, n)[i - 1]
            == n * mod.weight(p.label, tab)[n - i] + m * (n - 1)
            for p in points for i in range(1, n + 1))
        res.check(count_ok and weight_ok,
                  f"k={k}: {len(points)} points, weights match")
    return res


BGG_PAIRS = [(2, 3), (3, 2), (3, 4)]


def bgg_suite(m: int, n: int, max_degree: int = 8) -> SuiteResult:
    """Exactness of the hook resolution away from the end."""
    res = SuiteResult(f"bgg m={m} n={n}")
    report = bgg_exactness_report(m, n, max_degree)
    res.check(report.composites_vanish, "consecutive maps compose to zero")
    for row in report.rows:
        res.check(row.exact,
                  f"degree {row.degree}: dims={row.dims} ranks={row.ranks[1:]} "
                  f"homology={row.homology} end={row.simple_dim}")
    return res


def mackey_suite(max_degree: int = 10) -> SuiteResult:
    """The n=2, c=2 module: generalized weights match the label multiset,
    honest weight spaces are lines, and repeated weights carry nilpotents."""
    res = SuiteResult("mackey n=2 c=2")
    p = Params(2, Fraction(1), Fraction(2))
    for k in range(max_degree + 1):
        multiset = Counter(label_weight(a, p.c) for a in compositions(k, 2))
        dim = len(monomial_basis(2, k))
        umats = [u_matrix(p, i, k) for i in (1, 2)]
        all_ok = True
        for wt, mult in sorted(multiset.items()):
            gen_basis = generalized_weight_basis(p, k, wt)
            honest = nullspace(mat_stack(
                [mat_sub_scalar(umats[i], wt[i]) for i in range(2)]), dim)
            all_ok &= len(gen_basis) == mult and len(honest) == 1
            if mult == 2:
                all_ok &= _nilpotent_part_ok(umats, wt, gen_basis)
        res.check(all_ok, f"k={k}: multiset + honest/generalized structure")
        if k % 2 == 0 and k >= 2:
            d = (k - 2) // 2
            if d <= 4:
                res.check(multiset[(Fraction(d), Fraction(d))] == 2,
                          f"k={k}: weight ({d},{d}) doubled")
    return res


def _nilpotent_part_ok(umats, wt, gen_basis) -> bool:
    """(u_i - wt_i) restricted to the generalized space: nonzero, square zero."""
    found_nonzero = False
    for i in range(2):
        shifted = mat_sub_scalar(umats[i], wt[i])
        images = [mat_mul(shifted, [[x] for x in v]) for v in gen_basis]
        restricted = []
        for img in images:
            col = [row[0] for row in img]
            coords = solve_in_span(gen_basis, col)
            if coords is None:
                return False                     # not invariant: fail
            restricted.append(coords)
        nilp = [[restricted[j][i2] for j in range(len(gen_basis))]
                for i2 in range(len(gen_basis))]
        if any(any(x for x in row) for row in nilp):
            found_nonzero = True
        sq = mat_mul(nilp, nilp)
        if any(any(x for x in row) for row in sq):
            return False
    return found_nonzero


def mackey_multiset_vs_oracle(mu, t, c, k: int) -> bool:
    """Generalized eigenspace dimensions equal the label multiset (triv only)."""
    if tuple(mu) != (sum(mu),):
        raise ValueError("oracle comparison implemented for the one-row shape")
    n = sum(mu)
    p = Params(n, Fraction(t), Fraction(c))
    multiset = Counter(mackey_weight_multiset(mu, t, c, k))
    for wt, mult in multiset.items():
        if len(generalized_weight_basis(p, k, wt)) != mult:
            return False
    return sum(multiset.values()) == len(monomial_basis(n, k))


GIESEKER_TRIPLES = [(2, 3, 2), (2, 3, 3), (3, 2, 2)]


def gieseker_suite(m: int, n: int, r: int, max_k: int = 6) -> SuiteResult:
    res = SuiteResult(f"gieseker m={m} n={n} r={r}")
    for k in range(max_k + 1):
        fixed, invariant = gieseker_graded_dim(m, n, r, k)
        res.check(fixed == invariant, f"k={k}: fixed={fixed} invariant={invariant}")
    return res


def t0_suite(max_n: int = 4, max_degree: int = 5, max_k: int = 8) -> SuiteResult:
    """The t=0 modules satisfy the presentation; non-reduced curve counts
    and weight dictionary."""
    res = SuiteResult("t0")
    for n in range(2, max_n + 1):
        for mu in partitions(n):
            if has_repeated_content(mu):
                continue
            ok = module_relations_ok(t0_standard(mu), max_degree)
            res.check(ok, f"H_(0,1) presentation on the mu={mu} module, "
                          f"degrees <= {max_degree}")
    for n in range(2, max_n + 1):
        counts_ok = all(
            len(enum_nonreduced(n, k)) == math.comb(k + n - 1, n - 1)
            for k in range(max_k + 1))
        res.check(counts_ok, f"n={n}: non-reduced point counts")
        weights_ok = all(
            nonreduced_weights(a) == tuple(
                (n - 1) + wt for wt in reversed(t0_standard((n,)).weight(
                    a, row_tableau(n))))
            for k in range(max_k + 1) for a in enum_nonreduced(n, k))
        res.check(weights_ok, f"n={n}: line-bundle weight dictionary")
    return res
