"""Combinatorial weight-basis modules for the rational Cherednik algebra.

A basis vector is labeled by a pair (a, T): a nonnegative integer sequence
a of length n and a standard tableau T of a shape of size n.  Its weight is

    wt_i(a, T) = t·a_i - ct(T)_{g_a(i)}·c

where g_a is the minimal-length sorting permutation of a.  The generators
u_i, s_i, τ, λ act through an explicit case analysis on labels; everything
is exact rational arithmetic and purely combinatorial -- no polynomials.

Module kinds:
  standard           Δ(μ) at t = 1, c = m/n (coprime) or denominator(c) > n
  simple_triv        L(triv) = quotient of Δ((n)) by the radical label set
  simple_hook        L(μ_ℓ) for a hook μ_ℓ = (n-ℓ, 1^ℓ), 0 ≤ ℓ < n-1
  renormalized_triv  Δ(triv) in the symmetrized basis ṽ_a = φ(a) v_a
  t0_standard        Δ(μ) over the t = 0, c = 1 algebra (distinct contents)

Vectors are plain dicts {(a, T): Fraction} with no stored zeros.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .affineperm import (
    adjacent_word,
    compositions,
    min_coset_rep,
    perm_inverse,
    pi_act,
    pi_inv_act,
    s_act,
    sorting_permutation,
    stable_label_condition,
)
from .linalg import Matrix, rank
from .tableaux import (
    StandardTableau,
    has_repeated_content,
    hook_legs,
    hook_shape,
    hook_tableau,
    min_content_label,
    row_tableau,
    standard_tableaux,
)

Label = tuple[tuple[int, ...], StandardTableau]
ModuleVector = dict[Label, Fraction]

F0 = Fraction(0)
F1 = Fraction(1)


def label_sort_key(label: Label):
    a, tab = label
    return (tuple(-w for w in min_coset_rep(a).window), tab.rows)


@dataclass(frozen=True)
class Module:
    kind: str
    mu: tuple[int, ...]
    t: Fraction
    c: Fraction
    m: int | None = None
    ell: int | None = None

    def __post_init__(self):
        if self.kind not in ("standard", "simple_triv", "simple_hook",
                             "renormalized_triv", "t0_standard"):
            raise ValueError(f"unknown module kind {self.kind!r}")

    @property
    def n(self) -> int:
        return sum(self.mu)

    # -- weights ------------------------------------------------------------

    def weight(self, a: Sequence[int], tab: StandardTableau) -> tuple[Fraction, ...]:
        g = sorting_permutation(a)
        return tuple(self.t * a[i] - tab.content(g[i]) * self.c
                     for i in range(len(a)))

    # -- label sets ----------------------------------------------------------

    def allowed(self, a: Sequence[int], tab: StandardTableau) -> bool:
        if self.kind == "simple_triv":
            return stable_label_condition(a, self.m)
        if self.kind == "simple_hook":
            return simple_hook_predicate(a, tab, self.ell, self.m, self.n)
        return True

    def tableaux(self) -> tuple[StandardTableau, ...]:
        return standard_tableaux(self.mu)

    def basis_labels(self, degree: int) -> list[Label]:
        labels = [(a, tab)
                  for a in compositions(degree, self.n)
                  for tab in self.tableaux()
                  if self.allowed(a, tab)]
        labels.sort(key=label_sort_key)
        return labels

    # -- single-label generator actions --------------------------------------

    def _filter(self, images: list[tuple[Fraction, Label]]) -> list[tuple[Fraction, Label]]:
        return [(q, lab) for q, lab in images if q and self.allowed(*lab)]

    def _s_label(self, i: int, a: tuple[int, ...],
                 tab: StandardTableau) -> list[tuple[Fraction, Label]]:
        wt = self.weight(a, tab)
        d = wt[i - 1] - wt[i]
        if self.kind == "renormalized_triv":
            # (1 - s_i)ṽ_a = ((d - c)/d)(ṽ_a - ṽ_{s_i·a})
            out = [(self.c / d, (a, tab))]
            if a[i - 1] != a[i]:
                out.append(((d - self.c) / d, (s_act(i, a), tab)))
            return self._filter(out)
        if a[i - 1] > a[i]:
            return self._filter([(F1, (s_act(i, a), tab)), (self.c / d, (a, tab))])
        if a[i - 1] < a[i]:
            cross = (d * d - self.c * self.c) / (d * d)
            return self._filter([(cross, (s_act(i, a), tab)), (self.c / d, (a, tab))])
        k = sorting_permutation(a)[i - 1]
        if tab.same_row(k):
            return [(F1, (a, tab))]
        if tab.same_column(k):
            return [(-F1, (a, tab))]
        swapped = tab.swap(k)
        if tab.content(k + 1) > tab.content(k):
            return self._filter([(F1, (a, swapped)), (self.c / d, (a, tab))])
        cross = (d * d - self.c * self.c) / (d * d)
        return self._filter([(cross, (a, swapped)), (self.c / d, (a, tab))])

    def _sigma_label(self, i: int, a: tuple[int, ...],
                     tab: StandardTableau) -> tuple[Fraction, Label] | None:
        """σ_i = s_i - c/(u_i - u_{i+1}) sends a label to a single label."""
        if self.kind == "renormalized_triv":
            raise ValueError("intertwiners act on the unnormalized kinds")
        wt = self.weight(a, tab)
        d = wt[i - 1] - wt[i]
        if d == 0:
            raise ValueError(f"σ_{i} undefined on label {a}: equal adjacent weights")
        if a[i - 1] > a[i]:
            img: tuple[Fraction, Label] = (F1, (s_act(i, a), tab))
        elif a[i - 1] < a[i]:
            img = ((d * d - self.c * self.c) / (d * d), (s_act(i, a), tab))
        else:
            k = sorting_permutation(a)[i - 1]
            if tab.same_row(k) or tab.same_column(k):
                return None
            swapped = tab.swap(k)
            if tab.content(k + 1) > tab.content(k):
                img = (F1, (a, swapped))
            else:
                img = ((d * d - self.c * self.c) / (d * d), (a, swapped))
        if img[0] == 0 or not self.allowed(*img[1]):
            return None
        return img

    # -- generator actions on vectors ----------------------------------------

    def act(self, gen, vec: ModuleVector) -> ModuleVector:
        """Apply a generator: ("u", i), ("s", i), ("sigma", i), "tau", "lambda"."""
        out: ModuleVector = {}
        for (a, tab), q in vec.items():
            for coef, lab in self._images(gen, a, tab):
                _add(out, lab, q * coef)
        return out

    def _images(self, gen, a, tab) -> list[tuple[Fraction, Label]]:
        if gen == "tau":
            return self._filter([(F1, (pi_act(a), tab))])
        if gen == "lambda":
            wt1 = self.weight(a, tab)[0]
            if a[0] == 0:
                if wt1 != 0:
                    raise AssertionError(f"λ guard failed at {a}")
                return []
            return self._filter([(wt1, (pi_inv_act(a), tab))])
        kind, i = gen
        if kind == "u":
            return [(self.weight(a, tab)[i - 1], (a, tab))]
        if kind == "s":
            return self._s_label(i, a, tab)
        if kind == "sigma":
            img = self._sigma_label(i, a, tab)
            return [img] if img else []
        raise ValueError(f"unknown generator {gen!r}")

    def act_word(self, word: Sequence, vec: ModuleVector) -> ModuleVector:
        """Apply generators in list order (word[0] acts first)."""
        for gen in word:
            vec = self.act(gen, vec)
        return vec

    def act_perm(self, g: Sequence[int], vec: ModuleVector) -> ModuleVector:
        """Action of a finite permutation, via a reduced word."""
        for i in reversed(adjacent_word(tuple(g))):
            vec = self.act(("s", i), vec)
        return vec

    # -- matrices -------------------------------------------------------------

    def matrix(self, gen, degree: int) -> tuple[list[Label], list[Label], Matrix]:
        """(rows, cols, M) with M[r][c] = coefficient of rows[r] in gen·cols[c]."""
        shift = {"tau": 1, "lambda": -1}.get(gen, 0)
        cols = self.basis_labels(degree)
        rows = self.basis_labels(degree + shift) if shift else cols
        index = {lab: r for r, lab in enumerate(rows)}
        mat = [[F0] * len(cols) for _ in rows]
        for cidx, (a, tab) in enumerate(cols):
            for coef, lab in self._images(gen, a, tab):
                mat[index[lab]][cidx] += coef
        return rows, cols, mat


def _add(vec: ModuleVector, label: Label, q: Fraction) -> None:
    s = vec.get(label, F0) + q
    if s:
        vec[label] = s
    else:
        vec.pop(label, None)


def vector(a: Sequence[int], tab: StandardTableau, coeff=1) -> ModuleVector:
    return {(tuple(a), tab): Fraction(coeff)}


# ---------------------------------------------------------------------------
# constructors

def _check_semisimple_c(c: Fraction, n: int) -> None:
    if not ((c.denominator == n and c > 0) or c.denominator > n):
        raise ValueError(
            f"need c = m/n coprime positive or denominator(c) > n; got c={c}, n={n}")


def standard_module(mu: Sequence[int], c) -> Module:
    mu = tuple(mu)
    c = Fraction(c)
    _check_semisimple_c(c, sum(mu))
    return Module("standard", mu, F1, c)


def simple_triv(m: int, n: int) -> Module:
    if math.gcd(m, n) != 1 or m < 1:
        raise ValueError(f"need coprime positive m, n; got {m}, {n}")
    return Module("simple_triv", (n,), F1, Fraction(m, n), m=m)


def simple_hook(ell: int, m: int, n: int) -> Module:
    if math.gcd(m, n) != 1 or m < 1:
        raise ValueError(f"need coprime positive m, n; got {m}, {n}")
    if not 0 <= ell < n - 1:
        raise ValueError(f"hook leg {ell} out of range [0, {n - 2}]")
    return Module("simple_hook", hook_shape(n, ell), F1, Fraction(m, n), m=m, ell=ell)


def renormalized_triv(m: int, n: int) -> Module:
    if math.gcd(m, n) != 1 or m < 1:
        raise ValueError(f"need coprime positive m, n; got {m}, {n}")
    return Module("renormalized_triv", (n,), F1, Fraction(m, n), m=m)


def t0_standard(mu: Sequence[int]) -> Module:
    mu = tuple(mu)
    if has_repeated_content(mu):
        raise ValueError(
            f"t=0 weight basis needs pairwise distinct box contents; {mu} repeats")
    return Module("t0_standard", mu, F0, F1)


# ---------------------------------------------------------------------------
# label sets of the simple quotients

def in_L_basis(a: Sequence[int], m: int, n: int) -> bool:
    """Membership in the label set of L_{m/n}(triv)."""
    if math.gcd(m, n) != 1:
        raise ValueError(f"need gcd(m, n) = 1; got {m}, {n}")
    if len(a) != n:
        raise ValueError(f"label length {len(a)} != n = {n}")
    return stable_label_condition(tuple(a), m)


def simple_hook_predicate(a: Sequence[int], tab: StandardTableau,
                          ell: int, m: int, n: int) -> bool:
    """True when (a, T) labels the weight basis of the simple hook quotient."""
    if tab.shape != hook_shape(n, ell):
        raise ValueError(f"tableau shape {tab.shape} is not the hook (n-{ell}, 1^{ell})")
    a = tuple(a)
    ginv = perm_inverse(sorting_permutation(a))
    i_ell = min_content_label(tab)
    top, low = ginv[n - 1], ginv[i_ell - 1]
    lhs, rhs = a[top - 1] - m, a[low - 1]
    return lhs < rhs or (lhs == rhs and top < low)


# ---------------------------------------------------------------------------
# renormalization factors

@lru_cache(maxsize=None)
def _phi_renorm(a: tuple[int, ...], c: Fraction) -> Fraction:
    if all(x == 0 for x in a):
        return F1
    if a[0] > 0:
        return _phi_renorm(pi_inv_act(a), c)
    j = next(i for i in range(2, len(a) + 1) if a[i - 1] > 0)
    g = sorting_permutation(a)
    wt = tuple(Fraction(a[i]) - (g[i] - 1) * c for i in range(len(a)))
    gap = wt[j - 1] - wt[j - 2]
    if gap == c:
        # happens only outside the simple-quotient label set, where the
        # symmetrizing factor has no finite value
        raise ValueError(f"renormalization factor undefined at label {a}")
    return gap / (gap - c) * _phi_renorm(s_act(j - 1, a), c)


def phi_renorm(a: Sequence[int], m: int, n: int) -> Fraction:
    """φ(a) with ṽ_a = φ(a) v_a symmetrizing the s_i action; φ(0) = 1.

    Total on the label set of L(triv); raises on the labels (outside that
    set) where the defining ratio degenerates.
    """
    if math.gcd(m, n) != 1:
        raise ValueError(f"need gcd(m, n) = 1; got {m}, {n}")
    return _phi_renorm(tuple(a), Fraction(m, n))


@lru_cache(maxsize=None)
def phi_renorm_t0(a: tuple[int, ...]) -> Fraction:
    """The t = 0 analogue, built from the sorting-permutation gaps."""
    if all(x == 0 for x in a):
        return F1
    if a[0] > 0:
        return phi_renorm_t0(pi_inv_act(a))
    j = next(i for i in range(2, len(a) + 1) if a[i - 1] > 0)
    b = s_act(j - 1, a)
    g = sorting_permutation(b)
    gap = Fraction(g[j - 1] - g[j - 2])
    return phi_renorm_t0(b) * gap / (gap - 1)


# ---------------------------------------------------------------------------
# BGG maps between hook standard modules

def canonical_word(a: Sequence[int]) -> list:
    """The intertwiner word with v_a = word · v_0 (word[0] acts first)."""
    a = tuple(a)
    if all(x == 0 for x in a):
        return []
    i0 = next(i for i in range(1, len(a) + 1) if a[i - 1])
    a_star = a[:i0 - 1] + a[i0:] + (a[i0 - 1] - 1,)
    return canonical_word(a_star) + ["tau"] + [("sigma", j) for j in range(1, i0)]


@dataclass(frozen=True)
class BggMap:
    """φ_ℓ : Δ(μ_ℓ) → Δ(μ_{ℓ-1}); raises degree by m."""

    m: int
    n: int
    ell: int

    def __post_init__(self):
        if math.gcd(self.m, self.n) != 1:
            raise ValueError(f"need gcd(m, n) = 1; got {self.m}, {self.n}")
        if not 1 <= self.ell <= self.n - 1:
            raise ValueError(f"hook index {self.ell} out of range [1, {self.n - 1}]")

    @property
    def source(self) -> Module:
        return standard_module(hook_shape(self.n, self.ell), Fraction(self.m, self.n))

    @property
    def target(self) -> Module:
        return standard_module(hook_shape(self.n, self.ell - 1), Fraction(self.m, self.n))

    def apply_label(self, a: Sequence[int],
                    tab: StandardTableau) -> tuple[Fraction, Label] | None:
        """Transport v(a, T) along its canonical word from the generator image."""
        legs = hook_legs(tab)
        i_ell = legs[-1]
        e = [0] * self.n
        e[i_ell - 1] = self.m
        seed: ModuleVector = vector(e, hook_tableau(self.n, legs[:-1]))
        img = self.target.act_word(canonical_word(a), seed)
        if not img:
            return None
        if len(img) != 1:
            raise AssertionError(f"image of {a} not supported on a single label")
        (label, q), = img.items()
        src_wt = self.source.weight(tuple(a), tab)
        if self.target.weight(*label) != src_wt:
            raise AssertionError(f"weight not preserved at {a}")
        return (q, label)

    def apply(self, vec: ModuleVector) -> ModuleVector:
        out: ModuleVector = {}
        for (a, tab), q in vec.items():
            img = self.apply_label(a, tab)
            if img:
                _add(out, img[1], q * img[0])
        return out

    def matrix(self, source_degree: int) -> tuple[list[Label], list[Label], Matrix]:
        cols = self.source.basis_labels(source_degree)
        rows = self.target.basis_labels(source_degree + self.m)
        index = {lab: r for r, lab in enumerate(rows)}
        mat = [[F0] * len(cols) for _ in rows]
        for cidx, (a, tab) in enumerate(cols):
            img = self.apply_label(a, tab)
            if img:
                mat[index[img[1]]][cidx] = img[0]
        return rows, cols, mat


@dataclass
class BggDegreeRow:
    degree: int
    dims: tuple[int, ...]
    ranks: tuple[int, ...]
    homology: tuple[int, ...]
    simple_dim: int

    @property
    def exact(self) -> bool:
        return (all(h == 0 for h in self.homology[1:])
                and self.homology[0] == self.simple_dim)


@dataclass
class BggReport:
    m: int
    n: int
    max_degree: int
    rows: list[BggDegreeRow]
    composites_vanish: bool

    @property
    def ok(self) -> bool:
        return self.composites_vanish and all(r.exact for r in self.rows)


def bgg_exactness_report(m: int, n: int, max_degree: int) -> BggReport:
    """Per-degree kernel/image/homology dimensions of the hook resolution.

    The complex is graded by the degree d in the final standard module; the
    ℓ-th term contributes its degree d - ℓm part.  Homology must vanish away
    from the end, where its dimension is the number of simple-quotient labels.
    """
    maps = [BggMap(m, n, ell) for ell in range(1, n)]
    rows = []
    for d in range(max_degree + 1):
        dims = [_graded_dim(n, ell, d - ell * m) for ell in range(n)]
        ranks = [0] * (n + 1)
        for ell in range(1, n):
            deg = d - ell * m
            if deg < 0 or dims[ell] == 0:
                continue
            _, _, mat = maps[ell - 1].matrix(deg)
            ranks[ell] = rank(mat)
        homology = tuple(dims[ell] - ranks[ell] - ranks[ell + 1] for ell in range(n))
        simple_dim = sum(1 for a in compositions(d, n) if stable_label_condition(a, m))
        rows.append(BggDegreeRow(d, tuple(dims), tuple(ranks[:n]), homology, simple_dim))

    composites = all(_composite_vanishes(maps[ell], maps[ell - 1], max_degree)
                     for ell in range(1, n - 1))
    return BggReport(m, n, max_degree, rows, composites)


def _graded_dim(n: int, ell: int, degree: int) -> int:
    if degree < 0:
        return 0
    syt = len(standard_tableaux(hook_shape(n, ell)))
    return syt * len(list(compositions(degree, n)))


def _composite_vanishes(upper: BggMap, lower: BggMap, max_degree: int) -> bool:
    """φ_ℓ ∘ φ_{ℓ+1} = 0 on every label that lands within the degree window."""
    for d in range(max_degree - 2 * upper.m + 1):
        for label in upper.source.basis_labels(d):
            img = upper.apply_label(*label)
            if img and lower.apply_label(*img[1]):
                return False
    return True


# ---------------------------------------------------------------------------
# Mackey weight multisets

def mackey_weight_multiset(mu: Sequence[int], t, c, k: int
                           ) -> list[tuple[Fraction, ...]]:
    """Sorted generalized u-weights of the degree-k part of the induced module."""
    mu = tuple(mu)
    t, c = Fraction(t), Fraction(c)
    n = sum(mu)
    out = []
    for a in compositions(k, n):
        g = sorting_permutation(a)
        for tab in standard_tableaux(mu):
            out.append(tuple(t * a[i] - tab.content(g[i]) * c for i in range(n)))
    return sorted(out)


def mackey_subquotient_dim(mu: Sequence[int], d: Sequence[int]) -> int:
    """dim of the layer attached to a weakly decreasing d: (n!/Πk_i!)·#SYT(μ)."""
    if any(x < y for x, y in zip(d, d[1:])):
        raise ValueError(f"{d} is not weakly decreasing")
    n = sum(mu)
    if len(d) != n:
        raise ValueError("length mismatch")
    count = math.factorial(n)
    for _, grp in itertools.groupby(d):
        count //= math.factorial(len(list(grp)))
    return count * len(standard_tableaux(tuple(mu)))


# ---------------------------------------------------------------------------
# the shift word W_m = τ(σ_{n-1}···σ_1 τ)^{m-1}

def wm_word(m: int, n: int) -> list:
    block: list = ["tau"] + [("sigma", j) for j in range(1, n)]
    return block * (m - 1) + ["tau"]


def wm_check(m: int, n: int, max_degree: int = 2) -> bool:
    """Exchange relations of the shift word on low-degree eigenvectors:
    u_1 W = W (u_n + m t), u_i W = W u_{i-1} and σ_i W = W σ_{i-1} inside."""
    if math.gcd(m, n) != 1:
        raise ValueError(f"need gcd(m, n) = 1; got {m}, {n}")
    mod = standard_module((n,), Fraction(m, n))
    word = wm_word(m, n)
    tab = row_tableau(n)
    for d in range(max_degree + 1):
        for a in compositions(d, n):
            v = vector(a, tab)
            wv = mod.act_word(word, v)
            lhs = mod.act(("u", 1), wv)
            rhs = mod.act_word(word, mod.act(("u", n), v))
            for lab, q in mod.act_word(word, v).items():
                _add(rhs, lab, q * m * mod.t)
            if lhs != rhs:
                return False
            for i in range(2, n + 1):
                if mod.act(("u", i), wv) != mod.act_word(word, mod.act(("u", i - 1), v)):
                    return False
            for i in range(2, n):
                if mod.act(("sigma", i), wv) != mod.act_word(word, mod.act(("sigma", i - 1), v)):
                    return False
    return True


# ---------------------------------------------------------------------------
# relation suite on a module

def module_relations_ok(mod: Module, max_degree: int) -> bool:
    """Check the full defining presentation as operator identities on the
    weight basis up to a degree.  Returns False on the first violation."""
    n, t, c = mod.n, mod.t, mod.c
    labels = [lab for d in range(max_degree + 1) for lab in mod.basis_labels(d)]

    def act_seq(word, vec):
        return mod.act_word(word, vec)

    for lab in labels:
        v: ModuleVector = {lab: F1}
        tau_v = mod.act("tau", v)
        lam_v = mod.act("lambda", v)
        # degree-zero subalgebra and its braid structure
        for i in range(1, n):
            si_v = mod.act(("s", i), v)
            if mod.act(("s", i), si_v) != v:
                return False
            lhs = mod.act(("s", i), mod.act(("u", i), v))
            rhs = mod.act(("u", i + 1), si_v)
            _add(rhs, lab, c)
            if lhs != rhs:
                return False
            for j in range(1, n):
                if j not in (i, i - 1):
                    if act_seq([("u", i), ("s", j)], v) != act_seq([("s", j), ("u", i)], v):
                        return False
        for i in range(1, n - 1):
            if act_seq([("s", i), ("s", i + 1), ("s", i)], v) != \
               act_seq([("s", i + 1), ("s", i), ("s", i + 1)], v):
                return False
            for j in range(i + 2, n):
                if act_seq([("s", i), ("s", j)], v) != act_seq([("s", j), ("s", i)], v):
                    return False
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if act_seq([("u", i), ("u", j)], v) != act_seq([("u", j), ("u", i)], v):
                    return False
        # shift relations
        for i in range(1, n):
            if mod.act(("u", i + 1), tau_v) != mod.act("tau", mod.act(("u", i), v)):
                return False
        un_tau = mod.act("tau", mod.act(("u", n), v))
        u1_shift = mod.act(("u", 1), tau_v)
        for l2, q in tau_v.items():
            _add(u1_shift, l2, -t * q)
        if un_tau != u1_shift:
            return False
        for i in range(2, n + 1):
            if mod.act(("u", i - 1), lam_v) != mod.act("lambda", mod.act(("u", i), v)):
                return False
        lhs = mod.act("lambda", mod.act(("u", 1), v))
        rhs = mod.act(("u", n), lam_v)
        for l2, q in lam_v.items():
            _add(rhs, l2, t * q)
        if lhs != rhs:
            return False
        for i in range(2, n):
            if act_seq([("s", i - 1), "tau"], v) != mod.act(("s", i), tau_v):
                return False
        if mod.act(("s", 1), act_seq(["tau", "tau"], v)) != \
           act_seq(["tau", "tau"], mod.act(("s", n - 1), v)):
            return False
        for i in range(1, n - 1):
            if mod.act(("s", i), lam_v) != mod.act("lambda", mod.act(("s", i + 1), v)):
                return False
        if mod.act(("s", n - 1), act_seq(["lambda", "lambda"], v)) != \
           act_seq(["lambda", "lambda"], mod.act(("s", 1), v)):
            return False
        lhs = mod.act("lambda", tau_v)
        rhs = mod.act(("u", n), v)
        _add(rhs, lab, t)
        if lhs != rhs:
            return False
        if mod.act("tau", lam_v) != mod.act(("u", 1), v):
            return False
        lhs = mod.act("lambda", mod.act(("s", 1), tau_v))
        rhs = mod.act("tau", mod.act(("s", n - 1), lam_v))
        _add(rhs, lab, c)
        if lhs != rhs:
            return False
    return True
