"""Fixed-point combinatorics of Hilbert schemes on the plane curve
singularities C = {x^m = y^n} and the non-reduced curve C_0 = {y^n = 0}.

Monomial ideals of C, presented over C[[x]] with generators y^{i-1} x^{c_i},
are staircases: weakly decreasing c with c_n ≥ c_1 - m.  Points of the
parabolic (full-flag) scheme are unsorted tuples subject to a wrap rule;
points of the compositional (Gieseker) scheme are staircases in the
transposed presentation over C[[y]] together with a labeling of their
generator boxes by 1..r.

Everything here is bare integer combinatorics; the weight dictionaries
translate to the eigenvalue data of the corresponding weight bases.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .affineperm import (
    compositions,
    perm_cycle_count,
    sorting_permutation,
    stable_label_condition,
)
from .modules import simple_triv, vector
from .tableaux import row_tableau


def _require_coprime(m: int, n: int) -> None:
    if m < 1 or n < 1 or math.gcd(m, n) != 1:
        raise ValueError(f"need coprime positive m, n; got {m}, {n}")


# ---------------------------------------------------------------------------
# staircases: Hilb^k(C) fixed points

def enum_hilb(m: int, n: int, k: int) -> list[tuple[int, ...]]:
    """Staircases c_1 ≥ ... ≥ c_n ≥ max(0, c_1 - m) with Σc_i = k, lex order.

    >>> enum_hilb(4, 3, 15)[:2]
    [(5, 5, 5), (6, 5, 4)]
    """
    _require_coprime(m, n)
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], remaining: int):
        if len(prefix) == n:
            if remaining == 0 and (not prefix or prefix[-1] >= prefix[0] - m):
                out.append(tuple(prefix))
            return
        hi = prefix[-1] if prefix else remaining
        lo = max(0, (prefix[0] - m) if prefix else 0)
        slots = n - len(prefix)
        for c in range(lo, min(hi, remaining) + 1):
            # the remaining slots must be able to absorb the rest
            if remaining - c <= c * (slots - 1):
                rec(prefix + [c], remaining - c)

    rec([], k)
    return sorted(out)


def jordan_composition(c: Sequence[int], m: int) -> tuple[int, ...]:
    """Jordan block sizes of multiplication by y on I/xI.

    Vertical runs of the staircase, with the first and last runs merged
    exactly when c_1 - c_n = m.

    >>> jordan_composition((7, 5, 3), 4)
    (2, 1)
    >>> jordan_composition((0, 0, 0), 4)
    (3,)
    """
    c = tuple(c)
    if any(a < b for a, b in zip(c, c[1:])):
        raise ValueError(f"not weakly decreasing: {c}")
    runs = [len(list(grp)) for _, grp in itertools.groupby(c)]
    if len(runs) > 1 and c[0] - c[-1] == m:
        runs = [runs[0] + runs[-1]] + runs[1:-1]
    return tuple(runs)


# ---------------------------------------------------------------------------
# parabolic flags: PHilb fixed points

def is_flag_point(c: Sequence[int], m: int) -> bool:
    """max - min ≤ m and every pair with c_j + m = c_i has j < i."""
    hi, lo = max(c), min(c)
    if hi - lo > m:
        return False
    if hi - lo == m:
        first_hi = min(i for i, x in enumerate(c) if x == hi)
        last_lo = max(i for i, x in enumerate(c) if x == lo)
        return last_lo < first_hi
    return True


@dataclass(frozen=True)
class FlagPoint:
    """A torus-fixed flag of ideals, stored by the unsorted column vector c."""

    c: tuple[int, ...]
    m: int

    def __post_init__(self):
        if any(x < 0 for x in self.c):
            raise ValueError(f"negative column in {self.c}")
        if not is_flag_point(self.c, self.m):
            raise ValueError(f"{self.c} violates the flag conditions for m={self.m}")

    @property
    def n(self) -> int:
        return len(self.c)

    @property
    def codim(self) -> int:
        return sum(self.c)

    @property
    def alpha(self) -> tuple[int, ...]:
        """y-exponents of the generators, derived from the sorting permutation."""
        n = self.n
        g = sorting_permutation(self.label)
        return tuple(n - g[n - i] for i in range(1, n + 1))

    @property
    def label(self) -> tuple[int, ...]:
        """The weight-basis label a with a_i = c_{n+1-i}."""
        return tuple(reversed(self.c))


def enum_phillb(m: int, n: int, k: int) -> list[FlagPoint]:
    """All parabolic fixed points of codimension k, lex order on c."""
    _require_coprime(m, n)
    return [FlagPoint(c, m) for c in sorted(compositions(k, n))
            if is_flag_point(c, m)]


def line_bundle_weights(point: FlagPoint, m: int, n: int) -> tuple[int, ...]:
    """Equivariant weights m·α_i + n·c_i of the flag line bundles.

    >>> line_bundle_weights(FlagPoint((3, 7, 5), 4), 4, 3)
    (17, 21, 19)
    """
    if point.m != m or point.n != n:
        raise ValueError("point does not match (m, n)")
    alpha = point.alpha
    return tuple(m * alpha[i] + n * point.c[i] for i in range(n))


# ---------------------------------------------------------------------------
# compositional flags: FHilb^{r,y} fixed points (transposed presentation)

@dataclass(frozen=True)
class LabeledStaircase:
    """A staircase over C[[y]] (m rows, drops ≤ n) with generator labels in 1..r.

    Labels weakly increase along vertical runs, and a box n columns left of
    another (one y-multiplication apart) carries a label at least as large.
    """

    base: tuple[int, ...]
    labels: tuple[int, ...]
    r: int

    @property
    def gamma(self) -> tuple[int, ...]:
        """Multiplicity vector: γ_k = number of boxes labeled k."""
        return tuple(sum(1 for x in self.labels if x == k)
                     for k in range(1, self.r + 1))


def _labelings(base: tuple[int, ...], n: int, r: int) -> Iterator[tuple[int, ...]]:
    mm = len(base)
    pairs = [(i, j) for i in range(mm) for j in range(mm)
             if base[i] - base[j] == n]          # i shorter drop → label(j) ≤ label(i)
    runs = [(i, i + 1) for i in range(mm - 1) if base[i] == base[i + 1]]
    for labels in itertools.product(range(1, r + 1), repeat=mm):
        if all(labels[i] <= labels[j] for i, j in runs) and \
           all(labels[j] <= labels[i] for i, j in pairs):
            yield labels


def enum_fhilb(m: int, n: int, r: int, k: int,
               presentation: str = "y") -> list[LabeledStaircase]:
    """Labeled codimension-k staircases of the length-r compositional flags.

    The default (and only implemented) presentation writes ideals over
    C[[y]] with m generators 1, x, ..., x^{m-1}; pass presentation="y"
    explicitly to acknowledge the transposed roles of the two axes.
    """
    if presentation != "y":
        raise ValueError("only the C[[y]] presentation is implemented")
    _require_coprime(m, n)
    if r < 1:
        raise ValueError("need r >= 1")
    out = []
    for base in enum_hilb(n, m, k):
        for labels in _labelings(base, n, r):
            out.append(LabeledStaircase(base, labels, r))
    return out


def flag_count(base: Sequence[int], n: int, r: int) -> int:
    """Π_i C(λ_i + r - 1, r - 1) over the Jordan blocks of the staircase."""
    lam = jordan_composition(tuple(base), n)
    count = 1
    for part in lam:
        count *= math.comb(part + r - 1, r - 1)
    return count


def gieseker_graded_dim(m: int, n: int, r: int, k: int) -> tuple[int, int]:
    """(fixed_point_dim, invariant_dim) of the degree-k graded piece.

    The fixed-point side sums label counts over codimension-k monomial
    ideals; the invariant side averages traces of the symmetric group on
    the degree-k part of the simple module with swapped parameters,
    weighted by r^{cycles}.
    """
    _require_coprime(m, n)
    fixed = sum(flag_count(base, n, r) for base in enum_hilb(n, m, k))

    mod = simple_triv(n, m)   # L_{n/m}(triv) over the rank-m algebra
    labels = mod.basis_labels(k)
    index = {lab: i for i, lab in enumerate(labels)}
    total = Fraction(0)
    for g in itertools.permutations(range(1, m + 1)):
        tr = Fraction(0)
        for lab in labels:
            img = mod.act_perm(g, {lab: Fraction(1)})
            tr += img.get(lab, Fraction(0))
        total += tr * r ** perm_cycle_count(g)
    invariant = total / math.factorial(m)
    if invariant.denominator != 1:
        raise AssertionError(f"non-integral invariant dimension {invariant}")
    return fixed, int(invariant)


def gamma_weight_dim(m: int, n: int, r: int, k: int,
                     gamma: Sequence[int]) -> int:
    """dim of the γ-isotypic piece: invariants of the parabolic S_γ ⊆ S_m."""
    _require_coprime(m, n)
    if sum(gamma) != m or len(gamma) != r:
        raise ValueError(f"γ must be an r-part weak composition of m; got {gamma}")
    mod = simple_triv(n, m)
    labels = mod.basis_labels(k)
    subgroup: list[tuple[int, ...]] = []
    blocks = []
    start = 1
    for part in gamma:
        blocks.append(list(range(start, start + part)))
        start += part
    for perms in itertools.product(*(itertools.permutations(b) for b in blocks)):
        g = list(range(1, m + 1))
        for block, perm in zip(blocks, perms):
            for pos, val in zip(block, perm):
                g[pos - 1] = val
        subgroup.append(tuple(g))
    total = Fraction(0)
    for g in subgroup:
        for lab in labels:
            total += mod.act_perm(g, {lab: Fraction(1)}).get(lab, Fraction(0))
    dim = total / len(subgroup)
    if dim.denominator != 1:
        raise AssertionError(f"non-integral γ-weight dimension {dim}")
    return int(dim)


# ---------------------------------------------------------------------------
# the non-reduced curve {y^n = 0}

def enum_nonreduced(n: int, k: int) -> list[tuple[int, ...]]:
    """Fixed-point labels of the parabolic scheme of {y^n = 0}: everything."""
    if n < 2:
        raise ValueError("need n >= 2")
    return sorted(compositions(k, n))


def nonreduced_weights(a: Sequence[int]) -> tuple[int, ...]:
    """First Chern classes of the flag line bundles at the fixed point of a.

    With c_i = a_{n+1-i}, the i-th bundle has weight α_i = n - g_a(n+1-i),
    which equals (n-1) + wt_{n+1-i} for the t = 0 weights wt_j = 1 - g_a(j).
    """
    n = len(a)
    g = sorting_permutation(tuple(a))
    return tuple(n - g[n - i] for i in range(1, n + 1))


def staircase_semigroup_closed(c: Sequence[int], m: int, n: int, bound: int) -> bool:
    """Re-encode the ideal via (x, y) = (z^n, z^m) and test closure under
    adding m and n, inside the window [0, bound]."""
    exps = {n * a + m * b
            for b in range(n) for a in range(c[b], bound + 1)}
    window = {e for e in exps if e <= bound}
    return all(e + m in exps or e + m > bound for e in window) and \
        all(e + n in exps or e + n > bound for e in window)
