"""
Extended affine symmetric group combinatorics in window notation.

An n-periodic permutation of the integers is stored by its window
[w(1), ..., w(n)]; everything outside the window is evaluated through the
periodicity rule w(i + n) = w(i) + n.  Finite permutations of {1..n} are
plain tuples in one-line notation (1-based values), and integer sequences
(the labels 𝐚 of weight bases) are plain tuples of ints.

The main exports are the minimal coset representatives w_a attached to a
nonnegative label, their factorization into a partition of simple-reflection
blocks, the total order on labels of a fixed norm (computed by comparing
windows lexicographically), and the m-stable / m-restricted predicates.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence


# ---------------------------------------------------------------------------
# finite permutations (one-line tuples with values 1..n)

def perm_inverse(g: Sequence[int]) -> tuple[int, ...]:
    """Inverse of a finite permutation in one-line notation.

    >>> perm_inverse((1, 5, 2, 3, 4))
    (1, 3, 4, 5, 2)
    """
    inv = [0] * len(g)
    for i, gi in enumerate(g):
        inv[gi - 1] = i + 1
    return tuple(inv)


def perm_compose(g: Sequence[int], h: Sequence[int]) -> tuple[int, ...]:
    """(g h)(i) = g(h(i))."""
    return tuple(g[h[i] - 1] for i in range(len(g)))


def transposition(n: int, i: int, j: int) -> tuple[int, ...]:
    """The transposition (i j) in S_n, 1-based."""
    word = list(range(1, n + 1))
    word[i - 1], word[j - 1] = word[j - 1], word[i - 1]
    return tuple(word)


def perm_cycle_count(g: Sequence[int]) -> int:
    """Number of cycles (fixed points included)."""
    seen = [False] * len(g)
    count = 0
    for i in range(len(g)):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = g[j] - 1
    return count


def adjacent_word(g: Sequence[int]) -> list[int]:
    """A word [i_1, ..., i_k] with g = s_{i_1} ∘ s_{i_2} ∘ ... ∘ s_{i_k}.

    The rightmost factor acts first.  Obtained by bubble sort, so reduced.

    >>> adjacent_word((2, 1, 3))
    [1]
    >>> adjacent_word((2, 3, 1))
    [1, 2]
    """
    word: list[int] = []
    cur = list(g)
    # bubble-sorting the one-line word multiplies g by s_i on the right
    changed = True
    while changed:
        changed = False
        for i in range(len(cur) - 1):
            if cur[i] > cur[i + 1]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                word.append(i + 1)
                changed = True
    word.reverse()
    return word


# ---------------------------------------------------------------------------
# integer sequences (labels)

def norm(a: Sequence[int]) -> int:
    """||a|| = sum of the entries."""
    return sum(a)


def pi_act(a: Sequence[int]) -> tuple[int, ...]:
    """π·a = (a_n + 1, a_1, ..., a_{n-1})."""
    return (a[-1] + 1,) + tuple(a[:-1])


def pi_inv_act(a: Sequence[int]) -> tuple[int, ...]:
    """π^{-1}·a = (a_2, ..., a_n, a_1 - 1)."""
    return tuple(a[1:]) + (a[0] - 1,)


def s_act(i: int, a: Sequence[int]) -> tuple[int, ...]:
    """s_i·a swaps entries i and i+1 (1-based)."""
    b = list(a)
    b[i - 1], b[i] = b[i], b[i - 1]
    return tuple(b)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All 𝐚 ∈ Z^parts_{≥0} with ||𝐚|| = total, lexicographically increasing.

    >>> list(compositions(2, 2))
    [(0, 2), (1, 1), (2, 0)]
    """
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def sorting_permutation(a: Sequence[int]) -> tuple[int, ...]:
    """The minimal-length g with g·a weakly increasing, i.e. sort(a)_{g(i)} = a_i.

    Entrywise, g(i) = #{j : a_j < a_i} + #{j ≤ i : a_j = a_i}.

    >>> sorting_permutation((0, 2, 0, 0, 1))
    (1, 5, 2, 3, 4)
    >>> sorting_permutation((3, 1, 2))
    (3, 1, 2)
    """
    g = []
    for i, ai in enumerate(a):
        below = sum(1 for aj in a if aj < ai)
        ties = sum(1 for j in range(i + 1) if a[j] == ai)
        g.append(below + ties)
    return tuple(g)


# ---------------------------------------------------------------------------
# affine permutations

@dataclass(frozen=True)
class AffinePermutation:
    """An n-periodic bijection of Z with window [w(1), ..., w(n)]."""

    window: tuple[int, ...]

    def __post_init__(self):
        n = len(self.window)
        if n == 0:
            raise ValueError("empty window")
        if sorted(w % n for w in self.window) != list(range(n)):
            raise ValueError(f"window residues are not a permutation mod {n}: {self.window}")

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        # reduce to the window through w(i + kn) = w(i) + kn
        n = self.n
        j = (i - 1) % n + 1
        return self.window[j - 1] + (i - j)

    def inverse(self) -> "AffinePermutation":
        n = self.n
        inv = [0] * n
        for j, wj in enumerate(self.window, start=1):
            r = (wj - 1) % n + 1
            inv[r - 1] = j + (r - wj)
        return AffinePermutation(tuple(inv))

    def __mul__(self, other: "AffinePermutation") -> "AffinePermutation":
        if self.n != other.n:
            raise ValueError("period mismatch")
        return AffinePermutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def degree(self) -> int:
        """(1/n) Σ (w(i) - i); exact, asserted integral."""
        n = self.n
        d = Fraction(sum(self.window) - n * (n + 1) // 2, n)
        if d.denominator != 1:
            raise AssertionError(f"non-integral degree for window {self.window}")
        return int(d)

    def is_identity(self) -> bool:
        return all(w == i for i, w in enumerate(self.window, start=1))

    def is_min_coset_rep(self) -> bool:
        """Positive strictly increasing window (the set Min)."""
        prev = 0
        for w in self.window:
            if w <= prev:
                return False
            prev = w
        return True


def identity(n: int) -> AffinePermutation:
    return AffinePermutation(tuple(range(1, n + 1)))


def from_finite(g: Sequence[int]) -> AffinePermutation:
    """Embed a finite permutation of {1..n}."""
    return AffinePermutation(tuple(g))


def shift(n: int) -> AffinePermutation:
    """π, i ↦ i + 1."""
    return AffinePermutation(tuple(range(2, n + 2)))


def translation(a: Sequence[int]) -> AffinePermutation:
    """t_a with window [1 + n·a_1, ..., n + n·a_n].

    >>> translation((0, 2, 0, 0, 1)).window
    (1, 12, 3, 4, 10)
    >>> translation((1, 0, 0)).window
    (4, 2, 3)
    """
    n = len(a)
    return AffinePermutation(tuple(i + n * a[i - 1] for i in range(1, n + 1)))


def min_coset_rep(a: Sequence[int]) -> AffinePermutation:
    """w_a = t_a g_a^{-1}, the minimal coset representative of a nonnegative label.

    >>> min_coset_rep((0, 2, 0, 0, 1)).window
    (1, 3, 4, 10, 12)
    >>> min_coset_rep((0, 1, 0, 0, 2)).window
    (1, 3, 4, 7, 15)
    """
    if any(x < 0 for x in a):
        raise ValueError(f"label has a negative entry: {tuple(a)}")
    n = len(a)
    ginv = perm_inverse(sorting_permutation(a))
    return AffinePermutation(tuple(ginv[i] + n * a[ginv[i] - 1] for i in range(n)))


def coset_factorization(w: AffinePermutation) -> tuple[int, ...]:
    """The partition ν with w = (s_{ν_r}…s_1)π ··· (s_{ν_1}…s_1)π, for w ∈ Min.

    Parts satisfy n > ν_1 ≥ ν_2 ≥ … ≥ ν_r ≥ 0, r = degree(w); parts are
    peeled off right to left: ν_1 is the largest k with w(k) < w(n) - n.

    >>> coset_factorization(min_coset_rep((0, 2, 0, 0, 1)))
    (3, 3, 1)
    >>> coset_factorization(identity(4))
    ()
    >>> coset_factorization(AffinePermutation((2, 3, 4)))
    (0,)
    """
    if not w.is_min_coset_rep():
        raise ValueError(f"window is not strictly increasing positive: {w.window}")
    n = w.n
    nu: list[int] = []
    cur = list(w.window)
    while cur != list(range(1, n + 1)):
        top = cur[-1] - n
        k = 0
        for i in range(n, 0, -1):
            if cur[i - 1] < top:
                k = i
                break
        # cur ← cur ∘ π^{-1} ∘ s_1 ∘ ... ∘ s_k, which rotates the window and
        # bubbles the wrapped entry back to position k + 1
        cur = [cur[-1] - n] + cur[:-1]
        for i in range(k):
            cur[i], cur[i + 1] = cur[i + 1], cur[i]
        nu.append(k)
    return tuple(nu)


def reassemble(n: int, nu: Sequence[int]) -> AffinePermutation:
    """Rebuild (s_{ν_r}…s_1)π ··· (s_{ν_1}…s_1)π from the factorization."""
    w = identity(n)
    pi = shift(n)
    for k in nu:
        block = pi
        for i in range(1, k + 1):
            block = from_finite(transposition(n, i, i + 1)) * block
        w = block * w
    return w


def coset_factorization_transpose(w: AffinePermutation) -> tuple[int, ...]:
    """ν^T read off the inversions: ν^T_i = #{k < 1 : w(k) > w(i)}, i = 1..n-1.

    >>> coset_factorization_transpose(min_coset_rep((0, 2, 0, 0, 1)))
    (3, 2, 2)
    """
    if not w.is_min_coset_rep():
        raise ValueError(f"window is not strictly increasing positive: {w.window}")
    n = w.n
    cols = []
    for i in range(1, n):
        # count k ≤ 0 with w(k) > w(i), one residue class at a time:
        # k = j - tn (t ≥ 1) contributes when t < (w(j) - w(i))/n
        count = 0
        for wj in w.window:
            count += max(0, -((-(wj - w.window[i - 1])) // n) - 1)
        cols.append(count)
    while cols and cols[-1] == 0:
        cols.pop()
    return tuple(cols)


# ---------------------------------------------------------------------------
# the order on labels of fixed norm

def compare_order(a: Sequence[int], b: Sequence[int]) -> int:
    """-1 if a ≺ b, 0 if equal, +1 if a ≻ b; requires ||a|| = ||b||.

    a ≺ b exactly when the window of w_a is lexicographically greater than
    the window of w_b.

    >>> compare_order((1, 0, 0), (0, 1, 0))
    -1
    >>> compare_order((0, 0, 2), (0, 2, 0))
    1
    """
    if norm(a) != norm(b):
        raise ValueError(f"labels have different norms: {tuple(a)}, {tuple(b)}")
    wa = min_coset_rep(a).window
    wb = min_coset_rep(b).window
    if wa == wb:
        return 0
    return -1 if wa > wb else 1


def precedes(a: Sequence[int], b: Sequence[int]) -> bool:
    return compare_order(a, b) < 0


def sort_labels(labels: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Sort labels of one norm increasingly for ≺ (decreasing lex on windows)."""
    return sorted((tuple(x) for x in labels),
                  key=lambda a: min_coset_rep(a).window, reverse=True)


# ---------------------------------------------------------------------------
# m-stable and m-restricted permutations

def is_m_stable(w: AffinePermutation, m: int) -> bool:
    """w(x + m) > w(x) for all x; x ∈ {1..n} suffices by periodicity."""
    if m < 1:
        raise ValueError("m must be positive")
    return all(w(x + m) > w(x) for x in range(1, w.n + 1))


def is_m_restricted(w: AffinePermutation, m: int) -> bool:
    """No j < i with w(j) - w(i) = m; equivalent to m-stability of the inverse."""
    return is_m_stable(w.inverse(), m)


def omega_from_basis(a: Sequence[int], m: int) -> AffinePermutation:
    """The affine permutation ω with ω^{-1}(i) = -n·a_i + m(g_a(i) - 1).

    Requires gcd(m, n) = 1 so that the right-hand side is a valid window.

    >>> omega_from_basis((0, 1, 0, 0, 2), 3).inverse().window
    (0, 4, 3, 6, 2)
    """
    n = len(a)
    if math.gcd(m, n) != 1:
        raise ValueError(f"gcd(m, n) must be 1, got m={m}, n={n}")
    g = sorting_permutation(a)
    inv_window = tuple(-n * a[i] + m * (g[i] - 1) for i in range(n))
    return AffinePermutation(inv_window).inverse()


def stable_label_condition(a: Sequence[int], m: int) -> bool:
    """a_i - a_j ≤ m for all i, j, and every difference equal to m has i < j.

    This is the window-notation criterion for ω = omega_from_basis(a, m) to be
    m-stable, and coincides with membership in the simple-quotient label set.
    """
    hi, lo = max(a), min(a)
    if hi - lo > m:
        return False
    if hi - lo == m:
        last_hi = max(i for i, x in enumerate(a) if x == hi)
        first_lo = min(i for i, x in enumerate(a) if x == lo)
        return last_hi < first_lo
    return True


def power_shift_perm(n: int, m: int) -> AffinePermutation:
    """The degree-0 base point [0, m, 2m, ..., (n-1)m]; needs gcd(m, n) = 1."""
    if math.gcd(m, n) != 1:
        raise ValueError(f"gcd(m, n) must be 1, got m={m}, n={n}")
    return AffinePermutation(tuple(m * i for i in range(n)))


def invariant_sets(w: AffinePermutation, i: int, lo: int, hi: int) -> set[int]:
    """{x ∈ [lo, hi] : w(x) ≥ i}, the truncated superlevel set of w."""
    return {x for x in range(lo, hi + 1) if w(x) >= i}


if __name__ == "__main__":
    import doctest
    doctest.testmod()
