"""Partitions, standard Young tableaux, contents, and hook shapes.

Tableaux are stored as tuples of rows filled bijectively with 1..n, rows
and columns strictly increasing.  The content of the box in row r, column
c (1-based) is c - r.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing positive tuples summing to n.

    >>> list(partitions(4))
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def hook_shape(n: int, ell: int) -> tuple[int, ...]:
    """(n - ell, 1^ell)."""
    if not 0 <= ell <= n - 1:
        raise ValueError(f"hook leg length {ell} out of range for n={n}")
    return (n - ell,) + (1,) * ell


def is_hook(mu: Sequence[int]) -> bool:
    return all(p == 1 for p in mu[1:])


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        entries = [x for row in self.rows for x in row]
        n = len(entries)
        if sorted(entries) != list(range(1, n + 1)):
            raise ValueError(f"not a bijective filling of 1..{n}: {self.rows}")
        for row in self.rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"row not increasing: {self.rows}")
        for r in range(len(self.rows) - 1):
            upper, lower = self.rows[r], self.rows[r + 1]
            if len(lower) > len(upper):
                raise ValueError(f"shape not a partition: {self.rows}")
            if any(upper[c] >= lower[c] for c in range(len(lower))):
                raise ValueError(f"column not increasing: {self.rows}")

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def position(self, k: int) -> tuple[int, int]:
        """(row, column) of entry k, 1-based."""
        for r, row in enumerate(self.rows, start=1):
            for c, x in enumerate(row, start=1):
                if x == k:
                    return (r, c)
        raise KeyError(k)

    def content(self, k: int) -> int:
        r, c = self.position(k)
        return c - r

    def content_vector(self) -> tuple[int, ...]:
        return tuple(self.content(k) for k in range(1, self.n + 1))

    def swap(self, k: int) -> "StandardTableau | None":
        """Exchange entries k and k+1; None if the result is not standard."""
        rk, ck = self.position(k)
        rk1, ck1 = self.position(k + 1)
        if rk == rk1 or ck == ck1:
            return None
        rows = [list(r) for r in self.rows]
        rows[rk - 1][ck - 1] = k + 1
        rows[rk1 - 1][ck1 - 1] = k
        return StandardTableau(tuple(tuple(r) for r in rows))

    def same_row(self, k: int) -> bool:
        return self.position(k)[0] == self.position(k + 1)[0]

    def same_column(self, k: int) -> bool:
        return self.position(k)[1] == self.position(k + 1)[1]


@lru_cache(maxsize=None)
def standard_tableaux(shape: tuple[int, ...]) -> tuple[StandardTableau, ...]:
    """All standard tableaux of a partition shape, in a fixed order.

    Built by removing the largest entry from every outer corner.

    >>> [t.rows for t in standard_tableaux((2, 1))]
    [((1, 2), (3,)), ((1, 3), (2,))]
    """
    n = sum(shape)
    if n == 0:
        return (StandardTableau(()),)
    out = []
    for r in range(len(shape)):
        if shape[r] and (r == len(shape) - 1 or shape[r] > shape[r + 1]):
            smaller = tuple(p for p in
                            (shape[i] - (1 if i == r else 0) for i in range(len(shape)))
                            if p > 0)
            for t in standard_tableaux(smaller):
                rows = [list(row) for row in t.rows]
                while len(rows) <= r:
                    rows.append([])
                rows[r].append(n)
                out.append(StandardTableau(tuple(tuple(row) for row in rows)))
    return tuple(sorted(out, key=lambda t: t.rows))


def row_tableau(n: int) -> StandardTableau:
    """The unique tableau of the one-row shape (n)."""
    return StandardTableau((tuple(range(1, n + 1)),))


def hook_tableau(n: int, legs: Sequence[int]) -> StandardTableau:
    """The hook tableau with first column 1, i_1 < ... < i_ell (legs excludes 1)."""
    legs = tuple(sorted(legs))
    if legs and (legs[0] < 2 or legs[-1] > n or len(set(legs)) != len(legs)):
        raise ValueError(f"invalid leg entries {legs} for n={n}")
    arm = [k for k in range(1, n + 1) if k not in legs]
    rows = [tuple(arm)] + [(i,) for i in legs]
    return StandardTableau(tuple(rows))


def hook_legs(t: StandardTableau) -> tuple[int, ...]:
    """Leg entries below the corner of a hook tableau."""
    if not is_hook(t.shape):
        raise ValueError(f"not a hook shape: {t.shape}")
    return tuple(row[0] for row in t.rows[1:])


def min_content_label(t: StandardTableau) -> int:
    """Entry in the box of smallest content (for a hook: the lowest leg box)."""
    return min(range(1, t.n + 1), key=lambda k: (t.content(k), k))


def residue_content_counts(mu: Sequence[int], modulus: int) -> tuple[int, ...]:
    """d_i(μ): number of boxes with content ≡ i (mod modulus), i = 0..modulus-1."""
    counts = [0] * modulus
    for r, length in enumerate(mu, start=1):
        for c in range(1, length + 1):
            counts[(c - r) % modulus] += 1
    return tuple(counts)


def has_repeated_content(mu: Sequence[int]) -> bool:
    contents = [c - r for r, length in enumerate(mu, start=1) for c in range(1, length + 1)]
    return len(set(contents)) != len(contents)


if __name__ == "__main__":
    import doctest
    doctest.testmod()
