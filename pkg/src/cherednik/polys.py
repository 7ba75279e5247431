"""Sparse multivariate polynomials with exact rational coefficients.

Exponent vectors are tuples of nonnegative ints of a fixed length n;
coefficients are fractions.Fraction.  Zero coefficients are never stored.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

Exponent = tuple[int, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class MultiPoly:
    """A polynomial in n variables, held as {exponent tuple: coefficient}."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exponent, Fraction] | None = None):
        self.n = n
        self.terms: dict[Exponent, Fraction] = {}
        if terms:
            for e, q in terms.items():
                if q:
                    self.terms[e] = Fraction(q)

    @classmethod
    def zero(cls, n: int) -> "MultiPoly":
        return cls(n)

    @classmethod
    def constant(cls, n: int, q) -> "MultiPoly":
        return cls(n, {(0,) * n: Fraction(q)})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "MultiPoly":
        return cls(len(exps), {tuple(exps): Fraction(coeff)})

    @classmethod
    def variable(cls, n: int, i: int) -> "MultiPoly":
        """x_i, 1-based."""
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {tuple(e): ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiPoly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def coeff(self, e: Exponent) -> Fraction:
        return self.terms.get(tuple(e), ZERO)

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for e, q in other.terms.items():
            s = out.get(e, ZERO) + q
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = MultiPoly(self.n)
        res.terms = out
        return res

    def __neg__(self) -> "MultiPoly":
        res = MultiPoly(self.n)
        res.terms = {e: -q for e, q in self.terms.items()}
        return res

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def scale(self, q) -> "MultiPoly":
        q = Fraction(q)
        res = MultiPoly(self.n)
        if q:
            res.terms = {e: c * q for e, c in self.terms.items()}
        return res

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        out: dict[Exponent, Fraction] = {}
        for e1, q1 in self.terms.items():
            for e2, q2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, ZERO) + q1 * q2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = MultiPoly(self.n)
        res.terms = out
        return res

    __rmul__ = __mul__

    def mul_variable(self, i: int) -> "MultiPoly":
        """Multiply by x_i (1-based), cheaper than a general product."""
        res = MultiPoly(self.n)
        res.terms = {
            e[: i - 1] + (e[i - 1] + 1,) + e[i:]: q for e, q in self.terms.items()
        }
        return res

    def diff(self, i: int) -> "MultiPoly":
        """∂/∂x_i, 1-based."""
        out: dict[Exponent, Fraction] = {}
        for e, q in self.terms.items():
            k = e[i - 1]
            if k:
                out[e[: i - 1] + (k - 1,) + e[i:]] = q * k
        res = MultiPoly(self.n)
        res.terms = out
        return res

    def permute(self, g: Sequence[int]) -> "MultiPoly":
        """Action of a finite permutation: x^e ↦ x^{g·e} with (g·e)_{g(i)} = e_i."""
        out: dict[Exponent, Fraction] = {}
        for e, q in self.terms.items():
            moved = [0] * self.n
            for i in range(self.n):
                moved[g[i] - 1] = e[i]
            me = tuple(moved)
            s = out.get(me, ZERO) + q
            if s:
                out[me] = s
            else:
                out.pop(me, None)
        res = MultiPoly(self.n)
        res.terms = out
        return res

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, reverse=True):
            q = self.terms[e]
            mono = "*".join(f"x{i+1}^{k}" for i, k in enumerate(e) if k) or "1"
            bits.append(f"({q})*{mono}")
        return " + ".join(bits)


def divided_difference(f: MultiPoly, i: int, j: int) -> MultiPoly:
    """(f - s_{ij}·f) / (x_i - x_j), exact by construction (1-based i ≠ j).

    Each monomial contributes the geometric-sum quotient
    (x_i^u x_j^v - x_i^v x_j^u)/(x_i - x_j) = ± Σ_p x_i^{lo+p} x_j^{hi-1-p}.
    """
    out: dict[Exponent, Fraction] = {}
    ii, jj = i - 1, j - 1
    for e, q in f.terms.items():
        u, v = e[ii], e[jj]
        if u == v:
            continue
        sign = 1 if u > v else -1
        lo, hi = min(u, v), max(u, v)
        base = list(e)
        for p in range(hi - lo):
            base[ii] = lo + p
            base[jj] = hi - 1 - p
            key = tuple(base)
            s = out.get(key, ZERO) + sign * q
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    res = MultiPoly(f.n)
    res.terms = out
    return res
