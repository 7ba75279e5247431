"""Dense exact linear algebra over the rationals (lists of Fraction rows)."""
from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]

ZERO = Fraction(0)
ONE = Fraction(1)


def zeros(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def eye(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = ONE
    return m


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows, mid, cols = len(a), len(b), len(b[0]) if b else 0
    out = zeros(rows, cols)
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(mid):
            q = ai[k]
            if q:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        oi[j] += q * bk[j]
    return out


def mat_pow(a: Matrix, k: int) -> Matrix:
    out = eye(len(a))
    base = [row[:] for row in a]
    while k:
        if k & 1:
            out = mat_mul(out, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return out


def mat_sub_scalar(a: Matrix, q: Fraction) -> Matrix:
    out = [row[:] for row in a]
    for i in range(len(a)):
        out[i][i] -= q
    return out


def mat_stack(blocks: list[Matrix]) -> Matrix:
    out: Matrix = []
    for b in blocks:
        out.extend(row[:] for row in b)
    return out


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), ZERO)


def rank(m: Matrix) -> int:
    """Row-echelon rank; rows are normalized so entries stay small."""
    if not m or not m[0]:
        return 0
    a = [row[:] for row in m]
    rows, cols = len(a), len(a[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = ONE / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                q = a[i][c]
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def nullspace(m: Matrix, cols: int) -> list[list[Fraction]]:
    """Basis of {v : m v = 0} for an (anything x cols) matrix."""
    if not m:
        return [[ONE if j == i else ZERO for j in range(cols)] for i in range(cols)]
    a = [row[:] for row in m]
    rows = len(a)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = ONE / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                q = a[i][c]
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * cols
        v[fc] = ONE
        for ri, pc in enumerate(pivots):
            v[pc] = -a[ri][fc]
        basis.append(v)
    return basis


def solve_in_span(basis: list[list[Fraction]], target: list[Fraction]) -> list[Fraction] | None:
    """Coordinates of target in the span of basis vectors, or None."""
    if not basis:
        return [] if all(x == 0 for x in target) else None
    cols = len(basis)
    dim = len(target)
    aug = [[basis[j][i] for j in range(cols)] + [target[i]] for i in range(dim)]
    r = 0
    pivots = []
    for c in range(cols):
        piv = next((i for i in range(r, dim) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = ONE / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(dim):
            if i != r and aug[i][c]:
                q = aug[i][c]
                aug[i] = [x - q * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    coords = [ZERO] * cols
    for ri, pc in enumerate(pivots):
        coords[pc] = aug[ri][-1]
    for i in range(r, dim):
        if aug[i][-1]:
            return None
    # rows above r with zero pivot part but nonzero rhs are impossible here
    # because elimination cleared the pivot columns; verify the solution
    for i in range(dim):
        s = sum((coords[j] * basis[j][i] for j in range(cols)), ZERO)
        if s != target[i]:
            return None
    return coords
