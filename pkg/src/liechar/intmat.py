"""Small exact integer/rational matrix helpers.

Matrices are tuples of tuples of ints (rows), vectors are tuples.  The
whole package uses the row-vector convention: vectors act from the left,
`v @ M` means ``mat_vec(v, M)`` and composition "apply A then B" is the
product ``A @ B``.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import GroupTooLarge


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(row[x] * col[x] for x in range(k)) for col in bt) for row in a
    )


def mat_vec(v, m):
    """Row vector times matrix: returns v @ m."""
    n = len(v)
    return tuple(sum(v[i] * m[i][j] for i in range(n)) for j in range(len(m[0])))


def transpose(m):
    return tuple(zip(*m))


def mat_neg(m):
    return tuple(tuple(-x for x in row) for row in m)


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(m, c):
    return tuple(tuple(c * x for x in row) for row in m)


def mat_order(m, bound=10_000):
    """Multiplicative order of an integer matrix (must be finite)."""
    n = len(m)
    eye = identity(n)
    acc = m
    for k in range(1, bound + 1):
        if acc == eye:
            return k
        acc = mat_mul(acc, m)
    raise ValueError("matrix order exceeds bound; not finite order?")


def mat_inv_fractions(m):
    """Exact inverse of a square integer/rational matrix as Fraction rows."""
    n = len(m)
    a = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def det(m):
    """Exact determinant via fraction-free elimination."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    sign = 1
    acc = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        acc *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    val = sign * acc
    assert val.denominator == 1
    return int(val)


def char_poly_reversed(m):
    """Coefficients of det(1 - t*M) as a list [c0, c1, ..., cn] (c0 = 1).

    Power sums of eigenvalues are matrix traces; Newton's identities turn
    them into elementary symmetric functions, exactly over Q.
    """
    n = len(m)
    a = np.array(m, dtype=object)
    traces = []
    power = a.copy()
    for _ in range(n):
        traces.append(int(np.trace(power)))
        power = power @ a
    es = [Fraction(1)]
    for k in range(1, n + 1):
        s = Fraction(0)
        for i in range(1, k + 1):
            s += (-1) ** (i - 1) * es[k - i] * traces[i - 1]
        es.append(s / k)
    out = []
    for k, e in enumerate(es):
        v = (-1) ** k * e
        assert v.denominator == 1
        out.append(int(v))
    return out


def mulclose(generators, bound=10**6):
    """Closure of integer matrices under multiplication (BFS).

    Returns the full list (deterministic order) or raises GroupTooLarge.
    Uses numpy int64 products internally with byte keys for hashing.
    """
    gens = [np.array(g, dtype=np.int64) for g in generators]
    if not gens:
        return []
    seen = {}
    order = []
    start = np.array(identity(len(generators[0])), dtype=np.int64)
    queue = [start]
    seen[start.tobytes()] = True
    order.append(start)
    head = 0
    while head < len(queue):
        cur = queue[head]
        head += 1
        for g in gens:
            nxt = cur @ g
            key = nxt.tobytes()
            if key not in seen:
                if len(order) >= bound:
                    raise GroupTooLarge(f"group closure exceeded bound {bound}")
                seen[key] = True
                order.append(nxt)
                queue.append(nxt)
    return [tuple(tuple(int(x) for x in row) for row in m) for m in order]
