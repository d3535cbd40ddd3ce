"""Exact linear algebra: F_p row reduction and fraction-free determinants."""

from . import kernels


def rref(rows, ncols, p):
    return kernels.rref_mod_p(rows, ncols, p)


def rank_mod_p(rows, ncols, p):
    if not rows:
        return 0
    return len(rref(rows, ncols, p)[1])


def nullspace_mod_p(columns, nrows, p):
    """Basis of {c : sum_k c_k * columns[k] = 0} over F_p.

    ``columns`` lists the images of the unit vectors, each of length nrows.
    """
    ncols = len(columns)
    if ncols == 0:
        return []
    matrix = [[columns[k][r] % p for k in range(ncols)] for r in range(nrows)]
    reduced, pivots = rref(matrix, ncols, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for row, pc in zip(reduced, pivots):
            vec[pc] = (-row[free]) % p
        basis.append(vec)
    return basis


def span_mod_p(basis, p):
    """All F_p-combinations of the given vectors (as tuples)."""
    if not basis:
        return []
    n = len(basis[0])
    out = [tuple([0] * n)]
    for vec in basis:
        grown = []
        for v in out:
            for c in range(p):
                grown.append(tuple((a + c * b) % p for a, b in zip(v, vec)))
        out = grown
    return out


def bareiss_det(ring, matrix):
    """Determinant by fraction-free (Bareiss) elimination over a commutative ring.

    ``ring`` supplies zero, one, mul, sub, neg, is_zero and an exact ``div``.
    """
    n = len(matrix)
    if n == 0:
        return ring.one
    a = [list(row) for row in matrix]
    sign = False
    prev = ring.one
    for k in range(n - 1):
        if ring.is_zero(a[k][k]):
            swap = next((r for r in range(k + 1, n) if not ring.is_zero(a[r][k])), None)
            if swap is None:
                return ring.zero
            a[k], a[swap] = a[swap], a[k]
            sign = not sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = ring.sub(ring.mul(a[i][j], pivot), ring.mul(a[i][k], a[k][j]))
                a[i][j] = ring.div(num, prev)
            a[i][k] = ring.zero
        prev = pivot
    det = a[n - 1][n - 1]
    return ring.neg(det) if sign else det


def matmul(ring, x, y):
    n, k, m = len(x), len(y), len(y[0]) if y else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = ring.zero
            for l in range(k):
                acc = ring.add(acc, ring.mul(x[i][l], y[l][j]))
            row.append(acc)
        out.append(row)
    return out
