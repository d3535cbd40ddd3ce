# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same contract as ``_kernels_py``."""

cdef inline long long _add(long long x, long long y, long long[:] exp,
                           long long[:] log, long long[:] zech,
                           long long qm1, long long p) nogil:
    cdef long long lx, d, z
    if p == 2:
        return x ^ y
    if x == 0:
        return y
    if y == 0:
        return x
    lx = log[x]
    d = log[y] - lx
    if d < 0:
        d += qm1
    z = zech[d]
    if z < 0:
        return 0
    return exp[lx + z]


cdef inline long long _neg(long long x, long long[:] exp, long long[:] log,
                           long long qm1, long long p) nogil:
    if p == 2 or x == 0:
        return x
    return exp[log[x] + qm1 // 2]


def fq_add(long long x, long long y, long long[:] exp, long long[:] log,
           long long[:] zech, long long qm1, long long p):
    return _add(x, y, exp, log, zech, qm1, p)


def fq_mul(long long x, long long y, long long[:] exp, long long[:] log):
    if x == 0 or y == 0:
        return 0
    return exp[log[x] + log[y]]


def twisted_mul(a, b, long long[:] sig, long long q, long long order,
                long long[:] exp, long long[:] log, long long[:] zech,
                long long qm1, long long p):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0 or nb == 0:
        return []
    cdef long long[:] av = _as_view(a)
    cdef long long[:] bv = _as_view(b)
    cdef long long[:] out = _zeros(na + nb - 1)
    cdef long long ai, bj, la, base, prod
    with nogil:
        for i in range(na):
            ai = av[i]
            if ai == 0:
                continue
            la = log[ai]
            base = (i % order) * q
            for j in range(nb):
                bj = bv[j]
                if bj == 0:
                    continue
                prod = exp[la + log[sig[base + bj]]]
                out[i + j] = _add(out[i + j], prod, exp, log, zech, qm1, p)
    return [out[i] for i in range(na + nb - 1)]


def twisted_divmod(g, f, long long[:] sig, long long q, long long order,
                   long long[:] exp, long long[:] log, long long[:] zech,
                   long long qm1, long long p):
    cdef Py_ssize_t m = len(f) - 1, n = len(g), k, i, j
    if n - m <= 0:
        return [], list(g)
    cdef long long[:] rem = _as_view(g)
    cdef long long[:] fv = _as_view(f)
    cdef long long[:] quo = _zeros(n - m)
    cdef long long c, lnc, base, fi, prod
    with nogil:
        for k in range(n - 1, m - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            j = k - m
            quo[j] = c
            lnc = log[_neg(c, exp, log, qm1, p)]
            base = (j % order) * q
            for i in range(m):
                fi = fv[i]
                if fi == 0:
                    continue
                prod = exp[lnc + log[sig[base + fi]]]
                rem[j + i] = _add(rem[j + i], prod, exp, log, zech, qm1, p)
            rem[k] = 0
    return [quo[i] for i in range(n - m)], [rem[i] for i in range(m)]


def rref_mod_p(rows, Py_ssize_t ncols, long long p):
    cdef Py_ssize_t nrows = len(rows), r, c, col, rank = 0, piv
    if nrows == 0:
        return [], []
    flat = _matrix(rows, ncols, p)
    cdef long long[:] mat = flat
    cdef long long inv, factor, tmp
    pivots = []
    for col in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if mat[r * ncols + col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for c in range(ncols):
                tmp = mat[rank * ncols + c]
                mat[rank * ncols + c] = mat[piv * ncols + c]
                mat[piv * ncols + c] = tmp
        inv = _inv_mod(mat[rank * ncols + col], p)
        for c in range(ncols):
            mat[rank * ncols + c] = mat[rank * ncols + c] * inv % p
        for r in range(nrows):
            if r != rank:
                factor = mat[r * ncols + col]
                if factor:
                    for c in range(ncols):
                        tmp = (mat[r * ncols + c] - factor * mat[rank * ncols + c]) % p
                        if tmp < 0:
                            tmp += p
                        mat[r * ncols + c] = tmp
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return [[mat[r * ncols + c] for c in range(ncols)] for r in range(rank)], pivots


cdef long long _inv_mod(long long a, long long p):
    cdef long long result = 1, e = p - 2
    a %= p
    while e:
        if e & 1:
            result = result * a % p
        a = a * a % p
        e >>= 1
    return result


cdef long long[:] _zeros(Py_ssize_t n):
    from array import array
    return array("q", bytes(8 * n))


cdef long long[:] _as_view(seq):
    from array import array
    return array("q", seq)


def _matrix(rows, Py_ssize_t ncols, long long p):
    from array import array
    cdef Py_ssize_t nrows = len(rows)
    flat = array("q", bytes(8 * nrows * ncols))
    cdef Py_ssize_t r, c
    for r in range(nrows):
        row = rows[r]
        for c in range(ncols):
            flat[r * ncols + c] = row[c] % p
    return flat
