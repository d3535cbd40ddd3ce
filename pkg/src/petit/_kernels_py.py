"""Pure-Python hot kernels.

Field elements are packed ints of a table-backed F_q. ``sig`` is a flat
table with ``sig[j * q + x] = sigma^j(x)`` for ``0 <= j < order``.
The compiled module ``_kernels`` exports the same functions.
"""


def fq_add(x, y, exp, log, zech, qm1, p):
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


def fq_mul(x, y, exp, log):
    if x == 0 or y == 0:
        return 0
    return exp[log[x] + log[y]]


def _neg(x, exp, log, qm1, p):
    if p == 2 or x == 0:
        return x
    return exp[log[x] + qm1 // 2]


def twisted_mul(a, b, sig, q, order, exp, log, zech, qm1, p):
    """(sum a_i t^i)(sum b_j t^j) in F_q[t; sigma]; untrimmed list."""
    na, nb = len(a), len(b)
    if na == 0 or nb == 0:
        return []
    out = [0] * (na + nb - 1)
    for i in range(na):
        ai = a[i]
        if ai == 0:
            continue
        la = log[ai]
        base = (i % order) * q
        for j in range(nb):
            bj = b[j]
            if bj == 0:
                continue
            prod = exp[la + log[sig[base + bj]]]
            out[i + j] = fq_add(out[i + j], prod, exp, log, zech, qm1, p)
    return out


def twisted_divmod(g, f, sig, q, order, exp, log, zech, qm1, p):
    """Right division g = quo * f + rem in F_q[t; sigma], f monic."""
    m = len(f) - 1
    rem = list(g)
    nq = len(rem) - m
    if nq <= 0:
        return [], rem
    quo = [0] * nq
    for k in range(len(rem) - 1, m - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        j = k - m
        quo[j] = c
        nc = _neg(c, exp, log, qm1, p)
        lnc = log[nc]
        base = (j % order) * q
        for i in range(m):
            fi = f[i]
            if fi == 0:
                continue
            prod = exp[lnc + log[sig[base + fi]]]
            rem[j + i] = fq_add(rem[j + i], prod, exp, log, zech, qm1, p)
        rem[k] = 0
    return quo, rem[:m]


def rref_mod_p(rows, ncols, p):
    """Reduced row echelon form over F_p; returns (rows, pivot columns)."""
    mat = [list(r) for r in rows]
    pivots = []
    rank = 0
    nrows = len(mat)
    for col in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if mat[r][col] % p:
                piv = r
                break
        if piv < 0:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        row = mat[rank]
        inv = pow(row[col], p - 2, p)
        for c in range(ncols):
            row[c] = row[c] * inv % p
        for r in range(nrows):
            if r != rank:
                other = mat[r]
                factor = other[col] % p
                if factor:
                    for c in range(ncols):
                        other[c] = (other[c] - factor * row[c]) % p
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return mat[:rank], pivots
