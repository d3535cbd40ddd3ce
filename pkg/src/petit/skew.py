"""Arithmetic in skew polynomial rings R = S[t; sigma, delta].

A skew polynomial is a trimmed tuple of base elements, lowest degree
first, with left coefficients: ``(a0, a1, a2)`` is ``a0 + a1 t + a2 t^2``.
The commutation rule is ``t a = sigma(a) t + delta(a)``.
"""

from array import array
from dataclasses import dataclass
from itertools import product

from . import expr, kernels
from .fields import (
    NEG_INF,
    Derivation,
    Endomorphism,
    Identity,
    ZeroDerivation,
)
from .limits import TABLE_BOUND, max_pairs, require


def spanning_set(base, max_deg=2):
    """A finite set spanning the base additively (over F_p or F_p[y]-bounded)."""
    if base.kind == "Fq":
        return base.basis()
    return base.spanning_sample(max_deg)


class SkewRing:
    """The ring S[t; sigma, delta] over a coefficient ring ``base``."""

    def __init__(self, base, sigma=None, delta=None):
        self.base = base
        if sigma is None:
            sigma = Identity()
        if not isinstance(sigma, Endomorphism):
            sigma = Endomorphism(base, sigma)
        if delta is None:
            delta = ZeroDerivation()
        if not isinstance(delta, Derivation):
            delta = Derivation(base, delta, sigma)
        self.sigma = sigma
        self.delta = delta
        if not delta.is_zero and not delta.check_law(spanning_set(base)):
            raise ValueError(f"{delta.spec()} is not a {sigma.spec()}-derivation")
        self.zero = ()
        self.one = (base.one,)
        self.t = (base.zero, base.one)
        self._fast = base.kind == "Fq" and base.q <= TABLE_BOUND and delta.is_zero
        if self._fast:
            order = sigma.order
            q = base.q
            flat = array("q")
            for j in range(order):
                flat.extend(sigma.table(j) if not sigma.is_identity else range(q))
            self._sig = flat
            self._order = order
            self._tables = base.kernel_tables

    # -- basics ---------------------------------------------------------------

    def spec(self):
        return {
            "field": self.base.spec(),
            "modulus": self.base.modulus_str(),
            "sigma": self.sigma.spec(),
            "delta": self.delta.spec(),
        }

    def trim(self, coeffs):
        zero = self.base.zero
        out = list(coeffs)
        while out and out[-1] == zero:
            out.pop()
        return tuple(out)

    def const(self, c):
        return (c,) if not self.base.is_zero(c) else ()

    def monomial(self, c, i):
        if self.base.is_zero(c):
            return ()
        return tuple([self.base.zero] * i + [c])

    def deg(self, a):
        return len(a) - 1 if a else NEG_INF

    def lead(self, a):
        return a[-1] if a else self.base.zero

    def is_zero(self, a):
        return not a

    def is_monic(self, a):
        return bool(a) and a[-1] == self.base.one

    def coeff(self, a, i):
        return a[i] if 0 <= i < len(a) else self.base.zero

    # -- additive structure ---------------------------------------------------

    def add(self, a, b):
        B = self.base
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = B.add(out[i], c)
        return self.trim(out)

    def neg(self, a):
        B = self.base
        return tuple(B.neg(c) for c in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def scale_left(self, c, a):
        """c * a for a base element c."""
        B = self.base
        if B.is_zero(c):
            return ()
        return self.trim(B.mul(c, x) for x in a)

    def shift(self, a, j):
        """a * t^j."""
        if not a or j == 0:
            return a
        return tuple([self.base.zero] * j) + a

    # -- multiplication -------------------------------------------------------

    def mul_t(self, a):
        """t * a."""
        if not a:
            return a
        B = self.base
        sig, dlt = self.sigma, self.delta
        out = [B.zero] * (len(a) + 1)
        for i, c in enumerate(a):
            out[i + 1] = B.add(out[i + 1], sig(c))
            if not dlt.is_zero:
                out[i] = B.add(out[i], dlt(c))
        return self.trim(out)

    def mul(self, a, b):
        if not a or not b:
            return ()
        if self._fast:
            exp, log, zech = self._tables
            B = self.base
            out = kernels.twisted_mul(a, b, self._sig, B.q, self._order, exp, log, zech, B.qm1, B.p)
            return self.trim(out)
        B = self.base
        acc = [B.zero] * (len(a) + len(b) - 1)
        cur = b
        for i, ai in enumerate(a):
            if i:
                cur = self.mul_t(cur)
            if B.is_zero(ai):
                continue
            for j, c in enumerate(cur):
                if not B.is_zero(c):
                    acc[j] = B.add(acc[j], B.mul(ai, c))
        return self.trim(acc)

    def pow(self, a, e):
        result = self.one
        for _ in range(e):
            result = self.mul(result, a)
        return result

    def mul_many(self, *factors):
        result = self.one
        for f in factors:
            result = self.mul(result, f)
        return result

    # -- division -------------------------------------------------------------

    def _check_divisor(self, f):
        if not f:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.base.is_unit(f[-1]):
            raise ValueError("divisor must have a unit leading coefficient")

    def right_divmod(self, g, f):
        """g = q f + r with deg r < deg f."""
        self._check_divisor(f)
        m = len(f) - 1
        if len(g) <= m:
            return (), g
        if self._fast and f[-1] == 1:
            exp, log, zech = self._tables
            B = self.base
            quo, rem = kernels.twisted_divmod(g, f, self._sig, B.q, self._order, exp, log, zech, B.qm1, B.p)
            return self.trim(quo), self.trim(rem)
        B = self.base
        rem = list(g)
        nq = len(g) - m
        quo = [B.zero] * nq
        shifted = [f]
        for _ in range(nq - 1):
            shifted.append(self.mul_t(shifted[-1]))
        lead = f[-1]
        for k in range(len(rem) - 1, m - 1, -1):
            c = rem[k]
            if B.is_zero(c):
                continue
            j = k - m
            x = c if lead == B.one else B.mul(c, B.inv(self.sigma.power(lead, j)))
            quo[j] = x
            for i, fi in enumerate(shifted[j]):
                if not B.is_zero(fi):
                    rem[i] = B.sub(rem[i], B.mul(x, fi))
            rem[k] = B.zero
        return self.trim(quo), self.trim(rem[:m])

    def rrem(self, g, f):
        return self.right_divmod(g, f)[1]

    def left_divmod(self, g, f):
        """g = f q + r with deg r < deg f; needs sigma invertible."""
        if not self.sigma.is_automorphism:
            raise ValueError("left division needs sigma to be an automorphism")
        self._check_divisor(f)
        m = len(f) - 1
        if len(g) <= m:
            return (), g
        B = self.base
        rem = list(g)
        nq = len(g) - m
        quo = [B.zero] * nq
        inv_lead = B.inv(f[-1])
        for k in range(len(rem) - 1, m - 1, -1):
            c = rem[k]
            if B.is_zero(c):
                continue
            j = k - m
            x = self.sigma.power(B.mul(inv_lead, c), -m)
            quo[j] = x
            term = self.shift(self.mul(f, (x,)), j)
            for i, v in enumerate(term):
                if not B.is_zero(v):
                    rem[i] = B.sub(rem[i], v)
            rem[k] = B.zero
        return self.trim(quo), self.trim(rem[:m])

    def monic(self, a):
        """Left-multiply by the inverse of the leading coefficient."""
        if not a:
            return a
        lead = a[-1]
        if lead == self.base.one:
            return a
        return self.scale_left(self.base.inv(lead), a)

    def right_coefficients(self, f):
        """Coefficients a'_i with f = sum t^i a'_i, by left division by t."""
        out = []
        cur = f
        while cur:
            cur, r = self.left_divmod(cur, self.t)
            out.append(r[0] if r else self.base.zero)
        return out

    # -- gcrd / lclm ----------------------------------------------------------

    def gcrd(self, f, g):
        if not f and not g:
            raise ValueError("gcrd of two zero polynomials")
        if not self.base.is_field:
            raise ValueError("gcrd needs a field of coefficients")
        a, b = f, g
        while b:
            a, b = b, self.rrem(a, b)
        return self.monic(a)

    def lclm(self, f, g):
        if not f and not g:
            raise ValueError("lclm of two zero polynomials")
        if not f or not g:
            return ()
        if not self.base.is_field:
            raise ValueError("lclm needs a field of coefficients")
        r0, r1 = f, g
        s0, s1 = self.one, ()
        while r1:
            q, r2 = self.right_divmod(r0, r1)
            s2 = self.sub(s0, self.mul(q, s1))
            r0, r1 = r1, r2
            s0, s1 = s1, s2
        return self.monic(self.mul(s1, f))

    # -- recursive maps -------------------------------------------------------

    def snj(self, n, j, b):
        if not 0 <= j <= n:
            raise ValueError("need 0 <= j <= n")
        B = self.base
        row = [b]
        for k in range(1, n + 1):
            new = []
            for i in range(k + 1):
                v = B.zero
                if i < k:
                    v = self.delta(row[i])
                if i >= 1:
                    v = B.add(v, self.sigma(row[i - 1]))
                new.append(v)
            row = new
        return row[j]

    def n_values(self, b, upto):
        """[N_0(b), ..., N_upto(b)]."""
        B = self.base
        out = [B.one]
        for _ in range(upto):
            prev = out[-1]
            nxt = B.mul(self.sigma(prev), b)
            if not self.delta.is_zero:
                nxt = B.add(nxt, self.delta(prev))
            out.append(nxt)
        return out

    def m_values(self, b, upto):
        """[M_0(b), ..., M_upto(b)]."""
        if not self.sigma.is_automorphism:
            raise ValueError("M_i needs sigma to be an automorphism")
        B = self.base
        out = [B.one]
        for _ in range(upto):
            back = self.sigma.inverse(out[-1])
            nxt = B.mul(b, back)
            if not self.delta.is_zero:
                nxt = B.sub(nxt, self.delta(back))
            out.append(nxt)
        return out

    def vp(self, b, e=1):
        B = self.base
        if not self.sigma.is_identity:
            raise ValueError("V_p needs sigma = id")
        p = B.char
        for _ in range(e):
            b = B.add(B.pow(b, p), self.delta.power(b, p - 1))
        return b

    def linear(self, b):
        """t - b."""
        return self.trim((self.base.neg(b), self.base.one))

    def right_linear_remainder(self, f, b):
        """Remainder of f on right division by t - b, via N_i."""
        B = self.base
        ns = self.n_values(b, len(f) - 1)
        acc = B.zero
        for fi, ni in zip(f, ns):
            if not B.is_zero(fi):
                acc = B.add(acc, B.mul(fi, ni))
        return acc

    def left_linear_remainder(self, f, b):
        """Remainder of f on left division by t - b, via M_i."""
        B = self.base
        right = self.right_coefficients(f)
        ms = self.m_values(b, len(right) - 1)
        acc = B.zero
        for mi, ai in zip(ms, right):
            if not B.is_zero(ai):
                acc = B.add(acc, B.mul(mi, ai))
        return acc

    # -- text -----------------------------------------------------------------

    def fmt(self, a):
        if not a:
            return "0"
        B = self.base
        terms = []
        for i in range(len(a) - 1, -1, -1):
            c = a[i]
            if B.is_zero(c):
                continue
            cs = B.fmt(c)
            if i == 0:
                terms.append(f"({cs})" if terms and any(ch in cs for ch in "+-/ ") else cs)
                continue
            mono = "t" if i == 1 else f"t^{i}"
            if c == B.one:
                terms.append(mono)
            elif any(ch in cs for ch in "+-/ "):
                terms.append(f"({cs})*{mono}")
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms)

    def parse(self, text):
        B = self.base
        symbols = {"t": self.t, "g": self.const(B.gen)}
        if B.kind != "Fq":
            symbols["y"] = self.const(B.y)
        return expr.evaluate(text, _SkewEvaluator(self, symbols))

    def random(self, rng, deg, monic=False):
        B = self.base
        coeffs = [B.random(rng) for _ in range(deg + 1)]
        if monic:
            coeffs[-1] = B.one
        return self.trim(coeffs)

    def monic_polys(self, d):
        """All monic polynomials of degree d over a finite base, lex order."""
        B = self.base
        for low in product(B.lex_elements, repeat=d):
            yield tuple(low) + (B.one,)

    def __repr__(self):
        return f"SkewRing({self.base.spec()}, {self.sigma.spec()}, {self.delta.spec()})"


class _SkewEvaluator:
    def __init__(self, ring, symbols):
        self.ring = ring
        self.symbols = symbols

    def const(self, n):
        return self.ring.const(self.ring.base.from_int(n))

    def symbol(self, name):
        return self.symbols.get(name)

    def add(self, a, b):
        return self.ring.add(a, b)

    def sub(self, a, b):
        return self.ring.sub(a, b)

    def neg(self, a):
        return self.ring.neg(a)

    def mul(self, a, b):
        return self.ring.mul(a, b)

    def power(self, a, e):
        return self.ring.pow(a, e)

    def div(self, a, b):
        if len(b) != 1:
            raise ZeroDivisionError("can only divide by nonzero constants")
        return self.ring.mul(a, (self.ring.base.inv(b[0]),))


# ---------------------------------------------------------------------------
# module-level operations


@dataclass(frozen=True)
class Factorization:
    """f = left * right with both factors of positive degree."""

    left: tuple
    right: tuple


class _IrreducibleType:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "Irreducible"

    def __bool__(self):
        return False


IRREDUCIBLE = _IrreducibleType()


def snj_map(ring, n, j, b):
    return ring.snj(n, j, b)


def skew_mul(ring, g, h):
    return ring.mul(g, h)


def right_divmod(ring, g, f):
    q, r = ring.right_divmod(g, f)
    if __debug__:
        assert ring.add(ring.mul(q, f), r) == g, "right division failed to reconstruct"
    return q, r


def left_divmod(ring, g, f):
    q, r = ring.left_divmod(g, f)
    if __debug__:
        assert ring.add(ring.mul(f, q), r) == g, "left division failed to reconstruct"
    return q, r


def n_map(ring, b, i):
    return ring.n_values(b, i)[i]


def m_map(ring, b, i):
    return ring.m_values(b, i)[i]


def vp_map(ring, b, e=1, verify=True):
    """V_{p^e}(b); checks (t-b)^{p^e} = t^{p^e} - V_{p^e}(b) when small."""
    value = ring.vp(b, e)
    n = ring.base.char ** e
    if verify and n <= 27:
        lhs = ring.pow(ring.linear(b), n)
        rhs = ring.sub(ring.monomial(ring.base.one, n), ring.const(value))
        assert lhs == rhs, "V_p closed form disagrees with expansion"
    return value


def gcrd(ring, f, g):
    return ring.gcrd(f, g)


def lclm(ring, f, g):
    return ring.lclm(f, g)


def _p_polynomial_shape(ring, f):
    """Exponent e and coefficients (c_0 .. c_e) if f = sum c_i t^{p^i} + d."""
    p = ring.base.char
    n = len(f) - 1
    e = 0
    while p ** e < n:
        e += 1
    if p ** e != n:
        return None
    allowed = {0} | {p ** i for i in range(e + 1)}
    B = ring.base
    for i, c in enumerate(f):
        if i not in allowed and not B.is_zero(c):
            return None
    return e


def _vp_remainder(ring, f, b, e):
    B = ring.base
    acc = ring.coeff(f, 0)
    v = b
    for i in range(e + 1):
        c = ring.coeff(f, ring.base.char ** i)
        if not B.is_zero(c):
            acc = B.add(acc, B.mul(c, v))
        v = ring.vp(v, 1)
    return acc


def linear_right_divides(ring, f, b):
    """True iff (t - b) right-divides f."""
    if not ring.is_monic(f):
        raise ValueError("f must be monic")
    rem = ring.right_linear_remainder(f, b)
    if __debug__:
        direct = ring.right_divmod(f, ring.linear(b))[1]
        assert ring.const(rem) == direct, "N_i remainder disagrees with right division"
        if ring.sigma.is_identity and not ring.delta.is_zero and ring.base.char:
            e = _p_polynomial_shape(ring, f)
            if e is not None:
                assert _vp_remainder(ring, f, b, e) == rem, "V_p remainder disagrees"
    return ring.base.is_zero(rem)


def linear_left_divides(ring, f, b):
    """True iff (t - b) left-divides f."""
    if not ring.is_monic(f):
        raise ValueError("f must be monic")
    rem = ring.left_linear_remainder(f, b)
    if __debug__:
        direct = ring.left_divmod(f, ring.linear(b))[1]
        assert ring.const(rem) == direct, "M_i remainder disagrees with left division"
    return ring.base.is_zero(rem)


def factor_search(ring, f):
    """Exhaustive search for a nontrivial factorization of a monic f.

    Right factors of degree <= m/2 are tried first, then left factors of
    degree <= m/2 (a degree-3 polynomial may split only as linear * quadratic
    on the left).  Candidates run in lexicographic order.
    """
    B = ring.base
    if B.kind != "Fq":
        raise ValueError("factor search needs a finite base field")
    f = ring.monic(f)
    m = len(f) - 1
    if m <= 1:
        return IRREDUCIBLE
    half = m // 2
    require(2 * sum(B.q ** d for d in range(1, half + 1)), max_pairs(), "factor search")
    for d in range(1, half + 1):
        for g in ring.monic_polys(d):
            q, r = ring.right_divmod(f, g)
            if not r:
                return Factorization(q, g)
    if ring.sigma.is_automorphism:
        for d in range(1, half + 1):
            for g in ring.monic_polys(d):
                q, r = ring.left_divmod(f, g)
                if not r:
                    return Factorization(g, q)
    return IRREDUCIBLE
