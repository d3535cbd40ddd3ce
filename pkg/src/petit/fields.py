"""Exact coefficient rings: F_{p^h}, F_q[y] and F_q(y).

Finite-field elements are packed integers ``sum(c_i * p**i)`` where
``c_i`` are the coefficients of the element in the power basis of the
adjoined root ``g`` (lowest degree first).  Fields up to ``TABLE_BOUND``
elements carry exp/log/Zech tables; bigger ones fall back to schoolbook
polynomial arithmetic modulo the defining polynomial.

Polynomials in ``y`` are trimmed tuples of packed base elements, lowest
degree first; rational functions are ``(num, den)`` pairs kept reduced
with a monic denominator.

The lexicographic order used throughout (moduli, primitive elements,
witnesses) compares coefficient vectors lowest degree first.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import gcd

from . import expr
from .limits import FIELD_BOUND, TABLE_BOUND

NEG_INF = float("-inf")


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# polynomials over F_p as lists of ints, lowest degree first


def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_rem(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        if c:
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - c * mi) % p
        a.pop()
        _fp_trim(a)
    return _fp_trim(a)


def is_irreducible_fp(poly, p):
    """Trial division by every monic polynomial of degree <= deg/2."""
    h = len(poly) - 1
    if h < 1:
        return False
    if h == 1:
        return True
    if poly[0] % p == 0:
        return False
    for d in range(1, h // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _fp_rem(poly, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p, h):
    """Lexicographically smallest monic irreducible of degree ``h``."""
    for low in product(range(p), repeat=h):
        cand = list(low) + [1]
        if is_irreducible_fp(cand, p):
            return tuple(cand)
    raise ValueError(f"no irreducible polynomial of degree {h} over F_{p}")


def _fmt_fp_poly(coeffs, var="x"):
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        mono = var if i == 1 else f"{var}^{i}"
        terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# finite fields


class FiniteField:
    """The field F_{p^h} = F_p[x]/(modulus)."""

    kind = "Fq"
    is_finite = True
    is_field = True

    def __init__(self, p, h, modulus):
        self.p = p
        self.h = h
        self.q = p ** h
        self.char = p
        self.modulus = tuple(modulus)
        self.zero = 0
        self.one = 1
        self.base = self
        self._pows = [p ** i for i in range(h + 1)]
        self.gen = p if h > 1 else (-self.modulus[0]) % p

    # -- representation -----------------------------------------------------

    def digits(self, x):
        p = self.p
        out = []
        for _ in range(self.h):
            out.append(x % p)
            x //= p
        return out

    def from_digits(self, ds):
        x = 0
        for i, c in enumerate(ds):
            x += (c % self.p) * self._pows[i]
        return x

    def key(self, x):
        return tuple(self.digits(x))

    @cached_property
    def lex_elements(self):
        return sorted(range(self.q), key=self.key)

    def elements(self):
        return iter(self.lex_elements)

    @property
    def size(self):
        return self.q

    def spec(self):
        return f"Fq({self.p},{self.h})"

    def modulus_str(self):
        return _fmt_fp_poly(self.modulus)

    def basis(self):
        """F_p-basis g^0, ..., g^{h-1} as packed elements."""
        return [self._pows[i] for i in range(self.h)]

    def from_int(self, n):
        return n % self.p

    def random(self, rng):
        return rng.randrange(self.q)

    def is_zero(self, x):
        return x == 0

    def is_unit(self, x):
        return x != 0

    def contains(self, x):
        return isinstance(x, int) and 0 <= x < self.q

    # -- arithmetic through digit vectors (always available) ---------------

    def _vadd(self, a, b):
        p = self.p
        if p == 2:
            return a ^ b
        out, i = 0, 0
        while a or b:
            out += ((a % p + b % p) % p) * self._pows[i]
            a //= p
            b //= p
            i += 1
        return out

    def _vneg(self, a):
        p = self.p
        if p == 2:
            return a
        return self.from_digits([(-c) % p for c in self.digits(a)])

    def _vmul(self, a, b):
        if a == 0 or b == 0:
            return 0
        p, h = self.p, self.h
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * h - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    if y:
                        prod[i + j] = (prod[i + j] + x * y) % p
        mod = self.modulus
        for k in range(2 * h - 2, h - 1, -1):
            c = prod[k]
            if c:
                shift = k - h
                for i in range(h):
                    prod[shift + i] = (prod[shift + i] - c * mod[i]) % p
                prod[k] = 0
        return self.from_digits(prod[:h])

    def _vpow(self, a, e):
        result = 1
        while e:
            if e & 1:
                result = self._vmul(result, a)
            a = self._vmul(a, a)
            e >>= 1
        return result

    def _order_of(self, x, pow_fn):
        if x == 0:
            return 0
        n = self.q - 1
        order = n
        for ell in prime_factors(n):
            while order % ell == 0 and pow_fn(x, order // ell) == 1:
                order //= ell
        return order

    # -- generic API built on add/mul/pow -----------------------------------

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def frob(self, x, r):
        """x ** (p ** r)."""
        return self.pow(x, self.p ** (r % self.h) if self.h > 1 else 1)

    def order(self, x):
        return self._order_of(x, self.pow)

    def sum(self, items):
        total = 0
        for it in items:
            total = self.add(total, it)
        return total

    # -- text -----------------------------------------------------------------

    def fmt(self, x):
        ds = self.digits(x)
        terms = []
        for i, c in enumerate(ds):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            mono = "g" if i == 1 else f"g^{i}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms) if terms else "0"

    def parse(self, text):
        return expr.evaluate(text, _RingEvaluator(self, {"g": self.gen}))

    def __repr__(self):
        return f"FiniteField({self.p}, {self.h}, modulus={self.modulus_str()})"


class _TableField(FiniteField):
    """F_q with exp/log/Zech tables; all operations are table lookups."""

    def __init__(self, p, h, modulus):
        super().__init__(p, h, modulus)
        q = self.q
        qm1 = q - 1
        self.qm1 = qm1
        prim = None
        for x in self.lex_elements:
            if x and self._order_of(x, self._vpow) == qm1:
                prim = x
                break
        self.primitive = prim
        exp = [0] * (2 * qm1 + 1)
        log = [-1] * q
        # multiplication by prim is F_p-linear: tabulate images of the basis
        images = [self._vmul(self._pows[i], prim) for i in range(h)]
        x = 1
        for k in range(qm1):
            exp[k] = x
            log[x] = k
            y = 0
            rem = x
            for i in range(h):
                c = rem % p
                rem //= p
                for _ in range(c):
                    y = self._vadd(y, images[i])
            x = y
        for k in range(qm1, 2 * qm1 + 1):
            exp[k] = exp[k - qm1]
        zech = [-1] * qm1
        for k in range(qm1):
            v = exp[k]
            c0 = v % p
            w = v - c0 + (c0 + 1) % p
            zech[k] = log[w] if w else -1
        self.exp = exp
        self.log = log
        self.zech = zech
        self.half = qm1 // 2 if p != 2 else 0
        self._frob_cache = {}

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        la = self.log[a]
        d = self.log[b] - la
        if d < 0:
            d += self.qm1
        z = self.zech[d]
        if z < 0:
            return 0
        return self.exp[la + z]

    def neg(self, a):
        if self.p == 2 or a == 0:
            return a
        return self.exp[self.log[a] + self.half]

    def sub(self, a, b):
        if self.p == 2:
            return a ^ b
        if b == 0:
            return a
        return self.add(a, self.exp[self.log[b] + self.half])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.exp[self.qm1 - self.log[a]]

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        if a == 0:
            return 0
        d = self.log[a] - self.log[b]
        if d < 0:
            d += self.qm1
        return self.exp[d]

    def pow(self, a, e):
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return self.exp[(self.log[a] * e) % self.qm1]

    def frob_table(self, r):
        r = r % self.h if self.h > 1 else 0
        tab = self._frob_cache.get(r)
        if tab is None:
            e = self.p ** r
            qm1 = self.qm1
            exp, log = self.exp, self.log
            tab = [0] + [exp[(log[x] * e) % qm1] for x in range(1, self.q)]
            self._frob_cache[r] = tab
        return tab

    def frob(self, x, r):
        return self.frob_table(r)[x]

    def order(self, x):
        if x == 0:
            return 0
        return self.qm1 // gcd(self.log[x], self.qm1)

    @cached_property
    def kernel_tables(self):
        """(exp, log, zech) as int64 arrays for the compiled kernels."""
        from array import array
        return array("q", self.exp), array("q", self.log), array("q", self.zech)

    def dlog(self, x):
        """Discrete log with respect to ``self.primitive``."""
        if x == 0:
            raise ValueError("log of zero")
        return self.log[x]


class _VectorField(FiniteField):
    """Large F_q without tables."""

    def __init__(self, p, h, modulus):
        super().__init__(p, h, modulus)
        self.qm1 = self.q - 1
        self.primitive = None

    add = FiniteField._vadd
    neg = FiniteField._vneg
    mul = FiniteField._vmul

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._vpow(a, self.q - 2)

    def pow(self, a, e):
        if e < 0:
            return self._vpow(self.inv(a), -e)
        return self._vpow(a, e)

    def frob_table(self, r):
        raise ValueError("Frobenius tables need a table-backed field")


def make_finite_field(p, h=1, modulus=None):
    """Build F_{p^h} with the lexicographically smallest monic modulus."""
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not isinstance(h, int) or h < 1:
        raise ValueError("extension degree must be a positive integer")
    if p ** h > FIELD_BOUND:
        raise ValueError(f"p^h = {p ** h} exceeds the bound {FIELD_BOUND}")
    if modulus is None:
        modulus = smallest_irreducible(p, h)
    else:
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != h + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree h")
        if not is_irreducible_fp(list(modulus), p):
            raise ValueError("modulus is reducible")
    cls = _TableField if p ** h <= TABLE_BOUND else _VectorField
    return _cached_field(cls, p, h, modulus)


_FIELD_CACHE = {}


def _cached_field(cls, p, h, modulus):
    key = (p, h, modulus)
    ctx = _FIELD_CACHE.get(key)
    if ctx is None:
        ctx = cls(p, h, modulus)
        _FIELD_CACHE[key] = ctx
    return ctx


# ---------------------------------------------------------------------------
# F_q[y]


class PolyRing:
    """F_q[y]; elements are trimmed tuples of base elements."""

    kind = "Poly"
    is_finite = False
    is_field = False

    def __init__(self, base):
        self.base = base
        self.char = base.p
        self.p = base.p
        self.zero = ()
        self.one = (1,)
        self.y = (0, 1)
        self.gen = (base.gen,) if base.gen else ()
        self.size = None

    def spec(self):
        return f"Poly({self.base.p},{self.base.h})"

    def modulus_str(self):
        return self.base.modulus_str()

    # -- helpers --------------------------------------------------------------

    @staticmethod
    def trim(a):
        a = list(a)
        while a and a[-1] == 0:
            a.pop()
        return tuple(a)

    def const(self, c):
        return (c,) if c else ()

    def from_int(self, n):
        return self.const(self.base.from_int(n))

    def deg(self, a):
        return len(a) - 1 if a else NEG_INF

    def lead(self, a):
        return a[-1] if a else 0

    def is_zero(self, a):
        return not a

    def is_unit(self, a):
        return len(a) == 1

    def contains(self, a):
        return isinstance(a, tuple) and (not a or a[-1] != 0)

    def key(self, a):
        return (len(a), tuple(self.base.key(c) for c in a))

    # -- arithmetic -----------------------------------------------------------

    def add(self, a, b):
        F = self.base
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return self.trim(out)

    def neg(self, a):
        F = self.base
        return tuple(F.neg(c) for c in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def scale(self, c, a):
        if c == 0:
            return ()
        F = self.base
        return tuple(F.mul(c, x) for x in a)

    def mul(self, a, b):
        if not a or not b:
            return ()
        add, mul = self.base.add, self.base.mul
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, z in enumerate(b, i):
                if z:
                    out[j] = add(out[j], mul(x, z))
        return self.trim(out)

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def divmod(self, a, b):
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.base
        mul, sub = F.mul, F.sub
        inv_lead = F.inv(b[-1])
        rem = list(a)
        db = len(b) - 1
        low = b[:-1]
        quo = [0] * max(len(a) - db, 0)
        while len(rem) - 1 >= db and rem:
            c = mul(rem[-1], inv_lead)
            shift = len(rem) - 1 - db
            quo[shift] = c
            for i, bi in enumerate(low, shift):
                if bi:
                    rem[i] = sub(rem[i], mul(c, bi))
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return self.trim(quo), tuple(rem)

    def monic(self, a):
        if not a:
            return a
        return self.scale(self.base.inv(a[-1]), a)

    def gcd(self, a, b):
        while b:
            a, b = b, self.divmod(a, b)[1]
        return self.monic(a)

    def inv(self, a):
        if len(a) != 1:
            raise ZeroDivisionError("only nonzero constants are invertible in F_q[y]")
        return (self.base.inv(a[0]),)

    def div(self, a, b):
        """Exact division; raises if ``b`` does not divide ``a``."""
        q, r = self.divmod(a, b)
        if r:
            raise ValueError("inexact polynomial division")
        return q

    def derivative(self, a):
        F = self.base
        out = []
        for i in range(1, len(a)):
            out.append(F.mul(F.from_int(i), a[i]))
        return self.trim(out)

    def substitute(self, a, b):
        """a(b(y)) by Horner's rule."""
        result = ()
        for c in reversed(a):
            result = self.add(self.mul(result, b), self.const(c))
        return result

    def map_coeffs(self, a, fn):
        return self.trim(fn(c) for c in a)

    def sum(self, items):
        total = ()
        for it in items:
            total = self.add(total, it)
        return total

    # -- enumeration / sampling -------------------------------------------------

    def elements_upto(self, max_deg):
        """All polynomials of degree <= max_deg, lexicographic order."""
        F = self.base
        for coeffs in product(F.lex_elements, repeat=max_deg + 1):
            yield self.trim(coeffs)

    def random(self, rng, max_deg=3):
        F = self.base
        d = rng.randrange(max_deg + 1)
        return self.trim(F.random(rng) for _ in range(d + 1))

    def spanning_sample(self, max_deg=3):
        F = self.base
        out = []
        for k in range(max_deg + 1):
            for b in F.basis():
                out.append(tuple([0] * k + [b]))
        return out

    # -- text -------------------------------------------------------------------

    def fmt(self, a):
        if not a:
            return "0"
        F = self.base
        terms = []
        for i in range(len(a) - 1, -1, -1):
            c = a[i]
            if c == 0:
                continue
            cs = F.fmt(c)
            if i == 0:
                terms.append(cs)
                continue
            mono = "y" if i == 1 else f"y^{i}"
            if c == 1:
                terms.append(mono)
            elif "+" in cs:
                terms.append(f"({cs})*{mono}")
            else:
                terms.append(f"{cs}*{mono}")
        return "+".join(terms)

    def parse(self, text):
        return expr.evaluate(text, _RingEvaluator(self, {"g": self.gen, "y": self.y}))

    def __repr__(self):
        return f"PolyRing({self.base!r})"


# ---------------------------------------------------------------------------
# F_q(y)


class RationalField:
    """F_q(y); elements are reduced (num, den) with monic den."""

    kind = "Rat"
    is_finite = False
    is_field = True

    def __init__(self, base):
        self.base = base
        self.poly = PolyRing(base)
        self.char = base.p
        self.p = base.p
        self.zero = ((), (1,))
        self.one = ((1,), (1,))
        self.y = ((0, 1), (1,))
        self.gen = (self.poly.gen, (1,))
        self.size = None

    def spec(self):
        return f"Rat({self.base.p},{self.base.h})"

    def modulus_str(self):
        return self.base.modulus_str()

    def normalize(self, num, den):
        P = self.poly
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return self.zero
        if den == (1,):
            return (num, den)
        g = P.gcd(num, den)
        if len(g) > 1:
            num = P.divmod(num, g)[0]
            den = P.divmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            c = self.base.inv(lead)
            num = P.scale(c, num)
            den = P.scale(c, den)
        return (num, den)

    def const(self, c):
        return ((c,), (1,)) if c else self.zero

    def from_poly(self, a):
        return (a, (1,)) if a else self.zero

    def from_int(self, n):
        return self.const(self.base.from_int(n))

    def is_zero(self, a):
        return not a[0]

    def is_unit(self, a):
        return bool(a[0])

    def is_poly(self, a):
        return a[1] == (1,)

    def contains(self, a):
        return isinstance(a, tuple) and len(a) == 2

    def key(self, a):
        return (self.poly.key(a[1]), self.poly.key(a[0]))

    def add(self, a, b):
        P = self.poly
        if a[1] == b[1]:
            return self.normalize(P.add(a[0], b[0]), a[1])
        return self.normalize(P.add(P.mul(a[0], b[1]), P.mul(b[0], a[1])), P.mul(a[1], b[1]))

    def neg(self, a):
        return (self.poly.neg(a[0]), a[1])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        P = self.poly
        if not a[0] or not b[0]:
            return self.zero
        return self.normalize(P.mul(a[0], b[0]), P.mul(a[1], b[1]))

    def inv(self, a):
        if not a[0]:
            raise ZeroDivisionError("inverse of zero")
        return self.normalize(a[1], a[0])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        P = self.poly
        return (P.pow(a[0], e), P.pow(a[1], e)) if a[0] else (self.one if e == 0 else self.zero)

    def derivative(self, a):
        P = self.poly
        num, den = a
        top = P.sub(P.mul(P.derivative(num), den), P.mul(num, P.derivative(den)))
        return self.normalize(top, P.mul(den, den))

    def substitute(self, a, b):
        """a(b) for a polynomial substitution y -> b (b a polynomial)."""
        P = self.poly
        return self.normalize(P.substitute(a[0], b), P.substitute(a[1], b))

    def sum(self, items):
        total = self.zero
        for it in items:
            total = self.add(total, it)
        return total

    def deg_y(self, a):
        """Degree of a polynomial element; None for proper fractions."""
        if not self.is_poly(a):
            return None
        return self.poly.deg(a[0])

    def random(self, rng, max_deg=2):
        P = self.poly
        num = P.random(rng, max_deg)
        den = ()
        while not den:
            den = P.random(rng, max_deg)
        return self.normalize(num, den)

    def elements_upto(self, max_deg):
        for a in self.poly.elements_upto(max_deg):
            yield self.from_poly(a)

    def spanning_sample(self, max_deg=3):
        return [self.from_poly(a) for a in self.poly.spanning_sample(max_deg)]

    def fmt(self, a):
        P = self.poly
        num, den = a
        if den == (1,):
            return P.fmt(num)
        ns, ds = P.fmt(num), P.fmt(den)
        if "+" in ns:
            ns = f"({ns})"
        if "+" in ds or "*" in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def parse(self, text):
        return expr.evaluate(text, _RingEvaluator(self, {"g": self.gen, "y": self.y}))

    def __repr__(self):
        return f"RationalField({self.base!r})"


class _RingEvaluator:
    def __init__(self, ctx, symbols):
        self.ctx = ctx
        self.symbols = symbols

    def const(self, n):
        return self.ctx.from_int(n)

    def symbol(self, name):
        return self.symbols.get(name)

    def add(self, a, b):
        return self.ctx.add(a, b)

    def sub(self, a, b):
        return self.ctx.sub(a, b)

    def neg(self, a):
        return self.ctx.neg(a)

    def mul(self, a, b):
        return self.ctx.mul(a, b)

    def power(self, a, e):
        return self.ctx.pow(a, e)

    def div(self, a, b):
        if self.ctx.kind == "Poly":
            return self.ctx.div(a, b)
        return self.ctx.div(a, b)


def make_poly_ring(p, h=1):
    return PolyRing(make_finite_field(p, h))


def make_rational_field(p, h=1):
    return RationalField(make_finite_field(p, h))


def parse_field(text):
    """``Fq(p,h)``, ``Poly(p,h)`` or ``Rat(p,h)``."""
    name, args = expr.parse_call(text)
    try:
        nums = [int(a) for a in args]
    except ValueError as exc:
        raise expr.ParseError("field arguments must be integers", text, 0) from exc
    if len(nums) == 1:
        nums.append(1)
    if len(nums) != 2:
        raise expr.ParseError("expected two integer arguments", text, 0)
    p, h = nums
    builders = {"Fq": make_finite_field, "Poly": make_poly_ring, "Rat": make_rational_field}
    if name not in builders:
        raise expr.ParseError(f"unknown field kind {name!r}", text, 0)
    return builders[name](p, h)


# ---------------------------------------------------------------------------
# endomorphisms


@dataclass(frozen=True)
class FrobeniusPower:
    r: int


@dataclass(frozen=True)
class YSquare:
    pass


@dataclass(frozen=True)
class YScale:
    q: int


@dataclass(frozen=True)
class Identity:
    pass


class Endomorphism:
    """An endomorphism descriptor bound to its ring."""

    def __init__(self, ctx, desc):
        self.ctx = ctx
        self.desc = desc
        kind = type(desc)
        if kind is FrobeniusPower:
            if ctx.kind != "Fq":
                raise ValueError("Frobenius powers apply to finite fields only")
            self.r = desc.r % ctx.h if ctx.h > 1 else 0
            self.is_identity = self.r == 0
            self.is_automorphism = True
            self.order = ctx.h // gcd(self.r, ctx.h) if self.r else 1
        elif kind is YSquare:
            if ctx.kind == "Fq":
                raise ValueError("y -> y^2 needs a polynomial or rational base")
            self.is_identity = False
            self.is_automorphism = False
            self.order = None
        elif kind is YScale:
            if ctx.kind == "Fq":
                raise ValueError("y -> q*y needs a polynomial or rational base")
            if desc.q == 0 or not ctx.base.contains(desc.q):
                raise ValueError("the scale must be a nonzero constant")
            self.is_identity = desc.q == 1
            self.is_automorphism = True
            self.order = ctx.base.order(desc.q)
        elif kind is Identity:
            self.is_identity = True
            self.is_automorphism = True
            self.order = 1
        else:
            raise TypeError(f"unknown endomorphism {desc!r}")
        self._table = None
        if kind is FrobeniusPower and hasattr(ctx, "frob_table") and ctx.q <= TABLE_BOUND:
            self._table = ctx.frob_table(self.r)

    def __call__(self, x):
        return self.power(x, 1)

    def table(self, n=1):
        """Lookup table of sigma^n on a table-backed finite field."""
        if type(self.desc) is FrobeniusPower and self.ctx.q <= TABLE_BOUND:
            return self.ctx.frob_table((self.r * n) % self.ctx.h if self.ctx.h > 1 else 0)
        if type(self.desc) is Identity and self.ctx.kind == "Fq" and self.ctx.q <= TABLE_BOUND:
            return list(range(self.ctx.q))
        return None

    def power(self, x, n):
        """sigma^n(x); negative n uses the inverse automorphism."""
        if n == 0 or self.is_identity:
            return x
        if n < 0 and not self.is_automorphism:
            raise ValueError("sigma is not invertible")
        ctx = self.ctx
        desc = self.desc
        kind = type(desc)
        if kind is FrobeniusPower:
            if n == 1 and self._table is not None:
                return self._table[x]
            return ctx.frob(x, self.r * n)
        if kind is YScale:
            F = ctx.base
            qn = F.pow(desc.q, n)
            if ctx.kind == "Poly":
                return _scale_poly(ctx, x, qn)
            return ctx.normalize(_scale_poly(ctx.poly, x[0], qn), _scale_poly(ctx.poly, x[1], qn))
        if kind is YSquare:
            e = 2 ** n
            if ctx.kind == "Poly":
                return _stretch_poly(x, e)
            return ctx.normalize(_stretch_poly(x[0], e), _stretch_poly(x[1], e))
        return x

    def inverse(self, x):
        return self.power(x, -1)

    def spec(self):
        desc = self.desc
        kind = type(desc)
        if kind is FrobeniusPower:
            return f"frob({desc.r})"
        if kind is YSquare:
            return "ysq"
        if kind is YScale:
            return f"yscale({self.ctx.base.fmt(desc.q)})"
        return "id"

    def fixes(self, x):
        return self.power(x, 1) == x


def _scale_poly(P, a, c):
    F = P.base
    out = []
    ck = 1
    for coeff in a:
        out.append(F.mul(coeff, ck))
        ck = F.mul(ck, c)
    return P.trim(out)


def _stretch_poly(a, e):
    if not a:
        return a
    out = [0] * ((len(a) - 1) * e + 1)
    for i, c in enumerate(a):
        out[i * e] = c
    return tuple(out)


def parse_endo(ctx, text):
    name, args = expr.parse_call(text)
    if name == "frob":
        if len(args) != 1:
            raise expr.ParseError("frob takes one integer argument", text, 0)
        try:
            r = int(args[0])
        except ValueError as exc:
            raise expr.ParseError("frob argument must be an integer", text, 0) from exc
        if r < 0:
            raise expr.ParseError("frob argument must be non-negative", text, 0)
        return Endomorphism(ctx, FrobeniusPower(r))
    if name == "ysq" and not args:
        return Endomorphism(ctx, YSquare())
    if name == "yscale" and len(args) == 1:
        if ctx.kind == "Fq":
            raise expr.ParseError("yscale needs a polynomial or rational base", text, 0)
        return Endomorphism(ctx, YScale(ctx.base.parse(args[0])))
    if name == "id" and not args:
        return Endomorphism(ctx, Identity())
    raise expr.ParseError(f"unknown endomorphism {text!r}", text, 0)


def apply_endo(ctx, e, x):
    """Apply an endomorphism (descriptor or bound) to ``x``."""
    if not isinstance(e, Endomorphism):
        e = Endomorphism(ctx, e)
    return e(x)


# ---------------------------------------------------------------------------
# sigma-derivations


@dataclass(frozen=True)
class ZeroDerivation:
    pass


@dataclass(frozen=True)
class DDY:
    pass


@dataclass(frozen=True)
class InnerSigma:
    u: object


class Derivation:
    """A left sigma-derivation bound to a ring and its endomorphism."""

    def __init__(self, ctx, desc, sigma):
        self.ctx = ctx
        self.desc = desc
        self.sigma = sigma
        kind = type(desc)
        if kind is ZeroDerivation:
            self.is_zero = True
        elif kind is DDY:
            if ctx.kind == "Fq":
                raise ValueError("d/dy needs a polynomial or rational base")
            self.is_zero = False
        elif kind is InnerSigma:
            self.is_zero = ctx.is_zero(desc.u) or sigma.is_identity
        else:
            raise TypeError(f"unknown derivation {desc!r}")

    def __call__(self, x):
        if self.is_zero:
            return self.ctx.zero
        ctx = self.ctx
        kind = type(self.desc)
        if kind is DDY:
            return ctx.derivative(x)
        u = self.desc.u
        return ctx.sub(ctx.mul(u, x), ctx.mul(self.sigma(x), u))

    def power(self, x, n):
        for _ in range(n):
            if self.ctx.is_zero(x):
                break
            x = self(x)
        return x

    def spec(self):
        kind = type(self.desc)
        if kind is ZeroDerivation:
            return "zero"
        if kind is DDY:
            return "ddy"
        return f"inner({self.ctx.fmt(self.desc.u)})"

    def check_law(self, samples):
        """delta(ab) = sigma(a) delta(b) + delta(a) b on sample pairs."""
        ctx = self.ctx
        for a in samples:
            for b in samples:
                lhs = self(ctx.mul(a, b))
                rhs = ctx.add(ctx.mul(self.sigma(a), self(b)), ctx.mul(self(a), b))
                if lhs != rhs:
                    return False
        return self(ctx.one) == ctx.zero


def parse_deriv(ctx, sigma, text):
    name, args = expr.parse_call(text)
    if name == "zero" and not args:
        return Derivation(ctx, ZeroDerivation(), sigma)
    if name == "ddy" and not args:
        if ctx.kind == "Fq":
            raise expr.ParseError("ddy needs a polynomial or rational base", text, 0)
        return Derivation(ctx, DDY(), sigma)
    if name == "inner" and len(args) == 1:
        return Derivation(ctx, InnerSigma(ctx.parse(args[0])), sigma)
    raise expr.ParseError(f"unknown derivation {text!r}", text, 0)


# ---------------------------------------------------------------------------
# norms, fixed fields, roots of unity


def norm(ctx, e, m, x):
    """x * sigma(x) * ... * sigma^{m-1}(x)."""
    if not isinstance(e, Endomorphism):
        e = Endomorphism(ctx, e)
    if not e.is_automorphism:
        raise ValueError("norm needs an automorphism")
    result = ctx.one
    y = x
    for _ in range(m):
        result = ctx.mul(result, y)
        y = e(y)
    if e.order is not None and m % e.order == 0:
        assert e(result) == result, "norm left the fixed field"
    return result


def fixed_subfield(ctx, e):
    """Fix(sigma) for a Frobenius power, with its embedding into ``ctx``."""
    if not isinstance(e, Endomorphism):
        e = Endomorphism(ctx, e)
    if ctx.kind != "Fq" or type(e.desc) not in (FrobeniusPower, Identity):
        raise ValueError("fixed subfields are computed for Frobenius powers on F_q")
    r = e.r if type(e.desc) is FrobeniusPower else 0
    d = gcd(r, ctx.h) if r else ctx.h
    sub = make_finite_field(ctx.p, d)
    fixed = [x for x in ctx.lex_elements if e(x) == x]
    assert len(fixed) == ctx.p ** d, "fixed field has the wrong size"
    root = None
    for x in fixed:
        acc = 0
        xp = 1
        for c in sub.modulus:
            if c:
                acc = ctx.add(acc, ctx.mul(ctx.from_int(c), xp))
            xp = ctx.mul(xp, x)
        if acc == 0:
            root = x
            break
    assert root is not None
    powers = [1]
    for _ in range(1, d):
        powers.append(ctx.mul(powers[-1], root))

    def embed(z):
        acc = 0
        for c, pw in zip(sub.digits(z), powers):
            if c:
                acc = ctx.add(acc, ctx.mul(ctx.from_int(c), pw))
        return acc

    return sub, embed


def fixed_elements(ctx, e):
    """The fixed elements of a Frobenius power as packed elements of ctx."""
    return [x for x in ctx.lex_elements if e(x) == x]


def count_roots_of_unity(ctx, n):
    """Number of n-th roots of unity in a finite field: gcd(n, q-1)."""
    if n <= 0:
        raise ValueError("n must be positive")
    if ctx.kind != "Fq":
        raise ValueError("roots of unity are counted in finite fields")
    count = gcd(n, ctx.q - 1)
    if ctx.q <= TABLE_BOUND:
        brute = sum(1 for x in range(1, ctx.q) if ctx.pow(x, n) == 1)
        assert brute == count
    return count


def primitive_element(ctx):
    """Lexicographically smallest generator of the multiplicative group."""
    if ctx.kind != "Fq":
        raise ValueError("primitive elements exist for finite fields only")
    if getattr(ctx, "primitive", None) is not None:
        return ctx.primitive
    for x in ctx.lex_elements:
        if x and ctx.order(x) == ctx.q - 1:
            return x
    raise AssertionError("no primitive element found")


def galois_generator(ctx, sub_degree):
    """Frobenius power generating Aut_{F_{p^d}}(F_{p^h})."""
    if ctx.h % sub_degree:
        raise ValueError("not a subfield degree")
    return Endomorphism(ctx, FrobeniusPower(sub_degree % ctx.h if ctx.h > 1 else 0))
