"""Petit algebras S_f: skew polynomials of degree < deg f with a∘b = ab mod_r f."""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from . import linalg
from .fields import FrobeniusPower, YScale, YSquare, fixed_subfield
from .limits import BoundExceeded, max_exhaust, require
from .skew import IRREDUCIBLE, factor_search, spanning_set


class PetitAlgebra:
    """S_f for a monic f of degree m >= 2 in a skew polynomial ring."""

    def __init__(self, ring, f):
        f = ring.trim(f)
        if len(f) < 3:
            raise ValueError("f must have degree at least 2")
        if not ring.base.is_unit(f[-1]):
            raise ValueError("f must have a unit leading coefficient")
        self.ring = ring
        self.base = ring.base
        self.f = ring.monic(f)
        self.m = len(f) - 1
        self.p = ring.base.char
        self.one = ring.one
        self.zero = ring.zero

    @classmethod
    def from_text(cls, ring, text):
        return cls(ring, ring.parse(text))

    # -- elements -------------------------------------------------------------

    @property
    def is_finite(self):
        return self.base.kind == "Fq"

    @property
    def size(self):
        return self.base.q ** self.m if self.is_finite else None

    def contains(self, x):
        return len(x) <= self.m

    def check(self, x):
        if len(x) > self.m:
            raise ValueError(f"{self.ring.fmt(x)} has degree >= {self.m}")
        return x

    def elements(self):
        """All elements in lexicographic order (finite base only)."""
        lex = self.base.lex_elements
        trim = self.ring.trim
        for coeffs in product(lex, repeat=self.m):
            yield trim(coeffs)

    def basis(self, max_deg=2):
        """F_p-basis {g^u t^i}; over F_q[y] or F_q(y), y^k g^u t^i with k <= max_deg."""
        out = []
        for i in range(self.m):
            for c in spanning_set(self.base, max_deg):
                out.append(self.ring.monomial(c, i))
        return out

    def coords(self, x):
        """F_p coordinates (finite base), m*h entries."""
        B = self.base
        out = []
        for i in range(self.m):
            out.extend(B.digits(x[i]) if i < len(x) else [0] * B.h)
        return out

    def from_coords(self, vec):
        B = self.base
        h = B.h
        return self.ring.trim(B.from_digits(vec[i * h:(i + 1) * h]) for i in range(self.m))

    def fp_scale(self, c, x):
        return self.ring.scale_left(self.base.from_int(c), x)

    def combine(self, coeffs, vectors):
        acc = self.zero
        for c, v in zip(coeffs, vectors):
            if c % self.p:
                acc = self.ring.add(acc, self.fp_scale(c, v))
        return acc

    def fmt(self, x):
        return self.ring.fmt(x)

    def parse(self, text):
        return self.check(self.ring.parse(text))

    # -- multiplication -------------------------------------------------------

    def mul(self, x, y):
        return self.ring.rrem(self.ring.mul(x, y), self.f)

    def associator(self, x, y, z):
        return self.ring.sub(self.mul(self.mul(x, y), z), self.mul(x, self.mul(y, z)))

    def t_power(self, i):
        """t^i in S_f (reduced modulo f)."""
        return self.ring.rrem(self.ring.monomial(self.base.one, i), self.f)

    # -- structure flags ------------------------------------------------------

    @cached_property
    def right_invariant(self):
        return is_right_invariant(self)

    @property
    def associative(self):
        return self.right_invariant

    @cached_property
    def center_field(self):
        """Elements of Fix(sigma) ∩ Const(delta) (finite base)."""
        if not self.is_finite:
            raise ValueError("center field enumerated for finite bases only")
        ring = self.ring
        return [x for x in self.base.lex_elements if ring.sigma(x) == x and self.base.is_zero(ring.delta(x))]

    def spec(self):
        out = dict(self.ring.spec())
        out["f"] = self.ring.fmt(self.f)
        return out

    def __repr__(self):
        return f"PetitAlgebra({self.ring!r}, f={self.ring.fmt(self.f)})"


# ---------------------------------------------------------------------------
# flattening values into F_p vectors


def _coeff_digits(base, c):
    if base.kind == "Fq":
        return base.digits(c)
    if base.kind == "Rat":
        if c[1] != (1,):
            raise ValueError("bounded search met a proper fraction")
        c = c[0]
    F = base.base
    out = []
    for a in c:
        out.extend(F.digits(a))
    return out


def _flatten(A, groups):
    """Turn lists of algebra elements into equal-length F_p vectors."""
    base = A.base
    width = 0
    digit_groups = []
    for values in groups:
        dg = []
        for v in values:
            per = [_coeff_digits(base, A.ring.coeff(v, i)) for i in range(A.m)]
            width = max(width, max((len(d) for d in per), default=0))
            dg.append(per)
        digit_groups.append(dg)
    out = []
    for dg in digit_groups:
        vec = []
        for per in dg:
            for d in per:
                vec.extend(d + [0] * (width - len(d)))
        out.append(vec)
    return out


def kernel_over_basis(A, basis, image_fn):
    """F_p-basis of the elements of span(basis) on which image_fn vanishes."""
    images = [image_fn(b) for b in basis]
    columns = _flatten(A, images)
    nrows = len(columns[0]) if columns else 0
    null = linalg.nullspace_mod_p(columns, nrows, A.p)
    return [A.combine(vec, basis) for vec in null]


def span_elements(A, basis):
    """All F_p-combinations of a list of elements."""
    out = {A.zero}
    for b in basis:
        grown = set()
        for x in out:
            for c in range(A.p):
                grown.add(A.ring.add(x, A.fp_scale(c, b)))
        out = grown
    return frozenset(out)


# ---------------------------------------------------------------------------
# operations


def petit_mul(A, x, y):
    return A.mul(A.check(x), A.check(y))


def is_right_invariant(A):
    """Rf is a two-sided ideal."""
    ring, f, m = A.ring, A.f, A.m
    B = A.base
    span = spanning_set(B)
    if ring.delta.is_zero:
        sig = ring.sigma
        for i in range(m):
            ai = ring.coeff(f, i)
            if sig(ai) != ai:
                return False
        for z in span:
            top = sig.power(z, m)
            for i in range(m):
                ai = ring.coeff(f, i)
                if B.mul(top, ai) != B.mul(ai, sig.power(z, i)):
                    return False
        return True
    for d in span + [B.one]:
        if ring.rrem(ring.mul(f, (d,)), f):
            return False
    return not ring.rrem(ring.mul(f, ring.t), f)


def eigenring(A):
    """F_p-basis of E(f) = {g : deg g < m, f g in R f}."""
    if not A.is_finite:
        raise ValueError("eigenring is computed over finite bases")
    ring, f = A.ring, A.f
    return kernel_over_basis(A, A.basis(), lambda g: [ring.rrem(ring.mul(f, g), f)])


@dataclass(frozen=True)
class Nuclei:
    left: frozenset
    middle: frozenset
    right: frozenset
    nucleus: frozenset
    center: frozenset
    commutator: frozenset
    bases: dict = field(default_factory=dict, compare=False)

    def sizes(self):
        return {name: len(getattr(self, name)) for name in
                ("left", "middle", "right", "nucleus", "center", "commutator")}


def _associator_table(A, basis):
    prods = [[A.mul(a, b) for b in basis] for a in basis]
    n = len(basis)
    table = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                table[i, j, k] = A.ring.sub(A.mul(prods[i][j], basis[k]), A.mul(basis[i], prods[j][k]))
    return prods, table


def _nuclei_bases(A, basis):
    n = len(basis)
    prods, table = _associator_table(A, basis)
    idx = {b: i for i, b in enumerate(basis)}

    def slot(which):
        def image(b):
            i = idx[b]
            if which == 0:
                return [table[i, j, k] for j in range(n) for k in range(n)]
            if which == 1:
                return [table[j, i, k] for j in range(n) for k in range(n)]
            return [table[j, k, i] for j in range(n) for k in range(n)]
        return image

    def commutes(b):
        i = idx[b]
        return [A.ring.sub(prods[i][j], prods[j][i]) for j in range(n)]

    return {
        "left": kernel_over_basis(A, basis, slot(0)),
        "middle": kernel_over_basis(A, basis, slot(1)),
        "right": kernel_over_basis(A, basis, slot(2)),
        "commutator": kernel_over_basis(A, basis, commutes),
    }


def nuclei_brute(A):
    """Nuclei, center and commutator by exhaustion over basis triples."""
    if not A.is_finite:
        raise ValueError("exhaustive nuclei need a finite base; use nuclei_bounded")
    require(A.size, max_exhaust(), "nuclei scan over |A|")
    bases = _nuclei_bases(A, A.basis())
    sets = {name: span_elements(A, b) for name, b in bases.items()}
    nucleus = sets["left"] & sets["middle"] & sets["right"]
    result = Nuclei(
        left=sets["left"],
        middle=sets["middle"],
        right=sets["right"],
        nucleus=nucleus,
        center=sets["commutator"] & nucleus,
        commutator=sets["commutator"],
        bases=bases,
    )
    if not A.associative:
        constants = frozenset(A.ring.const(c) for c in A.base.lex_elements)
        assert result.left == constants and result.middle == constants, "left/middle nucleus is not the base"
        assert result.right == span_elements(A, eigenring(A)), "right nucleus differs from eigenring"
    else:
        everything = frozenset(A.elements())
        assert result.nucleus == everything, "associative algebra with a proper nucleus"
    return result


def nuclei_bounded(A, max_deg=1):
    """F_p-bases of the nuclei restricted to elements with y-degree <= max_deg.

    Over F_q[y] or F_q(y) the algebra is infinite; this scans the subspace
    spanned by y^k g^u t^i (k <= max_deg) against the same subspace.
    """
    return _nuclei_bases(A, A.basis(max_deg))


def _semi_invariant_on(A, elements):
    ring, f, m = A.ring, A.f, A.m
    ok = True
    for c in elements:
        lhs = ring.mul(f, ring.const(c))
        rhs = ring.mul(ring.const(ring.sigma.power(c, m)), f)
        if lhs != rhs:
            ok = False
            break
    if ring.delta.is_zero:
        B = A.base
        closed = all(
            B.mul(ring.sigma.power(c, m), ring.coeff(f, j)) == B.mul(ring.coeff(f, j), ring.sigma.power(c, j))
            for c in elements
            for j in range(m)
        )
        assert closed == ok, "closed-form semi-invariance disagrees with direct product"
    return ok


def is_right_semi_invariant(A):
    """f D ⊆ D f, checked on an additive spanning set of D."""
    ok = _semi_invariant_on(A, spanning_set(A.base))
    if A.is_finite:
        in_eigen = all(not A.ring.rrem(A.ring.mul(A.f, (c,)), A.f) for c in A.base.basis())
        assert in_eigen == ok, "semi-invariance disagrees with D ⊆ E(f)"
    return ok


def is_L_weak_semi_invariant(A, L):
    """f c = sigma^m(c) f for all c in the subfield L.

    ``L`` is the degree d of a subfield F_{p^d} of a finite base, or an
    explicit list of elements spanning L additively.
    """
    B = A.base
    if isinstance(L, int):
        if B.kind != "Fq" or B.h % L:
            raise ValueError(f"F_{{p^{L}}} is not a subfield of the base")
        sub, embed = fixed_subfield(B, FrobeniusPower(L % B.h if B.h > 1 else 0))
        elements = [embed(b) for b in sub.basis()]
    else:
        elements = list(L)
    return _semi_invariant_on(A, elements)


def mult_matrix(A, g, verify=False):
    """W_g: row i holds the coefficients of t^i ∘ g."""
    A.check(g)
    ring = A.ring
    rows = []
    for i in range(A.m):
        prod = A.mul(ring.monomial(A.base.one, i), g)
        rows.append([ring.coeff(prod, j) for j in range(A.m)])
    if verify:
        for d in spanning_set(A.base):
            wd = mult_matrix(A, ring.const(d))
            dg = A.mul(ring.const(d), g)
            assert linalg.matmul(A.base, wd, rows) == mult_matrix(A, dg), "W_d W_g != W_{d∘g}"
    return rows


def semi_mult(A, g):
    """M_f(g) = det W_g by fraction-free elimination."""
    return linalg.bareiss_det(A.base, mult_matrix(A, g))


@dataclass(frozen=True)
class DivisionStatus:
    kind: str  # Division | RightNotLeftDivision | ZeroDivisors | Unknown
    witness: tuple = None
    certified_by: str = "theorem"
    criterion: str = ""


def left_annihilator_witness(A, x, basis):
    """Some nonzero y in span(basis) with x∘y = 0, or None."""
    kernel = kernel_over_basis(A, basis, lambda y: [A.mul(x, y)])
    return kernel[0] if kernel else None


def zero_divisor_scan(A, elements, basis):
    """First (x, y) with x∘y = 0, x from ``elements``, y nonzero in span(basis).

    For each x the map y -> x∘y is F_p-linear, so its kernel decides every
    y in the span at once.
    """
    for x in elements:
        if not x:
            continue
        y = left_annihilator_witness(A, x, basis)
        if y is not None:
            return x, y
    return None


def _poly_coeffs(A):
    """f's coefficients as polynomials in y, or None if some is a fraction."""
    B = A.base
    if B.kind == "Poly":
        return list(A.f)
    out = []
    for c in A.f:
        if c[1] != (1,):
            return None
        out.append(c[0])
    return out


def division_status(A, oracle=None):
    """Division-algebra verdict with a verified witness or a certificate."""
    B = A.base
    ring = A.ring
    if A.is_finite:
        res = factor_search(ring, A.f)
        if res is IRREDUCIBLE:
            status = DivisionStatus("Division", None, "theorem", "irreducible f")
        else:
            g, h = res.left, res.right
            assert not A.mul(g, h), "factorization does not give zero divisors"
            status = DivisionStatus("ZeroDivisors", (g, h), "theorem", "factor search")
        run = oracle if oracle is not None else A.size <= max_exhaust()
        if run:
            require(A.size, max(max_exhaust(), A.size if oracle else 0), "zero-divisor scan")
            hit = zero_divisor_scan(A, A.elements(), A.basis())
            assert (hit is None) == (status.kind == "Division"), "zero-divisor scan disagrees"
            status = DivisionStatus(status.kind, status.witness, "both", status.criterion)
        return status
    if B.kind != "Rat":
        raise ValueError("division status needs a finite field or F_q(y) base")
    sigma_kind = type(ring.sigma.desc)
    coeffs = _poly_coeffs(A)
    if sigma_kind is YSquare and ring.delta.is_zero and A.m == 2 and coeffs is not None and not coeffs[1]:
        a = coeffs[0]
        if a and (len(a) - 1) % 3:
            return DivisionStatus("RightNotLeftDivision", None, "theorem", "t^2 - a(y), 3 does not divide deg_y a")
        return DivisionStatus("Unknown", None, "theorem", "degree criterion silent")
    if sigma_kind is YScale and ring.delta.is_zero:
        from .irreducibility import irreducible_rational

        verdict = irreducible_rational(ring, A.f)
        if verdict.verdict == "Irreducible":
            return DivisionStatus("Division", None, "theorem", verdict.certificate)
        return DivisionStatus("Unknown", None, "theorem", verdict.certificate)
    raise ValueError("unsupported endomorphism for an F_q(y) base")


def bounded_zero_divisor_search(A, max_deg=3):
    """Search zero divisors among elements whose coefficients are polynomials of y-degree <= max_deg."""
    B = A.base
    if B.kind not in ("Poly", "Rat"):
        raise ValueError("bounded search is for F_q[y] or F_q(y) bases")
    poly = B.poly if B.kind == "Rat" else B
    coeff_elems = list(poly.elements_upto(max_deg))
    if B.kind == "Rat":
        coeff_elems = [B.from_poly(c) for c in coeff_elems]
    count = len(coeff_elems) ** A.m
    require(count, max(max_exhaust(), 10 ** 5), "bounded zero-divisor search")
    basis = A.basis(max_deg)
    elements = (A.ring.trim(c) for c in product(coeff_elems, repeat=A.m))
    return zero_divisor_scan(A, elements, basis)


def t_left_invertible(A):
    """(a_0 != 0, witness g with g∘t = 1 or None); needs delta = 0."""
    ring = A.ring
    if not ring.delta.is_zero:
        raise ValueError("t_left_invertible needs delta = 0")
    B = A.base
    f, m = A.f, A.m
    a = [B.neg(ring.coeff(f, i)) for i in range(m)]
    if B.is_zero(a[0]):
        return False, None
    inv = B.inv(a[0])
    coeffs = [B.neg(B.mul(inv, a[i + 1])) for i in range(m - 1)] + [inv]
    g = ring.trim(coeffs)
    assert A.mul(g, ring.t) == A.one, "explicit left inverse of t failed"
    return True, g


__all__ = [
    "BoundExceeded",
    "DivisionStatus",
    "Nuclei",
    "PetitAlgebra",
    "bounded_zero_divisor_search",
    "division_status",
    "eigenring",
    "is_L_weak_semi_invariant",
    "is_right_invariant",
    "is_right_semi_invariant",
    "mult_matrix",
    "nuclei_brute",
    "nuclei_bounded",
    "petit_mul",
    "semi_mult",
    "t_left_invertible",
]
