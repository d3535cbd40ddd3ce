import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import GF as SymGF
from sympy import Poly, symbols

from petit.fields import (
    DDY,
    YScale,
    YSquare,
    Derivation,
    Endomorphism,
    FrobeniusPower,
    Identity,
    InnerSigma,
    apply_endo,
    count_roots_of_unity,
    fixed_subfield,
    is_irreducible_fp,
    make_finite_field,
    make_poly_ring,
    make_rational_field,
    norm,
    parse_deriv,
    parse_endo,
    parse_field,
    primitive_element,
)
from petit.expr import ParseError

X = symbols("x")


def sympy_mul(F, a, b):
    """Independent product via sympy polynomial arithmetic over GF(p)."""
    dom = SymGF(F.p)
    mod = Poly(list(reversed(F.modulus)), X, domain=dom)
    pa = Poly(list(reversed(F.digits(a))), X, domain=dom)
    pb = Poly(list(reversed(F.digits(b))), X, domain=dom)
    prod = (pa * pb).rem(mod)
    coeffs = [int(c) % F.p for c in reversed(prod.all_coeffs())]
    return F.from_digits(coeffs + [0] * (F.h - len(coeffs)))


FIELDS = [(2, 1), (2, 2), (3, 2), (2, 4), (5, 2), (2, 6), (3, 3)]


@pytest.mark.parametrize("p,h", [(3, 2), (2, 1), (2, 2)])
def test_modulus_examples(p, h):
    expected = {(3, 2): "x^2+1", (2, 1): "x", (2, 2): "x^2+x+1"}
    assert make_finite_field(p, h).modulus_str() == expected[(p, h)]


def test_modulus_is_lex_smallest_by_scan():
    F = make_finite_field(3, 2)
    # monic quadratics x^2 + b x + c in lowest-first lex order: (c, b)
    candidates = [(c, b, 1) for c in range(3) for b in range(3)]
    first = next(c for c in candidates if is_irreducible_fp(list(c), 3))
    assert F.modulus == first == (1, 0, 1)


def test_construction_errors():
    with pytest.raises(ValueError):
        make_finite_field(4, 1)
    with pytest.raises(ValueError):
        make_finite_field(2, 21)
    with pytest.raises(ValueError):
        make_finite_field(2, 2, modulus=(1, 0, 1))


@pytest.mark.parametrize("p,h", FIELDS)
def test_multiplication_matches_sympy(p, h):
    F = make_finite_field(p, h)
    rng = random.Random(p * 100 + h)
    for _ in range(300):
        a, b = F.random(rng), F.random(rng)
        assert F.mul(a, b) == sympy_mul(F, a, b)
        assert F.add(a, F.neg(a)) == 0
        if b:
            assert F.mul(F.div(a, b), b) == a


def test_large_field_vector_backend_agrees():
    F = make_finite_field(2, 17)
    assert not hasattr(F, "exp")
    rng = random.Random(5)
    for _ in range(50):
        a, b = F.random(rng), F.random(rng)
        assert F.mul(a, b) == sympy_mul(F, a, b)
        if a:
            assert F.mul(a, F.inv(a)) == 1


def test_apply_endo_examples():
    F4 = make_finite_field(2, 2)
    w = F4.gen
    assert apply_endo(F4, FrobeniusPower(1), w) == F4.mul(w, w)
    F9 = make_finite_field(3, 2)
    i = F9.gen
    assert F9.mul(i, i) == F9.from_int(2)
    assert apply_endo(F9, FrobeniusPower(1), i) == F9.parse("2*g")
    R = make_rational_field(3)
    s = parse_endo(R, "yscale(2)")
    assert s(R.parse("y^2+1")) == R.parse("y^2+1")
    with pytest.raises(ValueError):
        Endomorphism(F9, YSquare())
    with pytest.raises(ValueError):
        Endomorphism(R, FrobeniusPower(1))


def test_degenerate_prime_field_frobenius_is_identity():
    F = make_finite_field(5, 1)
    e = Endomorphism(F, FrobeniusPower(1))
    assert e.is_identity and all(e(x) == x for x in range(5))


def test_norm_examples():
    F9 = make_finite_field(3, 2)
    alpha = primitive_element(F9)
    assert norm(F9, FrobeniusPower(1), 2, alpha) == 2
    assert norm(F9, FrobeniusPower(1), 2, 1) == 1
    F4 = make_finite_field(2, 2)
    assert norm(F4, FrobeniusPower(1), 2, F4.gen) == 1
    P = make_poly_ring(2)
    with pytest.raises(ValueError):
        norm(P, YSquare(), 2, P.y)


def test_fixed_subfield_examples():
    F9 = make_finite_field(3, 2)
    sub, emb = fixed_subfield(F9, FrobeniusPower(1))
    assert sub.q == 3
    F4 = make_finite_field(2, 2)
    sub, emb = fixed_subfield(F4, FrobeniusPower(0))
    assert sub.q == 4
    F16 = make_finite_field(2, 4)
    sub, emb = fixed_subfield(F16, FrobeniusPower(2))
    assert sub.q == 4
    images = {emb(x) for x in range(4)}
    assert images == {x for x in range(16) if F16.pow(x, 4) == x}
    # embedding is a ring homomorphism
    for a in range(4):
        for b in range(4):
            assert emb(sub.mul(a, b)) == F16.mul(emb(a), emb(b))
            assert emb(sub.add(a, b)) == F16.add(emb(a), emb(b))


def test_roots_of_unity_examples():
    F9 = make_finite_field(3, 2)
    assert count_roots_of_unity(F9, 4) == 4
    assert count_roots_of_unity(F9, 1) == 1
    assert count_roots_of_unity(make_finite_field(2, 2), 3) == 3
    with pytest.raises(ValueError):
        count_roots_of_unity(F9, 0)


def test_primitive_element_examples():
    F9 = make_finite_field(3, 2)
    assert F9.fmt(primitive_element(F9)) == "1+g"
    assert primitive_element(make_finite_field(2, 1)) == 1
    F4 = make_finite_field(2, 2)
    assert primitive_element(F4) == F4.gen


@pytest.mark.parametrize("p,h", [(3, 2), (2, 4), (2, 6), (5, 2)])
def test_primitive_element_is_lex_minimal(p, h):
    F = make_finite_field(p, h)
    z = primitive_element(F)
    q = F.q
    for x in F.lex_elements:
        if x == z:
            break
        if x:
            assert len({F.pow(x, k) for k in range(q - 1)}) < q - 1
    assert len({F.pow(z, k) for k in range(q - 1)}) == q - 1


@pytest.mark.parametrize("p,h,d", [(3, 2, 1), (2, 4, 2), (2, 6, 2), (2, 6, 3), (5, 2, 1)])
def test_kernel_of_norm_is_cyclic_of_order_s(p, h, d):
    F = make_finite_field(p, h)
    e = Endomorphism(F, FrobeniusPower(d))
    m = h // d
    s = (p ** h - 1) // (p ** d - 1)
    kernel = [x for x in range(1, F.q) if norm(F, e, m, x) == 1]
    assert len(kernel) == s
    assert any(F.order(x) == s for x in kernel)


def _endos(ctx):
    if ctx.kind == "Fq":
        return [Endomorphism(ctx, FrobeniusPower(r)) for r in range(ctx.h)]
    out = [Endomorphism(ctx, Identity()), Endomorphism(ctx, YSquare())]
    out += [Endomorphism(ctx, YScale(q)) for q in range(1, ctx.base.q)]
    return out


@pytest.mark.parametrize(
    "ctx",
    [make_finite_field(3, 2), make_finite_field(2, 4), make_poly_ring(3), make_rational_field(2, 2)],
    ids=["F9", "F16", "F3[y]", "F4(y)"],
)
def test_endomorphisms_are_ring_homs(ctx):
    rng = random.Random(11)
    n = 10 ** 4 if ctx.kind == "Fq" else 300
    for e in _endos(ctx):
        for _ in range(n // len(_endos(ctx))):
            a, b = ctx.random(rng), ctx.random(rng)
            assert e(ctx.mul(a, b)) == ctx.mul(e(a), e(b))
            assert e(ctx.add(a, b)) == ctx.add(e(a), e(b))
        if e.is_automorphism:
            a = ctx.random(rng)
            assert e.inverse(e(a)) == a


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=0, max_size=4), st.lists(st.integers(0, 2), min_size=0, max_size=4),
       st.lists(st.integers(0, 2), min_size=1, max_size=3))
def test_ddy_is_a_derivation_on_fractions(na, nb, den):
    R = make_rational_field(3)
    P = R.poly
    if not P.trim(den):
        den = [1]
    a = R.normalize(P.trim(na), P.trim(den))
    b = R.from_poly(P.trim(nb))
    d = Derivation(R, DDY(), Endomorphism(R, Identity()))
    assert d(R.mul(a, b)) == R.add(R.mul(a, d(b)), R.mul(d(a), b))
    assert d(R.one) == R.zero


def test_inner_derivation_law_and_goodearl_identity():
    F = make_finite_field(3, 2)
    sigma = Endomorphism(F, FrobeniusPower(1))
    u = F.parse("1+g")
    d = Derivation(F, InnerSigma(u), sigma)
    assert not d.is_zero
    rng = random.Random(3)
    for _ in range(10 ** 4):
        a, b = F.random(rng), F.random(rng)
        assert d(F.mul(a, b)) == F.add(F.mul(sigma(a), d(b)), F.mul(d(a), b))
    for _ in range(50):
        a = F.random(rng)
        for n in range(1, 7):
            rhs = F.sum(
                F.mul(F.mul(F.pow(sigma(a), i), d(a)), F.pow(a, n - 1 - i)) for i in range(n)
            )
            assert d(F.pow(a, n)) == rhs


def test_rational_normalization():
    R = make_rational_field(3)
    rng = random.Random(9)
    P = R.poly
    for _ in range(200):
        a = R.random(rng)
        num, den = a
        assert den[-1] == 1
        assert P.gcd(num, den) == (1,) or not num
        b = R.random(rng)
        c = R.add(R.mul(a, b), b)
        assert c[1][-1] == 1


def test_parsing_and_printing_round_trip():
    F9 = make_finite_field(3, 2)
    for x in range(9):
        assert F9.parse(F9.fmt(x)) == x
    R = make_rational_field(3, 2)
    rng = random.Random(2)
    for _ in range(100):
        a = R.random(rng)
        assert R.parse(R.fmt(a)) == a
    with pytest.raises(ParseError) as err:
        F9.parse("1+ + z")
    assert err.value.position >= 0
    with pytest.raises(ParseError) as err:
        F9.parse("1 + q")
    assert err.value.position == 4


def test_spec_strings():
    assert parse_field("Fq(3,2)").q == 9
    assert parse_field("Poly(2,1)").kind == "Poly"
    R = parse_field("Rat(3,1)")
    assert R.kind == "Rat"
    s = parse_endo(R, "ysq")
    assert not s.is_automorphism
    d = parse_deriv(R, parse_endo(R, "id"), "ddy")
    assert d(R.y) == R.one
    with pytest.raises(ParseError):
        parse_field("Gf(3,2)")
    with pytest.raises(ParseError):
        parse_endo(parse_field("Fq(3,2)"), "ysq(2)")
