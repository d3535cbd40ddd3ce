from itertools import product
from math import gcd

import pytest

from petit.fields import (
    DDY,
    FrobeniusPower,
    Identity,
    YScale,
    YSquare,
    make_finite_field,
    make_rational_field,
    primitive_element,
)
from petit.irreducibility import (
    Inapplicable,
    count_irreducible_exhaustive,
    count_irreducible_tma,
    exists_irreducible_tma,
    irreducible,
    irreducible_charp,
    irreducible_deg2,
    irreducible_deg3,
    irreducible_deg4,
    irreducible_prime_tma,
    irreducible_rational,
    irreducible_witness_tma,
    norm_exponent,
    quadratic_remainder,
    vp_right_remainder,
)
from petit.skew import IRREDUCIBLE, SkewRing, factor_search


def ring(p, h, r=1):
    return SkewRing(make_finite_field(p, h), FrobeniusPower(r))


def tma(R, m, a):
    return R.sub(R.monomial(1, m), R.const(a))


def cube_root_data(F):
    omega = next(x for x in F.lex_elements if x not in (0, 1) and F.pow(x, 3) == 1)
    d = next(x for x in F.lex_elements if F.pow(x, 3) == omega)
    return omega, d


def assert_witness(R, f, v):
    assert v.verdict == "Reducible"
    assert not R.right_divmod(f, v.witness)[1]
    assert R.mul(v.factorization.left, v.factorization.right) == f


def test_deg2_examples():
    R = ring(3, 2)
    alpha = primitive_element(R.base)
    assert irreducible_deg2(R, tma(R, 2, alpha)).verdict == "Irreducible"
    f = tma(R, 2, 2)
    v = irreducible_deg2(R, f)
    assert_witness(R, f, v)
    b = R.base.neg(v.witness[0])
    assert R.base.mul(R.sigma(b), b) == 2
    with pytest.raises(ValueError):
        irreducible_deg2(R, R.parse("t^3"))


def test_deg3_examples():
    R = ring(3, 3)
    F = R.base
    for a in F.lex_elements:
        v = irreducible_deg3(R, tma(R, 3, a))
        assert v.irreducible == (R.sigma(a) != a)
    f = R.parse("t^3-1")
    v = irreducible_deg3(R, f)
    assert_witness(R, f, v)
    assert not R.right_divmod(f, R.parse("t-1"))[1]
    S = SkewRing(make_rational_field(2), YSquare())
    assert irreducible_deg3(S, S.parse("t^3-y")).verdict == "Inapplicable"


def test_prime_tma_matches_discrete_log_form():
    for p, h, r, m in [(3, 2, 1, 2), (2, 6, 2, 3), (2, 4, 1, 2), (5, 2, 1, 2), (7, 1, 0, 3)]:
        R = ring(p, h, r)
        F = R.base
        s = norm_exponent(p, R.sigma.r, m)
        z = primitive_element(F)
        for u in range(F.q - 1):
            a = F.pow(z, u)
            v = irreducible_prime_tma(R, tma(R, m, a))
            if v.verdict == "Inapplicable":
                break
            assert v.irreducible == (u % gcd(s, F.q - 1) != 0)


def test_prime_tma_examples():
    R = ring(3, 2)
    alpha = primitive_element(R.base)
    assert irreducible_prime_tma(R, tma(R, 2, alpha)).irreducible
    b = R.base.parse("1+g")
    a = R.base.mul(R.sigma(b), b)
    v = irreducible_prime_tma(R, tma(R, 2, a))
    assert v.verdict == "Reducible"
    R64 = ring(2, 6, 2)
    omega, d = cube_root_data(R64.base)
    assert irreducible_prime_tma(R64, tma(R64, 3, d)).irreducible
    # F_2 holds no primitive cube root of unity
    assert irreducible_prime_tma(ring(2, 2), tma(ring(2, 2), 3, 2)).verdict == "Inapplicable"
    assert irreducible_prime_tma(R, R.parse("t^2+t")).verdict == "Inapplicable"


def test_quadratic_remainder_matches_division():
    for R in (ring(3, 2), ring(2, 4)):
        F = R.base
        f = R.parse("t^4 + g*t^3 + t + 2") if F.p == 3 else R.parse("t^4 + g*t^3 + t + 1")
        for c, d in product(F.lex_elements, repeat=2):
            u, v = quadratic_remainder(R, f, c, d)
            rem = R.right_divmod(f, R.trim((F.neg(d), F.neg(c), 1)))[1]
            assert R.trim((v, u)) == rem


def test_deg4_examples():
    R = ring(3, 2)
    for a in R.base.lex_elements:
        f = tma(R, 4, a)
        v = irreducible_deg4(R, f)
        assert v.irreducible == (factor_search(R, f) is IRREDUCIBLE)
        if not v.irreducible:
            assert_witness(R, f, v)
    v = irreducible_deg4(R, R.parse("t^4"))
    assert v.witness == R.parse("t^2")
    assert irreducible_deg4(R, R.parse("t^4-1")).verdict == "Reducible"


def test_t4_linear_divisor_gives_quadratic_divisor():
    R = ring(3, 2)
    F = R.base
    for a in F.lex_elements:
        f = tma(R, 4, a)
        for b in F.lex_elements:
            if not R.right_divmod(f, R.linear(b))[1]:
                quad = R.sub(R.monomial(1, 2), R.const(F.mul(R.sigma(b), b)))
                assert not R.right_divmod(f, quad)[1]


def test_charp_examples():
    R = SkewRing(make_finite_field(3, 1))
    v = irreducible_charp(R, R.parse("t^3-t"))
    assert v.verdict == "Reducible" and v.witness == R.parse("t")
    assert irreducible_charp(R, R.parse("t^3-t-1")).irreducible
    D = SkewRing(make_rational_field(3), Identity(), DDY())
    f = D.parse("t^3-t-y")
    assert irreducible_charp(D, f).verdict == "Unknown"
    B = D.base
    y = B.y
    assert vp_right_remainder(D, f, y) == B.sub(B.sub(B.pow(y, 3), y), y)
    assert irreducible_charp(R, R.parse("t^2+1")).verdict == "Inapplicable"


def test_artin_schreier_matches_commutative_factorization():
    sympy = pytest.importorskip("sympy")
    x = sympy.symbols("x")
    for p in (2, 3, 5):
        R = SkewRing(make_finite_field(p, 1))
        for a in range(p):
            f = R.sub(R.sub(R.monomial(1, p), R.t), R.const(a))
            poly = sympy.Poly(x ** p - x - a, x, modulus=p)
            assert irreducible_charp(R, f).irreducible == poly.is_irreducible


def test_char3_derivation_left_form():
    D = SkewRing(make_rational_field(3), Identity(), DDY())
    f = D.parse("t^3 - y*t - 1")
    v = irreducible_deg3(D, f)
    assert v.verdict in ("Unknown", "Reducible")
    # (t - y)(t^2 + y t + 1) has no t^2 term, and only a left linear factor is built in
    g = D.mul(D.parse("t - y"), D.parse("t^2 + y*t + 1"))
    assert D.coeff(g, 2) == D.base.zero
    v = irreducible_deg3(D, g)
    assert_witness(D, g, v)


def test_rational_examples():
    Q = SkewRing(make_rational_field(2, 2), YScale(2))
    assert irreducible_rational(Q, Q.parse("t^3-y")).irreducible
    assert irreducible_rational(Q, Q.parse("t^3-y^3")).verdict == "Unknown"
    assert irreducible_rational(Q, Q.parse("t^3-(y^2+1)")).irreducible
    assert irreducible_rational(Q, Q.parse("t^3-y/(y+1)")).verdict == "Inapplicable"
    # the dispatcher finds the divisor t - g*y by bounded search
    v = irreducible(Q, Q.parse("t^3-y^3"))
    assert_witness(Q, Q.parse("t^3-y^3"), v)
    S = SkewRing(make_rational_field(2), YSquare())
    assert irreducible_deg2(S, S.parse("t^2-y")).irreducible
    assert irreducible_deg2(S, S.parse("t^2-y^3")).verdict == "Unknown"


@pytest.mark.parametrize("p,h", [(2, 2), (3, 2)])
def test_criteria_agree_with_factor_search(p, h):
    R = ring(p, h)
    for m in (2, 3):
        for f in R.monic_polys(m):
            truth = factor_search(R, f) is IRREDUCIBLE
            fns = [irreducible_deg2] if m == 2 else [irreducible_deg3]
            if all(c == 0 for c in f[1:m]):
                fns.append(irreducible_prime_tma)
            for fn in fns:
                v = fn(R, f)
                if v.verdict != "Inapplicable":
                    assert v.irreducible == truth, (fn.__name__, f)
            v = irreducible(R, f)
            assert v.irreducible == truth and v.oracle_agrees


def test_counting_examples():
    assert count_irreducible_tma(3, 2, 1, 2) == 6
    assert count_irreducible_tma(2, 2, 1, 2) == 2
    with pytest.raises(Inapplicable):
        count_irreducible_tma(2, 2, 1, 3)
    assert exists_irreducible_tma(3, 2, 1, 2)
    # sigma has order 2 on F_4, so N_3(b) = b^4 = b is onto and no t^3 - a escapes
    assert not exists_irreducible_tma(2, 2, 1, 3)
    assert irreducible_witness_tma(2, 2, 1, 3) is None
    assert exists_irreducible_tma(2, 6, 2, 3)


def test_counting_matches_exhaustion():
    for p, h in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (2, 4), (5, 1), (7, 1), (2, 6)]:
        for r in range(0, h + 1):
            for m in (2, 3):
                brute = count_irreducible_exhaustive(p, h, r, m)
                try:
                    count = count_irreducible_tma(p, h, r, m, verify=False)
                except Inapplicable:
                    continue
                assert count == brute, (p, h, r, m)


def test_dispatcher_reports_criterion_and_oracle():
    R = ring(3, 2)
    v = irreducible(R, R.parse("t^2 - g"))
    assert v.irreducible and v.oracle_agrees is True and v.certificate
    v = irreducible(R, R.parse("t^4 + g*t + 1"))
    assert v.decided and v.oracle_agrees is True
