import random
from itertools import permutations

import pytest

from petit.algebra import (
    PetitAlgebra,
    bounded_zero_divisor_search,
    division_status,
    eigenring,
    is_L_weak_semi_invariant,
    is_right_invariant,
    is_right_semi_invariant,
    mult_matrix,
    nuclei_bounded,
    nuclei_brute,
    petit_mul,
    semi_mult,
    span_elements,
    t_left_invertible,
)
from petit.fields import (
    FrobeniusPower,
    YScale,
    YSquare,
    make_finite_field,
    make_poly_ring,
    make_rational_field,
    primitive_element,
)
from petit.limits import BoundExceeded
from petit.linalg import bareiss_det
from petit.skew import SkewRing


def ring(p, h, r=1):
    return SkewRing(make_finite_field(p, h), FrobeniusPower(r))


def algebra(p, h, text, r=1):
    R = ring(p, h, r)
    return PetitAlgebra(R, R.parse(text))


def all_degree2(p, h):
    R = ring(p, h)
    return [PetitAlgebra(R, f) for f in R.monic_polys(2)]


def basis_associators_vanish(A):
    basis = A.basis()
    return all(not A.associator(x, y, z) for x in basis for y in basis for z in basis)


def test_construction_rules():
    R = ring(2, 2)
    with pytest.raises(ValueError):
        PetitAlgebra(R, R.parse("t+1"))
    A = PetitAlgebra(R, R.parse("g*t^2 + 1"))
    assert A.f == R.monic(R.parse("g*t^2+1"))
    with pytest.raises(ValueError):
        A.parse("t^2")


def test_petit_mul_examples():
    A = algebra(2, 2, "t^2-g")
    rng = random.Random(1)
    for _ in range(20):
        y = A.ring.random(rng, 1)
        assert petit_mul(A, A.one, y) == y and petit_mul(A, y, A.one) == y
    assert petit_mul(A, A.ring.t, A.ring.t) == A.ring.const(A.base.gen)
    B = algebra(2, 2, "t^2+1")
    assert petit_mul(B, B.parse("t+g^2"), B.parse("t+g")) == ()


@pytest.mark.parametrize("p,h,m", [(2, 2, 2), (3, 2, 3), (2, 4, 2)])
def test_bilinearity_random(p, h, m):
    R = ring(p, h)
    rng = random.Random(p + h + m)
    F = R.base
    f = R.random(rng, m, monic=True)
    A = PetitAlgebra(R, f)
    center = A.center_field
    for _ in range(3000):
        x, y, z = (R.random(rng, m - 1) for _ in range(3))
        assert A.mul(x, R.add(y, z)) == R.add(A.mul(x, y), A.mul(x, z))
        assert A.mul(R.add(x, y), z) == R.add(A.mul(x, z), A.mul(y, z))
        c = R.const(rng.choice(center))
        assert A.mul(R.mul(c, x), y) == R.mul(c, A.mul(x, y)) == A.mul(x, R.mul(c, y))


@pytest.mark.parametrize("p,h", [(2, 2), (3, 2)])
def test_associative_iff_right_invariant(p, h):
    for A in all_degree2(p, h):
        assert basis_associators_vanish(A) == is_right_invariant(A) == A.associative


def test_right_invariance_examples():
    R = ring(2, 2)
    assert is_right_invariant(PetitAlgebra(R, R.parse("t^2-1")))
    assert not is_right_invariant(PetitAlgebra(R, R.parse("t^2-g")))
    assert is_right_invariant(PetitAlgebra(R, R.parse("t^2")))


def test_right_invariance_with_inner_derivation():
    from petit.fields import InnerSigma

    F = make_finite_field(3, 2)
    R = SkewRing(F, FrobeniusPower(1), InnerSigma(F.parse("1+g")))
    for f in list(R.monic_polys(2))[:40]:
        A = PetitAlgebra(R, f)
        assert basis_associators_vanish(A) == is_right_invariant(A)


def test_eigenring_examples():
    R = ring(3, 2)
    alpha = primitive_element(R.base)
    A = PetitAlgebra(R, R.sub(R.parse("t^2"), R.const(alpha)))
    E = span_elements(A, eigenring(A))
    assert len(E) == 9
    assert A.one in E
    assoc = algebra(3, 2, "t^2-2")
    assert len(span_elements(assoc, eigenring(assoc))) == 81


def test_eigenring_matches_definition_exhaustively():
    A = algebra(2, 2, "t^2+g*t+1")
    E = span_elements(A, eigenring(A))
    direct = {g for g in A.elements() if not A.ring.rrem(A.ring.mul(A.f, g), A.f)}
    assert E == direct


@pytest.mark.parametrize("p,h", [(2, 2), (3, 2)])
def test_nuclei_all_degree2(p, h):
    F = make_finite_field(p, h)
    constants = {(c,) if c else () for c in range(F.q)}
    for A in all_degree2(p, h):
        N = nuclei_brute(A)
        E = span_elements(A, eigenring(A))
        if not A.associative:
            assert N.left == N.middle == constants
            assert N.right == E
        else:
            assert len(N.nucleus) == A.size


def test_nuclei_examples():
    R = ring(3, 2)
    alpha = primitive_element(R.base)
    A = PetitAlgebra(R, R.sub(R.parse("t^2"), R.const(alpha)))
    N = nuclei_brute(A)
    assert len(N.nucleus) == 9
    assert N.commutator == {(), (1,), (2,)}
    assert N.center == N.commutator & N.nucleus


def test_nuclei_bound():
    A = algebra(2, 4, "t^4 + g")
    with pytest.raises(BoundExceeded):
        nuclei_brute(A)


def test_nuclei_over_polynomial_base():
    P = make_poly_ring(3)
    R = SkewRing(P, YScale(2))
    A = PetitAlgebra(R, R.parse("t^2 - y"))
    assert not A.associative
    bases = nuclei_bounded(A, max_deg=1)
    # constants of y-degree <= 1 span a 2-dimensional F_3-space
    assert len(bases["left"]) == len(bases["middle"]) == 2
    assert all(len(b) == 1 for b in bases["left"] + bases["middle"])


def test_semi_invariance_examples():
    R = ring(2, 2)
    assert is_right_semi_invariant(PetitAlgebra(R, R.parse("t^2-g")))
    assert not is_right_semi_invariant(PetitAlgebra(R, R.parse("t^2-g*t")))
    R3 = ring(2, 6, 2)
    assert is_right_semi_invariant(PetitAlgebra(R3, R3.parse("t^3 - g")))
    for A in all_degree2(2, 2):
        assert is_L_weak_semi_invariant(A, 1)
    with pytest.raises(ValueError):
        is_L_weak_semi_invariant(algebra(3, 2, "t^2-g"), 3)


def test_semi_invariance_matches_right_nucleus():
    for A in all_degree2(3, 2):
        if A.associative:
            continue
        N = nuclei_brute(A)
        base_in_right = all(((c,) if c else ()) in N.right for c in range(9))
        assert is_right_semi_invariant(A) == base_in_right


def test_mult_matrix_examples():
    A = algebra(3, 2, "t^2 - g*t - 2")
    W = mult_matrix(A, A.one)
    assert W == [[1, 0], [0, 1]] and semi_mult(A, A.one) == 1
    F = A.base
    sig = A.ring.sigma
    a1, a0 = F.parse("g"), F.parse("2")
    rng = random.Random(5)
    for _ in range(30):
        g0, g1 = F.random(rng), F.random(rng)
        g = A.ring.trim((g0, g1))
        W = mult_matrix(A, g, verify=True)
        expected = [[g0, g1], [F.mul(sig(g1), a0), F.add(sig(g0), F.mul(sig(g1), a1))]]
        assert W == expected
    B = algebra(2, 2, "t^2+1")
    assert semi_mult(B, B.parse("t+g")) == 0


def test_semi_multiplicativity_and_zero_divisors():
    A = algebra(3, 2, "t^2 - (1+g)")
    F = A.base
    elements = list(A.elements())
    values = {g: semi_mult(A, g) for g in elements}
    assert all(values[g] for g in elements if g)
    for d in range(9):
        dc = A.ring.const(d)
        for g in elements:
            assert values[A.mul(dc, g)] == F.mul(values[dc] if dc else 0, values[g])
    for f in ring(2, 2).monic_polys(2):
        B = PetitAlgebra(ring(2, 2), f)
        els = list(B.elements())
        no_zero_div = not any(B.mul(x, y) == () for x in els if x for y in els if y)
        assert no_zero_div == all(semi_mult(B, g) for g in els if g)
        killed = {g for g in els if any(x and not B.mul(x, g) for x in els)}
        assert killed == {g for g in els if not semi_mult(B, g)}


def leibniz_det(F, M):
    n = len(M)
    total = F.zero
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = F.one
        for i in range(n):
            term = F.mul(term, M[i][perm[i]])
        total = F.sub(total, term) if inv % 2 else F.add(total, term)
    return total


@pytest.mark.parametrize("ctx", [make_finite_field(3, 2), make_poly_ring(3), make_finite_field(2, 4)])
def test_bareiss_matches_leibniz(ctx):
    rng = random.Random(2)
    for n in range(1, 5):
        for _ in range(15):
            M = [[ctx.random(rng) for _ in range(n)] for _ in range(n)]
            assert bareiss_det(ctx, M) == leibniz_det(ctx, M)


@pytest.mark.parametrize("p,h", [(2, 2), (3, 2)])
def test_powers_of_t_associative_iff_t_in_right_nucleus(p, h):
    R = ring(p, h)
    for m in (2, 3):
        for f in list(R.monic_polys(m))[:200]:
            A = PetitAlgebra(R, f)
            tm = A.t_power(m)
            t = R.t
            comm = A.mul(t, tm) == A.mul(tm, t)
            basis = A.basis()
            in_right = all(not A.associator(x, y, t) for x in basis for y in basis)
            assert comm == in_right


def test_t_left_invertible_examples():
    A = algebra(2, 2, "t^2-g")
    ok, g = t_left_invertible(A)
    assert ok and g == A.parse("g^2*t")
    assert t_left_invertible(algebra(2, 2, "t^2-t")) == (False, None)
    ok, g = t_left_invertible(algebra(3, 2, "t^3-(1+g)"))
    assert ok


def test_division_status_examples():
    R = ring(3, 2)
    alpha = primitive_element(R.base)
    A = PetitAlgebra(R, R.sub(R.parse("t^2"), R.const(alpha)))
    st = division_status(A)
    assert st.kind == "Division" and st.certified_by == "both"
    B = algebra(2, 2, "t^2+1")
    st = division_status(B)
    assert st.kind == "ZeroDivisors"
    assert st.witness == (B.parse("t+g^2"), B.parse("t+g"))
    R2 = SkewRing(make_rational_field(2), YSquare())
    C = PetitAlgebra(R2, R2.parse("t^2-y"))
    assert division_status(C).kind == "RightNotLeftDivision"
    assert division_status(PetitAlgebra(R2, R2.parse("t^2-y^3"))).kind == "Unknown"


def test_division_status_agrees_with_exhaustive_pairs():
    for A in all_degree2(2, 2):
        els = list(A.elements())
        pair_hit = any(not A.mul(x, y) for x in els if x for y in els if y)
        assert (division_status(A).kind == "ZeroDivisors") == pair_hit


def test_bounded_search_over_rational_base():
    R2 = SkewRing(make_rational_field(2), YSquare())
    C = PetitAlgebra(R2, R2.parse("t^2-y"))
    assert bounded_zero_divisor_search(C, 2) is None
    D = PetitAlgebra(R2, R2.mul(R2.parse("t+y"), R2.parse("t+y")))
    hit = bounded_zero_divisor_search(D, 1)
    assert hit is not None and not D.mul(*hit)
