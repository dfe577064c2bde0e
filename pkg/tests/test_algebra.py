import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vknots.laurent import (
    LaurentPoly,
    LaurentPoly2,
    normalize_leadpos,
    normalize_unit,
    poly_gcd,
)
from vknots.matrix import det_bareiss, det_cofactor, minor_matrix
from vknots.quaternion import GaussianLaurent, Quaternion, doubling_block


# --- strategies --------------------------------------------------------------

coeffs = st.integers(min_value=-9, max_value=9)
exps = st.integers(min_value=-4, max_value=4)

lpolys = st.dictionaries(exps, coeffs, max_size=5).map(
    lambda d: LaurentPoly(d, "t")
)
lpolys2 = st.dictionaries(st.tuples(exps, exps), coeffs, max_size=5).map(
    LaurentPoly2
)


def rand_lpoly(rng, var="t"):
    return LaurentPoly(
        {rng.randint(-3, 3): rng.randint(-5, 5) for _ in range(rng.randint(0, 4))},
        var,
    )


def rand_lpoly2(rng):
    return LaurentPoly2(
        {
            (rng.randint(-2, 2), rng.randint(-2, 2)): rng.randint(-5, 5)
            for _ in range(rng.randint(0, 4))
        }
    )


def rand_gaussian(rng):
    return GaussianLaurent(rand_lpoly(rng), rand_lpoly(rng))


def rand_quaternion(rng):
    return Quaternion(
        rand_lpoly(rng), rand_lpoly(rng), rand_lpoly(rng), rand_lpoly(rng)
    )


# --- ring laws ----------------------------------------------------------------


@settings(max_examples=80)
@given(lpolys, lpolys, lpolys)
def test_laurent_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == LaurentPoly({}, "t")


@settings(max_examples=80)
@given(lpolys2, lpolys2, lpolys2)
def test_laurent2_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=50)
@given(lpolys, lpolys)
def test_exact_div_recovers_factor(a, b):
    if a.is_zero() or b.is_zero():
        return
    assert (a * b).exact_div(b) == a


def test_exact_div_rejects_inexact():
    a = LaurentPoly({0: 1, 1: 1}, "t")
    b = LaurentPoly({0: 2}, "t")
    with pytest.raises(ArithmeticError):
        a.exact_div(b)


# --- rendering -----------------------------------------------------------------


@pytest.mark.parametrize(
    "terms,expected",
    [
        ({}, "0"),
        ({0: 1}, "1"),
        ({0: -1}, "-1"),
        ({1: 1}, "t"),
        ({1: -1}, "-t"),
        ({-1: 2}, "2*t^-1"),
        ({2: 3, 0: -1}, "-1 + 3*t^2"),
        ({-4: -1, -3: 1, -1: 1}, "-t^-4 + t^-3 + t^-1"),
    ],
)
def test_render_format(terms, expected):
    assert LaurentPoly(terms, "t").render() == expected


def test_render_two_variable():
    p = LaurentPoly2({(0, 0): 1, (1, 2): -3, (-1, 0): 1})
    assert p.render() == "s^-1 + 1 - 3*s*t^2"


def test_render_ascending_order():
    p = LaurentPoly({3: 1, -2: 1, 0: 5}, "A")
    assert p.render() == "A^-2 + 5 + A^3"


# --- normalization and gcd -------------------------------------------------------


def test_normalize_unit_shifts_to_zero():
    p = LaurentPoly({-2: -2, 1: 4}, "t")
    q = normalize_unit(p)
    assert q.min_exp() == 0
    assert q.terms[0] > 0


def test_normalize_leadpos():
    p = LaurentPoly({-1: 1, 2: -3}, "t")
    q = normalize_leadpos(p)
    assert q.min_exp() == 0
    assert q.terms[max(q.terms)] > 0


def test_poly_gcd_known():
    t = LaurentPoly({1: 1}, "t")
    one = LaurentPoly({0: 1}, "t")
    a = (t * t - one) * (t + one)
    b = (t * t - one) * (t - one)
    g = poly_gcd(a, b)
    assert g == normalize_leadpos(t * t - one)


@settings(max_examples=40)
@given(lpolys, lpolys, lpolys)
def test_poly_gcd_divides(a, b, g):
    if g.is_zero():
        return
    d = poly_gcd(a * g, b * g)
    if d.is_zero():
        return
    (a * g).exact_div(d)
    (b * g).exact_div(d)
    d.exact_div(normalize_leadpos(g))  # raises if g does not divide d


# --- quaternions -----------------------------------------------------------------


def test_quaternion_product_table():
    one = LaurentPoly({0: 1}, "t")
    zero = LaurentPoly({}, "t")
    i = Quaternion(zero, one, zero, zero)
    j = Quaternion(zero, zero, one, zero)
    k = Quaternion(zero, zero, zero, one)
    assert i * j == k
    assert j * i == -k
    assert i * i == Quaternion(-one, zero, zero, zero)


def test_doubling_block_multiplicative(rng):
    for _ in range(50):
        q1, q2 = rand_quaternion(rng), rand_quaternion(rng)
        left = doubling_block(q1 * q2)
        b1, b2 = doubling_block(q1), doubling_block(q2)
        prod = [
            [
                b1[r][0] * b2[0][c] + b1[r][1] * b2[1][c]
                for c in range(2)
            ]
            for r in range(2)
        ]
        assert left == prod


def test_gaussian_conj_norm(rng):
    for _ in range(30):
        z = rand_gaussian(rng)
        n = z * z.conj()
        assert n.im.is_zero()


# --- determinants -----------------------------------------------------------------


def _mat(rng, gen, n=4):
    return [[gen(rng) for _ in range(n)] for _ in range(n)]


INT_ONE = 1
L_ONE = LaurentPoly({0: 1}, "t")
L2_ONE = LaurentPoly2({(0, 0): 1})
G_ONE = GaussianLaurent(L_ONE, LaurentPoly({}, "t"))


@pytest.mark.parametrize(
    "gen,one",
    [
        (lambda r: r.randint(-9, 9), INT_ONE),
        (rand_lpoly, L_ONE),
        (rand_lpoly2, L2_ONE),
        (rand_gaussian, G_ONE),
    ],
    ids=["int", "laurent", "laurent2", "gaussian"],
)
def test_bareiss_matches_cofactor(rng, gen, one):
    for _ in range(25):
        m = _mat(rng, gen)
        assert det_bareiss(m, one) == det_cofactor(m)


def test_det_multiplicative_int(rng):
    for _ in range(20):
        a = _mat(rng, lambda r: r.randint(-5, 5), 3)
        b = _mat(rng, lambda r: r.randint(-5, 5), 3)
        ab = [
            [sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)]
            for i in range(3)
        ]
        assert det_bareiss(ab, 1) == det_bareiss(a, 1) * det_bareiss(b, 1)


def test_minor_matrix_deletes():
    m = [[1, 2, 3], [4, 5, 6], [7, 8, 9]]
    assert minor_matrix(m, [0], [1]) == [[4, 6], [7, 9]]


def test_det_row_swap_sign():
    m = [[0, 1], [1, 0]]
    assert det_bareiss(m, 1) == -1
