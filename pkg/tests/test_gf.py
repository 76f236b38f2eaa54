import itertools

import numpy as np
import pytest

from arcforge import gf
from arcforge.gf import Field, field_new, field_of_order


# ---------------------------------------------------------------------------
# independent oracles
# ---------------------------------------------------------------------------

def brute_force_least_irreducible(p, h):
    """Enumerate monic degree-h polynomials high-coefficient-first and return
    the first with no nontrivial monic factorization (trial products)."""
    def all_polys(deg):
        for tail in itertools.product(range(p), repeat=deg):
            yield list(reversed(tail)) + [1]  # little-endian, monic

    def poly_mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
        return out

    products = set()
    for d1 in range(1, h):
        d2 = h - d1
        if d2 < d1:
            break
        for f in all_polys(d1):
            for g in all_polys(d2):
                products.add(tuple(poly_mul(f, g)))
    for cand in all_polys(h):
        if tuple(cand) not in products:
            return cand
    raise AssertionError


def poly_division_reduce(a, modulus, p):
    """Long division remainder, little-endian coefficient lists."""
    a = list(a)
    while len(a) >= len(modulus):
        lead = a[-1]
        if lead:
            shift = len(a) - len(modulus)
            for i, c in enumerate(modulus):
                a[shift + i] = (a[shift + i] - lead * c) % p
        a.pop()
    return a + [0] * (len(modulus) - 1 - len(a))


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def test_prime_field_construction():
    f = field_new(7, 1)
    assert f.q == 7 and f.p == 7 and f.h == 1
    assert list(f.modulus) == [0, 1]  # the formal polynomial x


def test_gf4_modulus_forced():
    f = field_new(2, 2)
    assert list(f.modulus) == [1, 1, 1]  # x^2 + x + 1


@pytest.mark.parametrize("p,h", [(3, 2), (2, 3), (2, 4), (5, 2), (3, 3), (2, 5)])
def test_least_irreducible_matches_brute_force(p, h):
    assert list(field_new(p, h).modulus) == brute_force_least_irreducible(p, h)


def test_construction_errors():
    with pytest.raises(gf.NotPrime):
        field_new(6, 1)
    with pytest.raises(gf.DegreeZero):
        field_new(7, 0)
    with pytest.raises(gf.OrderOverflow):
        field_new(2, 40)
    with pytest.raises(gf.NotPrime):
        field_of_order(12)


def test_rejects_reducible_modulus():
    with pytest.raises(ValueError):
        Field(2, 2, [1, 0, 1])  # x^2 + 1 = (x+1)^2 over GF(2)


# ---------------------------------------------------------------------------
# arithmetic on pinned examples
# ---------------------------------------------------------------------------

def test_scalar_examples():
    f7 = field_new(7, 1)
    assert f7.add(3, 5) == 1
    assert f7.mul(3, 5) == 1
    assert f7.inv(3) == 5
    assert f7.neg(3) == 4

    f2 = field_new(2, 1)
    assert f2.add(1, 1) == 0
    assert f2.inv(1) == 1

    f4 = field_new(2, 2)
    x = f4.element([0, 1])
    x1 = f4.element([1, 1])
    assert f4.add(x, x1) == 1
    # reduce x*x by the modulus with a polynomial-division oracle
    expect = poly_division_reduce([0, 0, 1], list(f4.modulus), 2)
    assert f4.coeffs(f4.mul(x, x)) == tuple(expect)
    assert f4.mul(x, x) == x1


def test_gf9_inverses_exhaustive():
    f = field_new(3, 2)
    for a in range(1, 9):
        assert f.mul(a, f.inv(a)) == 1
    with pytest.raises(gf.ZeroInverse):
        f.inv(0)


def test_neg_characteristic_two():
    f = field_new(2, 3)
    for a in f.elements():
        assert f.neg(a) == a
        assert f.add(a, f.neg(a)) == 0


def test_gf9_additive_inverses():
    f = field_new(3, 2)
    for a in f.elements():
        assert f.add(a, f.neg(a)) == 0


# ---------------------------------------------------------------------------
# field axioms, exhaustive over all triples (vectorized)
# ---------------------------------------------------------------------------

AXIOM_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2),
                (2, 4), (5, 2), (3, 3), (2, 5), (7, 2), (2, 6), (3, 4),
                (11, 2), (5, 3), (127, 1), (2, 7)]


@pytest.mark.parametrize("p,h", AXIOM_FIELDS)
def test_field_axioms_exhaustive(p, h):
    f = field_new(p, h)
    q = f.q
    a = np.arange(q)[:, None, None]
    b = np.arange(q)[None, :, None]
    c = np.arange(q)[None, None, :]
    assert (f.add_arr(a, b) == f.add_arr(b, a)).all()
    assert (f.mul_arr(a, b) == f.mul_arr(b, a)).all()
    assert (f.add_arr(f.add_arr(a, b), c) == f.add_arr(a, f.add_arr(b, c))).all()
    assert (f.mul_arr(f.mul_arr(a, b), c) == f.mul_arr(a, f.mul_arr(b, c))).all()
    assert (f.mul_arr(a, f.add_arr(b, c))
            == f.add_arr(f.mul_arr(a, b), f.mul_arr(a, c))).all()
    e = np.arange(q)
    assert (f.add_arr(e, np.zeros(q, dtype=int)) == e).all()
    assert (f.mul_arr(e, np.ones(q, dtype=int)) == e).all()
    assert (f.add_arr(e, f.neg_arr(e)) == 0).all()
    nz = np.arange(1, q)
    assert (f.mul_arr(nz, f.inv_arr(nz)) == 1).all()


@pytest.mark.parametrize("p,h", AXIOM_FIELDS)
def test_multiplicative_group_order(p, h):
    f = field_new(p, h)
    for a in range(1, f.q):
        assert f.pow(a, f.q - 1) == 1


@pytest.mark.parametrize("p,h", [(2, 1), (3, 2), (2, 4), (5, 2), (13, 1)])
def test_coeff_roundtrip(p, h):
    f = field_new(p, h)
    for a in f.elements():
        assert f.element(f.coeffs(a)) == a


def test_scalar_and_vector_ops_agree():
    for p, h in [(3, 2), (2, 3), (5, 1), (2, 4)]:
        f = field_new(p, h)
        q = f.q
        a = np.repeat(np.arange(q), q)
        b = np.tile(np.arange(q), q)
        add_v = f.add_arr(a, b)
        mul_v = f.mul_arr(a, b)
        for i in range(q * q):
            assert add_v[i] == f.add(int(a[i]), int(b[i]))
            assert mul_v[i] == f.mul(int(a[i]), int(b[i]))


def test_modulus_irreducibility_reverified():
    for p, h in AXIOM_FIELDS:
        f = field_new(p, h)
        if h == 1:
            continue
        assert gf.is_irreducible(list(f.modulus), p)
        # no roots in GF(p)
        for r in range(p):
            val = sum(c * r**i for i, c in enumerate(f.modulus)) % p
            assert val != 0


def test_prime_power_factoring():
    assert gf.factor_prime_power(8192) == (2, 13)
    assert gf.factor_prime_power(6561) == (3, 8)
    assert gf.factor_prime_power(9109) == (9109, 1)
    assert gf.factor_prime_power(6) is None
    assert gf.factor_prime_power(1) is None
