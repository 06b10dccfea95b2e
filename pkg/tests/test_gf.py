import random
from itertools import product

import pytest

from schubertcells import gf
from schubertcells.errors import (
    DivisionByZero,
    NonPrimeCharacteristic,
    SpecMismatch,
    TooLarge,
    UnsupportedExtension,
)

SMALL_Q = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]
BIG_Q = [(2, 4), (5, 2), (3, 3), (2, 5)]


def test_prime_field_addition_wraps():
    F5 = gf.field_make(5, 1)
    assert (F5.from_int(2) + F5.from_int(3)).is_zero()


def test_gf4_reduction():
    # t * t reduces to t + 1 modulo t^2 + t + 1
    F4 = gf.field_make(2, 2)
    t = F4.from_coeffs([0, 1])
    assert t * t == F4.from_coeffs([1, 1])


def test_inverse_in_gf7():
    F7 = gf.field_make(7, 1)
    assert F7.from_int(3).inv() == F7.from_int(5)


def test_nonprime_characteristic_rejected():
    with pytest.raises(NonPrimeCharacteristic):
        gf.field_make(4, 1)
    with pytest.raises(NonPrimeCharacteristic):
        gf.field_make(1, 1)


def test_enumeration_order():
    F2 = gf.field_make(2, 1)
    assert [e.ix for e in gf.enumerate_field(F2)] == [0, 1]
    F3 = gf.field_make(3, 1)
    assert [str(e) for e in gf.enumerate_field(F3)] == ["0", "1", "2"]
    F4 = gf.field_make(2, 2)
    assert [str(e) for e in gf.enumerate_field(F4)] == ["0", "1", "t", "1+t"]
    assert gf.enumerate_field(F4)[0].is_zero()


@pytest.mark.parametrize("p,k", SMALL_Q)
def test_field_axioms_exhaustive(p, k):
    spec = gf.field_make(p, k)
    elems = gf.enumerate_field(spec)
    one = spec.one()
    for a, b, c in product(elems, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
    for a in elems:
        assert a + (-a) == spec.zero()
        if not a.is_zero():
            assert a * a.inv() == one


@pytest.mark.parametrize("p,k", BIG_Q)
def test_field_axioms_sampled(p, k):
    spec = gf.field_make(p, k)
    elems = gf.enumerate_field(spec)
    rng = random.Random(7)
    for _ in range(500):
        a, b, c = (rng.choice(elems) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        if not a.is_zero():
            assert a * a.inv() == spec.one()


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4), (5, 2), (3, 3), (2, 5)])
def test_multiplicative_group_order(p, k):
    spec = gf.field_make(p, k)
    for a in gf.enumerate_field(spec):
        if not a.is_zero():
            assert a ** (spec.q - 1) == spec.one()


def test_enumeration_is_complete_and_distinct():
    for p, k in SMALL_Q + BIG_Q:
        spec = gf.field_make(p, k)
        elems = gf.enumerate_field(spec)
        assert len(elems) == spec.q
        assert len(set(elems)) == spec.q


def test_spec_mismatch_is_an_error():
    a = gf.field_make(2, 1).one()
    b = gf.field_make(3, 1).one()
    with pytest.raises(SpecMismatch):
        a + b
    with pytest.raises(SpecMismatch):
        a * b


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        gf.field_make(5, 1).zero().inv()
    with pytest.raises(DivisionByZero):
        gf.field_make(2, 2).one() / gf.field_make(2, 2).zero()


def test_unsupported_extension_without_modulus():
    with pytest.raises(UnsupportedExtension):
        gf.field_make(2, 7)


def test_user_supplied_modulus():
    # t^7 + t + 1 is irreducible over GF(2)
    F128 = gf.field_make(2, 7, modulus=[1, 1, 0, 0, 0, 0, 0, 1])
    t = F128.from_coeffs([0, 1, 0, 0, 0, 0, 0])
    assert t ** 127 == F128.one()


def test_reducible_modulus_rejected():
    # t^2 + 1 = (t + 1)^2 over GF(2)
    with pytest.raises(UnsupportedExtension):
        gf.field_make(2, 2, modulus=[1, 0, 1])


def test_desk_scale_guard():
    with pytest.raises(TooLarge):
        gf.field_make(2, 17)


def test_factor_prime_power():
    assert gf.factor_prime_power(9) == (3, 2)
    assert gf.factor_prime_power(8) == (2, 3)
    assert gf.factor_prime_power(7) == (7, 1)
    with pytest.raises(ValueError):
        gf.factor_prime_power(6)
    with pytest.raises(ValueError):
        gf.factor_prime_power(1)


def test_string_rendering_gf9():
    F9 = gf.field_make(3, 2)
    strings = [str(e) for e in gf.enumerate_field(F9)]
    assert strings[:4] == ["0", "1", "2", "t"]
    assert "1+t" in strings and "2+2*t" in strings


def test_json_rendering_is_coefficient_arrays():
    F9 = gf.field_make(3, 2)
    e = F9.from_coeffs([2, 1])
    assert e.to_json() == [2, 1]
    F5 = gf.field_make(5, 1)
    assert F5.from_int(3).to_json() == [3]


def test_value_semantics_across_equal_specs():
    a = gf.field_make(3, 1).from_int(2)
    b = gf.field_make(3, 1).from_int(2)
    assert a == b and hash(a) == hash(b)
    assert a + b == gf.field_make(3, 1).from_int(1)


def test_ordering_follows_enumeration_index():
    F4 = gf.field_make(2, 2)
    elems = gf.enumerate_field(F4)
    assert sorted(reversed(elems)) == list(elems)


def test_builtin_moduli_cover_spec_table():
    for q in (4, 8, 9, 16, 25, 27, 32):
        p, k = gf.factor_prime_power(q)
        assert gf.field_make(p, k).q == q
