from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from projcode import gf4

elements = st.sampled_from(gf4.ELEMENTS)


def test_addition_is_xor():
    assert gf4.add(gf4.OMEGA, gf4.OMEGA_BAR) == gf4.ONE
    assert gf4.add(gf4.ONE, gf4.OMEGA) == gf4.OMEGA_BAR
    for a in gf4.ELEMENTS:
        assert gf4.add(a, a) == 0


def test_multiplication_table():
    assert gf4.mul(gf4.OMEGA, gf4.OMEGA) == gf4.OMEGA_BAR
    assert gf4.mul(gf4.OMEGA, gf4.OMEGA_BAR) == gf4.ONE
    assert gf4.mul(gf4.OMEGA_BAR, gf4.OMEGA_BAR) == gf4.OMEGA
    for a in gf4.ELEMENTS:
        assert gf4.mul(a, 0) == 0
        assert gf4.mul(a, 1) == a


def test_field_axioms_exhaustive():
    for a, b, c in itertools.product(gf4.ELEMENTS, repeat=3):
        assert gf4.mul(a, b) == gf4.mul(b, a)
        assert gf4.mul(a, gf4.mul(b, c)) == gf4.mul(gf4.mul(a, b), c)
        assert gf4.mul(a, gf4.add(b, c)) == gf4.add(gf4.mul(a, b),
                                                    gf4.mul(a, c))
    # nonzero elements form a group of order 3
    for a in gf4.NONZERO:
        assert gf4.mul(a, gf4.mul(a, a)) == 1


def test_conjugation_is_squaring_automorphism():
    for a in gf4.ELEMENTS:
        assert gf4.conj(a) == gf4.mul(a, a)
        assert gf4.conj(gf4.conj(a)) == a
    for a, b in itertools.product(gf4.ELEMENTS, repeat=2):
        assert gf4.conj(gf4.mul(a, b)) == gf4.mul(gf4.conj(a), gf4.conj(b))
        assert gf4.conj(gf4.add(a, b)) == gf4.add(gf4.conj(a), gf4.conj(b))


def test_omega_bar_identities():
    w, wb = gf4.OMEGA, gf4.OMEGA_BAR
    assert gf4.add(w, 1) == wb          # W = w + 1
    assert gf4.mul(w, w) == wb          # W = w^2
    assert gf4.mul(w, wb) == 1


@given(st.lists(elements, min_size=1, max_size=12))
def test_hermitian_self_product_is_binary(xs):
    # x * conj(x) = x^3 is 0 or 1, so the Hermitian square counts
    # nonzero coordinates mod 2
    x = tuple(xs)
    assert gf4.hermitian_inner(x, x) == gf4.weight(x) & 1


@given(st.lists(elements, min_size=1, max_size=9), elements)
def test_scale_distributes_over_vadd(xs, c):
    x = tuple(xs)
    y = tuple(reversed(x))
    assert gf4.scale(c, gf4.vadd(x, y)) == gf4.vadd(gf4.scale(c, x),
                                                    gf4.scale(c, y))


def test_vector_length_mismatch():
    with pytest.raises(ValueError):
        gf4.vadd((0, 1), (0, 1, 2))
    with pytest.raises(ValueError):
        gf4.hermitian_inner((0,), (0, 1))


def test_parse_format_round_trip():
    text = "1 0 w W"
    vec = gf4.parse_vector(text)
    assert vec == (1, 0, 2, 3)
    assert gf4.format_vector(vec) == text
    assert gf4.parse_vector("10wW") == vec
    for a in gf4.ELEMENTS:
        assert gf4.parse_element(gf4.format_element(a)) == a


def test_parse_rejects_unknown_symbol():
    with pytest.raises(ValueError):
        gf4.parse_vector("1 0 x")


def test_pack_unpack_round_trip():
    vec = (1, 0, 2, 3, 3)
    assert gf4.unpack(gf4.pack(vec), 5) == vec
    # packed addition is XOR
    other = (2, 2, 0, 1, 3)
    assert gf4.pack(gf4.vadd(vec, other)) == gf4.pack(vec) ^ gf4.pack(other)
