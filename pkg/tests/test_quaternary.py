from __future__ import annotations

import itertools

import pytest

from projcode import gf4
from projcode.quaternary import (QuaternaryCode, _pack_syndrome,
                                 _unpack_syndrome, c4_9, c4_10,
                                 format_gf4_matrix, parse_gf4_matrix)

from golden import DECODE_EXAMPLES, QDIST_9, QDIST_10


def test_parameters(q9, q10):
    assert (q9.m, q9.r) == (9, 10)
    assert (q10.m, q10.r) == (10, 12)


def test_factories_are_cached():
    assert c4_9() is c4_9()
    assert c4_10() is c4_10()


@pytest.mark.parametrize("code", [c4_9(), c4_10()], ids=lambda c: c.name)
def test_generators_satisfy_parity_check(code):
    for g in code.generators:
        assert g in code
        assert code.syndrome(g) == (0, 0, 0, 0)


@pytest.mark.parametrize("code", [c4_9(), c4_10()], ids=lambda c: c.name)
def test_closed_under_gf4_scaling(code):
    # additive span + scaling closure on a basis = GF(4)-linearity
    for g in code.generators:
        for e in gf4.NONZERO:
            assert gf4.scale(e, g) in code


@pytest.mark.parametrize("code", [c4_9(), c4_10()], ids=lambda c: c.name)
def test_conjugate_code_differs(code):
    # the conjugated generators do not all stay inside the code, so the
    # code and its conjugate are genuinely different (inequivalent duals)
    assert any(tuple(map(gf4.conj, g)) not in code for g in code.generators)


def test_weight_distributions(q9, q10):
    wd9 = {i: c for i, c in enumerate(q9.weight_distribution()) if c}
    wd10 = {i: c for i, c in enumerate(q10.weight_distribution()) if c}
    assert wd9 == QDIST_9
    assert wd10 == QDIST_10
    assert sum(wd9.values()) == 1 << q9.r
    assert sum(wd10.values()) == 1 << q10.r
    assert q9.min_weight() == 4
    assert q10.min_weight() == 4


@pytest.mark.parametrize("code", [c4_9(), c4_10()], ids=lambda c: c.name)
def test_codewords_enumeration(code):
    words = list(code.codewords())
    assert len(words) == 1 << code.r
    assert len(set(words)) == len(words)
    assert all(len(w) == code.m for w in words)


def test_syndrome_of_worked_example_projections(q9, q10):
    for ex in DECODE_EXAMPLES.values():
        y = gf4.parse_vector(ex["projection"])
        code = q9 if len(y) == 9 else q10
        assert code.syndrome(y) == tuple(gf4.parse_vector(ex["syndrome"]))


def test_syndrome_rejects_wrong_length(q9):
    with pytest.raises(ValueError):
        q9.syndrome((0,) * 8)


@pytest.mark.parametrize("code", [c4_9(), c4_10()], ids=lambda c: c.name)
def test_low_weight_vectors_never_parity_check(code):
    # no vector of symbol weight 1..3 is in the null space: that is
    # exactly the any-three-columns-independent property the decoder needs
    m = code.m
    for w in (1, 2, 3):
        for positions in itertools.combinations(range(m), w):
            for values in itertools.product(gf4.NONZERO, repeat=w):
                y = [0] * m
                for pos, e in zip(positions, values):
                    y[pos] = e
                assert any(code.syndrome(y))


@pytest.mark.parametrize("code", [c4_9(), c4_10()], ids=lambda c: c.name)
def test_match_single_column_exhaustive(code):
    for i in range(1, code.m + 1):
        for e in gf4.NONZERO:
            y = [0] * code.m
            y[i - 1] = e
            assert code.match_single_column(code.syndrome(y)) == (i, e)
    assert code.match_single_column((0, 0, 0, 0)) is None


def test_match_single_column_rejects_double_errors(q9):
    # a sum of two distinct column multiples is never a single multiple
    for (i, j) in itertools.combinations(range(1, 10), 2):
        y = [0] * 9
        y[i - 1] = gf4.ONE
        y[j - 1] = gf4.OMEGA
        assert q9.match_single_column(q9.syndrome(y)) is None


@pytest.mark.parametrize("code", [c4_9(), c4_10()], ids=lambda c: c.name)
def test_solve_two_columns_exhaustive(code):
    for (i, j) in itertools.combinations(range(1, code.m + 1), 2):
        for a, b in itertools.product(gf4.ELEMENTS, repeat=2):
            y = [0] * code.m
            y[i - 1], y[j - 1] = a, b
            assert code.solve_columns(code.syndrome(y), (i, j)) \
                == {i: a, j: b}


def test_solve_three_columns_exhaustive(q9):
    for cols in itertools.combinations(range(1, 10), 3):
        for vals in itertools.product(gf4.ELEMENTS, repeat=3):
            y = [0] * 9
            for c, e in zip(cols, vals):
                y[c - 1] = e
            assert q9.solve_columns(q9.syndrome(y), cols) \
                == dict(zip(cols, vals))


def test_solve_columns_unsolvable(q9):
    # a pure column-4 multiple cannot be written on columns {1, 2}
    y = [0] * 9
    y[3] = gf4.OMEGA
    assert q9.solve_columns(q9.syndrome(y), (1, 2)) is None


def test_solve_columns_argument_checks(q9):
    s = (0, 0, 0, 0)
    with pytest.raises(ValueError):
        q9.solve_columns(s, (1, 2, 3, 4))
    with pytest.raises(ValueError):
        q9.solve_columns(s, ())
    with pytest.raises(ValueError):
        q9.solve_columns(s, (2, 2))


def test_column_accessor(q9):
    assert q9.column(1) == (1, 0, 0, 0)
    assert q9.column(9) == tuple(h[8] for h in q9.parity_check)


def test_constructor_rejects_bad_matrices(q9):
    g = q9.generators
    h = q9.parity_check
    with pytest.raises(ValueError):
        QuaternaryCode("bad", g, h[:3])          # not 4 parity rows
    with pytest.raises(ValueError):
        QuaternaryCode("bad", [g[0][:8]], h)     # ragged generator
    unit = tuple([1] + [0] * 8)
    with pytest.raises(ValueError):
        QuaternaryCode("bad", [unit], h)         # fails the parity check
    with pytest.raises(ValueError):
        QuaternaryCode("bad", (g[0], g[0]), h)   # broken w-pairing
    with pytest.raises(ValueError):
        QuaternaryCode("bad", g + g[:2], h)      # dependent rows


def test_syndrome_packing_round_trip():
    for s in itertools.product(range(4), repeat=4):
        assert _unpack_syndrome(_pack_syndrome(s)) == s


def test_parse_format_gf4_matrix(q9):
    text = format_gf4_matrix(q9.generators)
    assert parse_gf4_matrix(text) == list(q9.generators)
    assert parse_gf4_matrix("# note\n\n0 1\nw W\n") == [(0, 1), (2, 3)]
    with pytest.raises(ValueError):
        parse_gf4_matrix("0 1\nw\n")
    with pytest.raises(ValueError):
        parse_gf4_matrix("# only comments\n")
