"""Projection decoding of the constructed binary codes.

``decode`` corrects every error pattern of weight at most 3 and otherwise
reports failure (bounded-distance decoding; no maximum-likelihood
fallback).  The received word is viewed as a 4 x m array.  Let p be the
number of columns whose parity disagrees with the majority; since at most
three columns can be hit, the majority parity is the parity pi of the
transmitted word's columns.  The expected first-row parity rho is pi for
construction O and even for construction E, so delta = observed first-row
parity XOR rho tells how many first-row errors occurred (mod 2).

The syndrome s of the projected word then locates the non-first-row
errors.  Branches, by p:

  p=0: a.i   s = 0, clean word
       a.ii  s = e_i H_i: two errors in column i
  p=1: b.i.1 s = 0, delta = 1: single error in the first entry of column i
       b.i.2 s = 0, delta = 0: three errors in rows 2-4 of column i
       b.ii  s = e_i H_i: one (delta=0) or three (delta=1) errors in col i
       b.iii s = e_j H_j, j != i: two errors in column j, one first-entry
             error in column i
       b.iv  s = e_i H_i + e_j H_j, both nonzero: one non-first-row error
             in column i plus two errors in column j
  p=2: c.i   s = 0: first-entry errors in both minority columns
       c.ii  s = e_i H_i: non-first-row error in minority column i,
             first-entry error in the other minority column
       c.iii s = e_i H_i + e_j H_j: non-first-row errors in both
  p=3: d.i - d.iv: s = sum over the three minority columns, split by how
       many coefficients are nonzero (zero coefficient = first-entry
       error, nonzero = non-first-row error in that column)

A corrected column is the unique coset member with the repaired value and
majority parity whose first bit keeps the whole first row at parity rho
(minority columns with a nonzero coefficient carry exactly one
non-first-row error, so they keep their first bit and sit at distance 1).
Any inconsistency - p > 3, a parity tie, an undecomposable syndrome, or a
delta that contradicts the branch - is a failure.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf4
from .bitlin import BinaryLinearCode
from .projection import (NIBBLE_VALUE, CodewordArray, ParityProfile, Variant,
                         construct, select_candidate)
from .quaternary import QuaternaryCode, _unpack_syndrome

FAIL_PARITY = "parity-inconsistent"
FAIL_UNCORRECTABLE = "uncorrectable"

BRANCHES = ("a.i", "a.ii", "b.i.1", "b.i.2", "b.ii", "b.iii", "b.iv",
            "c.i", "c.ii", "c.iii", "d.i", "d.ii", "d.iii", "d.iv")


@dataclass(frozen=True)
class DecodeTrace:
    """How a successful decode arrived at its answer."""
    profile: ParityProfile
    syndrome: tuple[int, int, int, int]
    branch: str
    corrections: tuple[tuple[int, int, int], ...]  # (column, old, new)
    error_weight: int


@dataclass(frozen=True)
class DecodeOutcome:
    ok: bool
    codeword: int | None = None
    error: int | None = None
    trace: DecodeTrace | None = None
    reason: str | None = None


class DecoderContext:
    """Precomputed tables for decoding one (quaternary code, variant) pair."""

    def __init__(self, c4: QuaternaryCode, variant: Variant):
        self.c4 = c4
        self.variant = variant
        self.binary_code: BinaryLinearCode = construct(c4, variant)
        m = c4.m
        self.m = m
        self.n = 4 * m
        self.first_row_mask = int("1000" * m, 2)
        self.col_parity_mask = int("0001" * m, 2)
        # packed GF(4) syndrome of the projection, one table per byte of
        # the received word: bit q (LSB order) is row (n-q-1) % 4 ... of
        # column ceil((n-q)/4); rows 2-4 contribute label * H_col.
        unit = [0] * self.n
        for q in range(self.n):
            coord = self.n - q
            col = (coord + 3) // 4
            label = (0, gf4.ONE, gf4.OMEGA, gf4.OMEGA_BAR)[(coord - 1) % 4]
            if label:
                unit[q] = c4._colmul[col][label]
        tables = []
        for b in range((self.n + 7) // 8):
            t = [0] * 256
            for v in range(1, 256):
                low = v & -v
                q = 8 * b + low.bit_length() - 1
                t[v] = t[v ^ low] ^ (unit[q] if q < self.n else 0)
            tables.append(t)
        self._synd_tables = tables
        self._profiles: dict[int, tuple] = {}

    def syndrome_packed(self, word: int) -> int:
        s = 0
        for b, table in enumerate(self._synd_tables):
            s ^= table[(word >> (8 * b)) & 255]
        return s

    def _col_info(self, word: int):
        """(column parity bits, y_odd, p, majority, minority cols) cached
        on the parity pattern."""
        t = word ^ (word >> 2)
        colbits = (t ^ (t >> 1)) & self.col_parity_mask
        info = self._profiles.get(colbits)
        if info is None:
            m = self.m
            y_odd = colbits.bit_count()
            y_even = m - y_odd
            p = min(y_odd, y_even)
            if y_odd == y_even:
                majority = None
            else:
                majority = 1 if y_odd > y_even else 0
            pars = tuple((colbits >> (4 * (m - i))) & 1
                         for i in range(1, m + 1))
            minority = tuple(i for i, par in enumerate(pars, 1)
                             if par != majority)
            info = (pars, y_odd, y_even, p, majority, minority)
            self._profiles[colbits] = info
        return info

    def column_of(self, word: int, i: int) -> int:
        return (word >> (4 * (self.m - i))) & 15


def apply_column_correction(arr: CodewordArray, i: int, value: int,
                            target_parity: int,
                            expected_first_row_parity: int) -> CodewordArray:
    """Replace column i with the coset member of ``value`` and
    ``target_parity`` whose first bit brings the array's first row to
    ``expected_first_row_parity`` (other planned corrections are the
    caller's business)."""
    first = 0
    for nib in arr.columns:
        first ^= nib >> 3
    old = arr.column(i)
    delta = first ^ expected_first_row_parity
    return arr.replace(i, select_candidate(value, target_parity,
                                           (old >> 3) ^ delta))


def _fail(reason: str) -> DecodeOutcome:
    return DecodeOutcome(ok=False, reason=reason)


def decode(ctx: DecoderContext, received: int) -> DecodeOutcome:
    """Bounded-distance projection decoding of a length-n word."""
    n, m = ctx.n, ctx.m
    if received >> n:
        raise ValueError(f"word does not fit in {n} bits")
    pars, y_odd, y_even, p, majority, minority = ctx._col_info(received)
    if p > 3 or majority is None:
        return _fail(FAIL_PARITY)
    pi = majority
    rho = pi if ctx.variant is Variant.O else 0
    f = (received & ctx.first_row_mask).bit_count() & 1
    delta = f ^ rho
    s8 = ctx.syndrome_packed(received)
    single = ctx.c4._single
    colmul = ctx.c4._colmul

    # corrections: (column, new nibble) after the forced/free first-bit
    # bookkeeping described in the module docstring
    def col(i: int) -> int:
        return (received >> (4 * (m - i))) & 15

    def candidate(i: int, e: int, first_flip: int) -> tuple[int, int]:
        old = col(i)
        value = NIBBLE_VALUE[old] ^ e
        return i, select_candidate(value, pi, (old >> 3) ^ first_flip)

    plan: list[tuple[int, int]] = []
    if p == 0:
        if s8 == 0:
            if delta:
                return _fail(FAIL_UNCORRECTABLE)
            branch = "a.i"
        else:
            hit = single.get(s8)
            if hit is None:
                return _fail(FAIL_UNCORRECTABLE)
            branch = "a.ii"
            plan.append(candidate(hit[0], hit[1], delta))
    elif p == 1:
        i = minority[0]
        if s8 == 0:
            if delta:
                branch = "b.i.1"
                plan.append((i, col(i) ^ 0b1000))
            else:
                branch = "b.i.2"
                plan.append((i, col(i) ^ 0b0111))
        else:
            hit = single.get(s8)
            if hit is not None and hit[0] == i:
                branch = "b.ii"
                plan.append(candidate(i, hit[1], delta))
            elif hit is not None:
                branch = "b.iii"
                plan.append((i, col(i) ^ 0b1000))
                plan.append(candidate(hit[0], hit[1], delta ^ 1))
            else:
                ci = colmul[i]
                for e_i in gf4.NONZERO:
                    hit = single.get(s8 ^ ci[e_i])
                    if hit is not None:
                        break
                else:
                    return _fail(FAIL_UNCORRECTABLE)
                branch = "b.iv"
                plan.append(candidate(i, e_i, 0))
                plan.append(candidate(hit[0], hit[1], delta))
    elif p == 2:
        i, j = minority
        if s8 == 0:
            if delta:
                return _fail(FAIL_UNCORRECTABLE)
            branch = "c.i"
            plan.append((i, col(i) ^ 0b1000))
            plan.append((j, col(j) ^ 0b1000))
        else:
            hit = single.get(s8)
            if hit is not None and hit[0] in (i, j):
                if not delta:
                    return _fail(FAIL_UNCORRECTABLE)
                branch = "c.ii"
                other = j if hit[0] == i else i
                plan.append(candidate(hit[0], hit[1], 0))
                plan.append((other, col(other) ^ 0b1000))
            else:
                if delta:
                    return _fail(FAIL_UNCORRECTABLE)
                sol = ctx.c4._pair_table(i, j).get(s8)
                if sol is None or 0 in sol:
                    return _fail(FAIL_UNCORRECTABLE)
                branch = "c.iii"
                plan.append(candidate(i, sol[0], 0))
                plan.append(candidate(j, sol[1], 0))
    else:
        i, j, k = minority
        pair = ctx.c4._pair_table(j, k)
        ci = colmul[i]
        for e_i in gf4.ELEMENTS:
            hit = pair.get(s8 ^ ci[e_i])
            if hit is not None:
                break
        else:
            return _fail(FAIL_UNCORRECTABLE)
        coeffs = ((i, e_i), (j, hit[0]), (k, hit[1]))
        zeros = sum(1 for _, e in coeffs if e == 0)
        if (zeros & 1) != delta:
            return _fail(FAIL_UNCORRECTABLE)
        branch = ("d.iv", "d.iii", "d.ii", "d.i")[zeros]
        for c, e in coeffs:
            if e == 0:
                plan.append((c, col(c) ^ 0b1000))
            else:
                plan.append(candidate(c, e, 0))

    diff = 0
    for c, new in plan:
        diff |= (col(c) ^ new) << (4 * (m - c))
    decoded = received ^ diff
    weight = diff.bit_count()
    if weight > 3 or decoded not in ctx.binary_code:
        return _fail(FAIL_UNCORRECTABLE)

    profile = ParityProfile(column_parities=pars, first_row_parity=f,
                            y_odd=y_odd, y_even=y_even, p=p)
    trace = DecodeTrace(
        profile=profile,
        syndrome=_unpack_syndrome(s8),
        branch=branch,
        corrections=tuple((c, col(c), new) for c, new in plan),
        error_weight=weight,
    )
    return DecodeOutcome(ok=True, codeword=decoded, error=diff, trace=trace)
