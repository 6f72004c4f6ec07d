"""Projection between binary length-4m words and GF(4) length-m words.

A binary word v of length 4m is viewed as a 4 x m array: column i holds
coordinates 4(i-1)+1 .. 4i, and the four rows are labelled with the field
elements 0, 1, w, W.  The projection of column i is the inner product of
the column with its row labels, i.e. rows 2-4 contribute 1, w, W when set.
Columns are stored as 4-bit nibbles with the row-0 entry in the top bit.

Two binary codes are built on top of a quaternary code C4:

* construction O: phi(C4) + d,  where phi doubles weights
  (0 -> 0000, 1 -> 0011, w -> 0101, W -> 0110) and d is spanned by the
  adjacent column-pair sums q_i + q_{i+1} plus one extra row
  (10001000...1000 for odd m, else 1000...0111);
* construction E: the same with the extra row swapped.

Both yield [4m, m+r] codes.  Codewords of O have first-row parity equal
to the common column parity; codewords of E always have an even first
row.  The 16 binary columns split into four cosets of {0000, 1111, 1000,
0111}, one per projected value; within a coset a column is pinned down by
its parity and first bit (``select_candidate``), which is what the
decoder uses to repair columns.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import gf4
from .bitlin import BinaryLinearCode, iter_span_chunks, popcount64
from .quaternary import QuaternaryCode


class Variant(enum.Enum):
    """Which extra generator the binary construction uses."""
    O = "O"
    E = "E"


# phi images indexed by field element, as nibbles (top bit = row 0)
PHI_BLOCKS = (0b0000, 0b0011, 0b0101, 0b0110)

# value of a nibble under the projection: rows 1, w, W contribute 1, w, W
NIBBLE_VALUE = tuple(
    (gf4.ONE if nib & 0b0100 else 0)
    ^ (gf4.OMEGA if nib & 0b0010 else 0)
    ^ (gf4.OMEGA_BAR if nib & 0b0001 else 0)
    for nib in range(16)
)

# the four columns projecting to each value: phi block + kernel of value map
COSETS = tuple(
    tuple(PHI_BLOCKS[v] ^ d for d in (0b0000, 0b1111, 0b1000, 0b0111))
    for v in range(4)
)

# [value][parity][first_bit] -> the unique matching column nibble
_CANDIDATE: list[list[list[int | None]]] = [
    [[None, None], [None, None]] for _ in range(4)]
for _v in range(4):
    for _nib in COSETS[_v]:
        _CANDIDATE[_v][_nib.bit_count() & 1][_nib >> 3] = _nib


def coset_of(value: int) -> tuple[int, int, int, int]:
    """The four column nibbles whose projection is ``value``."""
    return COSETS[value]


def select_candidate(value: int, parity: int, first_bit: int) -> int:
    """The unique column with the given projected value, parity, first bit."""
    return _CANDIDATE[value][parity & 1][first_bit & 1]


@dataclass(frozen=True)
class CodewordArray:
    """A binary word of length 4m arranged as m column nibbles."""
    columns: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.columns)

    def column(self, i: int) -> int:
        """Column i, 1-based."""
        return self.columns[i - 1]

    def replace(self, i: int, nibble: int) -> "CodewordArray":
        cols = list(self.columns)
        cols[i - 1] = nibble
        return CodewordArray(tuple(cols))


def to_array(word: int, n: int) -> CodewordArray:
    """Split a length-n (= 4m) word into column nibbles."""
    if n % 4:
        raise ValueError(f"length {n} is not a multiple of 4")
    m = n // 4
    return CodewordArray(tuple((word >> (4 * (m - i))) & 15
                               for i in range(1, m + 1)))


def from_array(arr: CodewordArray) -> int:
    word = 0
    for nib in arr.columns:
        word = (word << 4) | nib
    return word


def project(arr: CodewordArray) -> tuple[int, ...]:
    """Columnwise projection onto GF(4)."""
    return tuple(NIBBLE_VALUE[nib] for nib in arr.columns)


@dataclass(frozen=True)
class ParityProfile:
    """Column parities of an array plus the derived decoding quantities."""
    column_parities: tuple[int, ...]
    first_row_parity: int
    y_odd: int
    y_even: int
    p: int

    @property
    def majority_parity(self) -> int | None:
        """Parity shared by most columns; None on a tie."""
        if self.y_odd == self.y_even:
            return None
        return 1 if self.y_odd > self.y_even else 0

    @property
    def minority_columns(self) -> tuple[int, ...]:
        maj = self.majority_parity
        return tuple(i + 1 for i, par in enumerate(self.column_parities)
                     if par != maj)


def parity_profile(arr: CodewordArray) -> ParityProfile:
    pars = tuple(nib.bit_count() & 1 for nib in arr.columns)
    y_odd = sum(pars)
    first = 0
    for nib in arr.columns:
        first ^= nib >> 3
    return ParityProfile(
        column_parities=pars,
        first_row_parity=first,
        y_odd=y_odd,
        y_even=len(pars) - y_odd,
        p=min(y_odd, len(pars) - y_odd),
    )


def phi(x: tuple[int, ...]) -> int:
    """The weight-doubling embedding of a GF(4) vector, as a packed word."""
    word = 0
    for a in x:
        word = (word << 4) | PHI_BLOCKS[a]
    return word


def d_code_generators(m: int, variant: Variant) -> list[int]:
    """The m generators completing phi(C4) to the full binary code.

    m-1 adjacent pair sums q_i + q_{i+1} (q_i = 1111 in column i) plus one
    extra row: construction O takes 1000...1000 for odd m and 1000...0111
    for even m; construction E takes the other one.
    """
    rows = []
    for i in range(1, m):
        word = (0xF << (4 * (m - i))) | (0xF << (4 * (m - i - 1)))
        rows.append(word)
    d1 = int("1000" * m, 2)
    d2 = int("1000" * (m - 1) + "0111", 2)
    if variant is Variant.O:
        rows.append(d1 if m % 2 else d2)
    else:
        rows.append(d2 if m % 2 else d1)
    return rows


def construct(c4: QuaternaryCode, variant: Variant) -> BinaryLinearCode:
    """The [4m, m+r] binary code phi(C4) + d for the chosen variant."""
    rows = [phi(g) for g in c4.generators]
    rows += d_code_generators(c4.m, variant)
    return BinaryLinearCode(rows, 4 * c4.m)


def _syndrome_masks(c4: QuaternaryCode) -> list[int]:
    """Bit masks whose parities give the projected word's syndrome.

    Two masks (high bit, low bit of the GF(4) value) per parity-check row:
    masks[2t] and masks[2t+1] cover check row t.
    """
    m = c4.m
    masks = [0] * 8
    for t, hrow in enumerate(c4.parity_check):
        for i in range(1, m + 1):
            shift = 4 * (m - i)
            for label, bit in ((gf4.ONE, 2), (gf4.OMEGA, 1),
                               (gf4.OMEGA_BAR, 0)):
                g = gf4.mul(hrow[i - 1], label)
                if g & 2:
                    masks[2 * t] |= 1 << (shift + bit)
                if g & 1:
                    masks[2 * t + 1] |= 1 << (shift + bit)
    return masks


def has_projection(code: BinaryLinearCode, c4: QuaternaryCode,
                   variant: Variant) -> bool:
    """Check all 2^k codewords: projection lands in C4, columns share one
    parity, and the first row obeys the variant rule."""
    m = c4.m
    if code.n != 4 * m:
        return False
    col_mask = np.uint64(int("0001" * m, 2))
    first_mask = np.uint64(int("1000" * m, 2))
    all_odd = np.uint64(int("0001" * m, 2))
    synd_masks = [np.uint64(mask) for mask in _syndrome_masks(c4)]
    one = np.uint64(1)
    for chunk in code.codeword_chunks():
        t = chunk ^ (chunk >> np.uint64(2))
        colpar = (t ^ (t >> one)) & col_mask
        odd = colpar == all_odd
        even = colpar == np.uint64(0)
        if not np.all(odd | even):
            return False
        first = popcount64(chunk & first_mask) & one
        if variant is Variant.O:
            expected = odd.astype(np.uint64)
        else:
            expected = np.uint64(0)
        if not np.all(first == expected):
            return False
        for mask in synd_masks:
            if np.any(popcount64(chunk & mask) & one):
                return False
    return True


def render_array(arr: CodewordArray, changed: dict[int, int] | None = None,
                 show_projection: bool = True) -> str:
    """Labelled 4 x m table: row labels 0/1/w/W, one column per symbol.

    ``changed`` maps 1-based column indices to the previous nibble; bits
    that differ are marked with a trailing ``*``.
    """
    changed = changed or {}
    m = arr.m
    width = max(3, len(str(m)) + 1)
    header = "    |" + "".join(f"{i:>{width}}" for i in range(1, m + 1))
    lines = [header, "    +" + "-" * (width * m)]
    for row, label in enumerate("01wW"):
        cells = []
        for i in range(1, m + 1):
            nib = arr.column(i)
            bit = (nib >> (3 - row)) & 1
            old = changed.get(i)
            mark = "*" if old is not None and ((old >> (3 - row)) & 1) != bit \
                else " "
            cells.append(f"{bit}{mark}".rjust(width))
        lines.append(f"  {label} |" + "".join(cells))
    if show_projection:
        lines.append("    +" + "-" * (width * m))
        proj = project(arr)
        cells = "".join(f"{gf4.format_element(v):>{width}}" for v in proj)
        lines.append("    |" + cells)
    return "\n".join(lines)
