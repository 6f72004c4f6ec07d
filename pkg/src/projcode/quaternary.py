"""The two additive GF(4) codes underlying the length-36/40 binary codes.

``c4_9()`` is a (9, 2^10) code and ``c4_10()`` a (10, 2^12) code, both of
minimum symbol weight 4.  Each is GF(4)-linear: generator row 2j is w
times row 2j-1, so the odd-indexed rows form a [9,5,4] resp. [10,6,4]
basis over GF(4).

Syndromes are taken with the plain (unconjugated) product y H^T.  The
4-row parity-check matrices have the property that any three columns are
linearly independent, which is what makes syndromes of up to three column
errors uniquely decomposable (``match_single_column``/``solve_columns``).
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from functools import lru_cache

from . import gf4
from .bitlin import rank

GF4Vector = tuple[int, ...]
Syndrome = tuple[int, int, int, int]


def _pack_syndrome(s: Sequence[int]) -> int:
    return (s[0] << 6) | (s[1] << 4) | (s[2] << 2) | s[3]


def _unpack_syndrome(v: int) -> Syndrome:
    return ((v >> 6) & 3, (v >> 4) & 3, (v >> 2) & 3, v & 3)


class QuaternaryCode:
    """An additive (m, 2^r) code over GF(4) with a 4-row parity check."""

    def __init__(self, name: str, generators: Sequence[GF4Vector],
                 parity_check: Sequence[GF4Vector]):
        self.name = name
        self.generators = tuple(tuple(g) for g in generators)
        self.parity_check = tuple(tuple(h) for h in parity_check)
        self.m = len(self.parity_check[0])
        self.r = len(self.generators)
        self._validate()
        # packed syndrome of e * H_i for every column i (1-based) and scalar e
        self._colmul: list[tuple[int, int, int, int]] = [(0, 0, 0, 0)]
        for i in range(1, self.m + 1):
            col = self.column(i)
            self._colmul.append(tuple(
                _pack_syndrome([gf4.mul(e, h) for h in col])
                for e in gf4.ELEMENTS))
        # syndrome -> (column, scalar) for all single-column multiples;
        # collision-free because any two columns are independent
        self._single: dict[int, tuple[int, int]] = {}
        for i in range(1, self.m + 1):
            for e in gf4.NONZERO:
                self._single[self._colmul[i][e]] = (i, e)
        self._pairs: dict[tuple[int, int], dict[int, tuple[int, int]]] = {}
        self._packed_gens = [gf4.pack(g) for g in self.generators]
        self._wdist: tuple[int, ...] | None = None

    def _validate(self) -> None:
        if len(self.parity_check) != 4:
            raise ValueError("expected a 4-row parity check")
        for h in self.parity_check:
            if len(h) != self.m:
                raise ValueError("ragged parity-check matrix")
        for g in self.generators:
            if len(g) != self.m:
                raise ValueError("ragged generator matrix")
            s = self.syndrome(g)
            if any(s):
                raise ValueError(
                    f"{self.name}: generator {gf4.format_vector(g)} fails "
                    f"the parity check (syndrome {gf4.format_vector(s)})")
        for j in range(0, self.r, 2):
            if gf4.scale(gf4.OMEGA, self.generators[j]) != self.generators[j + 1]:
                raise ValueError(
                    f"{self.name}: row {j + 2} is not w times row {j + 1}")
        packed = [gf4.pack(g) for g in self.generators]
        if rank(packed, 2 * self.m) != self.r:
            raise ValueError(f"{self.name}: generator rows are dependent")

    # -- basic queries -----------------------------------------------------

    def column(self, i: int) -> Syndrome:
        """Column i (1-based) of the parity-check matrix."""
        return tuple(h[i - 1] for h in self.parity_check)

    def syndrome(self, y: Sequence[int]) -> Syndrome:
        """y H^T with the plain product, as a 4-tuple."""
        if len(y) != self.m:
            raise ValueError(f"expected length {self.m}, got {len(y)}")
        return tuple(gf4.plain_inner(y, h) for h in self.parity_check)

    def __contains__(self, y: Sequence[int]) -> bool:
        return not any(self.syndrome(y))

    # -- syndrome decomposition --------------------------------------------

    def match_single_column(self, s: Sequence[int]) -> tuple[int, int] | None:
        """(i, e) with s = e H_i and e nonzero, or None."""
        return self._single.get(_pack_syndrome(s))

    def _pair_table(self, i: int, j: int) -> dict[int, tuple[int, int]]:
        """Packed syndrome of a H_i + b H_j -> (a, b), all 16 pairs."""
        key = (i, j)
        table = self._pairs.get(key)
        if table is None:
            ci, cj = self._colmul[i], self._colmul[j]
            table = {ci[a] ^ cj[b]: (a, b)
                     for a in gf4.ELEMENTS for b in gf4.ELEMENTS}
            self._pairs[key] = table
        return table

    def solve_columns(self, s: Sequence[int],
                      columns: Sequence[int]) -> dict[int, int] | None:
        """Coefficients {i: e_i} with s = sum e_i H_i over the given columns.

        Zero coefficients are allowed.  At most three columns are
        supported; the solution is unique when it exists because any
        three parity-check columns are independent.
        """
        cols = list(columns)
        packed = _pack_syndrome(s)
        if not 1 <= len(cols) <= 3:
            raise ValueError("solve_columns handles 1 to 3 columns")
        if len(cols) != len(set(cols)):
            raise ValueError("repeated column index")
        if len(cols) == 1:
            (i,) = cols
            for e in gf4.ELEMENTS:
                if self._colmul[i][e] == packed:
                    return {i: e}
            return None
        if len(cols) == 2:
            i, j = cols
            hit = self._pair_table(i, j).get(packed)
            if hit is None:
                return None
            return {i: hit[0], j: hit[1]}
        i, j, k = cols
        pair = self._pair_table(j, k)
        ci = self._colmul[i]
        for e in gf4.ELEMENTS:
            hit = pair.get(packed ^ ci[e])
            if hit is not None:
                return {i: e, j: hit[0], k: hit[1]}
        return None

    # -- weight distribution -----------------------------------------------

    def codewords(self) -> Iterable[GF4Vector]:
        """All 2^r codewords (GF(2) span of the generator rows)."""
        table = [0]
        for g in self._packed_gens:
            table += [v ^ g for v in table]
        for v in table:
            yield gf4.unpack(v, self.m)

    def weight_distribution(self) -> tuple[int, ...]:
        """(A_0, ..., A_m) over all 2^r codewords."""
        if self._wdist is None:
            nonzero_mask = int("01" * self.m, 2)
            table = [0]
            for g in self._packed_gens:
                table += [v ^ g for v in table]
            counts = [0] * (self.m + 1)
            for v in table:
                counts[((v | (v >> 1)) & nonzero_mask).bit_count()] += 1
            self._wdist = tuple(counts)
        return self._wdist

    def min_weight(self) -> int:
        dist = self.weight_distribution()
        return next(i for i in range(1, self.m + 1) if dist[i])

    def __repr__(self) -> str:
        return f"QuaternaryCode({self.name}, m={self.m}, r={self.r})"


_G9 = """
1 0 0 0 0 W 1 1 1
w 0 0 0 0 1 w w w
0 1 0 0 0 1 w W 0
0 w 0 0 0 w W 1 0
0 0 1 0 0 0 1 w W
0 0 w 0 0 0 w W 1
0 0 0 1 0 W W 0 1
0 0 0 w 0 1 1 0 w
0 0 0 0 1 1 w 1 1
0 0 0 0 w w W w w
"""

_H9 = """
1 0 0 0 1 1 W 0 1
0 1 0 0 1 0 w W 1
0 0 1 0 w W 1 w 1
0 0 0 1 1 W 0 1 W
"""

_G10 = """
1 0 0 0 0 0 w 0 w W
w 0 0 0 0 0 W 0 W 1
0 1 0 0 0 0 W 1 1 1
0 w 0 0 0 0 1 w w w
0 0 1 0 0 0 1 w W 0
0 0 w 0 0 0 w W 1 0
0 0 0 1 0 0 0 1 w W
0 0 0 w 0 0 0 w W 1
0 0 0 0 1 0 W W 0 1
0 0 0 0 w 0 1 1 0 w
0 0 0 0 0 1 1 w 1 1
0 0 0 0 0 w w W w w
"""

_H10 = """
1 0 0 0 1 1 W 0 1 W
0 1 0 0 1 0 w W 1 w
0 0 1 0 w W 1 w 1 0
0 0 0 1 1 W 0 1 W w
"""


def _parse_rows(text: str) -> list[GF4Vector]:
    return [gf4.parse_vector(line) for line in text.strip().splitlines()]


@lru_cache(maxsize=None)
def c4_9() -> QuaternaryCode:
    """The (9, 2^10) additive code with minimum weight 4."""
    return QuaternaryCode("c4-9", _parse_rows(_G9), _parse_rows(_H9))


@lru_cache(maxsize=None)
def c4_10() -> QuaternaryCode:
    """The (10, 2^12) additive code with minimum weight 4."""
    return QuaternaryCode("c4-10", _parse_rows(_G10), _parse_rows(_H10))


def parse_gf4_matrix(text: str) -> list[GF4Vector]:
    """One row of 0/1/w/W symbols per line; blanks and # lines skipped."""
    rows = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append(gf4.parse_vector(stripped))
    if not rows:
        raise ValueError("no matrix rows found")
    if len({len(r) for r in rows}) != 1:
        raise ValueError("ragged matrix")
    return rows


def format_gf4_matrix(rows: Iterable[GF4Vector]) -> str:
    return "\n".join(gf4.format_vector(r) for r in rows)
