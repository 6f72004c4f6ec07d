"""Binary vectors, matrices and linear codes packed into ints.

A length-n bit vector is a plain int: coordinate 1 (leftmost in text form)
is the most significant of the n bits, so ``format_bits(v, n)`` prints the
vector the way a generator matrix row is written.  Matrices are lists of
row ints plus an explicit width.

Exhaustive codeword enumeration is vectorised with numpy on uint64 words
(n <= 64 is assumed throughout), which keeps full 2^22 sweeps cheap.
``CosetTable`` implements syndrome decoding by stored coset leaders and is
used as the ground-truth decoder in tests.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence

import numpy as np

_MAX_ENUM_K = 26         # refuse to enumerate more than 2^26 codewords
_MAX_TABLE_REDUNDANCY = 20   # refuse coset tables beyond 2^20 syndromes
_CHUNK_ROWS = 16         # enumeration chunk size: 2^16 words at a time


# ---------------------------------------------------------------------------
# text formats

def parse_bits(text: str) -> tuple[int, int]:
    """Parse a 0/1 string (spaces ignored) into (value, length)."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty bit string")
    if s.strip("01"):
        bad = next(c for c in s if c not in "01")
        raise ValueError(f"not a binary digit: {bad!r}")
    return int(s, 2), len(s)


def format_bits(v: int, n: int, group: int = 0) -> str:
    """Format ``v`` as an n-character 0/1 string, optionally space-grouped."""
    s = format(v, f"0{n}b")
    if group:
        s = " ".join(s[i:i + group] for i in range(0, n, group))
    return s


def parse_matrix(text: str) -> tuple[list[int], int]:
    """Parse a matrix: one row per line, 0/1 characters, spaces ignored.

    Blank lines and lines starting with ``#`` are skipped.  Returns
    (rows, n) and requires all rows to have equal length.
    """
    rows: list[int] = []
    n = None
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        v, width = parse_bits(stripped)
        if n is None:
            n = width
        elif width != n:
            raise ValueError(f"line {lineno}: row length {width} != {n}")
        rows.append(v)
    if n is None:
        raise ValueError("no matrix rows found")
    return rows, n


def format_matrix(rows: Iterable[int], n: int, group: int = 0) -> str:
    return "\n".join(format_bits(r, n, group) for r in rows)


# ---------------------------------------------------------------------------
# GF(2) elimination

def _rref_pivots(rows: Sequence[int], n: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns).

    Pivot columns are 0-based from the left (column c is bit n-1-c).
    """
    work = [r for r in rows]
    reduced: list[int] = []
    pivots: list[int] = []
    for col in range(n):
        bit = 1 << (n - 1 - col)
        src = next((i for i, r in enumerate(work) if r & bit), None)
        if src is None:
            continue
        piv = work.pop(src)
        work = [r ^ piv if r & bit else r for r in work]
        reduced = [r ^ piv if r & bit else r for r in reduced]
        reduced.append(piv)
        pivots.append(col)
        if not work:
            break
    return reduced, pivots


def rref(rows: Sequence[int], n: int) -> tuple[list[int], int]:
    """Reduced row echelon form over GF(2): (reduced rows, rank)."""
    reduced, pivots = _rref_pivots(rows, n)
    return reduced, len(pivots)


def rank(rows: Sequence[int], n: int) -> int:
    return rref(rows, n)[1]


def code_equal(a: "BinaryLinearCode", b: "BinaryLinearCode") -> bool:
    """True iff two codes have identical row spaces."""
    if a.n != b.n or a.k != b.k:
        return False
    return rank(list(a.generator) + list(b.generator), a.n) == a.k


# ---------------------------------------------------------------------------
# bulk enumeration helpers

def popcount64(words: np.ndarray) -> np.ndarray:
    return np.bitwise_count(words)


def xor_span(rows: Sequence[int]) -> np.ndarray:
    """All 2^len(rows) XOR combinations as a uint64 array (doubling)."""
    table = np.zeros(1, dtype=np.uint64)
    for r in rows:
        table = np.concatenate([table, table ^ np.uint64(r)])
    return table


def iter_span_chunks(rows: Sequence[int]) -> Iterator[np.ndarray]:
    """Yield the full XOR span of ``rows`` in uint64 chunks.

    The low _CHUNK_ROWS rows form a base table; one chunk per combination
    of the remaining rows.  Every combination appears exactly once.
    """
    base = xor_span(rows[:_CHUNK_ROWS])
    high = rows[_CHUNK_ROWS:]
    if not high:
        yield base
        return
    for hv in xor_span(high):
        yield base ^ hv


# ---------------------------------------------------------------------------
# syndrome helpers (shared by BinaryLinearCode and CosetTable)

def _unit_syndromes(parity_rows: Sequence[int], n: int) -> list[int]:
    """Syndrome of each unit vector, indexed by bit position (LSB = 0)."""
    out = []
    for q in range(n):
        s = 0
        for j, h in enumerate(parity_rows):
            if (h >> q) & 1:
                s |= 1 << j
        out.append(s)
    return out


def _byte_tables(unit_synd: Sequence[int], n: int) -> list[list[int]]:
    """Per-byte lookup tables so a syndrome costs ceil(n/8) indexings."""
    nbytes = (n + 7) // 8
    tables = []
    for b in range(nbytes):
        t = [0] * 256
        for v in range(1, 256):
            low = v & -v
            q = 8 * b + low.bit_length() - 1
            t[v] = t[v ^ low] ^ (unit_synd[q] if q < n else 0)
        tables.append(t)
    return tables


class BinaryLinearCode:
    """A binary [n, k] linear code given by k independent generator rows."""

    def __init__(self, rows: Sequence[int], n: int):
        self.n = n
        self.generator = tuple(rows)
        self.k = len(self.generator)
        reduced, pivots = _rref_pivots(self.generator, n)
        if len(pivots) != self.k:
            raise ValueError(
                f"generator rows are dependent: rank {len(pivots)} < {self.k}")
        self._reduced = reduced
        self._pivots = pivots
        self._parity_rows: tuple[int, ...] | None = None
        self._synd_tables: list[list[int]] | None = None
        self._wdist: tuple[int, ...] | None = None

    # -- encoding ----------------------------------------------------------

    def encode(self, message: int) -> int:
        """Multiply a k-bit message (MSB = first coordinate) by the generator."""
        if message >> self.k:
            raise ValueError(f"message does not fit in {self.k} bits")
        word = 0
        for i, row in enumerate(self.generator):
            if (message >> (self.k - 1 - i)) & 1:
                word ^= row
        return word

    # -- parity checks -----------------------------------------------------

    @property
    def parity_rows(self) -> tuple[int, ...]:
        """(n-k) parity-check rows derived from the reduced generator."""
        if self._parity_rows is None:
            pivot_set = set(self._pivots)
            free = [c for c in range(self.n) if c not in pivot_set]
            rows = []
            for fc in free:
                h = 1 << (self.n - 1 - fc)
                for i, pc in enumerate(self._pivots):
                    if (self._reduced[i] >> (self.n - 1 - fc)) & 1:
                        h |= 1 << (self.n - 1 - pc)
                rows.append(h)
            self._parity_rows = tuple(rows)
        return self._parity_rows

    def syndrome(self, word: int) -> int:
        if self._synd_tables is None:
            self._synd_tables = _byte_tables(
                _unit_syndromes(self.parity_rows, self.n), self.n)
        s = 0
        for b, table in enumerate(self._synd_tables):
            s ^= table[(word >> (8 * b)) & 255]
        return s

    def __contains__(self, word: int) -> bool:
        return self.syndrome(word) == 0

    # -- exhaustive enumeration --------------------------------------------

    def codeword_chunks(self) -> Iterator[np.ndarray]:
        if self.k > _MAX_ENUM_K:
            raise ValueError(f"k = {self.k} exceeds enumeration budget "
                             f"{_MAX_ENUM_K}")
        return iter_span_chunks(self.generator)

    def weight_distribution(self) -> tuple[int, ...]:
        """(A_0, ..., A_n) by enumerating all 2^k codewords."""
        if self._wdist is None:
            counts = np.zeros(self.n + 1, dtype=np.int64)
            for chunk in self.codeword_chunks():
                counts += np.bincount(popcount64(chunk),
                                      minlength=self.n + 1)
            self._wdist = tuple(int(c) for c in counts)
        return self._wdist

    def min_distance(self) -> int:
        dist = self.weight_distribution()
        return next(i for i in range(1, self.n + 1) if dist[i])


class CosetTable:
    """Coset leaders for every syndrome reachable by weight <= max_weight.

    Built by enumerating error patterns of weight 0, 1, 2, ... with
    positions in left-to-right order; the first pattern to reach a
    syndrome wins, so stored leaders are minimum-weight and ties resolve
    to the lexicographically smallest position tuple.
    """

    def __init__(self, code: BinaryLinearCode, max_weight: int = 3):
        if code.n - code.k > _MAX_TABLE_REDUNDANCY:
            raise ValueError(f"n-k = {code.n - code.k} exceeds table budget "
                             f"{_MAX_TABLE_REDUNDANCY}")
        self.code = code
        self.max_weight = max_weight
        n = code.n
        unit = _unit_syndromes(code.parity_rows, n)
        self._tables = _byte_tables(unit, n)
        # unit syndrome by 1-based coordinate (coordinate c is bit n-c)
        by_coord = [unit[n - c] for c in range(1, n + 1)]
        leaders: dict[int, int] = {0: 0}
        for w in range(1, max_weight + 1):
            for coords in itertools.combinations(range(1, n + 1), w):
                s = 0
                e = 0
                for c in coords:
                    s ^= by_coord[c - 1]
                    e |= 1 << (n - c)
                if s not in leaders:
                    leaders[s] = e
        self.leaders = leaders

    def syndrome(self, word: int) -> int:
        s = 0
        for b, table in enumerate(self._tables):
            s ^= table[(word >> (8 * b)) & 255]
        return s

    def decode(self, word: int) -> int | None:
        """Nearest codeword by coset leader, or None if the syndrome is
        outside the table (word further than max_weight from the code)."""
        leader = self.leaders.get(self.syndrome(word))
        if leader is None:
            return None
        return word ^ leader
