"""GF(4) arithmetic on 2-bit encoded elements.

Elements are plain ints 0..3 with the encoding 0 -> 00, 1 -> 01, w -> 10,
W -> 11, where w is a primitive element and W = w^2 = w + 1 its conjugate.
Addition is then bitwise XOR and conjugation swaps w and W.

Vectors are tuples of ints.  ``pack``/``unpack`` convert to a single int
(two bits per symbol, first symbol in the highest bits) so that vector
addition becomes integer XOR.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

ZERO = 0
ONE = 1
OMEGA = 2       # w
OMEGA_BAR = 3   # W = w^2 = w + 1

ELEMENTS = (ZERO, ONE, OMEGA, OMEGA_BAR)
NONZERO = (ONE, OMEGA, OMEGA_BAR)

# _MUL[a][b] = a*b.  w*w = W, w*W = 1, W*W = w.
_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)

_CONJ = (0, 1, 3, 2)

_SYMBOLS = "01wW"
_FROM_SYMBOL = {"0": 0, "1": 1, "w": 2, "W": 3}


def add(a: int, b: int) -> int:
    """Field addition (characteristic 2)."""
    return a ^ b


def mul(a: int, b: int) -> int:
    return _MUL[a][b]


def conj(a: int) -> int:
    """Conjugation a -> a^2 (fixes 0 and 1, swaps w and W)."""
    return _CONJ[a]


def vadd(x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    """Componentwise sum of two equal-length vectors."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return tuple(a ^ b for a, b in zip(x, y))


def scale(c: int, x: Sequence[int]) -> tuple[int, ...]:
    """Scalar multiple c*x."""
    row = _MUL[c]
    return tuple(row[a] for a in x)


def weight(x: Iterable[int]) -> int:
    """Number of nonzero coordinates."""
    return sum(1 for a in x if a)


def hermitian_inner(x: Sequence[int], y: Sequence[int]) -> int:
    """Hermitian inner product sum_i x_i * conj(y_i)."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    acc = 0
    for a, b in zip(x, y):
        acc ^= _MUL[a][_CONJ[b]]
    return acc


def plain_inner(x: Sequence[int], y: Sequence[int]) -> int:
    """Plain inner product sum_i x_i * y_i (no conjugation)."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    acc = 0
    for a, b in zip(x, y):
        acc ^= _MUL[a][b]
    return acc


def format_element(a: int) -> str:
    return _SYMBOLS[a]


def parse_element(token: str) -> int:
    try:
        return _FROM_SYMBOL[token]
    except KeyError:
        raise ValueError(f"not a GF(4) symbol: {token!r}") from None


def format_vector(x: Iterable[int], sep: str = " ") -> str:
    return sep.join(_SYMBOLS[a] for a in x)


def parse_vector(text: str) -> tuple[int, ...]:
    """Parse a vector of 0/1/w/W symbols, whitespace optional."""
    return tuple(parse_element(ch) for ch in text if not ch.isspace())


def pack(x: Sequence[int]) -> int:
    """Pack a vector into an int, two bits per symbol, leftmost highest."""
    v = 0
    for a in x:
        v = (v << 2) | a
    return v


def unpack(v: int, m: int) -> tuple[int, ...]:
    return tuple((v >> (2 * (m - j))) & 3 for j in range(1, m + 1))
