"""Bit-packed representation of {2,3}-sequences.

One bit per symbol, 2 -> 0 and 3 -> 1, least-significant bit = LAST symbol.
With that orientation the numeric order of packed values equals lexicographic
order of the sequences (first symbol lands in the highest bit), a length-i
suffix is a mask, and concatenation is a shift-and-or.  Python ints carry the
bits so there is no hard length cap here; the fixed-width kernels in the
backend modules cap at 192 bits and punt back to this representation.
"""

from typing import Iterable, NamedTuple, Tuple

from .errors import EmptyInput, IndexOutOfRange


class PackedSeq(NamedTuple):
    bits: int
    len: int


def pack(seq: Iterable[int]) -> PackedSeq:
    """Pack a {2,3}-sequence. Raises EmptyInput / ValueError on bad input."""
    bits = 0
    n = 0
    for x in seq:
        if x == 2:
            bits <<= 1
        elif x == 3:
            bits = (bits << 1) | 1
        else:
            raise ValueError("packable sequences contain only 2 and 3, got %r" % (x,))
        n += 1
    if n == 0:
        raise EmptyInput("cannot pack empty sequence")
    return PackedSeq(bits, n)


def unpack(ps: PackedSeq) -> Tuple[int, ...]:
    bits, n = ps
    return tuple(2 + ((bits >> (n - 1 - j)) & 1) for j in range(n))


def from_string(text: str) -> PackedSeq:
    """Parse a string of '2'/'3' characters, e.g. '2323'."""
    return pack(int(ch) for ch in text.strip())


def to_string(ps: PackedSeq) -> str:
    return "".join(str(x) for x in unpack(ps))


def suffix(ps: PackedSeq, i: int) -> PackedSeq:
    """Length-i suffix, 1 <= i <= len."""
    if not 1 <= i <= ps.len:
        raise IndexOutOfRange("suffix length %d of a length-%d sequence" % (i, ps.len))
    return PackedSeq(ps.bits & ((1 << i) - 1), i)


def concat(a: PackedSeq, b: PackedSeq) -> PackedSeq:
    return PackedSeq((a.bits << b.len) | b.bits, a.len + b.len)
