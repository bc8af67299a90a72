"""The three automatic 0/1 sequences: Thue-Morse, regular paperfolding, Cantor."""
from __future__ import annotations

from enum import Enum


class SequenceKind(str, Enum):
    THUE_MORSE = "thue-morse"
    PAPERFOLDING = "paperfolding"
    CANTOR = "cantor"

    @classmethod
    def parse(cls, name: str) -> "SequenceKind":
        key = name.strip().lower().replace("_", "-")
        aliases = {"thuemorse": "thue-morse", "tm": "thue-morse", "rpf": "paperfolding"}
        key = aliases.get(key.replace("-", ""), key)
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown sequence kind {name!r}") from None


def thue_morse(n: int) -> int:
    # parity of the binary digit sum
    return bin(n).count("1") & 1


def paperfolding(n: int) -> int:
    # u_{2n+1} = u_n: drop trailing 1-bits, then the index is 0 or 2 mod 4
    while n & 1:
        n >>= 1
    return 1 if n & 3 == 0 else 0


def cantor(n: int) -> int:
    while n:
        n, digit = divmod(n, 3)
        if digit == 1:
            return 0
    return 1


_BIT = {
    SequenceKind.THUE_MORSE: thue_morse,
    SequenceKind.PAPERFOLDING: paperfolding,
    SequenceKind.CANTOR: cantor,
}


def bit(kind: SequenceKind | str, n: int) -> int:
    """Return the n-th term (0 or 1) of the sequence ``kind``."""
    if n < 0:
        raise ValueError("index must be non-negative")
    if not isinstance(kind, SequenceKind):
        kind = SequenceKind.parse(kind)
    return _BIT[kind](n)


def prefix(kind: SequenceKind | str, length: int) -> list[int]:
    """First ``length`` terms of the sequence."""
    if length < 1:
        raise ValueError("prefix length must be at least 1")
    if not isinstance(kind, SequenceKind):
        kind = SequenceKind.parse(kind)
    f = _BIT[kind]
    return [f(n) for n in range(length)]


class BitSequence:
    """Lazy view of one of the three sequences; supports indexing and slicing."""

    def __init__(self, kind: SequenceKind | str):
        self.kind = kind if isinstance(kind, SequenceKind) else SequenceKind.parse(kind)
        self._f = _BIT[self.kind]

    def __getitem__(self, n):
        if isinstance(n, slice):
            if n.stop is None:
                raise ValueError("open-ended slice of an infinite sequence")
            return [self._f(i) for i in range(*n.indices(n.stop))]
        return bit(self.kind, n)

    def __repr__(self) -> str:
        return f"BitSequence({self.kind.value!r})"
