"""Bitstring conventions, fixed project-wide.

A bitstring is a ``str`` of ``0``/``1`` characters. ``#u`` reads a
bitstring as a big-endian natural number; the empty string reads as 0.
"""

from __future__ import annotations

from typing import Iterator


def is_bitstring(s: str) -> bool:
    return isinstance(s, str) and all(c in "01" for c in s)


def require_bitstring(s: str) -> str:
    if not is_bitstring(s):
        raise ValueError("not a bitstring: %r" % (s,))
    return s


def to_nat(u: str) -> int:
    """Big-endian value of a bitstring; empty string is 0."""
    return int(u, 2) if u else 0


def from_nat(n: int, width: int) -> str:
    """Big-endian bitstring of n, zero-padded to the given width."""
    if width < 0 or n < 0 or n >= (1 << width):
        raise ValueError("value %d does not fit in %d bits" % (n, width))
    return format(n, "0%db" % width) if width > 0 else ""


def bitstrings(length: int) -> Iterator[str]:
    """All bitstrings of the given length in increasing big-endian order."""
    if length == 0:
        yield ""
        return
    for n in range(1 << length):
        yield format(n, "0%db" % length)


def numeral(n: int) -> str:
    """Minimal big-endian representation of a natural number (0 -> "0")."""
    if n < 0:
        raise ValueError("numeral of a negative number")
    return format(n, "b")
