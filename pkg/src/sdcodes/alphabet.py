"""Arithmetic over the three characteristic-2 alphabets.

Every element is a 2-bit symbol:

    symbol   F2+uF2    F4
      0        0        0
      1        1        1
      2        u        w
      3       1+u      1+w

with the defining relations u^2 = 0 and w^2 = w + 1.  Symbol bit 0 is the
coefficient of 1 and symbol bit 1 the coefficient of u (resp. w), so
addition is XOR of symbols in every alphabet.  Multiplication tables are
generated at import time from the defining relations.

The Gray maps to bit pairs are

    F2+uF2:  a + bu          ->  (b, a+b)
    F4:      aw + b(1+w)     ->  (a, b)

and the Lee weight of an element is the Hamming weight of its Gray image.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


def _reduce_f2u(lo: int, hi: int, lolo: int, lohi: int, hilo: int, hihi: int) -> int:
    # (lo1 + hi1*u)(lo2 + hi2*u) with u^2 = 0
    a = lolo
    b = lohi ^ hilo
    return a | (b << 1)


def _reduce_f4(lo: int, hi: int, lolo: int, lohi: int, hilo: int, hihi: int) -> int:
    # (lo1 + hi1*w)(lo2 + hi2*w) with w^2 = w + 1
    a = lolo ^ hihi
    b = lohi ^ hilo ^ hihi
    return a | (b << 1)


def _make_mul_table(reduce_fn) -> np.ndarray:
    table = np.zeros((4, 4), dtype=np.uint8)
    for x in range(4):
        for y in range(4):
            lo1, hi1 = x & 1, x >> 1
            lo2, hi2 = y & 1, y >> 1
            table[x, y] = reduce_fn(
                lo1, hi1, lo1 & lo2, lo1 & hi2, hi1 & lo2, hi1 & hi2
            )
    return table


class Alphabet:
    """One of F2, F2+uF2 or F4, with its precomputed symbol tables."""

    __slots__ = ("name", "order", "mul_table", "gray_table", "lee_table")

    def __init__(self, name: str, order: int, mul_table: np.ndarray,
                 gray_table: tuple[tuple[int, int], ...] | None):
        self.name = name
        self.order = order
        mul_table = np.asarray(mul_table, dtype=np.uint8)
        mul_table.setflags(write=False)
        self.mul_table = mul_table
        self.gray_table = gray_table
        if gray_table is not None:
            lee = np.array([g0 + g1 for g0, g1 in gray_table], dtype=np.uint8)
            lee.setflags(write=False)
            self.lee_table = lee
        else:
            self.lee_table = None

    def __repr__(self) -> str:
        return f"Alphabet({self.name})"

    def check_syms(self, syms: np.ndarray) -> None:
        if syms.size and int(syms.max(initial=0)) >= self.order:
            raise ValueError(f"symbol out of range for {self.name}")


# F2 uses the same symbol machinery restricted to {0, 1}; its product table
# is the top-left corner of either 4x4 table.
F2 = Alphabet("f2", 2, _make_mul_table(_reduce_f2u)[:2, :2].copy(), None)
F2U = Alphabet("f2u", 4, _make_mul_table(_reduce_f2u),
               ((0, 0), (0, 1), (1, 1), (1, 0)))
F4 = Alphabet("f4", 4, _make_mul_table(_reduce_f4),
              ((0, 0), (1, 1), (1, 0), (0, 1)))

ALPHABETS = {a.name: a for a in (F2, F2U, F4)}


def get_alphabet(name: str) -> Alphabet:
    try:
        return ALPHABETS[name.lower()]
    except KeyError:
        raise ValueError(f"unknown alphabet {name!r}; expected f2, f2u or f4") from None


@dataclass(frozen=True)
class RingElement:
    """A single symbol of one alphabet."""

    alphabet: Alphabet
    sym: int

    def __post_init__(self):
        if not 0 <= self.sym < self.alphabet.order:
            raise ValueError(f"symbol {self.sym} out of range for {self.alphabet.name}")

    def __add__(self, other: "RingElement") -> "RingElement":
        return add(self, other)

    def __mul__(self, other: "RingElement") -> "RingElement":
        return mul(self, other)

    def __repr__(self) -> str:
        return f"{self.alphabet.name}:{self.sym}"


def _require_same(a: RingElement, b: RingElement) -> None:
    if a.alphabet is not b.alphabet:
        raise ValueError(f"alphabet mismatch: {a.alphabet.name} vs {b.alphabet.name}")


def add(a: RingElement, b: RingElement) -> RingElement:
    """Characteristic-2 sum: XOR of symbols."""
    _require_same(a, b)
    return RingElement(a.alphabet, a.sym ^ b.sym)


def mul(a: RingElement, b: RingElement) -> RingElement:
    """Product per the alphabet's defining relation."""
    _require_same(a, b)
    return RingElement(a.alphabet, int(a.alphabet.mul_table[a.sym, b.sym]))


def gray(a: RingElement) -> tuple[int, int]:
    """Gray image of one element as a bit pair."""
    if a.alphabet.gray_table is None:
        raise ValueError("Gray map is defined on the 4-element alphabets only")
    return a.alphabet.gray_table[a.sym]


def lee_weight(a: RingElement) -> int:
    """Hamming weight of the element's Gray image (0, 1 or 2)."""
    if a.alphabet.lee_table is None:
        raise ValueError("Lee weight is defined on the 4-element alphabets only")
    return int(a.alphabet.lee_table[a.sym])


def parse_syms(s: str, alphabet: Alphabet) -> np.ndarray:
    """Decode a symbol string ('0123', parentheses/whitespace ignored) to symbols."""
    cleaned = s.strip().strip("()").replace(" ", "").replace(",", "")
    out = np.empty(len(cleaned), dtype=np.uint8)
    for i, ch in enumerate(cleaned):
        if ch not in "0123":
            raise ValueError(f"illegal character {ch!r} in symbol string")
        v = ord(ch) - ord("0")
        if v >= alphabet.order:
            raise ValueError(f"symbol {ch} not valid over {alphabet.name}")
        out[i] = v
    return out


def format_syms(syms: Iterable[int]) -> str:
    return "".join(str(int(s)) for s in syms)


def parse_vector(s: str, alphabet: Alphabet) -> list[RingElement]:
    """Decode a symbol string to a list of elements; inverse of format_vector."""
    return [RingElement(alphabet, int(v)) for v in parse_syms(s, alphabet)]


def format_vector(v: Sequence[RingElement]) -> str:
    return format_syms(e.sym for e in v)


def vector_syms(v: Sequence[RingElement]) -> tuple[Alphabet, np.ndarray]:
    """Split a nonempty uniform-alphabet element sequence into (alphabet, symbols)."""
    if not v:
        raise ValueError("empty vector")
    alph = v[0].alphabet
    for e in v:
        if e.alphabet is not alph:
            raise ValueError("alphabet mismatch inside vector")
    return alph, np.array([e.sym for e in v], dtype=np.uint8)
