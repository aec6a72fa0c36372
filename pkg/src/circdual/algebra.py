"""Arithmetic for the three code alphabets F2, F3 and F2+uF2.

Ring elements are small integer codes and vectors are plain numpy
uint8 arrays paired with a Ring.  The codes are

    F2    0, 1
    F3    0, 1, 2
    F2+uF2    0 -> 0, 1 -> 1, 2 -> u, 3 -> 1+u

so that for F2+uF2 the element a+bu is stored as a + 2b and addition
is a bitwise XOR of codes.  All arithmetic goes through lookup tables,
which keeps hot loops branch-free and lets the ring axioms be checked
exhaustively.

Symbol alphabets match the integer codes: "0", "1" for F2, "0", "1",
"2" for F3 and "0", "1", "u", "3" for F2+uF2 (the symbol "3" denotes
1+u).  Vectors serialize as bare symbol strings like "331u";
parenthesized comma forms such as "(3,3,1,u)" or "(1,1+u,u)" are also
accepted on input.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "DomainError",
    "ParseError",
    "Ring",
    "F2",
    "F3",
    "F2U",
    "RINGS",
    "is_unit_square_one",
    "inner_product",
    "gray_map",
    "parse_symbols",
    "format_symbols",
]


class DomainError(ValueError):
    """Operand outside the ring, or incompatible shapes or rings."""


class ParseError(ValueError):
    """Bad symbol text; carries the offending position."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class Ring:
    """One of the supported alphabets, with table-driven arithmetic.

    Derived data (negation, units, inverses, characteristic) is
    computed from the addition and multiplication tables rather than
    hardcoded, so a wrong table cannot agree with its own metadata.
    """

    def __init__(self, kind, symbols, add_table, mul_table):
        self.kind = kind
        self.symbols = tuple(symbols)
        self.size = len(symbols)
        self.add_table = np.asarray(add_table, dtype=np.uint8)
        self.mul_table = np.asarray(mul_table, dtype=np.uint8)

        neg = np.zeros(self.size, dtype=np.uint8)
        for a in range(self.size):
            (zeros,) = np.nonzero(self.add_table[a] == 0)
            neg[a] = zeros[0]
        self.neg_table = neg

        inv = np.full(self.size, 255, dtype=np.uint8)
        for a in range(self.size):
            (ones,) = np.nonzero(self.mul_table[a] == 1)
            if ones.size:
                inv[a] = ones[0]
        self.inv_table = inv
        self.units = tuple(a for a in range(self.size) if inv[a] != 255)

        x, c = 1, 1
        while x != 0:
            x = int(self.add_table[x, 1])
            c += 1
        self.characteristic = c

        self._sym_to_code = {s: i for i, s in enumerate(self.symbols)}
        # addition is either XOR of codes (char 2) or addition mod size
        self._add_is_xor = all(
            self.add_table[a, b] == (a ^ b)
            for a in range(self.size)
            for b in range(self.size)
        )

    def __repr__(self):
        return f"Ring({self.kind})"

    # ---- element operations ------------------------------------------

    def check(self, a):
        a = int(a)
        if not 0 <= a < self.size:
            raise DomainError(f"{a} is not an element code of {self.kind}")
        return a

    def add(self, a, b):
        return int(self.add_table[self.check(a), self.check(b)])

    def mul(self, a, b):
        return int(self.mul_table[self.check(a), self.check(b)])

    def neg(self, a):
        return int(self.neg_table[self.check(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_unit(self, a):
        return self.inv_table[self.check(a)] != 255

    def inv(self, a):
        if not self.is_unit(a):
            raise DomainError(f"{self.format_element(a)} is not a unit in {self.kind}")
        return int(self.inv_table[a])

    def format_element(self, a):
        return self.symbols[self.check(a)]

    # ---- vectors -------------------------------------------------------

    def vector(self, entries):
        """Copy `entries` into a validated uint8 vector over this ring."""
        x = np.asarray(entries, dtype=np.uint8).copy()
        self.validate(x)
        return x

    def validate(self, x):
        if x.size and int(x.max()) >= self.size:
            bad = int(x.max())
            raise DomainError(f"entry {bad} is not an element code of {self.kind}")
        return x

    def vec_sum(self, arr, axis=None):
        """Ring sum of an array along `axis` (XOR for char 2, mod 3 for F3)."""
        if self._add_is_xor:
            return np.bitwise_xor.reduce(arr, axis=axis)
        return (arr.sum(axis=axis, dtype=np.int64) % self.size).astype(np.uint8)


def _build_f2():
    add = [[a ^ b for b in range(2)] for a in range(2)]
    mul = [[a & b for b in range(2)] for a in range(2)]
    return Ring("F2", "01", add, mul)


def _build_f3():
    add = [[(a + b) % 3 for b in range(3)] for a in range(3)]
    mul = [[(a * b) % 3 for b in range(3)] for a in range(3)]
    return Ring("F3", "012", add, mul)


def _build_f2u():
    # (a1+b1*u)(a2+b2*u) = a1*a2 + (a1*b2 + b1*a2)*u with u^2 = 0
    def mul1(x, y):
        a1, b1 = x & 1, x >> 1
        a2, b2 = y & 1, y >> 1
        return (a1 & a2) | ((((a1 & b2) ^ (b1 & a2)) & 1) << 1)

    add = [[a ^ b for b in range(4)] for a in range(4)]
    mul = [[mul1(a, b) for b in range(4)] for a in range(4)]
    return Ring("F2U", "01u3", add, mul)


F2 = _build_f2()
F3 = _build_f3()
F2U = _build_f2u()
RINGS = {"F2": F2, "F3": F3, "F2U": F2U}

# extra spellings accepted when parsing comma-separated vectors
_TOKEN_ALIASES = {"F2U": {"1+u": 3, "u+1": 3}}


def is_unit_square_one(ring, c):
    """True iff c is invertible and c*c = 1."""
    return bool(ring.is_unit(c)) and ring.mul(c, c) == 1


def inner_product(ring, x, y):
    """Euclidean inner product, the componentwise product summed in the ring."""
    x = np.asarray(x, dtype=np.uint8)
    y = np.asarray(y, dtype=np.uint8)
    if x.shape != y.shape:
        raise DomainError(f"length mismatch: {x.shape} vs {y.shape}")
    ring.validate(x)
    ring.validate(y)
    if x.size == 0:
        return 0
    return int(ring.vec_sum(ring.mul_table[x, y]))


def gray_map(ring, x):
    """Binary image of a vector over F2+uF2.

    Writing x = a + bu with binary a, b, returns the concatenation
    (b, a+b) as a vector over F2 of twice the length.  The map is
    additive and preserves duality.
    """
    if ring is not F2U:
        raise DomainError(f"gray_map is defined over F2U, not {ring.kind}")
    x = ring.validate(np.asarray(x, dtype=np.uint8))
    a = x & 1
    b = x >> 1
    return np.concatenate([b, a ^ b]).astype(np.uint8)


def parse_symbols(text, ring):
    """Decode a symbol string into a vector over `ring`.

    Accepts the bare form ("331u") and the parenthesized comma form
    ("(3,3,1,u)"); for F2+uF2 the token "1+u" is an alias for "3".
    """
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        tokens = [t.strip() for t in s[1:-1].split(",")]
    elif "," in s:
        tokens = [t.strip() for t in s.split(",")]
    else:
        tokens = list(s)
    aliases = _TOKEN_ALIASES.get(ring.kind, {})
    out = np.empty(len(tokens), dtype=np.uint8)
    for i, tok in enumerate(tokens):
        if tok in ring._sym_to_code:
            out[i] = ring._sym_to_code[tok]
        elif tok in aliases:
            out[i] = aliases[tok]
        else:
            raise ParseError(
                f"unknown symbol {tok!r} for {ring.kind} at position {i}", position=i
            )
    return out


def format_symbols(ring, x):
    """Canonical bare symbol string for a vector (inverse of parse_symbols)."""
    x = ring.validate(np.asarray(x, dtype=np.uint8))
    return "".join(ring.symbols[int(v)] for v in x)
