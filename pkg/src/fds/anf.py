"""Algebraic normal form arithmetic over the two-element field.

A Boolean function in n variables is stored as a set of squarefree
monomials; each monomial is an n-bit mask over the variables x1..xn
(bit k-1 set means xk occurs, the empty mask is the constant monomial 1).
States are integers with x1 in the least significant bit.
"""

from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass, field
from typing import Iterable

from .errors import DimensionCapError, DimensionMismatchError, ParseError

DEFAULT_MAX_N = 24
HARD_MAX_N = 28


def max_n() -> int:
    """Current dimension cap: FDS_MAX_N env override, hard ceiling 28."""
    raw = os.environ.get("FDS_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise ParseError(f"FDS_MAX_N is not an integer: {raw!r}")
    return min(value, HARD_MAX_N)


def check_dimension(n: int) -> int:
    if n < 1:
        raise DimensionCapError(f"variable count must be positive, got {n}")
    cap = max_n()
    if n > cap:
        raise DimensionCapError(f"n={n} exceeds the dimension cap {cap}")
    return n


def _require_same_n(a, b):
    if a.n != b.n:
        raise DimensionMismatchError(f"dimension mismatch: {a.n} vs {b.n}")


def monomial_vars(mask: int) -> tuple[int, ...]:
    """Variable indices (1-based, ascending) of a monomial mask."""
    out = []
    k = 1
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return tuple(out)


def basis_monomials(n: int) -> list[int]:
    """All 2^n monomial masks, degree ascending, lexicographic within a degree.

    For n=3 this is 1, x1, x2, x3, x1x2, x1x3, x2x3, x1x2x3.
    """
    masks = sorted(range(1 << n), key=lambda m: (m.bit_count(), monomial_vars(m)))
    return masks


@dataclass(frozen=True)
class Anf:
    """A squarefree polynomial over GF(2): an XOR of monomials."""

    n: int
    monomials: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        check_dimension(self.n)
        limit = 1 << self.n
        for m in self.monomials:
            if not 0 <= m < limit:
                raise DimensionMismatchError(
                    f"monomial mask {m:#x} out of range for n={self.n}"
                )

    @staticmethod
    def zero(n: int) -> "Anf":
        return Anf(n, frozenset())

    @staticmethod
    def one(n: int) -> "Anf":
        return Anf(n, frozenset({0}))

    @staticmethod
    def var(n: int, k: int) -> "Anf":
        if not 1 <= k <= n:
            raise DimensionMismatchError(f"variable index {k} out of range 1..{n}")
        return Anf(n, frozenset({1 << (k - 1)}))

    @staticmethod
    def from_masks(n: int, masks: Iterable[int]) -> "Anf":
        """Build a polynomial, cancelling repeated monomials mod 2."""
        acc: set[int] = set()
        for m in masks:
            acc.symmetric_difference_update({m})
        return Anf(n, frozenset(acc))

    def __add__(self, other: "Anf") -> "Anf":
        _require_same_n(self, other)
        return Anf(self.n, self.monomials ^ other.monomials)

    def __mul__(self, other: "Anf") -> "Anf":
        _require_same_n(self, other)
        acc: set[int] = set()
        for a in self.monomials:
            for b in other.monomials:
                acc.symmetric_difference_update({a | b})
        return Anf(self.n, frozenset(acc))

    def evaluate(self, state: int) -> int:
        """Value at a state (x1 = LSB): XOR of the monomial ANDs."""
        if not 0 <= state < (1 << self.n):
            raise DimensionMismatchError(
                f"state {state} out of range for n={self.n}"
            )
        value = 0
        for m in self.monomials:
            if state & m == m:
                value ^= 1
        return value

    def support(self) -> frozenset[int]:
        """Indices of variables occurring in some monomial; empty for constants."""
        mask = 0
        for m in self.monomials:
            mask |= m
        return frozenset(monomial_vars(mask))

    def degree(self) -> int:
        return max((m.bit_count() for m in self.monomials), default=0)

    def is_linear(self) -> bool:
        """No constant term and every monomial a single variable."""
        return all(m.bit_count() == 1 for m in self.monomials)

    def coefficient_row(self) -> tuple[int, ...]:
        """Coefficients along the graded-lex basis; length 2^n."""
        return tuple(1 if m in self.monomials else 0 for m in basis_monomials(self.n))

    def to_truth_table(self) -> "TruthTable":
        return anf_to_tt(self)

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        terms = []
        for m in sorted(self.monomials, key=lambda m: (m.bit_count(), monomial_vars(m))):
            if m == 0:
                terms.append("1")
            else:
                terms.append("*".join(f"x{k}" for k in monomial_vars(m)))
        return " + ".join(terms)


_TERM_RE = re.compile(r"^x(\d+)$")


def parse_anf(text: str, n: int) -> Anf:
    """Parse the polynomial grammar: `+`-separated terms, each `0`, `1`,
    or a `*`-separated product of variables `x<k>`; whitespace ignored;
    repeated monomials cancel mod 2."""
    check_dimension(n)
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise ParseError("empty polynomial")
    masks = []
    for term in compact.split("+"):
        if term == "0":
            continue
        if term == "1":
            masks.append(0)
            continue
        mask = 0
        for factor in term.split("*"):
            m = _TERM_RE.match(factor)
            if not m:
                raise ParseError(f"bad term {term!r} in polynomial {text!r}")
            k = int(m.group(1))
            if not 1 <= k <= n:
                raise ParseError(f"variable x{k} out of range 1..{n}")
            mask |= 1 << (k - 1)
        masks.append(mask)
    return Anf.from_masks(n, masks)


@dataclass(frozen=True)
class TruthTable:
    """Values of a Boolean function on all 2^n states, state = index."""

    n: int
    bits: tuple[int, ...]

    def __post_init__(self):
        check_dimension(self.n)
        if len(self.bits) != 1 << self.n:
            raise DimensionMismatchError(
                f"truth table length {len(self.bits)} != 2^{self.n}"
            )
        if any(b not in (0, 1) for b in self.bits):
            raise ParseError("truth table entries must be 0 or 1")


def _subset_xor_transform(bits: list[int], n: int) -> list[int]:
    # Moebius/zeta transform over the subset lattice; self-inverse mod 2.
    out = list(bits)
    for k in range(n):
        step = 1 << k
        for s in range(1 << n):
            if s & step:
                out[s] ^= out[s ^ step]
    return out


def tt_to_anf(table: TruthTable) -> Anf:
    """Unique polynomial computing the tabulated function."""
    coeffs = _subset_xor_transform(list(table.bits), table.n)
    return Anf(table.n, frozenset(m for m, c in enumerate(coeffs) if c))


def anf_to_tt(p: Anf) -> TruthTable:
    """Tabulate the polynomial on all 2^n states."""
    coeffs = [0] * (1 << p.n)
    for m in p.monomials:
        coeffs[m] = 1
    return TruthTable(p.n, tuple(_subset_xor_transform(coeffs, p.n)))


def all_truth_tables(n: int):
    """Iterate every truth table in n variables (2^(2^n) of them)."""
    size = 1 << n
    for bits in itertools.product((0, 1), repeat=size):
        yield TruthTable(n, bits)
