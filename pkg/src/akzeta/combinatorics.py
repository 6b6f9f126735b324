"""Exact integer combinatorics: MZV index tuples, duality, multinomial weights.

A multiple zeta value index is stored as the displayed exponent tuple,
innermost index first, with the trailing "+1" already folded into the last
entry.  So ``Composition((1, 2))`` denotes the convergent sum with inner
exponent 1 and outer exponent 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DomainError

__all__ = [
    "Composition",
    "WeakComposition",
    "binomial",
    "dual",
    "weight",
    "depth",
    "weak_compositions",
    "m_coeff",
    "admissible_compositions",
]


@dataclass(frozen=True)
class Composition:
    """An ordered tuple of positive integer exponents, innermost first."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if len(self.parts) == 0:
            raise DomainError("composition must be non-empty")
        if any((not isinstance(p, int)) or p < 1 for p in self.parts):
            raise DomainError(f"composition parts must be positive integers: {self.parts}")

    @classmethod
    def of(cls, *parts: int) -> "Composition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, literal: str) -> "Composition":
        """Parse a comma-separated literal such as ``"1,2,2,4"``."""
        try:
            parts = tuple(int(tok) for tok in literal.split(","))
        except ValueError as exc:
            raise DomainError(f"cannot parse composition literal {literal!r}") from exc
        return cls(parts)

    @property
    def admissible(self) -> bool:
        return self.parts[-1] >= 2

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def depth(self) -> int:
        return len(self.parts)

    def alpha(self) -> tuple[int, ...]:
        """Exponent prefix with the folded +1 removed from the last part.

        For an admissible tuple (c_1, .., c_q) this is (c_1, .., c_{q-1}, c_q - 1),
        the form in which dual-side linear combinations are indexed.
        """
        if not self.admissible:
            raise DomainError(f"{self} is not admissible")
        return self.parts[:-1] + (self.parts[-1] - 1,)

    @classmethod
    def from_alpha(cls, alpha: Sequence[int]) -> "Composition":
        alpha = tuple(alpha)
        return cls(alpha[:-1] + (alpha[-1] + 1,))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class WeakComposition:
    """A tuple of non-negative integers with a fixed target sum."""

    parts: tuple[int, ...]
    target: int

    def __post_init__(self):
        if any(p < 0 for p in self.parts):
            raise DomainError("weak composition parts must be non-negative")
        if sum(self.parts) != self.target:
            raise DomainError(f"parts {self.parts} do not sum to {self.target}")


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient, 0 when k > n."""
    if n < 0 or k < 0:
        raise DomainError("binomial requires non-negative arguments")
    return math.comb(n, k)


def weight(c: Composition) -> int:
    return c.weight


def depth(c: Composition) -> int:
    return c.depth


def _to_word(c: Composition) -> list[int]:
    # Innermost-exponent-first word: each exponent s contributes 1 0^{s-1}.
    # An admissible tuple always yields a word ending in 0, so the dual word
    # below always starts with 1 and parses back.
    word: list[int] = []
    for part in c.parts:
        word.append(1)
        word.extend([0] * (part - 1))
    return word


def _from_word(word: Sequence[int]) -> Composition:
    parts: list[int] = []
    for bit in word:
        if bit:
            parts.append(1)
        else:
            parts[-1] += 1
    return Composition(tuple(parts))


def dual(c: Composition) -> Composition:
    """The MZV duality involution on admissible exponent tuples.

    Factor the index as ({1}^{a_1}, b_1+2, ..., {1}^{a_m}, b_m+2) and emit
    ({1}^{b_m}, a_m+2, ..., {1}^{b_1}, a_1+2).  Realized on the binary word
    encoding, where it is reversal composed with bit complement.
    """
    if not c.admissible:
        raise DomainError(f"dual of non-admissible composition {c} (divergent series)")
    word = _to_word(c)
    return _from_word([1 - b for b in reversed(word)])


def weak_compositions(m: int, k: int) -> Iterator[WeakComposition]:
    """All k-tuples of non-negative integers summing to m, lexicographically."""
    if m < 0 or k < 1:
        raise DomainError("need m >= 0 and k >= 1")

    def rec(prefix: tuple[int, ...], remaining: int, slots: int):
        if slots == 1:
            yield prefix + (remaining,)
            return
        for first in range(remaining + 1):
            yield from rec(prefix + (first,), remaining - first, slots - 1)

    for parts in rec((), m, k):
        yield WeakComposition(parts, m)


def m_coeff(alpha: Sequence[int], d: Sequence[int]) -> int:
    """Product of binomials C(alpha_j + d_j - 1, d_j) over matched positions."""
    if len(alpha) != len(d):
        raise DomainError("exponent prefix and weak composition lengths differ")
    out = 1
    for a, dj in zip(alpha, d):
        out *= math.comb(a + dj - 1, dj)
    return out


def admissible_compositions(max_weight: int, min_weight: int = 2) -> Iterator[Composition]:
    """Every admissible composition with weight in [min_weight, max_weight]."""

    def comps(total: int):
        if total == 0:
            yield ()
            return
        for first in range(1, total + 1):
            for rest in comps(total - first):
                yield (first,) + rest

    for w in range(max(2, min_weight), max_weight + 1):
        for parts in comps(w):
            if parts[-1] >= 2:
                yield Composition(parts)
