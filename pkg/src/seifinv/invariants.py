"""Exact descriptors for orientable Seifert fibered 3-manifolds.

A descriptor records the base surface (genus plus orientability), an ordered
list of exceptional-fiber pairs ``(q, p)``, and the integer obstruction term
``b``.  The text notation is ASCII and whitespace-insensitive::

    descriptor := "(" INT "," base "|" pairs? ")"
    base       := "o1" | "n1"
    pairs      := pair ("," pair)*
    pair       := "(" INT "," INT ")"

A trailing pair whose first entry is 1 is read as the obstruction term, so
``(0,o1|(2,1),(2,1),(1,-1))`` has two exceptional fibers and b = -1.  Pairs
with q = 1 elsewhere in the list are kept verbatim: they express the
unnormalized bookkeeping form and are folded into b only by ``normalize``,
never implicitly.

All arithmetic is exact; invariants are ``fractions.Fraction`` values and no
floating point appears anywhere in this package.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

__all__ = [
    "BaseSurface",
    "GeometryType",
    "SeifertInvariants",
    "SeifertParseError",
    "euler_number",
    "geometry",
    "normalize",
    "orbifold_euler_characteristic",
    "parse_seifert",
    "print_seifert",
]


class GeometryType(Enum):
    """Geometry carried by a descriptor that admits a reversing involution.

    ``OTHER`` is returned for every input outside that family; no geometry is
    guessed for manifolds with nonzero Euler number.
    """

    S2xR = "S2xR"
    E3 = "E3"
    H2xR = "H2xR"
    OTHER = "Other"


class SeifertParseError(ValueError):
    """Malformed descriptor text; ``position`` is the offending index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class BaseSurface:
    genus: int
    orientable: bool = True

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be non-negative")
        if not self.orientable and self.genus == 0:
            raise ValueError("non-orientable base surface needs genus >= 1")

    def euler_characteristic(self) -> int:
        if self.orientable:
            return 2 - 2 * self.genus
        return 2 - self.genus


@dataclass(frozen=True)
class SeifertInvariants:
    """Descriptor (g, o1 | (q1,p1), ..., (1,b)) with exact integer data."""

    base: BaseSurface
    pairs: tuple[tuple[int, int], ...] = ()
    b: int = 0

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(q), int(p)) for q, p in self.pairs))
        for q, p in self.pairs:
            if q < 1:
                raise ValueError(f"fiber order must be positive in ({q},{p})")
            if math.gcd(p, q) != 1:
                raise ValueError(f"non-coprime pair ({q},{p})")

    def __str__(self) -> str:
        return print_seifert(self)


_INT_RE = re.compile(r"-?\d+")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def next_pos(self) -> int:
        self._skip_ws()
        return self.pos

    def peek(self, token: str) -> bool:
        self._skip_ws()
        return self.text.startswith(token, self.pos)

    def try_consume(self, token: str) -> bool:
        if self.peek(token):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.try_consume(token):
            raise SeifertParseError(f"expected {token!r}", self.pos)

    def integer(self) -> int:
        self._skip_ws()
        m = _INT_RE.match(self.text, self.pos)
        if m is None:
            raise SeifertParseError("expected an integer", self.pos)
        self.pos = m.end()
        return int(m.group())

    def at_end(self) -> bool:
        self._skip_ws()
        return self.pos >= len(self.text)


def parse_seifert(text: str) -> SeifertInvariants:
    """Parse descriptor notation.

    Pairs are kept in written order and nothing is normalized.  A trailing
    (1, x) pair sets the obstruction term b.  Raises ``SeifertParseError``
    (carrying the failing position) for syntax errors, non-coprime pairs,
    and non-positive fiber orders.
    """
    s = _Scanner(text)
    s.expect("(")
    genus_pos = s.next_pos()
    genus = s.integer()
    if genus < 0:
        raise SeifertParseError("genus must be non-negative", genus_pos)
    s.expect(",")
    base_pos = s.next_pos()
    if s.try_consume("o1"):
        orientable = True
    elif s.try_consume("n1"):
        orientable = False
    else:
        raise SeifertParseError("expected base 'o1' or 'n1'", base_pos)
    if not orientable and genus == 0:
        raise SeifertParseError("non-orientable base surface needs genus >= 1", genus_pos)
    s.expect("|")
    pairs: list[tuple[int, int]] = []
    if not s.peek(")"):
        while True:
            pair_pos = s.next_pos()
            s.expect("(")
            q = s.integer()
            s.expect(",")
            p = s.integer()
            s.expect(")")
            if q < 1:
                raise SeifertParseError(f"fiber order must be positive in ({q},{p})", pair_pos)
            if math.gcd(p, q) != 1:
                raise SeifertParseError(f"non-coprime pair ({q},{p})", pair_pos)
            pairs.append((q, p))
            if not s.try_consume(","):
                break
    s.expect(")")
    if not s.at_end():
        raise SeifertParseError("unexpected trailing text", s.next_pos())
    b = 0
    if pairs and pairs[-1][0] == 1:
        b = pairs.pop()[1]
    return SeifertInvariants(BaseSurface(genus, orientable), tuple(pairs), b)


def print_seifert(M: SeifertInvariants) -> str:
    """Canonical text form; ``parse_seifert(print_seifert(M)) == M``.

    The obstruction term is printed as a trailing (1, b) pair when b != 0,
    and also when the stored pair list itself ends in a q = 1 pair (so the
    trailing pair is never mistaken for the obstruction term on re-parse).
    """
    base = "o1" if M.base.orientable else "n1"
    items = [f"({q},{p})" for q, p in M.pairs]
    if M.b != 0 or (M.pairs and M.pairs[-1][0] == 1):
        items.append(f"(1,{M.b})")
    return f"({M.base.genus},{base}|{','.join(items)})"


def normalize(M: SeifertInvariants) -> SeifertInvariants:
    """Fold every pair into the range 0 < p < q and absorb q = 1 pairs into b.

    Each move (q,p) -> (q, p mod q) adds (p - p mod q)/q to b, so the Euler
    number is preserved exactly.
    """
    b = M.b
    pairs: list[tuple[int, int]] = []
    for q, p in M.pairs:
        if q == 1:
            b += p
        else:
            r = p % q  # 0 < r < q because gcd(p, q) = 1 and q >= 2
            b += (p - r) // q
            pairs.append((q, r))
    return SeifertInvariants(M.base, tuple(pairs), b)


def euler_number(M: SeifertInvariants) -> Fraction:
    """e = -(b + sum of p_i/q_i), exactly."""
    total = Fraction(M.b)
    for q, p in M.pairs:
        total += Fraction(p, q)
    return -total


def orbifold_euler_characteristic(M: SeifertInvariants) -> Fraction:
    """chi of the underlying base surface minus sum of (1 - 1/q_i)."""
    chi = Fraction(M.base.euler_characteristic())
    for q, _ in M.pairs:
        chi -= 1 - Fraction(1, q)
    return chi


def geometry(M: SeifertInvariants) -> GeometryType:
    """Trichotomy S2xR / E3 / H2xR by the sign of the orbifold characteristic.

    Only defined for descriptors that satisfy the involution-admissibility
    conditions (orientable base, e = 0, all fiber orders 2, evenly many,
    b = -n/2); anything else maps to ``OTHER``.
    """
    N = normalize(M)
    n = len(N.pairs)
    admissible = (
        N.base.orientable
        and euler_number(N) == 0
        and all(q == 2 for q, _ in N.pairs)
        and n % 2 == 0
        and N.b == -(n // 2)
    )
    if not admissible:
        return GeometryType.OTHER
    chi = orbifold_euler_characteristic(N)
    if chi > 0:
        return GeometryType.S2xR
    if chi == 0:
        return GeometryType.E3
    return GeometryType.H2xR
