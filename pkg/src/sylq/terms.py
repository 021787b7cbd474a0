"""Boolean term algebra over named properties and its reduction to atom sets.

S declared properties split the referential universe into K = 2**S disjoint
atoms.  Atom index k encodes membership bitwise: bit s of k is 1 exactly when
the atom lies inside property s, with bit 0 the first declared property.  A
term expression (any and/or/not combination of property names, plus the
universe constant) denotes a subset of the universe, which reduces exactly to
a set of atom indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

__all__ = [
    "S_MAX",
    "SizeGuardError",
    "TermExpr",
    "Prop",
    "Not",
    "And",
    "Or",
    "Universe",
    "UNIVERSE",
    "AtomSet",
    "AtomDescriptor",
    "enumerate_atoms",
    "atoms_of",
    "term_names",
]

# ceiling on declared properties; 2**16 atoms is already a 65536-column system
S_MAX = 16


class SizeGuardError(RuntimeError):
    """A requested computation would exceed a configured size cap."""


class _Term:
    """Mixin giving term expressions composable operator syntax."""

    __slots__ = ()

    def __and__(self, other: "TermExpr") -> "And":
        return And(self, other)

    def __or__(self, other: "TermExpr") -> "Or":
        return Or(self, other)

    def __invert__(self) -> "Not":
        return Not(self)


@dataclass(frozen=True)
class Prop(_Term):
    """Leaf naming one declared property."""

    name: str


@dataclass(frozen=True)
class Not(_Term):
    arg: "TermExpr"


@dataclass(frozen=True)
class And(_Term):
    left: "TermExpr"
    right: "TermExpr"


@dataclass(frozen=True)
class Or(_Term):
    left: "TermExpr"
    right: "TermExpr"


@dataclass(frozen=True)
class Universe(_Term):
    """The whole referential; written ``*`` in the surface syntax."""


TermExpr = object  # union of the five node classes above
UNIVERSE = Universe()


def term_names(expr: TermExpr) -> Iterator[str]:
    """Yield every property name appearing in ``expr`` (with repeats)."""
    if isinstance(expr, Prop):
        yield expr.name
    elif isinstance(expr, Not):
        yield from term_names(expr.arg)
    elif isinstance(expr, (And, Or)):
        yield from term_names(expr.left)
        yield from term_names(expr.right)
    elif isinstance(expr, Universe):
        return
    else:
        raise TypeError("not a term expression: %r" % (expr,))


@dataclass(frozen=True)
class AtomSet:
    """A subset of the 2**s Venn atoms, identified by index."""

    s: int
    members: frozenset

    def __post_init__(self) -> None:
        k = 1 << self.s
        bad = [i for i in self.members if not (0 <= i < k)]
        if bad:
            raise ValueError("atom indices %r out of range for S=%d" % (bad, self.s))

    @property
    def universe_size(self) -> int:
        return 1 << self.s

    def complement(self) -> "AtomSet":
        full = range(1 << self.s)
        return AtomSet(self.s, frozenset(i for i in full if i not in self.members))

    def _check(self, other: "AtomSet") -> None:
        if self.s != other.s:
            raise ValueError("atom sets over different property counts")

    def __and__(self, other: "AtomSet") -> "AtomSet":
        self._check(other)
        return AtomSet(self.s, self.members & other.members)

    def __or__(self, other: "AtomSet") -> "AtomSet":
        self._check(other)
        return AtomSet(self.s, self.members | other.members)

    def __sub__(self, other: "AtomSet") -> "AtomSet":
        self._check(other)
        return AtomSet(self.s, self.members - other.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, index: int) -> bool:
        return index in self.members


@dataclass(frozen=True)
class AtomDescriptor:
    """One Venn atom: its index, its signed literals, and its conventional rank.

    ``conventional_index`` is the 1-based position of the atom in the textbook
    enumeration that lists the all-complements atom first and orders atoms
    with the *first* declared property as the most significant bit.  It exists
    so fixtures can cross-reference that ordering in comments; the engine
    itself always uses the bitwise index.
    """

    index: int
    literals: tuple
    conventional_index: int

    def __str__(self) -> str:
        parts = [name if inside else "!" + name for name, inside in self.literals]
        return " & ".join(parts)


def _validate_s(s: int, s_max: int) -> None:
    if s < 1:
        raise ValueError("need at least one declared property")
    if s > s_max:
        raise SizeGuardError(
            "S=%d properties would create %d atoms (cap %d); "
            "the constraint system would be too large" % (s, 2**s, 2**s_max)
        )


def enumerate_atoms(properties: Sequence[str], s_max: int = S_MAX) -> list:
    """Describe all 2**S atoms of the partition induced by ``properties``."""
    s = len(properties)
    _validate_s(s, s_max)
    if len(set(properties)) != s:
        raise ValueError("property names must be unique")
    out = []
    for index in range(1 << s):
        literals = tuple(
            (name, bool(index >> bit & 1)) for bit, name in enumerate(properties)
        )
        rank = 0
        for bit in range(s):
            rank = rank << 1 | (index >> bit & 1)
        out.append(AtomDescriptor(index=index, literals=literals, conventional_index=rank + 1))
    return out


def atoms_of(expr: TermExpr, properties: Sequence[str], s_max: int = S_MAX) -> AtomSet:
    """Exact atom set denoted by a term expression.

    Respects De Morgan laws by construction (complement/intersection/union on
    index sets).  Raises ValueError for leaves naming undeclared properties.
    """
    s = len(properties)
    _validate_s(s, s_max)
    bit_of = {name: bit for bit, name in enumerate(properties)}
    if len(bit_of) != s:
        raise ValueError("property names must be unique")
    full = frozenset(range(1 << s))

    def walk(node: TermExpr) -> frozenset:
        if isinstance(node, Prop):
            try:
                bit = bit_of[node.name]
            except KeyError:
                raise ValueError(
                    "undeclared property %r; declared: %s"
                    % (node.name, ", ".join(properties))
                ) from None
            return frozenset(i for i in full if i >> bit & 1)
        if isinstance(node, Universe):
            return full
        if isinstance(node, Not):
            return full - walk(node.arg)
        if isinstance(node, And):
            return walk(node.left) & walk(node.right)
        if isinstance(node, Or):
            return walk(node.left) | walk(node.right)
        raise TypeError("not a term expression: %r" % (node,))

    return AtomSet(s, walk(expr))
