"""Quantified statements and syllogisms.

A statement applies a quantifier to a pair of terms.  For most families the
pair is read as restriction -> scope ("Q restriction are scope"); comparative
and similarity families compare the two terms as wholes.  A syllogism is a
list of premise statements plus one conclusion template whose quantifier
family is declared but whose bound is the unknown to be inferred.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .quantifiers import (
    COMPARATIVE_ABSOLUTE,
    COMPARATIVE_PROPORTIONAL,
    LOGICAL_FAMILIES,
    NUMERIC_FAMILIES,
    SIMILARITY,
    QuantifierSpec,
    as_fraction,
)
from .terms import TermExpr, term_names

__all__ = ["COMPARED_FAMILIES", "Statement", "Conclusion", "Syllogism"]

# families whose two terms are compared as wholes rather than restricted
COMPARED_FAMILIES = frozenset({COMPARATIVE_ABSOLUTE, COMPARATIVE_PROPORTIONAL, SIMILARITY})


@dataclass(frozen=True)
class Statement:
    """One quantified premise: quantifier plus two terms.

    ``restriction`` and ``scope`` are the first and second term; comparative
    and similarity quantifiers treat them as the two compared sets.
    """

    quantifier: QuantifierSpec
    restriction: TermExpr
    scope: TermExpr

    @property
    def family(self) -> str:
        return self.quantifier.family


@dataclass(frozen=True)
class Conclusion:
    """Conclusion template: a declared numeric family with unknown bound."""

    family: str
    restriction: TermExpr
    scope: TermExpr

    def __post_init__(self) -> None:
        if self.family in LOGICAL_FAMILIES:
            raise ValueError(
                "logical quantifiers cannot be synthesized in conclusion "
                "position; declare a numeric family (a [0,0] absolute result "
                "can be read back as 'none', and so on)"
            )
        if self.family not in NUMERIC_FAMILIES:
            raise ValueError("unknown conclusion family %r" % self.family)


@dataclass(frozen=True)
class Syllogism:
    """N premises, one conclusion template, over an ordered property list."""

    properties: Tuple[str, ...]
    premises: Tuple[Statement, ...]
    conclusion: Conclusion
    universe_size: Optional[Fraction] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "properties", tuple(self.properties))
        object.__setattr__(self, "premises", tuple(self.premises))
        if not self.properties:
            raise ValueError("a syllogism needs at least one declared property")
        if len(set(self.properties)) != len(self.properties):
            raise ValueError("property names must be unique")
        # zero premises is allowed: the conclusion is then bounded only by
        # the structural constraints (useful as a baseline and for slicing)
        if self.universe_size is not None:
            size = as_fraction(self.universe_size)
            if size <= 0:
                raise ValueError("universe size must be positive")
            object.__setattr__(self, "universe_size", size)
        declared = set(self.properties)
        for where, expr in self._term_sites():
            for name in term_names(expr):
                if name not in declared:
                    raise ValueError(
                        "%s references undeclared property %r" % (where, name)
                    )

    def _term_sites(self):
        for i, premise in enumerate(self.premises, start=1):
            yield "premise %d restriction" % i, premise.restriction
            yield "premise %d scope" % i, premise.scope
        yield "conclusion restriction", self.conclusion.restriction
        yield "conclusion scope", self.conclusion.scope

    @property
    def s(self) -> int:
        return len(self.properties)

    def with_premises(self, premises: Sequence[Statement]) -> "Syllogism":
        """Same syllogism with a different premise list (fixture slicing)."""
        return Syllogism(
            properties=self.properties,
            premises=tuple(premises),
            conclusion=self.conclusion,
            universe_size=self.universe_size,
        )
