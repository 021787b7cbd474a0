"""Translation of quantified statements into linear constraints.

Each statement, at a crisp interval for its quantifier, becomes one or two
linear (in)equalities over the atom cardinalities x_0..x_{K-1}.  With
A = atoms(restriction), B = atoms(scope) and S_X the sum of x_k over X:

    logical-all               S_{A\\B}  = 0
    logical-none              S_{A&B}  = 0
    logical-some              S_{A&B}  > 0
    logical-not-all           S_{A\\B}  > 0
    absolute                  lo <= S_{A&B} <= hi
    proportional              lo*S_A <= S_{A&B} <= hi*S_A
    exception                 lo <= S_{A\\B} <= hi
    comparative-absolute      lo <= S_A - S_B <= hi
    comparative-proportional  lo*S_B <= S_A <= hi*S_B
    similarity                lo*S_{A|B} <= S_{A&B} <= hi*S_{A|B}

Ratio constraints are cross-multiplied so the premise set stays purely linear;
only the conclusion objective may be a ratio.  The structural layer adds
nonnegativity for every atom, denominator positivity for ratio statements,
and the universe cardinality equation when |E| is declared.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .quantifiers import (
    ABSOLUTE,
    COMPARATIVE_ABSOLUTE,
    COMPARATIVE_PROPORTIONAL,
    COUNT_FAMILIES,
    EXCEPTION,
    LOGICAL_ALL,
    LOGICAL_NONE,
    LOGICAL_NOT_ALL,
    LOGICAL_SOME,
    PROPORTIONAL,
    RATIO_FAMILIES,
    SIMILARITY,
    Interval,
    as_fraction,
)
from .statements import Conclusion, Statement, Syllogism
from .terms import AtomSet, atoms_of

__all__ = [
    "UnitMixingError",
    "LinearExpr",
    "Constraint",
    "Objective",
    "ConstraintSystem",
    "compile_statement",
    "structural_constraints",
    "build_objective",
    "compile_syllogism",
]

LE, GE, EQ, LT, GT = "<=", ">=", "==", "<", ">"
_STRICT = {LT, GT}


class UnitMixingError(ValueError):
    """Count and proportion quantifiers mixed without a declared universe."""


@dataclass(frozen=True)
class LinearExpr:
    """Sparse linear expression over atom cardinalities plus a constant."""

    coeffs: Tuple[Tuple[int, Fraction], ...] = ()
    const: Fraction = Fraction(0)

    @staticmethod
    def of(coeffs: Dict[int, Fraction], const=0) -> "LinearExpr":
        items = tuple(sorted((k, as_fraction(v)) for k, v in coeffs.items() if v != 0))
        return LinearExpr(items, as_fraction(const))

    @staticmethod
    def sum_over(atoms: AtomSet) -> "LinearExpr":
        return LinearExpr.of({k: Fraction(1) for k in atoms})

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self.coeffs)

    def plus(self, other: "LinearExpr") -> "LinearExpr":
        out = self.as_dict()
        for k, v in other.coeffs:
            out[k] = out.get(k, Fraction(0)) + v
        return LinearExpr.of(out, self.const + other.const)

    def minus(self, other: "LinearExpr") -> "LinearExpr":
        return self.plus(other.scaled(-1))

    def scaled(self, factor) -> "LinearExpr":
        f = as_fraction(factor)
        return LinearExpr.of({k: v * f for k, v in self.coeffs}, self.const * f)

    def evaluate(self, counts: Sequence) -> Fraction:
        total = self.const
        for k, v in self.coeffs:
            total += v * as_fraction(counts[k])
        return total

    @property
    def is_constant(self) -> bool:
        return not self.coeffs

    def max_index(self) -> int:
        return max((k for k, _ in self.coeffs), default=-1)


@dataclass(frozen=True)
class Constraint:
    """expr REL rhs, with REL one of <=, >=, ==, <, >.

    Strict relations come only from logical-some/not-all translations and
    denominator positivity; the optimizer rewrites them before solving.
    """

    expr: LinearExpr
    rel: str
    rhs: Fraction

    def __post_init__(self) -> None:
        if self.rel not in (LE, GE, EQ, LT, GT):
            raise ValueError("unknown relation %r" % self.rel)
        object.__setattr__(self, "rhs", as_fraction(self.rhs))

    @property
    def is_strict(self) -> bool:
        return self.rel in _STRICT

    def holds(self, counts: Sequence) -> bool:
        """Exact evaluation on an integer population (strictness honored)."""
        value = self.expr.evaluate(counts)
        if self.rel == LE:
            return value <= self.rhs
        if self.rel == GE:
            return value >= self.rhs
        if self.rel == EQ:
            return value == self.rhs
        if self.rel == LT:
            return value < self.rhs
        return value > self.rhs


@dataclass(frozen=True)
class Objective:
    """Linear sum or ratio of two linear sums to be minimized and maximized."""

    kind: str  # "linear" | "fractional"
    numerator: LinearExpr
    denominator: Optional[LinearExpr] = None

    def __post_init__(self) -> None:
        if self.kind not in ("linear", "fractional"):
            raise ValueError("objective kind must be linear or fractional")
        if self.kind == "fractional":
            if self.denominator is None:
                raise ValueError("fractional objective needs a denominator")
            if any(v < 0 for _, v in self.denominator.coeffs):
                raise ValueError("ratio denominators are nonnegative atom sums")
        elif self.denominator is not None:
            raise ValueError("linear objective carries no denominator")


@dataclass
class ConstraintSystem:
    """Everything one crisp solve needs.

    ``proportional_context`` records whether any statement in the syllogism
    is a ratio one; the strict-inequality rewrite keys off it.
    """

    k: int
    constraints: List[Constraint]
    objective: Objective
    universe_size: Optional[Fraction] = None
    proportional_context: bool = False

    def __post_init__(self) -> None:
        for con in self.constraints:
            if con.expr.max_index() >= self.k:
                raise ValueError("constraint references atom index >= K")
        if self.objective.numerator.max_index() >= self.k:
            raise ValueError("objective references atom index >= K")
        if self.objective.denominator is not None:
            if self.objective.denominator.max_index() >= self.k:
                raise ValueError("objective references atom index >= K")


def _term_sets(stmt, properties: Sequence[str]):
    a = atoms_of(stmt.restriction, properties)
    b = atoms_of(stmt.scope, properties)
    return a, b


def _band(expr: LinearExpr, bound: Interval) -> List[Constraint]:
    """lo <= expr <= hi as one or two rows; unbounded hi emits no upper row."""
    rows = [Constraint(expr, GT if bound.lo_strict else GE, bound.lo)]
    if bound.hi is not None:
        rows.append(Constraint(expr, LT if bound.hi_strict else LE, bound.hi))
    return rows


def _ratio_band(num: LinearExpr, den: LinearExpr, bound: Interval) -> List[Constraint]:
    """lo*den <= num <= hi*den, cross-multiplied to stay linear."""
    rows = [
        Constraint(num.minus(den.scaled(bound.lo)), GT if bound.lo_strict else GE, 0)
    ]
    if bound.hi is not None:
        rows.append(
            Constraint(num.minus(den.scaled(bound.hi)), LT if bound.hi_strict else LE, 0)
        )
    return rows


def _check_bound_unit(family: str, bound: Interval) -> None:
    if family in (ABSOLUTE, EXCEPTION, COMPARATIVE_PROPORTIONAL) and bound.lo < 0:
        raise ValueError("%s bound must be nonnegative, got %s" % (family, bound))
    if family in (PROPORTIONAL, SIMILARITY):
        if bound.lo < 0 or (bound.hi is not None and bound.hi > 1):
            raise ValueError(
                "unit mismatch: %s bound %s outside [0, 1]" % (family, bound)
            )


def compile_statement(
    stmt: Statement, bound: Interval, properties: Sequence[str]
) -> List[Constraint]:
    """Constraints equivalent to ``stmt`` holding with the given crisp bound.

    ``bound`` is supplied separately from the statement because fuzzy
    statements are compiled once per alpha-cut level.  Logical families ignore
    it (pass None).
    """
    a, b = _term_sets(stmt, properties)
    family = stmt.family

    if family == LOGICAL_ALL:
        return [Constraint(LinearExpr.sum_over(a - b), EQ, 0)]
    if family == LOGICAL_NONE:
        return [Constraint(LinearExpr.sum_over(a & b), EQ, 0)]
    if family == LOGICAL_SOME:
        return [Constraint(LinearExpr.sum_over(a & b), GT, 0)]
    if family == LOGICAL_NOT_ALL:
        return [Constraint(LinearExpr.sum_over(a - b), GT, 0)]

    if bound is None:
        raise ValueError("family %s needs a crisp bound to compile" % family)
    _check_bound_unit(family, bound)

    if family == ABSOLUTE:
        return _band(LinearExpr.sum_over(a & b), bound)
    if family == EXCEPTION:
        return _band(LinearExpr.sum_over(a - b), bound)
    if family == COMPARATIVE_ABSOLUTE:
        expr = LinearExpr.sum_over(a).minus(LinearExpr.sum_over(b))
        return _band(expr, bound)
    if family == PROPORTIONAL:
        return _ratio_band(LinearExpr.sum_over(a & b), LinearExpr.sum_over(a), bound)
    if family == COMPARATIVE_PROPORTIONAL:
        return _ratio_band(LinearExpr.sum_over(a), LinearExpr.sum_over(b), bound)
    if family == SIMILARITY:
        return _ratio_band(LinearExpr.sum_over(a & b), LinearExpr.sum_over(a | b), bound)
    raise ValueError("cannot compile family %r" % family)


def _denominator_atoms(stmt, properties: Sequence[str]) -> Optional[AtomSet]:
    """Atom set whose cardinality divides in the statement's ratio, if any."""
    if stmt.family not in RATIO_FAMILIES:
        return None
    a, b = _term_sets(stmt, properties)
    if stmt.family == PROPORTIONAL:
        return a
    if stmt.family == COMPARATIVE_PROPORTIONAL:
        return b
    return a | b


def structural_constraints(
    premises: Sequence[Statement],
    conclusion: Conclusion,
    properties: Sequence[str],
    universe_size=None,
) -> Tuple[List[Constraint], bool]:
    """Nonnegativity, denominator positivity, and the universe equation.

    Returns (constraints, proportional_context).  Count and proportion
    quantifiers may share a syllogism only when the universe size is declared
    (the caller is expected to surface a warning in that case); otherwise the
    mix is refused here.
    """
    statements = list(premises) + [conclusion]
    families = [s.family for s in statements]
    has_ratio = any(f in RATIO_FAMILIES for f in families)
    has_count = any(f in COUNT_FAMILIES for f in families)
    if has_ratio and has_count and universe_size is None:
        raise UnitMixingError(
            "syllogism mixes count quantifiers (absolute/exception/"
            "comparative-absolute) with proportion quantifiers; declare "
            "'universe:' to make the units commensurable"
        )

    k = 1 << len(properties)
    rows = [Constraint(LinearExpr.of({i: 1}), GE, 0) for i in range(k)]
    if has_ratio:
        for stmt in statements:
            atoms = _denominator_atoms(stmt, properties)
            if atoms is not None:
                rows.append(Constraint(LinearExpr.sum_over(atoms), GT, 0))
    if universe_size is not None:
        size = as_fraction(universe_size)
        full = LinearExpr.of({i: 1 for i in range(k)})
        rows.append(Constraint(full, EQ, size))
    return rows, has_ratio


def build_objective(conclusion: Conclusion, properties: Sequence[str]) -> Objective:
    """Objective whose min/max over the feasible region is the conclusion bound."""
    a, b = _term_sets(conclusion, properties)
    family = conclusion.family
    if family == ABSOLUTE:
        return Objective("linear", LinearExpr.sum_over(a & b))
    if family == EXCEPTION:
        return Objective("linear", LinearExpr.sum_over(a - b))
    if family == COMPARATIVE_ABSOLUTE:
        expr = LinearExpr.sum_over(a).minus(LinearExpr.sum_over(b))
        return Objective("linear", expr)
    if family == PROPORTIONAL:
        return Objective(
            "fractional", LinearExpr.sum_over(a & b), LinearExpr.sum_over(a)
        )
    if family == COMPARATIVE_PROPORTIONAL:
        return Objective(
            "fractional", LinearExpr.sum_over(a), LinearExpr.sum_over(b)
        )
    if family == SIMILARITY:
        return Objective(
            "fractional", LinearExpr.sum_over(a & b), LinearExpr.sum_over(a | b)
        )
    raise ValueError(
        "no objective for family %r; conclusions declare a numeric family" % family
    )


def compile_syllogism(
    syl: Syllogism, premise_bounds: Sequence[Optional[Interval]]
) -> ConstraintSystem:
    """Assemble the full constraint system for one crisp reading.

    ``premise_bounds`` supplies the crisp interval for each premise in order
    (None for logical premises); fuzzy quantifiers are expected to have been
    cut to intervals by the caller.
    """
    if len(premise_bounds) != len(syl.premises):
        raise ValueError("need exactly one bound per premise")
    rows: List[Constraint] = []
    for stmt, bound in zip(syl.premises, premise_bounds):
        rows.extend(compile_statement(stmt, bound, syl.properties))
    structural, has_ratio = structural_constraints(
        syl.premises, syl.conclusion, syl.properties, syl.universe_size
    )
    rows.extend(structural)
    objective = build_objective(syl.conclusion, syl.properties)
    return ConstraintSystem(
        k=1 << syl.s,
        constraints=rows,
        objective=objective,
        universe_size=syl.universe_size,
        proportional_context=has_ratio,
    )
