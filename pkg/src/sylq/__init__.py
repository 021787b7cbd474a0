"""Interval bounds for syllogisms over generalized quantifiers.

Quantified premises ("all but two", "at least 70%", "many") constrain how the
members of a universe can be distributed over the Venn atoms of the involved
properties.  This package compiles such premises into linear constraints over
atom cardinalities, bounds the conclusion's measure by exact rational linear
(and linear-fractional) programming, and lifts the whole construction to
fuzzy quantifiers through alpha cuts.

The typical entry points are :func:`sylq.dsl.parse` plus :func:`sylq.infer`,
or the ``sylq`` command-line tool.
"""

from .compiler import (
    Constraint,
    ConstraintSystem,
    LinearExpr,
    Objective,
    UnitMixingError,
    build_objective,
    compile_statement,
    compile_syllogism,
    structural_constraints,
)
from .dsl import DslError, SyllogismDoc, conclusion_text, parse, print_doc
from .inference import (
    InfeasiblePremisesError,
    InferenceConfig,
    InferenceResult,
    infer,
    infer_alpha,
    infer_crisp,
    infer_ker_sup,
)
from .optimizer import SolveOutcome, effective_epsilon, rewrite_strict, solve
from .oracle import enumerate_range, statement_predicate
from .quantifiers import (
    ABSOLUTE,
    COMPARATIVE_ABSOLUTE,
    COMPARATIVE_PROPORTIONAL,
    COUNT_FAMILIES,
    EXCEPTION,
    FAMILIES,
    LOGICAL_ALL,
    LOGICAL_FAMILIES,
    LOGICAL_NONE,
    LOGICAL_NOT_ALL,
    LOGICAL_SOME,
    NUMERIC_FAMILIES,
    PROPORTIONAL,
    RATIO_FAMILIES,
    SIMILARITY,
    FitReport,
    Interval,
    KernelSupportPair,
    QuantifierSpec,
    RimQuantifier,
    Trapezoid,
    alpha_cut,
    as_fraction,
    bound_at_level,
    fit_trapezoid,
    interpolate_membership,
    kernel_of,
    support_of,
)
from .statements import COMPARED_FAMILIES, Conclusion, Statement, Syllogism
from .terms import (
    UNIVERSE,
    And,
    AtomDescriptor,
    AtomSet,
    Not,
    Or,
    Prop,
    SizeGuardError,
    Universe,
    atoms_of,
    enumerate_atoms,
)

__version__ = "0.1.0"

__all__ = [
    "ABSOLUTE",
    "COMPARATIVE_ABSOLUTE",
    "COMPARATIVE_PROPORTIONAL",
    "COMPARED_FAMILIES",
    "COUNT_FAMILIES",
    "EXCEPTION",
    "FAMILIES",
    "LOGICAL_ALL",
    "LOGICAL_FAMILIES",
    "LOGICAL_NONE",
    "LOGICAL_NOT_ALL",
    "LOGICAL_SOME",
    "NUMERIC_FAMILIES",
    "PROPORTIONAL",
    "RATIO_FAMILIES",
    "SIMILARITY",
    "UNIVERSE",
    "And",
    "AtomDescriptor",
    "AtomSet",
    "Conclusion",
    "Constraint",
    "ConstraintSystem",
    "DslError",
    "FitReport",
    "InfeasiblePremisesError",
    "InferenceConfig",
    "InferenceResult",
    "Interval",
    "KernelSupportPair",
    "LinearExpr",
    "Not",
    "Objective",
    "Or",
    "Prop",
    "QuantifierSpec",
    "RimQuantifier",
    "SizeGuardError",
    "SolveOutcome",
    "Statement",
    "Syllogism",
    "SyllogismDoc",
    "Trapezoid",
    "UnitMixingError",
    "Universe",
    "alpha_cut",
    "as_fraction",
    "atoms_of",
    "bound_at_level",
    "build_objective",
    "compile_statement",
    "compile_syllogism",
    "enumerate_atoms",
    "enumerate_range",
    "fit_trapezoid",
    "infer",
    "infer_alpha",
    "infer_crisp",
    "infer_ker_sup",
    "interpolate_membership",
    "kernel_of",
    "conclusion_text",
    "parse",
    "print_doc",
    "effective_epsilon",
    "rewrite_strict",
    "solve",
    "statement_predicate",
    "structural_constraints",
    "support_of",
    "__version__",
]
