"""Quantifier shapes and alpha-cut geometry.

A generalized quantifier is a family tag (how a statement is translated into
constraints on cardinalities) plus a bound shape (which numeric range the
quantifier allows at a given membership level).  Four shapes are supported:

* ``Interval``           crisp bounds, possibly unbounded above;
* ``Trapezoid``          the usual [a, b, c, d] fuzzy membership function;
* ``KernelSupportPair``  a coarse two-interval approximation of a fuzzy set;
* ``RimQuantifier``      regular increasing monotone quantifier p ** alpha.

Everything here is exact: numeric inputs are normalized to ``Fraction`` (floats
are snapped to the nearest rational with denominator <= 10**9, so 0.7 means
7/10), and alpha cuts of trapezoids are computed without rounding.  Only RIM
cuts with a non-integral inverse exponent go through floats, and those are
snapped back immediately.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

__all__ = [
    "LOGICAL_ALL",
    "LOGICAL_NONE",
    "LOGICAL_SOME",
    "LOGICAL_NOT_ALL",
    "ABSOLUTE",
    "PROPORTIONAL",
    "EXCEPTION",
    "COMPARATIVE_ABSOLUTE",
    "COMPARATIVE_PROPORTIONAL",
    "SIMILARITY",
    "FAMILIES",
    "LOGICAL_FAMILIES",
    "COUNT_FAMILIES",
    "RATIO_FAMILIES",
    "NUMERIC_FAMILIES",
    "as_fraction",
    "Interval",
    "Trapezoid",
    "KernelSupportPair",
    "RimQuantifier",
    "QuantifierSpec",
    "alpha_cut",
    "kernel_of",
    "support_of",
    "bound_at_level",
    "FitReport",
    "fit_trapezoid",
    "interpolate_membership",
]

LOGICAL_ALL = "logical-all"
LOGICAL_NONE = "logical-none"
LOGICAL_SOME = "logical-some"
LOGICAL_NOT_ALL = "logical-not-all"
ABSOLUTE = "absolute"
PROPORTIONAL = "proportional"
EXCEPTION = "exception"
COMPARATIVE_ABSOLUTE = "comparative-absolute"
COMPARATIVE_PROPORTIONAL = "comparative-proportional"
SIMILARITY = "similarity"

LOGICAL_FAMILIES = frozenset(
    {LOGICAL_ALL, LOGICAL_NONE, LOGICAL_SOME, LOGICAL_NOT_ALL}
)
# count units: the bound talks about cardinalities
COUNT_FAMILIES = frozenset({ABSOLUTE, EXCEPTION, COMPARATIVE_ABSOLUTE})
# proportion units: the bound talks about a ratio of cardinalities
RATIO_FAMILIES = frozenset({PROPORTIONAL, COMPARATIVE_PROPORTIONAL, SIMILARITY})
NUMERIC_FAMILIES = COUNT_FAMILIES | RATIO_FAMILIES
FAMILIES = LOGICAL_FAMILIES | NUMERIC_FAMILIES

_SNAP_DENOMINATOR = 10**9

Real = Union[int, float, str, Fraction]


def as_fraction(value: Real) -> Fraction:
    """Normalize a numeric input to an exact Fraction.

    Ints, Fractions and decimal strings convert exactly; floats are snapped to
    the nearest rational with denominator <= 10**9 so that values written as
    short decimals keep their intended meaning.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("boolean is not a numeric bound")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise ValueError("bound must be finite, got %r" % value)
        return Fraction(value).limit_denominator(_SNAP_DENOMINATOR)
    raise TypeError("cannot interpret %r as a number" % (value,))


def _fmt(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return str(float(value))


@dataclass(frozen=True)
class Interval:
    """Closed (by default) numeric interval, possibly unbounded above.

    ``hi is None`` means unbounded above.  The strictness flags record open
    endpoints; they are produced only by logical quantifier translations and
    denominator-positivity constraints, never stored in parsed documents.
    """

    lo: Fraction
    hi: Optional[Fraction] = None
    lo_strict: bool = False
    hi_strict: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", as_fraction(self.lo))
        if self.hi is not None:
            object.__setattr__(self, "hi", as_fraction(self.hi))
            if self.lo > self.hi:
                raise ValueError(
                    "interval lower bound %s exceeds upper bound %s"
                    % (_fmt(self.lo), _fmt(self.hi))
                )

    @property
    def hi_unbounded(self) -> bool:
        return self.hi is None

    def contains(self, value: Real) -> bool:
        v = as_fraction(value)
        if self.lo_strict:
            if v <= self.lo:
                return False
        elif v < self.lo:
            return False
        if self.hi is None:
            return True
        if self.hi_strict:
            return v < self.hi
        return v <= self.hi

    def subset_of(self, other: "Interval") -> bool:
        """True when every point of this interval lies in ``other``.

        Strictness flags are ignored; cuts handled by the engine are closed.
        """
        if self.lo < other.lo:
            return False
        if other.hi is None:
            return True
        if self.hi is None:
            return False
        return self.hi <= other.hi

    def __str__(self) -> str:
        left = "(" if self.lo_strict else "["
        if self.hi is None:
            return "%s%s, inf)" % (left, _fmt(self.lo))
        right = ")" if self.hi_strict else "]"
        return "%s%s, %s%s" % (left, _fmt(self.lo), _fmt(self.hi), right)


@dataclass(frozen=True)
class Trapezoid:
    """Trapezoidal membership function with support [a, d] and kernel [b, c]."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if not (self.a <= self.b <= self.c <= self.d):
            raise ValueError(
                "trapezoid parameters must be ordered a <= b <= c <= d, got "
                "[%s, %s, %s, %s]"
                % (_fmt(self.a), _fmt(self.b), _fmt(self.c), _fmt(self.d))
            )

    @property
    def kernel(self) -> Interval:
        return Interval(self.b, self.c)

    @property
    def support(self) -> Interval:
        return Interval(self.a, self.d)

    def as_tuple(self) -> tuple:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class KernelSupportPair:
    """Kernel and support intervals of a fuzzy quantifier; kernel ⊆ support."""

    kernel: Interval
    support: Interval

    def __post_init__(self) -> None:
        if not self.kernel.subset_of(self.support):
            raise ValueError(
                "kernel %s is not contained in support %s"
                % (self.kernel, self.support)
            )


@dataclass(frozen=True)
class RimQuantifier:
    """Regular increasing monotone quantifier: membership p ** exponent on [0, 1]."""

    exponent: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponent", as_fraction(self.exponent))
        if self.exponent <= 0:
            raise ValueError("RIM exponent must be positive")


Shape = Union[Interval, Trapezoid, KernelSupportPair, RimQuantifier, None]
_FUZZY_SHAPES = (Trapezoid, RimQuantifier)


def _check_unit(family: str, lo: Fraction, hi: Optional[Fraction]) -> None:
    """Validate that a bound is expressed in the family's unit."""
    if family in (ABSOLUTE, EXCEPTION):
        if lo < 0:
            raise ValueError("%s bounds must be nonnegative" % family)
    elif family in (PROPORTIONAL, SIMILARITY):
        if lo < 0 or (hi is not None and hi > 1):
            raise ValueError("%s bounds must lie inside [0, 1]" % family)
    elif family == COMPARATIVE_PROPORTIONAL:
        # may exceed 1 ("double"), but a negative ratio of cardinalities is
        # meaningless
        if lo < 0:
            raise ValueError("%s bounds must be nonnegative" % family)
    # comparative-absolute differences may be negative; nothing to check


def _shape_bounds(shape: Shape) -> tuple:
    if isinstance(shape, Interval):
        return shape.lo, shape.hi
    if isinstance(shape, Trapezoid):
        return shape.a, shape.d
    if isinstance(shape, KernelSupportPair):
        return shape.support.lo, shape.support.hi
    if isinstance(shape, RimQuantifier):
        return Fraction(0), Fraction(1)
    raise TypeError("unsupported shape %r" % (shape,))


@dataclass(frozen=True)
class QuantifierSpec:
    """A quantifier family together with its bound shape.

    Logical families carry no shape.  Count families (absolute, exception,
    comparative-absolute) use count units; ratio families use proportions
    (comparative-proportional ratios may exceed 1).  RIM shapes are accepted
    for any ratio family and routed through alpha cuts like trapezoids.
    """

    family: str
    shape: Shape = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(
                "unknown quantifier family %r; expected one of %s"
                % (self.family, ", ".join(sorted(FAMILIES)))
            )
        if self.family in LOGICAL_FAMILIES:
            if self.shape is not None:
                raise ValueError(
                    "logical quantifier %s carries no bound shape" % self.family
                )
            return
        if self.shape is None:
            raise ValueError("quantifier %s needs a bound shape" % self.family)
        if isinstance(self.shape, RimQuantifier) and self.family not in RATIO_FAMILIES:
            raise ValueError(
                "RIM shapes define proportions; family %s uses counts" % self.family
            )
        lo, hi = _shape_bounds(self.shape)
        _check_unit(self.family, lo, hi)

    @property
    def is_fuzzy(self) -> bool:
        return isinstance(self.shape, (_FUZZY_SHAPES + (KernelSupportPair,)))

    @property
    def is_crisp(self) -> bool:
        return isinstance(self.shape, Interval)


def _rim_cut_lo(exponent: Fraction, level: Fraction) -> Fraction:
    """Smallest p with p ** exponent >= level, i.e. level ** (1/exponent)."""
    if level == 0:
        return Fraction(0)
    if level == 1:
        return Fraction(1)
    inv = 1 / exponent
    if inv.denominator == 1:
        return level ** inv.numerator
    value = float(level) ** float(inv)
    return Fraction(value).limit_denominator(_SNAP_DENOMINATOR)


def alpha_cut(q, level: Real) -> Interval:
    """Crisp interval of values whose membership is at least ``level``.

    ``q`` may be a QuantifierSpec with a fuzzy shape, or a bare Trapezoid or
    RimQuantifier.  Level 0 returns the closed support.
    """
    lam = as_fraction(level)
    if lam < 0 or lam > 1:
        raise ValueError("alpha-cut level must lie in [0, 1], got %s" % _fmt(lam))
    shape = q.shape if isinstance(q, QuantifierSpec) else q
    if isinstance(shape, Trapezoid):
        lo = shape.a + lam * (shape.b - shape.a)
        hi = shape.d - lam * (shape.d - shape.c)
        return Interval(lo, hi)
    if isinstance(shape, RimQuantifier):
        return Interval(_rim_cut_lo(shape.exponent, lam), Fraction(1))
    raise TypeError(
        "alpha_cut needs a fuzzy shape (Trapezoid or RimQuantifier), got %r"
        % (shape,)
    )


def kernel_of(q) -> Interval:
    """Level-1 cut of a quantifier shape (crisp intervals are their own kernel)."""
    shape = q.shape if isinstance(q, QuantifierSpec) else q
    if isinstance(shape, Interval):
        return shape
    if isinstance(shape, Trapezoid):
        return shape.kernel
    if isinstance(shape, KernelSupportPair):
        return shape.kernel
    if isinstance(shape, RimQuantifier):
        return Interval(1, 1)
    raise TypeError("no kernel for shape %r" % (shape,))


def support_of(q) -> Interval:
    """Level-0 cut (closed support) of a quantifier shape."""
    shape = q.shape if isinstance(q, QuantifierSpec) else q
    if isinstance(shape, Interval):
        return shape
    if isinstance(shape, Trapezoid):
        return shape.support
    if isinstance(shape, KernelSupportPair):
        return shape.support
    if isinstance(shape, RimQuantifier):
        return Interval(0, 1)
    raise TypeError("no support for shape %r" % (shape,))


def bound_at_level(q: QuantifierSpec, level: Real) -> Interval:
    """Crisp bound of a premise quantifier at a membership level.

    Crisp shapes pass through unchanged; trapezoids and RIM shapes are alpha
    cut; a kernel/support pair is read as the trapezoid it determines (linear
    interpolation between support at level 0 and kernel at level 1).
    """
    shape = q.shape
    if isinstance(shape, Interval):
        return shape
    if isinstance(shape, KernelSupportPair):
        if shape.support.hi is None or shape.kernel.hi is None:
            raise ValueError("cannot interpolate an unbounded kernel/support pair")
        shape = Trapezoid(
            shape.support.lo, shape.kernel.lo, shape.kernel.hi, shape.support.hi
        )
    return alpha_cut(shape, level)


@dataclass(frozen=True)
class FitReport:
    """Diagnostics from fitting a trapezoid through a cut collection.

    max_feasible_level is the highest level present in the cuts (1 when the
    collection is normalized).  residuals holds, per given level, the largest
    absolute deviation between the fitted sides and the actual cut endpoints.
    """

    max_feasible_level: Fraction
    residuals: tuple = field(default_factory=tuple)

    @property
    def max_residual(self) -> Fraction:
        if not self.residuals:
            return Fraction(0)
        return max(r for _, r in self.residuals)

    @property
    def normalized(self) -> bool:
        return self.max_feasible_level == 1


def fit_trapezoid(cuts: Sequence[tuple]) -> tuple:
    """Fit a trapezoid through a nested collection of (level, Interval) cuts.

    The fitted support is the level-0 cut and the fitted kernel is the highest
    given cut; the sides interpolate linearly between the two *at their
    levels*, so collections that top out below level 1 are fitted against
    their actual ceiling rather than an extrapolation.  Returns (Trapezoid,
    FitReport); the report carries the top level and per-level residuals of
    the piecewise-linear fit.

    Cut levels must be strictly increasing, start at 0, and the intervals must
    be nested and bounded; a nesting violation signals an optimizer bug
    upstream and raises ValueError.
    """
    if not cuts:
        raise ValueError("need at least one cut to fit")
    levels = []
    intervals = []
    for level, interval in cuts:
        levels.append(as_fraction(level))
        intervals.append(interval)
    if levels[0] != 0:
        raise ValueError("cut collection must start at level 0")
    for i in range(1, len(levels)):
        if levels[i] <= levels[i - 1]:
            raise ValueError("cut levels must be strictly increasing")
        if levels[i] > 1:
            raise ValueError("cut levels must not exceed 1")
    for iv in intervals:
        if iv.hi is None:
            raise ValueError("cannot fit a trapezoid through unbounded cuts")
    for i in range(1, len(intervals)):
        if not intervals[i].subset_of(intervals[i - 1]):
            raise ValueError(
                "cuts are not nested: level %s cut %s is not inside level %s cut %s"
                % (_fmt(levels[i]), intervals[i], _fmt(levels[i - 1]), intervals[i - 1])
            )

    top_level = levels[-1]
    lo0, hi0 = intervals[0].lo, intervals[0].hi
    lot, hit = intervals[-1].lo, intervals[-1].hi
    fitted = Trapezoid(lo0, lot, hit, hi0)

    residuals = []
    for lam, iv in zip(levels, intervals):
        t = lam / top_level if top_level > 0 else Fraction(0)
        lo_fit = lo0 + t * (lot - lo0)
        hi_fit = hi0 - t * (hi0 - hit)
        residuals.append((lam, max(abs(lo_fit - iv.lo), abs(hi_fit - iv.hi))))
    report = FitReport(max_feasible_level=top_level, residuals=tuple(residuals))
    return fitted, report


def interpolate_membership(cuts: Sequence[tuple], value: Real) -> Fraction:
    """Piecewise-linear membership of ``value`` in a nested cut collection.

    Between two computed levels the membership ramps linearly along the cut
    boundary; inside the highest cut it equals the highest level; outside the
    level-0 cut it is 0.  Unbounded upper endpoints are treated as +infinity
    (no upper ramp on that side).
    """
    if not cuts:
        raise ValueError("no cuts to interpolate")
    v = as_fraction(value)
    pairs = [(as_fraction(level), iv) for level, iv in cuts]
    pairs.sort(key=lambda p: p[0])

    base = pairs[0][1]
    if v < base.lo or (base.hi is not None and v > base.hi):
        return Fraction(0)

    membership = pairs[0][0]
    for (lam_a, iv_a), (lam_b, iv_b) in zip(pairs, pairs[1:]):
        inside_b = v >= iv_b.lo and (iv_b.hi is None or v <= iv_b.hi)
        if inside_b:
            membership = lam_b
            continue
        # v sits between cut a and cut b; ramp on whichever side it fell out
        if v < iv_b.lo:
            gap = iv_b.lo - iv_a.lo
            frac = (v - iv_a.lo) / gap if gap > 0 else Fraction(0)
        else:
            assert iv_a.hi is not None and iv_b.hi is not None
            gap = iv_a.hi - iv_b.hi
            frac = (iv_a.hi - v) / gap if gap > 0 else Fraction(0)
        return lam_a + frac * (lam_b - lam_a)
    return membership
