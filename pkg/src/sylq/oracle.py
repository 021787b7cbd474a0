"""Brute-force ground truth for small universes.

Enumerates every integer population (one nonnegative count per atom) up to a
total-size cap, keeps the populations on which all premises hold, and reports
the exact attainable range of the conclusion measure.  This is the semantic
reference the optimizer is validated against: the LP interval must contain
every value the oracle can attain.

Premise satisfaction is decided by the quantifier definitions evaluated on
exact integers (comparisons are cross-multiplied, so no rationals are formed
row-wise), and populations on which any ratio statement's denominator is
empty are excluded, mirroring the engine's structural nonemptiness
constraints; both sides then quantify over the same populations.

Enumeration is vectorized with numpy and chunked so peak memory stays
bounded; a combinatorial guard refuses instance sizes whose composition count
exceeds ten million.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from .compiler import _denominator_atoms
from .quantifiers import (
    ABSOLUTE,
    COMPARATIVE_ABSOLUTE,
    COMPARATIVE_PROPORTIONAL,
    EXCEPTION,
    LOGICAL_ALL,
    LOGICAL_NONE,
    LOGICAL_NOT_ALL,
    LOGICAL_SOME,
    PROPORTIONAL,
    RATIO_FAMILIES,
    SIMILARITY,
    Interval,
)
from .statements import Syllogism
from .terms import SizeGuardError, atoms_of

__all__ = ["COMPOSITION_GUARD", "enumerate_range", "statement_predicate"]

# refuse to enumerate more compositions than this
COMPOSITION_GUARD = 10**7
# split any single block beyond this many rows
_CHUNK_ROWS = 1 << 22

_FLOAT_SLACK = 1e-9


def _sum_over(counts: np.ndarray, atoms) -> np.ndarray:
    idx = list(atoms)
    if not idx:
        return np.zeros(len(counts), dtype=np.int64)
    return counts[:, idx].sum(axis=1)


def _band_mask(num: np.ndarray, den: Optional[np.ndarray], bound: Interval) -> np.ndarray:
    """bound.lo <= num/den <= bound.hi on integers, cross-multiplied.

    With den None the bound applies to num directly.  Fractions p/q are
    compared as q*num >= p*den, which is exact in int64 at these sizes.
    """
    if den is None:
        den = np.ones(len(num), dtype=np.int64)
    lo = bound.lo
    mask = lo.denominator * num >= lo.numerator * den
    if bound.hi is not None:
        hi = bound.hi
        mask &= hi.denominator * num <= hi.numerator * den
    return mask


def statement_predicate(
    stmt, bound: Optional[Interval], properties: Sequence[str], counts: np.ndarray
) -> np.ndarray:
    """Truth of one quantified statement on each row of a population matrix.

    Implements the quantifier definitions directly (not the compiled rows):
    an empty-restriction proportional statement and an empty-union similarity
    statement are vacuously true, and a comparative-proportional statement
    with an empty second term holds only if the first term is empty too
    (cross-multiplied reading).  ``counts`` is an (n, K) integer matrix.
    """
    a = atoms_of(stmt.restriction, properties)
    b = atoms_of(stmt.scope, properties)
    family = stmt.family

    if family == LOGICAL_ALL:
        return _sum_over(counts, a - b) == 0
    if family == LOGICAL_NONE:
        return _sum_over(counts, a & b) == 0
    if family == LOGICAL_SOME:
        return _sum_over(counts, a & b) > 0
    if family == LOGICAL_NOT_ALL:
        return _sum_over(counts, a - b) > 0

    if bound is None:
        raise ValueError("family %s needs a crisp bound" % family)
    if family == ABSOLUTE:
        return _band_mask(_sum_over(counts, a & b), None, bound)
    if family == EXCEPTION:
        return _band_mask(_sum_over(counts, a - b), None, bound)
    if family == COMPARATIVE_ABSOLUTE:
        diff = _sum_over(counts, a) - _sum_over(counts, b)
        return _band_mask(diff, None, bound)
    if family == PROPORTIONAL:
        return _band_mask(_sum_over(counts, a & b), _sum_over(counts, a), bound)
    if family == COMPARATIVE_PROPORTIONAL:
        return _band_mask(_sum_over(counts, a), _sum_over(counts, b), bound)
    if family == SIMILARITY:
        return _band_mask(_sum_over(counts, a & b), _sum_over(counts, a | b), bound)
    raise ValueError("unknown family %r" % family)


def _compositions(
    total: int, k: int, cache: Dict[Tuple[int, int], np.ndarray], store: bool = True
) -> np.ndarray:
    """All ways to write ``total`` as an ordered sum of k nonnegative ints.

    Sub-blocks are memoized (they recur across totals and leading counts);
    top-level blocks are used once each and are not retained.
    """
    key = (total, k)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if k == 1:
        block = np.array([[total]], dtype=np.int64)
    else:
        parts = []
        for first in range(total + 1):
            sub = _compositions(total - first, k - 1, cache)
            col = np.full((len(sub), 1), first, dtype=np.int64)
            parts.append(np.hstack((col, sub)))
        block = np.vstack(parts)
    if store:
        cache[key] = block
    return block


def _blocks(total: int, k: int, cache: Dict[Tuple[int, int], np.ndarray]):
    """Yield composition blocks of bounded size (split on the first count)."""
    if k == 1 or math.comb(total + k - 1, k - 1) <= _CHUNK_ROWS:
        yield _compositions(total, k, cache, store=False)
        return
    for first in range(total + 1):
        for sub in _blocks(total - first, k - 1, cache):
            col = np.full((len(sub), 1), first, dtype=np.int64)
            yield np.hstack((col, sub))


class _Extrema:
    """Exact running min/max of num/den over candidate rows.

    Floats preselect candidates near the chunk optimum; the survivors are
    compared as Fractions, so the result is exact regardless of rounding.
    """

    def __init__(self) -> None:
        self.lo: Optional[Fraction] = None
        self.hi: Optional[Fraction] = None

    def update(self, num: np.ndarray, den: np.ndarray) -> None:
        if len(num) == 0:
            return
        ratio = num / den
        for pick_min in (True, False):
            edge = ratio.min() if pick_min else ratio.max()
            near = ratio <= edge + _FLOAT_SLACK if pick_min else ratio >= edge - _FLOAT_SLACK
            # ties collapse to a handful of distinct (num, den) pairs
            pairs = np.unique(np.stack((num[near], den[near]), axis=1), axis=0)
            for p, q in pairs:
                value = Fraction(int(p), int(q))
                if pick_min:
                    if self.lo is None or value < self.lo:
                        self.lo = value
                elif self.hi is None or value > self.hi:
                    self.hi = value


def enumerate_range(
    syl: Syllogism,
    universe_cap: int,
    premise_bounds: Optional[Sequence[Optional[Interval]]] = None,
) -> Optional[Interval]:
    """Exact range of the conclusion measure over small integer populations.

    Every population with total size up to ``universe_cap`` (exactly the
    declared universe size when the syllogism fixes one) is tested against
    all premises; the conclusion measure is evaluated on the survivors.
    Returns None when no population qualifies.  Premises must carry crisp
    interval bounds, or ``premise_bounds`` must supply them (one entry per
    premise, None for logical premises).
    """
    k = 1 << syl.s
    if premise_bounds is None:
        premise_bounds = []
        for i, premise in enumerate(syl.premises):
            shape = premise.quantifier.shape
            if shape is None:
                premise_bounds.append(None)
            elif isinstance(shape, Interval):
                premise_bounds.append(shape)
            else:
                raise ValueError(
                    "premise %d carries a fuzzy quantifier; cut it to an "
                    "interval first" % (i + 1)
                )
    elif len(premise_bounds) != len(syl.premises):
        raise ValueError("need exactly one bound per premise")

    if syl.universe_size is not None:
        if syl.universe_size.denominator != 1:
            return None  # no integer population has a fractional total
        totals = [int(syl.universe_size)]
    else:
        totals = list(range(universe_cap + 1))

    n_compositions = sum(math.comb(t + k - 1, k - 1) for t in totals)
    if n_compositions > COMPOSITION_GUARD:
        raise SizeGuardError(
            "enumerating %d populations exceeds the %d guard; lower the cap"
            % (n_compositions, COMPOSITION_GUARD)
        )

    # denominators that must be nonempty, conclusion included
    statements = list(syl.premises) + [syl.conclusion]
    positivity = [
        _denominator_atoms(stmt, syl.properties)
        for stmt in statements
        if stmt.family in RATIO_FAMILIES
    ]

    conc = syl.conclusion
    a = atoms_of(conc.restriction, syl.properties)
    b = atoms_of(conc.scope, syl.properties)
    if conc.family == ABSOLUTE:
        num_atoms, den_atoms, signed = a & b, None, None
    elif conc.family == EXCEPTION:
        num_atoms, den_atoms, signed = a - b, None, None
    elif conc.family == COMPARATIVE_ABSOLUTE:
        num_atoms, den_atoms, signed = a, None, b
    elif conc.family == PROPORTIONAL:
        num_atoms, den_atoms, signed = a & b, a, None
    elif conc.family == COMPARATIVE_PROPORTIONAL:
        num_atoms, den_atoms, signed = a, b, None
    else:
        num_atoms, den_atoms, signed = a & b, a | b, None

    int_lo: Optional[int] = None
    int_hi: Optional[int] = None
    extrema = _Extrema()
    cache: Dict[Tuple[int, int], np.ndarray] = {}

    for total in totals:
        for counts in _blocks(total, k, cache):
            mask = np.ones(len(counts), dtype=bool)
            for stmt, bound in zip(syl.premises, premise_bounds):
                mask &= statement_predicate(stmt, bound, syl.properties, counts)
                if not mask.any():
                    break
            if not mask.any():
                continue
            for atoms in positivity:
                mask &= _sum_over(counts, atoms) > 0
            if not mask.any():
                continue
            kept = counts[mask]
            num = _sum_over(kept, num_atoms)
            if signed is not None:
                num = num - _sum_over(kept, signed)
            if den_atoms is None:
                lo_block, hi_block = int(num.min()), int(num.max())
                int_lo = lo_block if int_lo is None else min(int_lo, lo_block)
                int_hi = hi_block if int_hi is None else max(int_hi, hi_block)
            else:
                extrema.update(num, _sum_over(kept, den_atoms))

    if den_atoms is None:
        if int_lo is None:
            return None
        return Interval(Fraction(int_lo), Fraction(int_hi))
    if extrema.lo is None:
        return None
    return Interval(extrema.lo, extrema.hi)
