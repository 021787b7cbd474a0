from fractions import Fraction

import pytest

from sylq import (
    ABSOLUTE,
    PROPORTIONAL,
    Conclusion,
    InferenceConfig,
    InfeasiblePremisesError,
    Interval,
    KernelSupportPair,
    Prop,
    QuantifierSpec,
    RimQuantifier,
    Statement,
    Syllogism,
    Trapezoid,
    infer,
    infer_alpha,
    infer_crisp,
    infer_ker_sup,
    parse,
)
from conftest import load_fixture

F = Fraction
P, Q = Prop("p"), Prop("q")
NAMES = ("p", "q")


def one_premise(shape, family=ABSOLUTE, conclusion_family=ABSOLUTE, universe=None):
    return Syllogism(
        NAMES,
        (Statement(QuantifierSpec(family, shape), P, Q),),
        Conclusion(conclusion_family, P, Q),
        universe_size=universe,
    )


def test_config_validation():
    with pytest.raises(ValueError):
        InferenceConfig(levels=1)
    with pytest.raises(ValueError):
        InferenceConfig(eps_count=F(0))
    with pytest.raises(ValueError):
        InferenceConfig(eps_prop=F(-1, 2))


def test_auto_mode_follows_the_premise_shapes():
    assert infer(one_premise(Interval(1, 2))).mode == "crisp"
    assert infer(one_premise(Trapezoid(0, 1, 2, 3))).mode == "alpha"
    assert (
        infer(
            one_premise(RimQuantifier(1), family=PROPORTIONAL,
                        conclusion_family=PROPORTIONAL)
        ).mode
        == "alpha"
    )
    pair = KernelSupportPair(Interval(1, 2), Interval(0, 3))
    assert infer(one_premise(pair)).mode == "kersup"


def test_unknown_mode_is_rejected():
    with pytest.raises(ValueError):
        infer(one_premise(Interval(1, 2)), mode="fuzzy")


def test_crisp_mode_requires_crisp_premises():
    with pytest.raises(ValueError):
        infer_crisp(one_premise(Trapezoid(0, 1, 2, 3)))


def test_crisp_infeasible_raises():
    syl = one_premise(Interval(2, 3), universe=F(1))
    with pytest.raises(InfeasiblePremisesError):
        infer_crisp(syl)


def test_crisp_result_structure():
    result = infer_crisp(one_premise(Interval(1, 2)))
    assert result.crisp == Interval(F(1), F(2))
    assert result.bounds == (F(1), F(2))
    assert result.cuts == [(F(0), result.crisp), (F(1), result.crisp)]
    assert result.max_feasible_level == 1
    assert result.metadata["status"] == "bounded"
    assert result.metadata["epsilon_kind"] == "count"


def test_alpha_on_fuzzy_count_premise():
    result = infer_alpha(
        one_premise(Trapezoid(1, 2, 4, 5)), InferenceConfig(levels=3)
    )
    assert [lam for lam, _ in result.cuts] == [0, F(1, 2), 1]
    assert result.cuts[0][1] == Interval(F(1), F(5))
    assert result.cuts[1][1] == Interval(F(3, 2), F(9, 2))
    assert result.cuts[2][1] == Interval(F(2), F(4))
    assert result.fitted == Trapezoid(1, 2, 4, 5)
    assert result.membership(3) == 1
    assert result.membership(F(3, 2)) == F(1, 2)
    assert result.membership(6) == 0


def test_kersup_pair_nests_and_fits():
    syl = one_premise(Trapezoid(1, 2, 4, 5))
    result = infer_ker_sup(syl)
    assert result.pair == KernelSupportPair(
        Interval(F(2), F(4)), Interval(F(1), F(5))
    )
    assert result.fitted == Trapezoid(1, 2, 4, 5)
    assert result.max_feasible_level == 1


def test_kersup_degrades_when_the_kernel_contradicts():
    # kernel readings [3,3] and [4,4] clash; supports [2,4] and [3,5] overlap
    syl = Syllogism(
        NAMES,
        (
            Statement(QuantifierSpec(ABSOLUTE, Trapezoid(2, 3, 3, 4)), P, Q),
            Statement(QuantifierSpec(ABSOLUTE, Trapezoid(3, 4, 4, 5)), P, Q),
        ),
        Conclusion(ABSOLUTE, P, Q),
    )
    result = infer_ker_sup(syl)
    assert result.pair is None
    assert result.max_feasible_level == 0
    assert result.fitted is None
    assert result.metadata["non_normalized"] is True
    assert any("level" in w for w in result.metadata["warnings"])
    level0, level1 = result.cuts
    assert level0[1] == Interval(F(3), F(4))
    assert level1[1] is None


def test_kersup_support_contradiction_raises():
    syl = Syllogism(
        NAMES,
        (
            Statement(QuantifierSpec(ABSOLUTE, Trapezoid(0, 1, 1, 2)), P, Q),
            Statement(QuantifierSpec(ABSOLUTE, Trapezoid(5, 6, 6, 7)), P, Q),
        ),
        Conclusion(ABSOLUTE, P, Q),
    )
    with pytest.raises(InfeasiblePremisesError):
        infer_ker_sup(syl)


def test_two_sided_passrate_shapes_cap_the_upper_bound():
    # with genuinely two-sided premise trapezoids the conclusion's upper
    # bound follows the tightest premise ceiling instead of staying at 1
    doc = parse(
        """
        terms: student, phys, math, phil, lang
        premise: prop tz(0.7, 0.8, 0.9, 1) student -> phys
        premise: prop tz(0.75, 0.8, 0.85, 0.9) student -> math
        premise: prop tz(0.9, 0.92, 1, 1) student -> phil
        premise: prop tz(0.85, 0.9, 0.95, 1) student -> lang
        conclude: prop? student -> phys & math & phil & lang
        """
    )
    result = infer_ker_sup(doc.to_syllogism())
    assert result.pair.kernel == Interval(F(42, 100), F(85, 100))
    assert result.pair.support == Interval(F(20, 100), F(90, 100))


def test_alpha_matches_kersup_at_the_grid_ends():
    syl = load_fixture("course_passrates_fuzzy.syl").to_syllogism()
    alpha = infer_alpha(syl, InferenceConfig(levels=5))
    pair = infer_ker_sup(syl).pair
    assert alpha.cuts[0][1] == pair.support
    assert alpha.cuts[-1][1] == pair.kernel


def test_unit_mix_warning_with_declared_universe():
    doc = parse(
        """
        terms: p, q
        universe: 10
        premise: abs[2, 4] p -> q
        premise: prop[0.1, 0.9] q -> p
        conclude: abs? p -> q
        """
    )
    result = infer_crisp(doc.to_syllogism())
    assert any("mix" in w for w in result.metadata["warnings"])
    assert result.metadata["epsilon_kind"] == "proportion"
