import pytest
from hypothesis import given
from hypothesis import strategies as st

from alephcalc import (
    ALEPH0,
    ALEPH1,
    ALEPH2,
    Aleph,
    AtLeast,
    CardinalInterval,
    Determined,
    EMPTY_CONTEXT,
    ExplicitSet,
    InconsistentContextError,
    Independent,
    SchAssumption,
    UnboundedBelow,
    ZeroSharp,
    aleph,
    build_context,
    cofinality,
    ctx_implies_sch,
    extend_context,
    l_cofinality,
    sch_holds_at,
)
from alephcalc.hypotheses import is_true
from alephcalc.ordinals import OMEGA, cnf_add, from_int

from conftest import alephs

A_W = aleph(OMEGA)
A_W1 = aleph(cnf_add(OMEGA, from_int(1)))
GCH = build_context(gch=True)
VL = build_context(v_equals_l=True)
SHARP = build_context(zero_sharp=ZeroSharp.EXISTS)
NO_SHARP = build_context(zero_sharp=ZeroSharp.NOT_EXISTS)


class TestBuildContext:
    def test_v_equals_l_closes_to_gch_and_no_sharp(self):
        assert VL.gch is True
        assert VL.zero_sharp is ZeroSharp.NOT_EXISTS

    def test_empty_context_is_agnostic(self):
        ctx = build_context()
        assert ctx == EMPTY_CONTEXT
        assert not ctx.gch and not ctx.v_equals_l
        assert ctx.zero_sharp is ZeroSharp.UNKNOWN

    def test_inconsistent_pair_rejected(self):
        with pytest.raises(InconsistentContextError, match="inconsistent context"):
            build_context(v_equals_l=True, zero_sharp=ZeroSharp.EXISTS)
        with pytest.raises(InconsistentContextError):
            extend_context(SHARP, v_equals_l=True)
        with pytest.raises(InconsistentContextError):
            extend_context(NO_SHARP, zero_sharp=ZeroSharp.EXISTS)

    def test_idempotent(self):
        ctx = build_context(
            gch=True,
            v_equals_l=True,
            sch=(SchAssumption(ALEPH1, AtLeast(ALEPH2)),),
        )
        again = build_context(
            gch=ctx.gch, v_equals_l=ctx.v_equals_l, zero_sharp=ctx.zero_sharp, sch=ctx.sch
        )
        assert again == ctx

    def test_singular_mu_rejected_in_sch(self):
        with pytest.raises(ValueError, match="regular"):
            build_context(sch=(SchAssumption(A_W, AtLeast(A_W)),))


class TestCtxImpliesSch:
    def test_gch_covers_everything(self):
        assert is_true(ctx_implies_sch(GCH, ALEPH1, A_W))
        assert ctx_implies_sch(GCH, ALEPH1, A_W).used == ("GCH",)

    def test_empty_context_is_independent(self):
        v = ctx_implies_sch(EMPTY_CONTEXT, ALEPH1, A_W)
        assert isinstance(v, Independent)
        assert v.missing == ("SCH(aleph(1)) at aleph(w)",)

    def test_declared_at_least_scope(self):
        ctx = build_context(sch=(SchAssumption(ALEPH1, AtLeast(ALEPH2)),))
        assert is_true(ctx_implies_sch(ctx, ALEPH1, aleph(3)))
        assert isinstance(ctx_implies_sch(ctx, ALEPH1, ALEPH1), Independent)

    def test_declared_explicit_set(self):
        ctx = build_context(sch=(SchAssumption(ALEPH1, ExplicitSet((A_W, aleph(3)))),))
        assert is_true(ctx_implies_sch(ctx, ALEPH1, A_W))
        assert isinstance(ctx_implies_sch(ctx, ALEPH1, aleph(4)), Independent)

    def test_unbounded_below_successor_pins_predecessor(self):
        ctx = build_context(sch=(SchAssumption(ALEPH1, UnboundedBelow(A_W1)),))
        assert is_true(ctx_implies_sch(ctx, ALEPH1, A_W))
        assert isinstance(ctx_implies_sch(ctx, ALEPH1, ALEPH2), Independent)

    def test_unbounded_below_limit_covers_no_point(self):
        ctx = build_context(sch=(SchAssumption(ALEPH1, UnboundedBelow(A_W)),))
        assert isinstance(ctx_implies_sch(ctx, ALEPH1, ALEPH2), Independent)

    def test_higher_mu_covers_lower_mu(self):
        ctx = build_context(sch=(SchAssumption(ALEPH2, AtLeast(ALEPH2)),))
        assert is_true(ctx_implies_sch(ctx, ALEPH1, aleph(3)))

    def test_lower_mu_does_not_cover_higher(self):
        ctx = build_context(sch=(SchAssumption(ALEPH1, AtLeast(ALEPH1)),))
        assert isinstance(ctx_implies_sch(ctx, ALEPH2, aleph(3)), Independent)

    def test_aleph0_is_trivial(self):
        assert is_true(ctx_implies_sch(EMPTY_CONTEXT, ALEPH0, A_W))

    def test_preconditions(self):
        with pytest.raises(ValueError, match="regular"):
            ctx_implies_sch(GCH, A_W, A_W)
        with pytest.raises(ValueError, match="at least mu"):
            ctx_implies_sch(GCH, ALEPH2, ALEPH1)


class TestSchHoldsAt:
    def test_gch(self):
        assert is_true(sch_holds_at(GCH, ALEPH1, A_W))

    def test_successor_case_degrades_to_point(self):
        ctx = build_context(sch=(SchAssumption(ALEPH1, ExplicitSet((A_W,))),))
        assert is_true(sch_holds_at(ctx, ALEPH1, A_W1))
        assert isinstance(sch_holds_at(ctx, ALEPH1, aleph(cnf_add(OMEGA, from_int(2)))), Independent)

    def test_limit_case_needs_unbounded_coverage(self):
        at_least = build_context(sch=(SchAssumption(ALEPH1, AtLeast(ALEPH2)),))
        assert is_true(sch_holds_at(at_least, ALEPH1, A_W))
        unbounded = build_context(sch=(SchAssumption(ALEPH1, UnboundedBelow(A_W)),))
        assert is_true(sch_holds_at(unbounded, ALEPH1, A_W))
        explicit = build_context(sch=(SchAssumption(ALEPH1, ExplicitSet((ALEPH2,))),))
        assert isinstance(sch_holds_at(explicit, ALEPH1, A_W), Independent)

    def test_at_least_scope_must_start_below_the_limit(self):
        ctx = build_context(sch=(SchAssumption(ALEPH1, AtLeast(A_W)),))
        assert isinstance(sch_holds_at(ctx, ALEPH1, A_W), Independent)
        assert is_true(sch_holds_at(ctx, ALEPH1, Aleph(ALEPH1)))


class TestLCofinality:
    def test_v_equals_l_pins_cofinality(self):
        v = l_cofinality(A_W, VL)
        assert v == Determined(CardinalInterval(ALEPH0, ALEPH0), ("V=L",))

    def test_sharp_makes_uncountables_regular_in_l(self):
        v = l_cofinality(A_W, SHARP)
        assert isinstance(v, Determined)
        assert v.value == CardinalInterval(A_W, A_W)

    def test_no_sharp_covering_interval(self):
        v = l_cofinality(Aleph(ALEPH2), NO_SHARP)
        assert isinstance(v, Determined)
        assert v.value == CardinalInterval(ALEPH2, ALEPH2)
        assert v.value.is_point

    def test_no_sharp_countable_cofinality_is_a_real_interval(self):
        v = l_cofinality(A_W, NO_SHARP)
        assert isinstance(v, Determined)
        assert v.value == CardinalInterval(ALEPH0, ALEPH1)
        assert not v.value.is_point

    def test_unknown_sharp_is_independent(self):
        v = l_cofinality(A_W, EMPTY_CONTEXT)
        assert isinstance(v, Independent)

    def test_aleph0_is_absolute(self):
        assert l_cofinality(ALEPH0, EMPTY_CONTEXT) == Determined(CardinalInterval(ALEPH0, ALEPH0))

    @given(alephs())
    def test_v_equals_l_always_exact(self, lam):
        v = l_cofinality(lam, VL)
        assert isinstance(v, Determined)
        assert v.value.lo == v.value.hi == cofinality(lam)


def _covered_pairs(ctx):
    """All (mu, card) pairs from a fixed probe family with a Determined answer."""
    probes = [ALEPH0, ALEPH1, ALEPH2, aleph(3), A_W, A_W1, Aleph(ALEPH1)]
    out = []
    for mu in (ALEPH0, ALEPH1, ALEPH2):
        for card in probes:
            if card >= mu:
                v = ctx_implies_sch(ctx, mu, card)
                if isinstance(v, Determined):
                    out.append(((mu, card), v.value))
    return out


@given(
    st.booleans(),
    st.sampled_from([ZeroSharp.UNKNOWN, ZeroSharp.EXISTS, ZeroSharp.NOT_EXISTS]),
    st.booleans(),
)
def test_monotonicity_of_determined_verdicts(gch, sharp, add_sch):
    try:
        small = build_context(gch=gch, zero_sharp=sharp)
    except InconsistentContextError:
        return
    sch = (SchAssumption(ALEPH1, AtLeast(ALEPH2)),) if add_sch else ()
    big = extend_context(small, gch=True, sch=sch)
    small_answers = dict(_covered_pairs(small))
    big_answers = dict(_covered_pairs(big))
    for key, value in small_answers.items():
        assert big_answers[key] == value
