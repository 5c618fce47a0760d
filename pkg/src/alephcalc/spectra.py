"""Closed-form spectrum calculators for three worked classes.

* Hilbert spaces with isometries: internally categorical everywhere (the
  basis is the internal size); by cardinality the count under GCH is the
  0/1/2 trichotomy driven by cofinality.  Counts deliberately ignore
  finite-dimensional spaces: the cardinality argument (|H| = kappa^{aleph_0}
  for infinite-dimensional H) presupposes infinite dimension, and at
  aleph_1 under CH finite-dimensional spaces would otherwise inflate the
  count to aleph_1-many sizes of the continuum.
* Well-orders of type at most lam^+ under end-extension: internal size is
  cf(alpha) + aleph_0, never singular.
* The constructible-model class K^mu: categoricity in power alternates with
  the ambient set theory (V=L, 0# status), while by internal size it is
  nowhere categorical — only lower bounds are ever reported, never exact
  counts, since exactness is open.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cardinals import (
    ALEPH0,
    ALEPH2,
    CardinalAtom,
    CardinalExpr,
    SuccessorCard,
    card_compare,
    card_index_classify,
    cofinality,
    is_regular,
    successor,
)
from .hypotheses import (
    CardinalInterval,
    Determined,
    HypothesisContext,
    ZeroSharp,
    is_true,
    l_cofinality,
    sch_holds_at,
)
from .arithmetic import is_mu_closed
from .ordinals import CnfOrdinal, Ordering, Successor, Zero, ord_classify


@dataclass(frozen=True)
class Finite:
    n: int
    used: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("finite counts start at 1; use ZeroCount for none")


@dataclass(frozen=True)
class Card:
    value: CardinalExpr
    used: tuple[str, ...] = ()


@dataclass(frozen=True)
class AtLeastCard:
    value: CardinalExpr
    used: tuple[str, ...] = ()


@dataclass(frozen=True)
class ZeroCount:
    used: tuple[str, ...] = ()


@dataclass(frozen=True)
class UndeterminedCount:
    reason: str


CountValue = Finite | Card | AtLeastCard | ZeroCount | UndeterminedCount


def _counts_equal(a: CountValue, b: CountValue) -> bool:
    if type(a) is not type(b):
        return False
    if isinstance(a, Finite):
        return a.n == b.n
    if isinstance(a, (Card, AtLeastCard)):
        return a.value == b.value
    return isinstance(a, ZeroCount)


# --- Hilbert spaces ---------------------------------------------------------


def hilbert_count_by_cardinality(lam: CardinalExpr, ctx: HypothesisContext) -> CountValue:
    """Isomorphism classes of infinite-dimensional Hilbert spaces of cardinality lam.

    A basis of size kappa gives cardinality kappa^{aleph_0}; under GCH that
    is kappa or kappa^+, which yields the 0/1/2 trichotomy.  Without GCH the
    count is governed by the continuum function and is reported undetermined.
    """
    if lam <= ALEPH0:
        raise ValueError("requires an uncountable cardinal")
    if not ctx.gch:
        return UndeterminedCount(
            "count is |beta|+1 where lam^{aleph_0} = aleph_{alpha+beta} with alpha least "
            "such that aleph_alpha^{aleph_0} = lam^{aleph_0}; this needs the continuum function (assume GCH)"
        )
    if cofinality(lam) == ALEPH0:
        return ZeroCount(("GCH",))
    kind = card_index_classify(lam)
    if isinstance(kind, SuccessorCard) and cofinality(kind.pred) == ALEPH0:
        return Finite(2, ("GCH",))
    return Finite(1, ("GCH",))


def hilbert_count_by_internal_size(lam: CardinalExpr) -> CountValue:
    """Categorical in every internal size: the basis determines the space."""
    return Finite(1)


# --- well-orders ------------------------------------------------------------


def wellorder_internal_size(
    alpha_base: CardinalExpr | None,
    alpha_tail: CnfOrdinal,
    lam: CardinalExpr,
) -> CardinalExpr:
    """Internal size of (alpha, <) in the class of well-orders of type <= lam^+.

    The closure of A inside alpha is alpha itself iff A is cofinal, so the
    internal size is cf(alpha) + aleph_0 — in particular never singular.
    """
    if alpha_base is not None and not isinstance(lam, CardinalAtom):
        lam_plus = successor(lam)
        cmp = card_compare(alpha_base, lam_plus)
        if cmp is Ordering.GREATER or (cmp is Ordering.EQUAL and not alpha_tail.is_zero):
            raise ValueError("outside class")
    kind = ord_classify(alpha_tail)
    if isinstance(kind, Successor):
        return ALEPH0
    if isinstance(kind, Zero):
        if alpha_base is None:
            return ALEPH0
        return cofinality(alpha_base)
    # Nonzero CNF limit tail: countable limit, cofinality omega.
    return ALEPH0


# --- the constructible class K^mu -------------------------------------------


def _cond3_certified(mu: CardinalExpr, lam: CardinalExpr) -> bool:
    # In L, is lam^+ certifiedly not the successor of a cardinal of
    # L-cofinality below mu?  For mu = aleph_0 no infinite cardinal can have
    # smaller cofinality; for singular lam, covering pins (lam^+)^L = lam^+
    # with L-predecessor lam, whose L-cofinality the caller has pinned >= mu.
    if mu == ALEPH0:
        return True
    return not is_regular(lam)


def shelah_count_by_cardinality(
    mu: CardinalExpr, lam: CardinalExpr, ctx: HypothesisContext
) -> CountValue:
    """I(K^mu, lam): isomorphism classes of cardinality lam, by hypothesis."""
    if not is_regular(mu):
        raise ValueError("mu must be regular")
    if lam < mu:
        raise ValueError("lam must be at least mu")
    if ctx.v_equals_l:
        if cofinality(lam) < mu:
            return Finite(1, ("V=L",))
        return Card(successor(lam), ("V=L",))
    if ctx.zero_sharp is ZeroSharp.EXISTS:
        return Card(successor(lam), ("sharp",))
    if ctx.zero_sharp is ZeroSharp.NOT_EXISTS:
        return _count_without_sharp(mu, lam)
    with_sharp = Card(successor(lam), ())
    without = _strip_used(_count_without_sharp(mu, lam))
    if _counts_equal(with_sharp, without):
        # Both 0# branches agree, so the count is a ZFC fact at this point.
        return without
    return UndeterminedCount(
        f"the status of 0# (with sharp: {_render(with_sharp)}; without: {_render(without)})"
    )


def _strip_used(c: CountValue) -> CountValue:
    if isinstance(c, Finite):
        return Finite(c.n)
    if isinstance(c, Card):
        return Card(c.value)
    if isinstance(c, AtLeastCard):
        return AtLeastCard(c.value)
    if isinstance(c, ZeroCount):
        return ZeroCount()
    return c


def _render(c: CountValue) -> str:
    if isinstance(c, Finite):
        return str(c.n)
    if isinstance(c, Card):
        return str(c.value)
    if isinstance(c, AtLeastCard):
        return f">={c.value}"
    if isinstance(c, ZeroCount):
        return "0"
    return "undetermined"


def _count_without_sharp(mu: CardinalExpr, lam: CardinalExpr) -> CountValue:
    ctx_ns = HypothesisContext(zero_sharp=ZeroSharp.NOT_EXISTS)
    pinned = l_cofinality(lam, ctx_ns)
    assert isinstance(pinned, Determined)
    interval: CardinalInterval = pinned.value
    used = ("no-sharp",)
    if interval.is_point:
        cf_l = interval.lo
        if cf_l < mu:
            return Finite(1, used)
        if _cond3_certified(mu, lam):
            return Card(successor(lam), used)
        return AtLeastCard(lam, used)
    # cf(lam) = aleph_0, so cf^L(lam) is aleph_0 or aleph_1.
    if mu >= ALEPH2:
        return Finite(1, used)
    if mu == ALEPH0:
        # cf^L >= aleph_0 trivially and condition (3) is automatic.
        return Card(successor(lam), used)
    return UndeterminedCount(
        f"cf^L({lam}) lies in [aleph(0), aleph(1)] and mu = aleph(1) sits between the cases"
    )


def shelah_count_by_internal_size(
    mu: CardinalExpr, lam: CardinalExpr, ctx: HypothesisContext
) -> CountValue:
    """Lower bound on models of internal size lam in K^mu; never finite."""
    if not is_regular(mu):
        raise ValueError("mu must be regular")
    if lam < mu:
        raise ValueError("lam must be at least mu")
    if is_regular(lam):
        return AtLeastCard(successor(lam))
    closed = is_mu_closed(lam, mu, ctx)
    if is_true(closed):
        return AtLeastCard(successor(lam), closed.used)
    sch = sch_holds_at(ctx, mu, lam)
    if is_true(sch):
        return AtLeastCard(successor(lam), sch.used)
    return UndeterminedCount(
        f"neither regularity nor mu-closedness of {lam} nor SCH({mu}) below {lam} is available"
    )
