"""Hypothesis-relative cardinal arithmetic: 2^{<mu}, lambda^{<mu}, closedness.

Everything here is a conditional computation: the context either certifies
enough SCH/GCH to settle the value and the verdict says which assumptions
were used, or the answer is Independent with the missing instance named.
One direction is unconditional: a successor of a cardinal of cofinality
below mu is never mu-closed (Koenig), so that refutation needs no axioms.
"""

from __future__ import annotations

from .cardinals import (
    ALEPH0,
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
    Determined,
    HypothesisContext,
    Independent,
    Verdict,
    ctx_implies_sch,
    is_false,
    is_true,
    sch_holds_at,
)
from .ordinals import Ordering


def _require_regular(mu: CardinalExpr) -> None:
    if not is_regular(mu):
        raise ValueError("mu must be regular")


def two_lt(mu: CardinalExpr, ctx: HypothesisContext) -> Verdict[CardinalExpr]:
    """2^{<mu}.  aleph_0 unconditionally for mu = aleph_0; mu itself under GCH."""
    if mu == ALEPH0:
        return Determined(ALEPH0)
    if ctx.gch:
        return Determined(mu, ("GCH",))
    return Independent((f"the continuum function below {mu} (e.g. GCH)",))


def is_almost_mu_closed(
    lam: CardinalExpr, mu: CardinalExpr, ctx: HypothesisContext
) -> Verdict[bool]:
    """Is theta^{<mu} <= lam for every infinite theta < lam?"""
    return ctx_implies_sch(ctx, mu, lam)


def is_mu_closed(lam: CardinalExpr, mu: CardinalExpr, ctx: HypothesisContext) -> Verdict[bool]:
    """Is theta^{<mu} < lam for every infinite theta < lam?

    Equivalent to: SCH_{mu,lam} holds and lam is not the successor of a
    cardinal of cofinality below mu.  The second conjunct refutes on its own.
    """
    _require_regular(mu)
    if lam < mu:
        raise ValueError("lam must be at least mu")
    if mu == ALEPH0:
        return Determined(True)
    if isinstance(lam, CardinalAtom):
        # Weakly inaccessible: a limit cardinal, so only the SCH side matters.
        sch = sch_holds_at(ctx, mu, lam)
        if is_true(sch):
            return Determined(True, sch.used)
        return Independent((f"SCH({mu}) below {lam}",))
    kind = card_index_classify(lam)
    if isinstance(kind, SuccessorCard) and cofinality(kind.pred) < mu:
        return Determined(False)
    sch = sch_holds_at(ctx, mu, lam)
    if is_true(sch):
        return Determined(True, sch.used)
    assert isinstance(sch, Independent)
    return Independent(sch.missing)


def exp_lt(lam: CardinalExpr, mu: CardinalExpr, ctx: HypothesisContext) -> Verdict[CardinalExpr]:
    """lam^{<mu}.

    With the relevant almost-closedness certified: lam when cf(lam) >= mu,
    lam^+ when cf(lam) < mu.  For lam < mu the value is mu exactly under GCH;
    the case is kept visible rather than silently extended.
    """
    _require_regular(mu)
    if card_compare(lam, mu) is Ordering.LESS:
        if ctx.gch:
            return Determined(mu, ("GCH",))
        return Independent((f"GCH (to evaluate {lam}^<{mu} with {lam} < {mu})",))
    if mu == ALEPH0:
        return Determined(lam)
    if cofinality(lam) >= mu:
        witness = is_almost_mu_closed(lam, mu, ctx)
        if is_true(witness):
            return Determined(lam, witness.used)
    else:
        above = successor(lam)
        witness = is_almost_mu_closed(above, mu, ctx)
        if is_true(witness):
            return Determined(above, witness.used)
    return Independent((f"SCH({mu}) at {lam}",))


def triangle(mu: CardinalExpr, lam: CardinalExpr, ctx: HypothesisContext) -> Verdict[bool]:
    """The accessibility-index order mu <| lam (reflexive on equal inputs).

    mu-closedness of lam is sufficient, and above 2^{<mu} it is equivalent.
    """
    if not is_regular(mu) or not is_regular(lam):
        raise ValueError("triangle requires regular cardinals")
    cmp = card_compare(mu, lam)
    if cmp is Ordering.GREATER:
        raise ValueError("mu must be at most lam")
    if cmp is Ordering.EQUAL:
        return Determined(True)
    closed = is_mu_closed(lam, mu, ctx)
    if is_true(closed):
        return Determined(True, closed.used)
    if is_false(closed):
        bound = two_lt(mu, ctx)
        if isinstance(bound, Determined):
            if card_compare(lam, bound.value) is Ordering.GREATER:
                return Determined(False, tuple(sorted(set(closed.used) | set(bound.used))))
            return Independent((f"the order below 2^<{mu} = {bound.value} (not characterised by mu-closedness)",))
        return Independent(bound.missing)
    assert isinstance(closed, Independent)
    return Independent(closed.missing)
