"""Shared generators: seeded random families and hypothesis strategies."""

from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from alephcalc import (
    Aleph,
    CardinalAtom,
    CardinalExpr,
    CnfOrdinal,
    cnf_add,
    from_int,
    omega_power,
)
from alephcalc.ordinals import ORD_ZERO, cnf_compare, Ordering


# --- seeded random generators (used where tests need counted families) -------


def random_cnf(rng: random.Random, depth: int = 2, max_terms: int = 3, max_coeff: int = 4) -> CnfOrdinal:
    if depth <= 0 or rng.random() < 0.3:
        return from_int(rng.randrange(0, max_coeff + 1))
    n_terms = rng.randrange(1, max_terms + 1)
    exponents = []
    while len(exponents) < n_terms:
        e = random_cnf(rng, depth - 1, max_terms=2, max_coeff=3)
        if all(cnf_compare(e, seen) is not Ordering.EQUAL for seen in exponents):
            exponents.append(e)
    # sort exponents descending
    for i in range(len(exponents)):
        for j in range(i + 1, len(exponents)):
            if cnf_compare(exponents[i], exponents[j]) is Ordering.LESS:
                exponents[i], exponents[j] = exponents[j], exponents[i]
    terms = tuple((e, rng.randrange(1, max_coeff + 1)) for e in exponents)
    return CnfOrdinal(terms)


def random_cardinal(rng: random.Random, base_depth: int = 2, allow_atom: bool = False) -> CardinalExpr:
    if allow_atom and rng.random() < 0.05:
        return CardinalAtom(rng.choice(("theta", "kappa")), weakly_inaccessible=True)
    tail = random_cnf(rng)
    if base_depth > 0 and rng.random() < 0.35:
        base = random_cardinal(rng, base_depth - 1, allow_atom=False)
        if isinstance(base, Aleph) and not (base.base is None and base.tail.is_zero):
            return Aleph(base, tail)
    return Aleph(None, tail)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260810)


# --- hypothesis strategies -----------------------------------------------------


@st.composite
def cnf_ordinals(draw, depth: int = 2) -> CnfOrdinal:
    if depth <= 0:
        return from_int(draw(st.integers(min_value=0, max_value=4)))
    shape = draw(st.integers(min_value=0, max_value=2))
    if shape == 0:
        return from_int(draw(st.integers(min_value=0, max_value=4)))
    out = ORD_ZERO
    for _ in range(draw(st.integers(min_value=1, max_value=3))):
        exp = draw(cnf_ordinals(depth=depth - 1))
        coeff = draw(st.integers(min_value=1, max_value=4))
        out = cnf_add(out, omega_power(exp, coeff) if not exp.is_zero else from_int(coeff))
    return out


@st.composite
def alephs(draw, base_depth: int = 2) -> Aleph:
    tail = draw(cnf_ordinals())
    if base_depth > 0 and draw(st.booleans()):
        base = draw(alephs(base_depth=base_depth - 1))
        if not (base.base is None and base.tail.is_zero):
            return Aleph(base, tail)
    return Aleph(None, tail)


@st.composite
def cardinals(draw, with_atoms: bool = False):
    if with_atoms and draw(st.integers(min_value=0, max_value=9)) == 0:
        return CardinalAtom(draw(st.sampled_from(("theta", "kappa"))), weakly_inaccessible=True)
    return draw(alephs())


# --- canonical AST generator (round-trip families) ----------------------------


def random_statement(rng: random.Random):
    """A canonical AST statement: literal, query, assume, or session."""
    from alephcalc.dsl import (
        Assume,
        AssumeGch,
        AssumeSch,
        AssumeSharp,
        AssumeVEqualsL,
        BoolLiteral,
        CardinalLiteral,
        OrdinalLiteral,
        Query,
        Session,
    )
    from alephcalc.evaluator import QUERY_SIGNATURES
    from alephcalc.hypotheses import AtLeast, ExplicitSet, UnboundedBelow

    def card_literal():
        if rng.random() < 0.08:
            return CardinalLiteral(CardinalAtom(rng.choice(("theta", "kappa")), weakly_inaccessible=True))
        return CardinalLiteral(random_cardinal(rng))

    def ord_literal():
        tail = random_cnf(rng)
        if rng.random() < 0.4:
            base = random_cardinal(rng)
            if isinstance(base, Aleph) and not (base.base is None and base.tail.is_zero) and not tail.is_zero:
                return OrdinalLiteral(base, tail)
        return OrdinalLiteral(None, tail)

    def arg(kind: str):
        if kind == "card":
            return card_literal()
        if kind == "ord":
            return ord_literal() if rng.random() < 0.7 else card_literal()
        return BoolLiteral(rng.random() < 0.5)

    def assume():
        pick = rng.randrange(4)
        if pick == 0:
            return Assume(AssumeGch())
        if pick == 1:
            return Assume(AssumeVEqualsL())
        if pick == 2:
            return Assume(AssumeSharp(rng.random() < 0.5))
        mu = random_cardinal(rng)
        scope_pick = rng.randrange(3)
        if scope_pick == 0:
            scope = AtLeast(random_cardinal(rng))
        elif scope_pick == 1:
            scope = UnboundedBelow(random_cardinal(rng))
        else:
            scope = ExplicitSet(tuple(random_cardinal(rng) for _ in range(rng.randrange(1, 4))))
        return Assume(AssumeSch(mu, scope))

    def statement():
        pick = rng.random()
        if pick < 0.45:
            name = rng.choice(sorted(QUERY_SIGNATURES))
            return Query(name, tuple(arg(kind) for kind in QUERY_SIGNATURES[name]))
        if pick < 0.65:
            return card_literal()
        if pick < 0.8:
            return ord_literal()
        if pick < 0.9:
            return assume()
        return BoolLiteral(rng.random() < 0.5)

    if rng.random() < 0.15:
        return Session(tuple(statement() for _ in range(rng.randrange(2, 5))))
    return statement()
