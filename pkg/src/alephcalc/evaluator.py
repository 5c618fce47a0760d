"""Query dispatch: route parsed statements to engine operations.

Every query evaluates to a ``QueryResult`` with the fixed field order
{query, verdict, value, assumptions_used, notes}; ``to_json_line`` renders
exactly one machine-readable line so batch output is byte-deterministic.
Independent verdicts surface their missing assumptions as ``missing:``
notes; engine errors surface verbatim with verdict ``error``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable, TextIO

from . import arithmetic, sizes, spectra
from .cardinals import (
    ALEPH0,
    CardinalExpr,
    cofinality,
    is_regular,
    lambda_r,
    lambda_star,
    successor,
)
from .dsl import (
    Assume,
    AssumeGch,
    AssumeSharp,
    AssumeVEqualsL,
    Ast,
    BoolLiteral,
    CardinalLiteral,
    OrdinalLiteral,
    ParseError,
    Query,
    Session,
    format_statement,
    parse,
)
from .hypotheses import (
    CardinalInterval,
    Determined,
    HypothesisContext,
    SchAssumption,
    Verdict,
    ZeroSharp,
    extend_context,
    l_cofinality,
)
from .ordinals import OMEGA, ORD_ZERO


class QueryError(Exception):
    pass


@dataclass(frozen=True)
class QueryResult:
    query: str
    verdict: str  # 'determined' | 'independent' | 'error'
    value: str | None
    assumptions_used: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()

    def to_json_line(self) -> str:
        return json.dumps(
            {
                "query": self.query,
                "verdict": self.verdict,
                "value": self.value,
                "assumptions_used": list(self.assumptions_used),
                "notes": list(self.notes),
            }
        )

    def pretty(self) -> str:
        if self.verdict == "determined":
            head = f"= {self.value}"
            if self.assumptions_used:
                head += f"   [via {', '.join(self.assumptions_used)}]"
        elif self.verdict == "independent":
            head = "independent" + (f" (value would be {self.value})" if self.value else "")
        else:
            head = "error"
        lines = [head]
        lines.extend(f"  {note}" for note in self.notes)
        return "\n".join(lines)


def _card_arg(q: Query, i: int) -> CardinalExpr:
    a = q.args[i]
    if isinstance(a, CardinalLiteral):
        return a.value
    raise QueryError(f"argument {i + 1} of {q.name} must be a cardinal")


def _ord_arg(q: Query, i: int):
    a = q.args[i]
    if isinstance(a, OrdinalLiteral):
        return a.base, a.tail
    if isinstance(a, CardinalLiteral):
        # A cardinal used in ordinal position denotes its initial ordinal.
        if a.value == ALEPH0:
            return None, OMEGA
        return a.value, ORD_ZERO
    raise QueryError(f"argument {i + 1} of {q.name} must be an ordinal")


def _bool_arg(q: Query, i: int) -> bool:
    a = q.args[i]
    if isinstance(a, BoolLiteral):
        return a.value
    raise QueryError(f"argument {i + 1} of {q.name} must be true or false")


def _from_verdict(name: str, v: Verdict, *, independent_value: str | None = None,
                  notes: tuple[str, ...] = ()) -> QueryResult:
    if isinstance(v, Determined):
        return QueryResult(name, "determined", _render(v.value), v.used, notes)
    return QueryResult(
        name,
        "independent",
        independent_value,
        v.used,
        notes + tuple(f"missing: {m}" for m in v.missing),
    )


def _render(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, CardinalInterval):
        return str(value)
    return str(value)


def _render_count(name: str, c: spectra.CountValue, notes: tuple[str, ...] = ()) -> QueryResult:
    if isinstance(c, spectra.Finite):
        return QueryResult(name, "determined", str(c.n), c.used, notes)
    if isinstance(c, spectra.ZeroCount):
        return QueryResult(name, "determined", "0", c.used, notes)
    if isinstance(c, spectra.Card):
        return QueryResult(name, "determined", str(c.value), c.used, notes)
    if isinstance(c, spectra.AtLeastCard):
        return QueryResult(name, "determined", f">={c.value}", c.used,
                           notes + ("lower bound only; exactness is open",))
    return QueryResult(name, "independent", None, (), notes + (f"missing: {c.reason}",))


def _succ_str(c: CardinalExpr) -> str:
    # Successors of opaque atoms have no aleph notation; render them as text.
    try:
        return str(successor(c))
    except ValueError:
        return f"the successor of {c}"


def _render_size(name: str, params: sizes.ClassParams, verdict: sizes.SizeVerdict) -> QueryResult:
    if isinstance(verdict, sizes.BelowLS):
        return QueryResult(
            name, "determined", f"<={params.ls}", (),
            (f"presentability rank at most {_succ_str(params.ls)}",),
        )
    if isinstance(verdict, sizes.Exact):
        return QueryResult(
            name, "determined", str(verdict.value), verdict.used,
            (f"presentability rank {_succ_str(verdict.value)}",),
        )
    if isinstance(verdict, sizes.TwoCandidates):
        return QueryResult(
            name, "determined", f"{{{verdict.lo}, {verdict.hi}}}", verdict.used,
            (f"presentability rank {_succ_str(verdict.lo)} or {_succ_str(verdict.hi)}",),
        )
    if isinstance(verdict, sizes.SizeInterval):
        return QueryResult(
            name, "determined", f"[{verdict.lo}, {verdict.hi}]", verdict.used,
            ("certified bounds only; the interval is not known to be tight",),
        )
    return QueryResult(name, "independent", None, (), (f"missing: {verdict.reason}",))


# --- handlers ----------------------------------------------------------------


def _h_cf(q: Query, ctx: HypothesisContext) -> QueryResult:
    return QueryResult(format_statement(q), "determined", str(cofinality(_card_arg(q, 0))))


def _h_reg(q, ctx):
    return QueryResult(format_statement(q), "determined", _render(is_regular(_card_arg(q, 0))))


def _h_succ(q, ctx):
    return QueryResult(format_statement(q), "determined", str(successor(_card_arg(q, 0))))


def _h_lambda_r(q, ctx):
    return QueryResult(format_statement(q), "determined", str(lambda_r(_card_arg(q, 0))))


def _h_lambda_star(q, ctx):
    return QueryResult(format_statement(q), "determined", str(lambda_star(_card_arg(q, 0))))


def _h_closed(q, ctx):
    return _from_verdict(format_statement(q), arithmetic.is_mu_closed(_card_arg(q, 0), _card_arg(q, 1), ctx))


def _h_almost_closed(q, ctx):
    return _from_verdict(format_statement(q), arithmetic.is_almost_mu_closed(_card_arg(q, 0), _card_arg(q, 1), ctx))


def _h_exp_lt(q, ctx):
    lam, mu = _card_arg(q, 0), _card_arg(q, 1)
    return _from_verdict(format_statement(q), arithmetic.exp_lt(lam, mu, ctx),
                         independent_value=f"{lam}^<{mu}")


def _h_two_lt(q, ctx):
    mu = _card_arg(q, 0)
    return _from_verdict(format_statement(q), arithmetic.two_lt(mu, ctx),
                         independent_value=f"2^<{mu}")


def _h_triangle(q, ctx):
    return _from_verdict(format_statement(q), arithmetic.triangle(_card_arg(q, 0), _card_arg(q, 1), ctx))


def _h_l_cf(q, ctx):
    return _from_verdict(format_statement(q), l_cofinality(_card_arg(q, 0), ctx))


def _h_colimit_bound(q, ctx):
    value = sizes.colimit_presentability_bound(_card_arg(q, 0), _card_arg(q, 1))
    return QueryResult(format_statement(q), "determined", str(value))


def _h_internal_size(q, ctx):
    params = sizes.ClassParams(mu=_card_arg(q, 0), ls=_card_arg(q, 1))
    verdict = sizes.internal_size_of_cardinality(params, _card_arg(q, 2), ctx)
    return _render_size(format_statement(q), params, verdict)


def _h_rank_excluded(q, ctx):
    return _from_verdict(format_statement(q), sizes.rank_excluded_at(_card_arg(q, 0), _card_arg(q, 1), ctx))


def _h_existence_window(q, ctx):
    mu = _card_arg(q, 0)
    lo, hi = sizes.existence_window(mu, _card_arg(q, 1), ctx)
    name = format_statement(q)
    if isinstance(hi, Determined):
        return QueryResult(name, "determined", f"[{lo}, {hi.value}]", hi.used)
    return QueryResult(
        name, "independent", f"[{lo}, {lo}^<{mu}]", hi.used,
        tuple(f"missing: {m}" for m in hi.missing),
    )


def _h_existence_at(q, ctx):
    params = sizes.ClassParams(
        mu=_card_arg(q, 0),
        ls=_card_arg(q, 1),
        admits_intersections=_bool_arg(q, 3),
        arbitrarily_large_models=True,
    )
    return _from_verdict(format_statement(q), sizes.existence_at(params, _card_arg(q, 2), ctx))


def _h_no_model_rule(q, ctx):
    params = sizes.ClassParams(mu=_card_arg(q, 0), ls=_card_arg(q, 1))
    facts = sizes.SpectrumFacts(
        no_models_in_cardinality_interval=(_card_arg(q, 3), _card_arg(q, 4)),
        categorical_in_cardinality=_card_arg(q, 5),
    )
    return _from_verdict(format_statement(q), sizes.no_model_of_internal_size(params, _card_arg(q, 2), facts, ctx))


def _h_hilbert_card(q, ctx):
    count = spectra.hilbert_count_by_cardinality(_card_arg(q, 0), ctx)
    return _render_count(format_statement(q), count, ("counting infinite-dimensional spaces only",))


def _h_hilbert_internal(q, ctx):
    return _render_count(format_statement(q), spectra.hilbert_count_by_internal_size(_card_arg(q, 0)))


def _h_wo_size(q, ctx):
    base, tail = _ord_arg(q, 0)
    value = spectra.wellorder_internal_size(base, tail, _card_arg(q, 1))
    return QueryResult(format_statement(q), "determined", str(value))


def _h_shelah_card(q, ctx):
    return _render_count(format_statement(q), spectra.shelah_count_by_cardinality(_card_arg(q, 0), _card_arg(q, 1), ctx))


def _h_shelah_internal(q, ctx):
    return _render_count(format_statement(q), spectra.shelah_count_by_internal_size(_card_arg(q, 0), _card_arg(q, 1), ctx))


# Argument kinds per query, in order: 'card', 'ord', or 'bool'.
QUERY_SIGNATURES: dict[str, tuple[str, ...]] = {
    "cf": ("card",),
    "reg": ("card",),
    "succ": ("card",),
    "lambda_r": ("card",),
    "lambda_star": ("card",),
    "closed": ("card", "card"),
    "almost_closed": ("card", "card"),
    "exp_lt": ("card", "card"),
    "two_lt": ("card",),
    "triangle": ("card", "card"),
    "l_cf": ("card",),
    "colimit_bound": ("card", "card"),
    "internal_size": ("card", "card", "card"),
    "rank_excluded": ("card", "card"),
    "existence_window": ("card", "card"),
    "existence_at": ("card", "card", "card", "bool"),
    "no_model_rule": ("card", "card", "card", "card", "card", "card"),
    "hilbert_card": ("card",),
    "hilbert_internal": ("card",),
    "wo_size": ("ord", "card"),
    "shelah_card": ("card", "card"),
    "shelah_internal": ("card", "card"),
}

_HANDLERS: dict[str, Callable[[Query, HypothesisContext], QueryResult]] = {
    "cf": _h_cf,
    "reg": _h_reg,
    "succ": _h_succ,
    "lambda_r": _h_lambda_r,
    "lambda_star": _h_lambda_star,
    "closed": _h_closed,
    "almost_closed": _h_almost_closed,
    "exp_lt": _h_exp_lt,
    "two_lt": _h_two_lt,
    "triangle": _h_triangle,
    "l_cf": _h_l_cf,
    "colimit_bound": _h_colimit_bound,
    "internal_size": _h_internal_size,
    "rank_excluded": _h_rank_excluded,
    "existence_window": _h_existence_window,
    "existence_at": _h_existence_at,
    "no_model_rule": _h_no_model_rule,
    "hilbert_card": _h_hilbert_card,
    "hilbert_internal": _h_hilbert_internal,
    "wo_size": _h_wo_size,
    "shelah_card": _h_shelah_card,
    "shelah_internal": _h_shelah_internal,
}


def _apply_assume(ctx: HypothesisContext, item) -> HypothesisContext:
    if isinstance(item, AssumeGch):
        return extend_context(ctx, gch=True)
    if isinstance(item, AssumeVEqualsL):
        return extend_context(ctx, v_equals_l=True)
    if isinstance(item, AssumeSharp):
        return extend_context(ctx, zero_sharp=ZeroSharp.EXISTS if item.exists else ZeroSharp.NOT_EXISTS)
    return extend_context(ctx, sch=(SchAssumption(item.mu, item.scope),))


def evaluate(ast: Ast, ctx: HypothesisContext) -> tuple[list[QueryResult], HypothesisContext]:
    """Evaluate one statement (or session); assume items fold into the context."""
    if isinstance(ast, Session):
        results: list[QueryResult] = []
        for item in ast.items:
            sub, ctx = evaluate(item, ctx)
            results.extend(sub)
        return results, ctx
    if isinstance(ast, Assume):
        return [], _apply_assume(ctx, ast.item)
    name = format_statement(ast)
    if isinstance(ast, (CardinalLiteral, OrdinalLiteral, BoolLiteral)):
        return [QueryResult(name, "determined", name)], ctx
    assert isinstance(ast, Query)
    handler = _HANDLERS.get(ast.name)
    if handler is None:
        raise QueryError(f"unknown query name: {ast.name}")
    arity = len(QUERY_SIGNATURES[ast.name])
    if len(ast.args) != arity:
        raise QueryError(f"{ast.name} takes {arity} argument(s), got {len(ast.args)}")
    return [handler(ast, ctx)], ctx


def evaluate_line(text: str, ctx: HypothesisContext) -> tuple[list[QueryResult], HypothesisContext]:
    """Parse and evaluate, converting all engine errors into error records."""
    try:
        ast = parse(text)
    except ParseError as err:
        return [QueryResult(text.strip(), "error", None, (), (f"error: {err}",))], ctx
    try:
        return evaluate(ast, ctx)
    except (QueryError, ValueError) as err:
        return [QueryResult(format_statement(ast), "error", None, (), (f"error: {err}",))], ctx


def run_batch(lines: Iterable[str], ctx: HypothesisContext, out: TextIO, *, as_json: bool) -> int:
    """One record per query line; assume lines mutate the context forward-only.

    Returns the exit status: nonzero iff any line produced an error record.
    """
    status = 0
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        results, ctx = evaluate_line(line, ctx)
        for result in results:
            if result.verdict == "error":
                status = 1
            if as_json:
                out.write(result.to_json_line() + "\n")
            else:
                out.write(f"{result.query}\n{result.pretty()}\n")
    return status
