"""The four pair scorers over a CountTable.

All scorers read generalized counts.  Causal potential combines an
association term with a direction term and is add-alpha smoothed (the
backward pair count is frequently zero); with alpha=0 the unsmoothed
estimator is used and ranking skips pairs with no backward count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .counts import CountTable
from .events import Event, render_readable

UNIGRAM = "UNIGRAM"
BIGRAM = "BIGRAM"
SCP = "SCP"
CP = "CP"
MODELS = (UNIGRAM, BIGRAM, SCP, CP)


@dataclass(frozen=True)
class PairScore:
    first: Event
    second: Event
    score: float
    model: str
    raw_pair_count: int


def unigram_score(table: CountTable, event: Event) -> float:
    if table.instances_total == 0:
        return 0.0
    return table.generalized_count(event) / table.instances_total


def bigram_prob(table: CountTable, e1: Event, e2: Event) -> float:
    c1 = table.generalized_count(e1)
    if c1 == 0:
        return 0.0
    return table.generalized_pair_count(e1, e2) / c1


def scp(table: CountTable, e1: Event, e2: Event, *, reverse_second: bool = False) -> float:
    """Product of the two conditionals of the ordered joint count.

    By default the forward joint count appears in both factors; with
    ``reverse_second`` the second factor uses the backward count instead
    (the alternative reading of the two conditional directions).
    """
    c1 = table.generalized_count(e1)
    c2 = table.generalized_count(e2)
    if c1 == 0 or c2 == 0:
        return 0.0
    forward = table.generalized_pair_count(e1, e2)
    second_joint = table.generalized_pair_count(e2, e1) if reverse_second else forward
    return (forward / c1) * (second_joint / c2)


def causal_potential(table: CountTable, e1: Event, e2: Event, *, alpha: float | None = None) -> float:
    """Association + direction score of the ordered pair (e1, e2).

    With counts C1, C2, forward F, backward B, vocabulary size V and
    stream length N:

        score = ln( ((F+a)/(C1+aV)) / ((C2+a)/(N+aV)) ) + ln( (F+a)/(B+a) )

    Natural log; a=0 reproduces the unsmoothed estimator and may return
    +/-inf for zero counts.
    """
    a = table.alpha if alpha is None else float(alpha)
    v = table.n_distinct
    n = table.instances_total
    c1 = table.generalized_count(e1)
    c2 = table.generalized_count(e2)
    forward = table.generalized_pair_count(e1, e2)
    backward = table.generalized_pair_count(e2, e1)
    if a == 0.0:
        if forward == 0 or c1 == 0 or c2 == 0 or n == 0:
            return -math.inf
        assoc = math.log((forward / c1) / (c2 / n))
        if backward == 0:
            return math.inf
        return assoc + math.log(forward / backward)
    assoc = math.log(((forward + a) / (c1 + a * v)) / ((c2 + a) / (n + a * v)))
    direction = math.log((forward + a) / (backward + a))
    return assoc + direction


def score_pair(table: CountTable, model: str, e1: Event, e2: Event) -> float:
    """Model dispatch for an ordered pair; UNIGRAM scores the second event
    alone (that is the baseline's definition)."""
    if model == UNIGRAM:
        return unigram_score(table, e2)
    if model == BIGRAM:
        return bigram_prob(table, e1, e2)
    if model == SCP:
        return scp(table, e1, e2)
    if model == CP:
        return causal_potential(table, e1, e2)
    raise ValueError(f"unknown model {model!r}")


def rank_pairs(table: CountTable, candidates, model: str) -> list[PairScore]:
    """Score and sort candidate ordered pairs, descending.

    Ties break by descending raw (generalized) pair count, then by the
    readable renderings; the sort is stable.  In alpha=0 tables the CP
    model skips pairs with no backward count rather than emit +inf.
    """
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}")
    scored = []
    for e1, e2 in candidates:
        if model == CP and table.alpha == 0.0 and table.generalized_pair_count(e2, e1) == 0:
            continue
        scored.append(
            PairScore(
                first=e1,
                second=e2,
                score=score_pair(table, model, e1, e2),
                model=model,
                raw_pair_count=table.generalized_pair_count(e1, e2),
            )
        )
    scored.sort(
        key=lambda ps: (
            -ps.score,
            -ps.raw_pair_count,
            render_readable(ps.first),
            render_readable(ps.second),
        )
    )
    return scored


def pair_score_lines(scores) -> list[str]:
    lines = []
    for rank, ps in enumerate(scores, start=1):
        lines.append(
            f"{rank}\t{render_readable(ps.first)}\t{render_readable(ps.second)}"
            f"\t{ps.score:.6f}\t{ps.raw_pair_count}\t{ps.model}"
        )
    return lines
