"""Topic-indicative contingent pair export.

Stored pairs are kept when they are frequent enough (generalized pair count
at or above the floor, 5 by default) and touch at least one indicative
event under generalized matching; survivors are ranked by the chosen model
and the top slice is exported in an annotation-ready readable form.  An
aggregation helper turns imported per-pair ratings into mean-score label
buckets.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path

from .counts import CountTable
from .errors import CorpusFormatError
from .events import Event, event_matches, render_readable
from .scoring import CP, SCP, PairScore, rank_pairs

RELGRAMS_MIN_FREQ = 25

STRONGLY_RELEVANT = "STRONGLY_RELEVANT"
SOMEWHAT_RELEVANT = "SOMEWHAT_RELEVANT"
CONTINGENT_NOT_RELEVANT = "CONTINGENT_NOT_RELEVANT"
NOT_CONTINGENT = "NOT_CONTINGENT"


@dataclass
class IndicativePairSet:
    topic: str
    pairs: list[PairScore]
    min_freq: int
    ranking_model: str
    indicative_events: list[Event]


def indicative_matches(indicative_event: Event, event: Event) -> bool:
    """Membership test for pair filtering: generalized event matching, with
    bare indicative events (no dobj/prt) acting as verb-level wildcards --
    a bare pack() filter must select pack-up-backpack style events."""
    if event_matches(indicative_event, event):
        return True
    return (
        indicative_event.dobj is None
        and indicative_event.prt is None
        and indicative_event.verb == event.verb
    )


def filter_topic_pairs(
    table: CountTable,
    indicative,
    min_freq: int = 5,
    *,
    exact_counts: bool = False,
) -> list[tuple[Event, Event]]:
    """Stored ordered pairs that are frequent and touch an indicative event.

    Frequency uses the generalized pair count (the same statistic all
    scorers see); ``exact_counts`` switches to the raw stored count.
    """
    indicative = list(indicative)
    if not indicative:
        raise ValueError("indicative event list must be non-empty")
    kept = []
    for (e1, e2), raw in table.pairs():
        count = raw if exact_counts else table.generalized_pair_count(e1, e2)
        if count < min_freq:
            continue
        if any(
            indicative_matches(m, e1) or indicative_matches(m, e2) for m in indicative
        ):
            kept.append((e1, e2))
    return kept


def top_n_pairs(
    table: CountTable,
    filtered,
    model: str = CP,
    n: int = 100,
    *,
    topic: str = "",
    min_freq: int = 5,
    indicative_events=(),
) -> IndicativePairSet:
    """Rank the filtered pairs and keep the top n (the whole list when it
    is shorter)."""
    if model not in (CP, SCP):
        raise ValueError(f"ranking model must be CP or SCP, got {model!r}")
    ranked = rank_pairs(table, list(filtered), model)
    return IndicativePairSet(
        topic=topic,
        pairs=ranked[:n],
        min_freq=min_freq,
        ranking_model=model,
        indicative_events=list(indicative_events),
    )


def annotation_lines(pair_set: IndicativePairSet, alpha: float) -> list[str]:
    lines = [
        f"# topic={pair_set.topic}",
        f"# model={pair_set.ranking_model}",
        f"# alpha={alpha!r}",
        f"# min_freq={pair_set.min_freq}",
    ]
    for rank, ps in enumerate(pair_set.pairs, start=1):
        readable = f"{render_readable(ps.first)} -> {render_readable(ps.second)}"
        lines.append(f"{rank}\t{readable}\t{ps.score:.6f}\t{ps.raw_pair_count}")
    return lines


def export_annotation_file(pair_set: IndicativePairSet, dest, alpha: float) -> None:
    text = "\n".join(annotation_lines(pair_set, alpha)) + "\n"
    Path(dest).write_text(text, encoding="utf-8", newline="\n")


# --- ratings aggregation ------------------------------------------------------


@dataclass(frozen=True)
class RatingSummary:
    pair_rank: int
    n_ratings: int
    mean: float
    bucket: str


def _bucket(total: int, n: int) -> str:
    if total > 2 * n:
        return STRONGLY_RELEVANT
    if total == 2 * n:
        return SOMEWHAT_RELEVANT
    if total >= n:
        return CONTINGENT_NOT_RELEVANT
    return NOT_CONTINGENT


def read_ratings(source) -> list[tuple[int, str, int]]:
    """Read ``pair_rank<TAB>worker_id<TAB>rating`` records (ratings 0-3)."""
    records = []
    for lineno, line in enumerate(Path(source).read_text(encoding="utf-8").splitlines(), 1):
        if not line or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 3:
            raise CorpusFormatError(
                f"ratings line {lineno}: expected 3 columns, got {len(cols)}"
            )
        try:
            rank, rating = int(cols[0]), int(cols[2])
        except ValueError:
            raise CorpusFormatError(f"ratings line {lineno}: bad integer") from None
        if not 0 <= rating <= 3:
            raise CorpusFormatError(
                f"ratings line {lineno}: rating must be 0-3, got {rating}"
            )
        records.append((rank, cols[1], rating))
    return records


def aggregate_ratings(records) -> list[RatingSummary]:
    """Mean rating and label bucket per pair; bucket edges are compared on
    exact integer sums so a mean of exactly 2 lands deterministically."""
    by_rank: dict[int, list[int]] = defaultdict(list)
    for rank, _worker, rating in records:
        by_rank[rank].append(rating)
    summaries = []
    for rank in sorted(by_rank):
        ratings = by_rank[rank]
        total, n = sum(ratings), len(ratings)
        summaries.append(
            RatingSummary(
                pair_rank=rank,
                n_ratings=n,
                mean=total / n,
                bucket=_bucket(total, n),
            )
        )
    return summaries


def write_ratings_summary(summaries, dest) -> None:
    lines = [
        f"{s.pair_rank}\t{s.n_ratings}\t{s.mean!r}\t{s.bucket}" for s in summaries
    ]
    text = "\n".join(lines)
    Path(dest).write_text(text + ("\n" if text else ""), encoding="utf-8", newline="\n")
