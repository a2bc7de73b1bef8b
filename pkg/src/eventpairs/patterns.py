"""Lexico-syntactic event-patterns for topic bootstrapping.

Five template forms are instantiated directly from the dependency parse:
an active verb with a subject, the same plus a direct object, a have/be
verb with subject and object, a verb with a particle, and a noun governed
by a preposition attached to another noun.  Patterns learned from a small
hand-labeled story set are scored against an irrelevant set, thresholded,
and used to classify unlabeled stories; stories whose indicative-pattern
count exceeds the n-threshold join the topic corpus.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .corpus import Corpus, Document, NEGATIVE, POSITIVE
from .errors import CorpusFormatError
from .events import ArgValue, Event, _token_lemma

SUBJ_ACTVB = "SUBJ_ACTVB"
SUBJ_ACTVB_DOBJ = "SUBJ_ACTVB_DOBJ"
SUBJ_AUXVP_DOBJ = "SUBJ_AUXVP_DOBJ"
ACTVB_PRT = "ACTVB_PRT"
NP_PREP_NP = "NP_PREP_NP"

ANCHOR_SLOTS = {
    SUBJ_ACTVB: ("verb",),
    SUBJ_ACTVB_DOBJ: ("verb", "dobj"),
    SUBJ_AUXVP_DOBJ: ("verb", "dobj"),
    ACTVB_PRT: ("verb", "prt"),
    NP_PREP_NP: ("np", "prep"),
}

_AUX_LEMMAS = frozenset({"have", "be"})
_VOWELS = set("aeiouy")


@dataclass(frozen=True)
class EventPattern:
    template: str
    anchors: tuple[str, ...]

    def __post_init__(self):
        slots = ANCHOR_SLOTS.get(self.template)
        if slots is None:
            raise ValueError(f"unknown template {self.template!r}")
        if len(self.anchors) != len(slots):
            raise ValueError(
                f"{self.template} needs {len(slots)} anchors, got {len(self.anchors)}"
            )
        for anchor in self.anchors:
            if not anchor or anchor != anchor.lower():
                raise ValueError(f"bad anchor {anchor!r}")
            if "," in anchor or "\t" in anchor or "\n" in anchor:
                raise ValueError(f"anchor {anchor!r} contains a reserved character")

    def anchor_text(self) -> str:
        return ",".join(self.anchors)


@dataclass(frozen=True)
class PatternStats:
    pattern: EventPattern
    freq: int
    total: int
    cond_prob: float


@dataclass(frozen=True)
class ThresholdConfig:
    f_threshold: int
    p_threshold: float
    n_threshold: int

    def __post_init__(self):
        if self.f_threshold <= 0 or self.p_threshold <= 0 or self.n_threshold <= 0:
            raise ValueError("all thresholds must be strictly positive")


def extract_patterns(doc: Document) -> list[EventPattern]:
    """Every template occurrence in the document, with multiplicity."""
    found: list[EventPattern] = []
    for sentence in doc.sentences:
        for tok in sentence:
            if tok.upos == "VERB" and tok.deprel not in ("aux", "aux:pass", "cop"):
                verb = _token_lemma(tok)
                if not verb:
                    continue
                children = [t for t in sentence if t.head == tok.index]
                deprels = {t.deprel for t in children}
                passive = "aux:pass" in deprels or "nsubj:pass" in deprels
                subj = next((t for t in children if t.deprel == "nsubj"), None)
                dobj = next((t for t in children if t.deprel == "dobj"), None)
                prt = next(
                    (t for t in children if t.deprel in ("compound:prt", "prt")), None
                )
                if verb in _AUX_LEMMAS:
                    if subj is not None and dobj is not None:
                        found.append(
                            EventPattern(SUBJ_AUXVP_DOBJ, (verb, _token_lemma(dobj)))
                        )
                elif not passive:
                    if subj is not None:
                        found.append(EventPattern(SUBJ_ACTVB, (verb,)))
                        if dobj is not None:
                            found.append(
                                EventPattern(SUBJ_ACTVB_DOBJ, (verb, _token_lemma(dobj)))
                            )
                    if prt is not None:
                        found.append(EventPattern(ACTVB_PRT, (verb, _token_lemma(prt))))
            elif tok.upos == "ADP" and tok.deprel == "case" and tok.head > 0:
                governed = sentence[tok.head - 1]
                if governed.deprel == "nmod" and governed.head > 0:
                    head_np = sentence[governed.head - 1]
                    if head_np.upos in ("NOUN", "PROPN"):
                        found.append(
                            EventPattern(
                                NP_PREP_NP, (_token_lemma(head_np), _token_lemma(tok))
                            )
                        )
    return found


def _corpus_pattern_counts(corpus: Corpus) -> Counter:
    counts: Counter = Counter()
    for doc in corpus:
        counts.update(extract_patterns(doc))
    return counts


def score_patterns(relevant: Corpus, irrelevant: Corpus) -> list[PatternStats]:
    """Frequency and conditional probability of every pattern seen in the
    relevant corpus, sorted by (cond_prob, freq) descending with a stable
    lexicographic tie-break."""
    if len(relevant) == 0 or len(irrelevant) == 0:
        raise ValueError("both corpora must be non-empty")
    rel = _corpus_pattern_counts(relevant)
    irr = _corpus_pattern_counts(irrelevant)
    stats = []
    for pattern, freq in rel.items():
        total = freq + irr.get(pattern, 0)
        stats.append(
            PatternStats(pattern=pattern, freq=freq, total=total, cond_prob=freq / total)
        )
    stats.sort(
        key=lambda s: (-s.cond_prob, -s.freq, s.pattern.template, s.pattern.anchors)
    )
    return stats


def select_indicative(stats, cfg: ThresholdConfig) -> list[EventPattern]:
    return [
        s.pattern
        for s in stats
        if s.freq >= cfg.f_threshold and s.cond_prob >= cfg.p_threshold
    ]


def classify_story(doc: Document, indicative, n_threshold: int) -> bool:
    """Positive iff the count of indicative-pattern occurrences (with
    multiplicity) is strictly greater than the threshold."""
    indicative = set(indicative)
    hits = sum(1 for p in extract_patterns(doc) if p in indicative)
    return hits > n_threshold


@dataclass(frozen=True)
class GridPoint:
    f_threshold: int
    p_threshold: float
    n_threshold: int
    precision: float
    recall: float
    f_measure: float


@dataclass
class TuneResult:
    config: ThresholdConfig
    grid: list[GridPoint]
    constraint_met: bool


def _prf(tp: int, fp: int, fn: int) -> tuple[float, float, float]:
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f_measure = (
        2 * precision * recall / (precision + recall) if precision + recall else 0.0
    )
    return precision, recall, f_measure


def tune_thresholds(
    train: Corpus,
    dev: Corpus,
    topic: str,
    grid_f,
    grid_p,
    grid_n,
    precision_floor: float = 0.9,
) -> TuneResult:
    """Grid-search the three thresholds against the dev set.

    Picks the grid point maximizing recall subject to precision >=
    precision_floor; if none qualifies, falls back to the best-precision
    point and flags the constraint as unmet.  Tie chains (recall/precision
    first, then smaller n, f, p) make the choice deterministic.
    """
    grid_f, grid_p, grid_n = list(grid_f), list(grid_p), list(grid_n)
    if not grid_f or not grid_p or not grid_n:
        raise ValueError("threshold grid must be non-empty")
    relevant = train.where_label(topic, POSITIVE)
    irrelevant = train.where_label(topic, NEGATIVE)
    stats = score_patterns(relevant, irrelevant)

    dev_docs = [d for d in dev if d.label_for(topic) in (POSITIVE, NEGATIVE)]
    gold = [d.label_for(topic) == POSITIVE for d in dev_docs]
    if not any(gold) or all(gold):
        raise ValueError("dev corpus must contain both POSITIVE and NEGATIVE labels")
    dev_patterns = [extract_patterns(d) for d in dev_docs]

    points = []
    for f in grid_f:
        for p in grid_p:
            cfg = ThresholdConfig(f, p, 1)
            indicative = set(select_indicative(stats, cfg))
            hit_counts = [
                sum(1 for pat in pats if pat in indicative) for pats in dev_patterns
            ]
            for n in grid_n:
                tp = fp = fn = 0
                for hits, is_pos in zip(hit_counts, gold):
                    predicted = hits > n
                    if predicted and is_pos:
                        tp += 1
                    elif predicted:
                        fp += 1
                    elif is_pos:
                        fn += 1
                precision, recall, f_measure = _prf(tp, fp, fn)
                points.append(GridPoint(f, p, n, precision, recall, f_measure))

    feasible = [gp for gp in points if gp.precision >= precision_floor]
    if feasible:
        best = min(
            feasible,
            key=lambda gp: (-gp.recall, -gp.precision, gp.n_threshold, gp.f_threshold,
                            gp.p_threshold),
        )
        met = True
    else:
        best = min(
            points,
            key=lambda gp: (-gp.precision, -gp.recall, gp.n_threshold, gp.f_threshold,
                            gp.p_threshold),
        )
        met = False
    config = ThresholdConfig(best.f_threshold, best.p_threshold, best.n_threshold)
    return TuneResult(config=config, grid=points, constraint_met=met)


def bootstrap(unlabeled: Corpus, indicative, n_threshold: int) -> list[str]:
    """One classification round over an unlabeled corpus; returns positive
    doc_ids in corpus order (no pattern re-learning here)."""
    indicative = set(indicative)
    return [
        doc.doc_id
        for doc in unlabeled
        if classify_story(doc, indicative, n_threshold)
    ]


def strip_gerund(lemma: str) -> str:
    """Small -ing stripper used only when mapping pattern anchors to event
    slots (a lemma column may carry the gerund form)."""
    if not lemma.endswith("ing") or len(lemma) < 6:
        return lemma
    stem = lemma[:-3]
    if not _VOWELS & set(stem):
        return lemma
    if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] not in "aeiouslzf":
        stem = stem[:-1]
    return stem


def pattern_to_event(pattern: EventPattern) -> Event | None:
    """Map a verb-bearing pattern to its event form; prep patterns have none."""
    if pattern.template == NP_PREP_NP:
        return None
    verb = pattern.anchors[0]
    if pattern.template == SUBJ_ACTVB:
        return Event(verb)
    if pattern.template in (SUBJ_ACTVB_DOBJ, SUBJ_AUXVP_DOBJ):
        return Event(verb, dobj=ArgValue("LEXEME", strip_gerund(pattern.anchors[1])))
    if pattern.template == ACTVB_PRT:
        return Event(verb, prt=pattern.anchors[1])
    raise AssertionError(pattern.template)


# --- pattern files -----------------------------------------------------------


def pattern_stats_lines(stats) -> list[str]:
    return [
        f"{s.pattern.template}\t{s.pattern.anchor_text()}\t{s.freq}\t{s.total}"
        f"\t{s.cond_prob!r}"
        for s in stats
    ]


def write_pattern_stats(stats, dest) -> None:
    text = "\n".join(pattern_stats_lines(stats))
    Path(dest).write_text(text + ("\n" if text else ""), encoding="utf-8", newline="\n")


def read_pattern_stats(source) -> list[PatternStats]:
    stats = []
    for lineno, line in enumerate(Path(source).read_text(encoding="utf-8").splitlines(), 1):
        if not line:
            continue
        cols = line.split("\t")
        if len(cols) != 5:
            raise CorpusFormatError(
                f"pattern stats line {lineno}: expected 5 columns, got {len(cols)}"
            )
        pattern = EventPattern(cols[0], tuple(cols[1].split(",")))
        stats.append(
            PatternStats(pattern, int(cols[2]), int(cols[3]), float(cols[4]))
        )
    return stats


def write_indicative_patterns(patterns, dest) -> None:
    text = "\n".join(f"{p.template}\t{p.anchor_text()}" for p in patterns)
    Path(dest).write_text(text + ("\n" if text else ""), encoding="utf-8", newline="\n")


def read_indicative_patterns(source) -> list[EventPattern]:
    patterns = []
    for lineno, line in enumerate(Path(source).read_text(encoding="utf-8").splitlines(), 1):
        if not line:
            continue
        cols = line.split("\t")
        if len(cols) != 2:
            raise CorpusFormatError(
                f"indicative pattern line {lineno}: expected 2 columns, got {len(cols)}"
            )
        patterns.append(EventPattern(cols[0], tuple(cols[1].split(","))))
    return patterns
