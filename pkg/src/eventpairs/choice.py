"""Two-choice evaluation: for each event in a held-out stream, can a model
tell the actually-following event from a random distractor?

Question generation is a pure function of (stream, window, seed): each
question derives its own RNG from a stable hash of the seed and the prompt
position, so output is byte-identical across runs, platforms, and any
parallel split of the work.  A tie scores half credit, which keeps 0.5 the
chance floor.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from pathlib import Path

from .corpus import Corpus
from .counts import CountTable
from .errors import CorpusFormatError
from .events import (
    Event,
    EventInstance,
    PrivateStateLexicon,
    event_sort_key,
    extract_corpus_events,
    parse_event_fields,
    stream_fields,
)
from .scoring import UNIGRAM, score_pair, unigram_score

CORRECT = "CORRECT"
WRONG = "WRONG"
TIE = "TIE"


@dataclass(frozen=True)
class TwoChoiceQuestion:
    prompt: Event
    correct: Event
    distractor: Event
    source_doc: str
    seed_trace: int

    def __post_init__(self):
        if self.distractor == self.correct:
            raise ValueError("distractor must differ from the correct choice")


@dataclass(frozen=True)
class EvalReport:
    model: str
    questions_total: int
    correct: int
    ties: int

    @property
    def accuracy(self) -> float:
        return (self.correct + 0.5 * self.ties) / self.questions_total


def _question_seed(seed: int, doc_id: str, seq: int) -> int:
    digest = hashlib.blake2b(
        f"{seed}|{doc_id}|{seq}".encode("utf-8"), digest_size=8
    ).digest()
    return int.from_bytes(digest, "big")


def _as_instances(test, lexicon):
    if isinstance(test, Corpus):
        return extract_corpus_events(test, lexicon or PrivateStateLexicon.default())
    return list(test)


def generate_questions(
    test,
    window: int,
    seed: int,
    *,
    lexicon: PrivateStateLexicon | None = None,
    distractor_mode: str = "types",
) -> list[TwoChoiceQuestion]:
    """One question per instance that has a follower within the window; the
    correct choice is the nearest follower, the distractor a seeded uniform
    draw from the test inventory (deduplicated event types by default,
    tokens with ``distractor_mode='tokens'``), re-drawn until it differs
    from both prompt and correct choice.
    """
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window}")
    if distractor_mode not in ("types", "tokens"):
        raise ValueError(f"unknown distractor_mode {distractor_mode!r}")
    instances = _as_instances(test, lexicon)
    if len({i.event for i in instances}) < 2:
        raise ValueError("test stream must contain at least 2 distinct events")

    groups: dict[str, list[EventInstance]] = {}
    for inst in instances:
        groups.setdefault(inst.doc_id, []).append(inst)

    if distractor_mode == "types":
        inventory = sorted({i.event for i in instances}, key=event_sort_key)
    else:
        inventory = [i.event for i in instances]

    questions = []
    for doc_id, group in groups.items():
        for i, inst in enumerate(group):
            if i + 1 >= len(group):
                continue
            follower = group[i + 1]
            if follower.seq - inst.seq > window:
                continue
            prompt, correct = inst.event, follower.event
            if not any(e != correct and e != prompt for e in inventory):
                raise ValueError(
                    f"event inventory too small to draw a distractor for "
                    f"doc {doc_id!r} seq {inst.seq}"
                )
            trace = _question_seed(seed, doc_id, inst.seq)
            rng = random.Random(trace)
            while True:
                distractor = inventory[rng.randrange(len(inventory))]
                if distractor != correct and distractor != prompt:
                    break
            questions.append(
                TwoChoiceQuestion(
                    prompt=prompt,
                    correct=correct,
                    distractor=distractor,
                    source_doc=doc_id,
                    seed_trace=trace,
                )
            )
    return questions


def _choice_score(table: CountTable, model: str, prompt: Event, choice: Event) -> float:
    if model == UNIGRAM:
        return unigram_score(table, choice)
    return score_pair(table, model, prompt, choice)


def answer_question(table: CountTable, model: str, question: TwoChoiceQuestion) -> str:
    """Score both choices against the prompt; the higher wins, exact
    equality is a tie (the comparison is symmetric in the two choices)."""
    s_correct = _choice_score(table, model, question.prompt, question.correct)
    s_distractor = _choice_score(table, model, question.prompt, question.distractor)
    if s_correct > s_distractor:
        return CORRECT
    if s_correct < s_distractor:
        return WRONG
    return TIE


def evaluate(table: CountTable, model: str, questions) -> EvalReport:
    questions = list(questions)
    if not questions:
        raise ValueError("cannot evaluate an empty question list")
    n_correct = n_ties = 0
    for q in questions:
        outcome = answer_question(table, model, q)
        if outcome == CORRECT:
            n_correct += 1
        elif outcome == TIE:
            n_ties += 1
    return EvalReport(
        model=model, questions_total=len(questions), correct=n_correct, ties=n_ties
    )


# --- question and report files ----------------------------------------------


def question_lines(questions) -> list[str]:
    lines = []
    for q in questions:
        lines.append(
            "\t".join(
                stream_fields(q.prompt)
                + stream_fields(q.correct)
                + stream_fields(q.distractor)
                + (q.source_doc, str(q.seed_trace))
            )
        )
    return lines


def write_questions(questions, dest) -> None:
    text = "\n".join(question_lines(questions))
    Path(dest).write_text(text + ("\n" if text else ""), encoding="utf-8", newline="\n")


def read_questions(source) -> list[TwoChoiceQuestion]:
    questions = []
    for lineno, line in enumerate(Path(source).read_text(encoding="utf-8").splitlines(), 1):
        if not line:
            continue
        cols = line.split("\t")
        if len(cols) != 14:
            raise CorpusFormatError(
                f"questions line {lineno}: expected 14 columns, got {len(cols)}"
            )
        questions.append(
            TwoChoiceQuestion(
                prompt=parse_event_fields(cols[0:4]),
                correct=parse_event_fields(cols[4:8]),
                distractor=parse_event_fields(cols[8:12]),
                source_doc=cols[12],
                seed_trace=int(cols[13]),
            )
        )
    return questions


def report_lines(reports) -> list[str]:
    lines = []
    for r in reports:
        lines.append(
            f"{r.model}\t{r.questions_total}\t{r.correct}\t{r.ties}\t{r.accuracy!r}"
        )
    return lines


def write_reports(reports, dest) -> None:
    text = "\n".join(report_lines(reports))
    Path(dest).write_text(text + ("\n" if text else ""), encoding="utf-8", newline="\n")
