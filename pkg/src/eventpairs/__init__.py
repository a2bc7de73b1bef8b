"""eventpairs: learning contingent event pairs from narrative story corpora.

The pipeline ingests dependency-parsed stories, extracts multi-argument
events, bootstraps topic-sorted story sets via learned event-patterns,
scores event pairs with a causal-potential model plus three baselines,
evaluates models on auto-generated two-choice questions, and exports
ranked topic-indicative contingent event pairs.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .corpus import (
    Corpus,
    Document,
    Token,
    load_conllu,
    load_labels,
    apply_labels,
    merge_corpora,
    save_conllu,
    split_corpus,
)
from .counts import CountTable, build_counts, load_snapshot, save_snapshot
from .events import (
    ArgValue,
    Event,
    EventInstance,
    PrivateStateLexicon,
    event_matches,
    extract_corpus_events,
    extract_events,
    normalize_argument,
    read_event_stream,
    render_readable,
    write_event_stream,
)
from .scoring import (
    MODELS,
    PairScore,
    bigram_prob,
    causal_potential,
    rank_pairs,
    scp,
    score_pair,
    unigram_score,
)

__version__ = "0.1.0"

__all__ = [
    "ArgValue",
    "Corpus",
    "CountTable",
    "Document",
    "Event",
    "EventInstance",
    "KERNEL_BACKEND",
    "MODELS",
    "PairScore",
    "PrivateStateLexicon",
    "Token",
    "apply_labels",
    "bigram_prob",
    "build_counts",
    "causal_potential",
    "event_matches",
    "extract_corpus_events",
    "extract_events",
    "load_conllu",
    "load_labels",
    "load_snapshot",
    "merge_corpora",
    "normalize_argument",
    "rank_pairs",
    "read_event_stream",
    "render_readable",
    "save_conllu",
    "save_snapshot",
    "scp",
    "score_pair",
    "split_corpus",
    "unigram_score",
    "write_event_stream",
]
