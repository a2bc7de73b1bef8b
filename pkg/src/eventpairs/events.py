"""Multi-argument narrative events and their extraction from parses.

An event is a verb lemma with optional subject, direct object, and particle
slots.  Subject and object arguments are abstracted to a named-entity type
when one is available (personal pronouns always map to PERSON); otherwise
they keep their lowercased lemma.  Clauses headed by private-state verbs
(feel, know, ...) are dropped before positions are assigned, so the event
stream of a document carries consecutive 0-based sequence numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .corpus import Corpus, Document, Token
from .errors import CorpusFormatError

NE_TYPES = frozenset({"PERSON", "ORGANIZATION", "LOCATION", "TIME", "DATE"})

LEXEME = "LEXEME"
NETYPE = "NETYPE"

AUX_DEPRELS = frozenset({"aux", "aux:pass", "cop"})
PRT_DEPRELS = frozenset({"compound:prt", "prt"})

# Personal and possessive pronoun forms, matched on lemma or surface.
PERSONAL_PRONOUNS = frozenset(
    """
    i me my mine myself we us our ours ourselves
    you your yours yourself yourselves
    he him his himself she her hers herself it its itself
    they them their theirs themselves one oneself
    """.split()
)


@dataclass(frozen=True)
class ArgValue:
    """A normalized argument slot: a lexeme or a named-entity type."""

    kind: str
    value: str

    def __post_init__(self):
        if self.kind == NETYPE:
            if self.value not in NE_TYPES:
                raise ValueError(f"unknown NE type {self.value!r}")
        elif self.kind == LEXEME:
            if not self.value:
                raise ValueError("empty lexeme argument")
            if self.value != self.value.lower():
                raise ValueError(f"lexeme {self.value!r} is not lowercased")
        else:
            raise ValueError(f"unknown argument kind {self.kind!r}")


def lexeme(value: str) -> ArgValue:
    return ArgValue(LEXEME, value)


def netype(value: str) -> ArgValue:
    return ArgValue(NETYPE, value)


@dataclass(frozen=True)
class Event:
    """Verb lemma plus optional subj/dobj/prt slots."""

    verb: str
    subj: ArgValue | None = None
    dobj: ArgValue | None = None
    prt: str | None = None

    def __post_init__(self):
        if not self.verb:
            raise ValueError("event verb must be non-empty")
        if self.verb != self.verb.lower():
            raise ValueError(f"verb {self.verb!r} is not lowercased")
        if self.prt is not None and (not self.prt or self.prt != self.prt.lower()):
            raise ValueError(f"bad particle {self.prt!r}")


@dataclass(frozen=True)
class EventInstance:
    """An event occurrence at (document, stream position)."""

    event: Event
    doc_id: str
    seq: int
    sentence_index: int


class PrivateStateLexicon:
    """Set of verb lemmas whose clauses are excluded from event streams."""

    def __init__(self, verbs):
        self.verbs = frozenset(v.strip().lower() for v in verbs if v.strip())

    def __contains__(self, lemma: str) -> bool:
        return lemma in self.verbs

    @classmethod
    def from_file(cls, path) -> "PrivateStateLexicon":
        lemmas = []
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            body = line.split("#", 1)[0].strip()
            if body:
                lemmas.append(body)
        return cls(lemmas)

    @classmethod
    def default(cls) -> "PrivateStateLexicon":
        text = (
            resources.files("eventpairs")
            .joinpath("data/private_state_verbs.txt")
            .read_text(encoding="utf-8")
        )
        lemmas = [
            line.split("#", 1)[0].strip()
            for line in text.splitlines()
            if line.split("#", 1)[0].strip()
        ]
        return cls(lemmas)


def _token_lemma(token: Token) -> str:
    lemma = token.lemma.strip().lower()
    if not lemma or lemma == "_":
        lemma = token.surface.strip().lower()
    return lemma


def normalize_argument(token: Token) -> ArgValue:
    """Abstract an argument token: pronoun -> PERSON, NE tag -> its type,
    anything else -> lowercased lemma."""
    lemma = _token_lemma(token)
    if token.upos == "PRON" and (
        lemma in PERSONAL_PRONOUNS or token.surface.lower() in PERSONAL_PRONOUNS
    ):
        return ArgValue(NETYPE, "PERSON")
    if token.ner in NE_TYPES:
        return ArgValue(NETYPE, token.ner)
    return ArgValue(LEXEME, lemma)


def _first_child(sentence, head_index: int, deprels) -> Token | None:
    for tok in sentence:
        if tok.head == head_index and tok.deprel in deprels:
            return tok
    return None


def extract_events(doc: Document, lexicon: PrivateStateLexicon) -> list[EventInstance]:
    """One event per non-auxiliary verb token, in textual order.

    Verbs whose lemma is in the private-state lexicon are dropped (the verb
    and its slots only, not the rest of the sentence); sequence numbers are
    assigned afterwards, so they are consecutive from 0.
    """
    instances: list[EventInstance] = []
    seq = 0
    for s_idx, sentence in enumerate(doc.sentences):
        for tok in sentence:
            if tok.upos != "VERB" or tok.deprel in AUX_DEPRELS:
                continue
            verb = _token_lemma(tok)
            if not verb or verb in lexicon:
                continue
            subj_tok = _first_child(sentence, tok.index, ("nsubj",))
            dobj_tok = _first_child(sentence, tok.index, ("dobj",))
            prt_tok = _first_child(sentence, tok.index, PRT_DEPRELS)
            event = Event(
                verb=verb,
                subj=normalize_argument(subj_tok) if subj_tok else None,
                dobj=normalize_argument(dobj_tok) if dobj_tok else None,
                prt=_token_lemma(prt_tok) if prt_tok else None,
            )
            instances.append(
                EventInstance(event=event, doc_id=doc.doc_id, seq=seq, sentence_index=s_idx)
            )
            seq += 1
    return instances


def extract_corpus_events(
    corpus: Corpus, lexicon: PrivateStateLexicon, threads: int = 1
) -> list[EventInstance]:
    """Extraction over a corpus, merged in document order regardless of
    worker count."""
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            per_doc = list(pool.map(lambda d: extract_events(d, lexicon), corpus))
    else:
        per_doc = [extract_events(doc, lexicon) for doc in corpus]
    out: list[EventInstance] = []
    for chunk in per_doc:
        out.extend(chunk)
    return out


def event_matches(query: Event, candidate: Event, *, bare_matches_bare: bool = True) -> bool:
    """Generalized event equality: same verb lemma plus a shared non-subject
    argument.  Two events with no dobj/prt on either side also match (the
    bare-verb convention); the relation is symmetric but not transitive.
    """
    if query.verb != candidate.verb:
        return False
    if query.dobj is not None and candidate.dobj is not None and query.dobj == candidate.dobj:
        return True
    if query.prt is not None and candidate.prt is not None and query.prt == candidate.prt:
        return True
    if (
        bare_matches_bare
        and query.dobj is None
        and query.prt is None
        and candidate.dobj is None
        and candidate.prt is None
    ):
        return True
    return False


def _readable_arg(arg: ArgValue) -> str:
    return arg.value.lower() if arg.kind == NETYPE else arg.value


def render_readable(event: Event) -> str:
    """Annotation-friendly rendering: subject - verb particle - object."""
    verb = event.verb if event.prt is None else f"{event.verb} {event.prt}"
    parts = []
    if event.subj is not None:
        parts.append(_readable_arg(event.subj))
    parts.append(verb)
    if event.dobj is not None:
        parts.append(_readable_arg(event.dobj))
    return " - ".join(parts)


# --- event stream files ----------------------------------------------------
#
# One instance per line: doc_id, seq, verb, subj, dobj, prt separated by
# tabs; absent slots are "-", NE-typed arguments are "@PERSON" style, and a
# leading backslash escapes literal values that would collide with those
# markers.  Round-trips are bit-exact.


def _render_value(value: str) -> str:
    if value == "-" or value.startswith("@") or value.startswith("\\"):
        return "\\" + value
    return value


def _render_arg(arg: ArgValue | None) -> str:
    if arg is None:
        return "-"
    if arg.kind == NETYPE:
        return "@" + arg.value
    return _render_value(arg.value)


def _parse_arg(text: str) -> ArgValue | None:
    if text == "-":
        return None
    if text.startswith("@"):
        return ArgValue(NETYPE, text[1:])
    if text.startswith("\\"):
        return ArgValue(LEXEME, text[1:])
    return ArgValue(LEXEME, text)


def stream_fields(event: Event) -> tuple[str, str, str, str]:
    """The four serialized slot fields of an event (also the canonical sort
    key used wherever a deterministic event order is needed)."""
    return (
        _render_value(event.verb),
        _render_arg(event.subj),
        _render_arg(event.dobj),
        "-" if event.prt is None else _render_value(event.prt),
    )


def event_sort_key(event: Event) -> tuple[str, str, str, str]:
    return stream_fields(event)


def parse_event_fields(fields) -> Event:
    verb, subj, dobj, prt = fields
    return Event(
        verb=verb[1:] if verb.startswith("\\") else verb,
        subj=_parse_arg(subj),
        dobj=_parse_arg(dobj),
        prt=None if prt == "-" else (prt[1:] if prt.startswith("\\") else prt),
    )


def event_stream_lines(instances) -> list[str]:
    lines = []
    for inst in instances:
        fields = stream_fields(inst.event)
        lines.append(f"{inst.doc_id}\t{inst.seq}\t" + "\t".join(fields))
    return lines


def write_event_stream(instances, dest) -> None:
    text = "\n".join(event_stream_lines(instances))
    if text:
        text += "\n"
    if isinstance(dest, (str, Path)):
        Path(dest).write_text(text, encoding="utf-8", newline="\n")
    else:
        dest.write(text)


def read_event_stream(source) -> list[EventInstance]:
    if isinstance(source, (str, Path)):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source.read()
    instances = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line:
            continue
        cols = line.split("\t")
        if len(cols) != 6:
            raise CorpusFormatError(
                f"event stream line {lineno}: expected 6 columns, got {len(cols)}"
            )
        try:
            seq = int(cols[1])
        except ValueError:
            raise CorpusFormatError(
                f"event stream line {lineno}: bad seq {cols[1]!r}"
            ) from None
        instances.append(
            EventInstance(
                event=parse_event_fields(cols[2:6]),
                doc_id=cols[0],
                seq=seq,
                sentence_index=-1,
            )
        )
    return instances
