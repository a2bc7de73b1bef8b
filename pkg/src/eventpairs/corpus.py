"""Corpora of dependency-parsed stories.

Stories are exchanged as CoNLL-U (10 tab-separated columns, blank line
between sentences, ``# newdoc id = <id>`` between documents).  Named-entity
tags ride in the MISC column as ``NER=<tag>``; topic labels live in a
sidecar tab-separated labels file, never inside the parse files.
"""

from __future__ import annotations

import io
import math
import random
from dataclasses import dataclass, field
from pathlib import Path

from .errors import CorpusFormatError

POSITIVE = "POSITIVE"
NEGATIVE = "NEGATIVE"
UNLABELED = "UNLABELED"

_LEMMA_REQUIRED_UPOS = {"VERB", "NOUN", "PRON", "PROPN"}


@dataclass(frozen=True)
class Token:
    """One token row of a parsed sentence (1-based index, head 0 = root)."""

    index: int
    surface: str
    lemma: str
    upos: str
    head: int
    deprel: str
    ner: str = "NONE"


@dataclass
class Document:
    """A parsed story: ordered sentences of tokens plus per-topic labels."""

    doc_id: str
    sentences: tuple[tuple[Token, ...], ...]
    labels: dict[str, str] = field(default_factory=dict)

    def label_for(self, topic: str) -> str:
        return self.labels.get(topic, UNLABELED)


@dataclass
class Corpus:
    """An ordered, immutable-after-load collection of documents."""

    name: str
    documents: tuple[Document, ...]
    provenance: str = ""

    def __post_init__(self):
        self.documents = tuple(self.documents)
        by_id = {}
        for doc in self.documents:
            if doc.doc_id in by_id:
                raise CorpusFormatError(
                    f"duplicate doc_id {doc.doc_id!r} in corpus {self.name!r}"
                )
            by_id[doc.doc_id] = doc
        self._by_id = by_id

    def __len__(self):
        return len(self.documents)

    def __iter__(self):
        return iter(self.documents)

    def __getitem__(self, doc_id: str) -> Document:
        return self._by_id[doc_id]

    def __contains__(self, doc_id: str) -> bool:
        return doc_id in self._by_id

    def doc_ids(self) -> list[str]:
        return [d.doc_id for d in self.documents]

    def subset(self, doc_ids, name: str | None = None) -> "Corpus":
        wanted = set(doc_ids)
        docs = tuple(d for d in self.documents if d.doc_id in wanted)
        missing = wanted - {d.doc_id for d in docs}
        if missing:
            raise KeyError(f"doc_ids not in corpus: {sorted(missing)}")
        return Corpus(name or self.name, docs, self.provenance)

    def where_label(self, topic: str, label: str, name: str | None = None) -> "Corpus":
        docs = tuple(d for d in self.documents if d.label_for(topic) == label)
        return Corpus(name or f"{self.name}[{topic}={label}]", docs, self.provenance)


def _open_text(source):
    """Accept a path, text stream, or byte stream; yield a text stream."""
    if isinstance(source, (str, Path)):
        return open(source, "r", encoding="utf-8"), True
    if isinstance(source, (bytes, bytearray)):
        return io.StringIO(source.decode("utf-8")), True
    if hasattr(source, "read"):
        probe = source.read(0)
        if isinstance(probe, bytes):
            return io.TextIOWrapper(source, encoding="utf-8"), False
        return source, False
    raise TypeError(f"unsupported source type: {type(source)!r}")


def _parse_misc_ner(misc: str) -> str:
    if misc == "_" or not misc:
        return "NONE"
    for item in misc.split("|"):
        if item.startswith("NER="):
            value = item[4:]
            if not value:
                raise ValueError("empty NER value")
            return value
    return "NONE"


def load_conllu(source, corpus_name: str, provenance: str = "") -> Corpus:
    """Parse a CoNLL-U stream into a validated Corpus.

    Errors carry the 1-based line number of the offending row; head indices
    are checked against their sentence, and doc_ids must be unique.
    """
    stream, own = _open_text(source)
    documents: list[Document] = []
    seen_ids: set[str] = set()

    doc_id: str | None = None
    sentences: list[tuple[Token, ...]] = []
    rows: list[tuple[int, list[str]]] = []
    saw_newdoc = False

    def flush_sentence():
        nonlocal rows
        if not rows:
            return
        tokens = []
        for lineno, cols in rows:
            try:
                idx = int(cols[0])
            except ValueError:
                raise CorpusFormatError(
                    f"line {lineno}: token id {cols[0]!r} is not an integer"
                ) from None
            if idx != len(tokens) + 1:
                raise CorpusFormatError(
                    f"line {lineno}: token ids must be consecutive from 1, got {idx}"
                )
            try:
                head = int(cols[6])
            except ValueError:
                raise CorpusFormatError(
                    f"line {lineno}: head {cols[6]!r} is not an integer"
                ) from None
            try:
                ner = _parse_misc_ner(cols[9])
            except ValueError as exc:
                raise CorpusFormatError(f"line {lineno}: {exc}") from None
            lemma = "" if cols[2] == "_" else cols[2]
            if not lemma and cols[3] in _LEMMA_REQUIRED_UPOS:
                raise CorpusFormatError(
                    f"line {lineno}: empty lemma for {cols[3]} token {cols[1]!r}"
                )
            tokens.append(
                Token(
                    index=idx,
                    surface=cols[1],
                    lemma=lemma,
                    upos=cols[3],
                    head=head,
                    deprel=cols[7],
                    ner=ner,
                )
            )
        n = len(tokens)
        for tok in tokens:
            if tok.head < 0 or tok.head > n or tok.head == tok.index:
                where = f"doc {doc_id!r}, sentence {len(sentences) + 1}"
                raise CorpusFormatError(
                    f"{where}: token {tok.index} has head {tok.head} "
                    f"outside sentence of {n} tokens"
                )
        sentences.append(tuple(tokens))
        rows = []

    def flush_document():
        nonlocal sentences
        flush_sentence()
        if doc_id is None:
            return
        if doc_id in seen_ids:
            raise CorpusFormatError(f"duplicate doc_id {doc_id!r}")
        seen_ids.add(doc_id)
        documents.append(Document(doc_id=doc_id, sentences=tuple(sentences)))
        sentences = []

    try:
        for lineno, raw in enumerate(stream, start=1):
            line = raw.rstrip("\n").rstrip("\r")
            if not line:
                flush_sentence()
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("newdoc id"):
                    _, _, value = body.partition("=")
                    new_id = value.strip()
                    if not new_id:
                        raise CorpusFormatError(f"line {lineno}: empty newdoc id")
                    if "\t" in new_id:
                        raise CorpusFormatError(f"line {lineno}: doc_id contains a tab")
                    flush_document()
                    doc_id = new_id
                    saw_newdoc = True
                continue
            cols = line.split("\t")
            if len(cols) != 10:
                raise CorpusFormatError(
                    f"line {lineno}: expected 10 columns, got {len(cols)}"
                )
            if doc_id is None:
                if saw_newdoc:
                    raise CorpusFormatError(
                        f"line {lineno}: token outside any document"
                    )
                doc_id = corpus_name
            rows.append((lineno, cols))
        flush_document()
    finally:
        if own:
            stream.close()

    return Corpus(corpus_name, tuple(documents), provenance)


def conllu_lines(corpus: Corpus):
    """Yield the canonical CoNLL-U serialization of a corpus, line by line."""
    for doc in corpus:
        yield f"# newdoc id = {doc.doc_id}"
        for sent in doc.sentences:
            for tok in sent:
                misc = f"NER={tok.ner}" if tok.ner != "NONE" else "_"
                lemma = tok.lemma if tok.lemma else "_"
                yield (
                    f"{tok.index}\t{tok.surface}\t{lemma}\t{tok.upos}\t_\t_"
                    f"\t{tok.head}\t{tok.deprel}\t_\t{misc}"
                )
            yield ""


def save_conllu(corpus: Corpus, dest) -> None:
    text = "\n".join(conllu_lines(corpus)) + "\n"
    if isinstance(dest, (str, Path)):
        Path(dest).write_text(text, encoding="utf-8", newline="\n")
    else:
        dest.write(text)


def load_labels(source) -> list[tuple[str, str, str]]:
    """Read label records ``doc_id<TAB>topic<TAB>POSITIVE|NEGATIVE``."""
    stream, own = _open_text(source)
    records = []
    try:
        for lineno, raw in enumerate(stream, start=1):
            line = raw.rstrip("\n").rstrip("\r")
            if not line or line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 3:
                raise CorpusFormatError(
                    f"labels line {lineno}: expected 3 columns, got {len(cols)}"
                )
            doc_id, topic, label = cols
            if label not in (POSITIVE, NEGATIVE):
                raise CorpusFormatError(
                    f"labels line {lineno}: label must be POSITIVE or NEGATIVE, "
                    f"got {label!r}"
                )
            records.append((doc_id, topic, label))
    finally:
        if own:
            stream.close()
    return records


def apply_labels(corpus: Corpus, records, strict: bool = True) -> None:
    for doc_id, topic, label in records:
        if doc_id not in corpus:
            if strict:
                raise CorpusFormatError(f"label for unknown doc_id {doc_id!r}")
            continue
        corpus[doc_id].labels[topic] = label


def save_labels(corpus: Corpus, dest) -> None:
    lines = []
    for doc in corpus:
        for topic in sorted(doc.labels):
            lines.append(f"{doc.doc_id}\t{topic}\t{doc.labels[topic]}")
    text = "\n".join(lines) + ("\n" if lines else "")
    if isinstance(dest, (str, Path)):
        Path(dest).write_text(text, encoding="utf-8", newline="\n")
    else:
        dest.write(text)


def split_corpus(corpus: Corpus, test_fraction: float, seed: int) -> tuple[Corpus, Corpus]:
    """Deterministic seeded partition into (train, test).

    |test| = round(test_fraction * |corpus|), half away from zero; both
    parts must end up non-empty.
    """
    n = len(corpus)
    if n == 0:
        raise ValueError("cannot split an empty corpus")
    if not 0.0 < test_fraction < 1.0:
        raise ValueError(f"test_fraction must be in (0, 1), got {test_fraction}")
    k = int(math.floor(test_fraction * n + 0.5))
    if k == 0 or k == n:
        raise ValueError(
            f"test_fraction {test_fraction} yields empty "
            f"{'test' if k == 0 else 'train'} split for {n} documents"
        )
    rng = random.Random(seed)
    test_idx = set(rng.sample(range(n), k))
    train_docs = tuple(d for i, d in enumerate(corpus.documents) if i not in test_idx)
    test_docs = tuple(d for i, d in enumerate(corpus.documents) if i in test_idx)
    prov = f"split of {corpus.name!r} (fraction={test_fraction}, seed={seed})"
    return (
        Corpus(f"{corpus.name}-train", train_docs, prov),
        Corpus(f"{corpus.name}-test", test_docs, prov),
    )


def merge_corpora(base: Corpus, additions: Corpus) -> Corpus:
    """Concatenate two corpora with disjoint doc_id sets, base first."""
    base_ids = set(base.doc_ids())
    for doc in additions:
        if doc.doc_id in base_ids:
            raise CorpusFormatError(f"doc_id collision on merge: {doc.doc_id!r}")
    return Corpus(
        f"{base.name}+{additions.name}",
        base.documents + additions.documents,
        f"merge of {base.name!r} and {additions.name!r}",
    )
