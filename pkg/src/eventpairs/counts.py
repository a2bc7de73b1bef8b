"""Windowed co-occurrence count tables over event streams.

Two instances in the same document are counted as an ordered pair when the
second occurs at most ``window`` positions after the first (window 3 = the
skip-2 setting).  Table keys use exact event equality; generalized counts
(same verb plus a shared non-subject argument) are computed at query time
through a per-verb index and memoized, because the match relation is not
transitive and admits no global equivalence-class collapse.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from . import _kernels
from .errors import CorpusFormatError
from .events import Event, event_sort_key, parse_event_fields, stream_fields

DEFAULT_WINDOW = 3
DEFAULT_ALPHA = 0.5


class _VerbBucket:
    __slots__ = ("events", "dobj", "prt", "counts")

    def __init__(self, events, arg_ids, prt_ids, counts_of):
        self.events = events
        self.dobj = np.array(
            [0 if e.dobj is None else arg_ids[e.dobj] for e in events], dtype=np.int64
        )
        self.prt = np.array(
            [0 if e.prt is None else prt_ids[e.prt] for e in events], dtype=np.int64
        )
        self.counts = np.array([counts_of[e] for e in events], dtype=np.int64)


class _PairBucket:
    __slots__ = ("pairs", "d1", "p1", "d2", "p2", "counts")

    def __init__(self, pairs, counts, arg_ids, prt_ids):
        self.pairs = pairs
        self.d1 = np.array(
            [0 if p[0].dobj is None else arg_ids[p[0].dobj] for p in pairs], dtype=np.int64
        )
        self.p1 = np.array(
            [0 if p[0].prt is None else prt_ids[p[0].prt] for p in pairs], dtype=np.int64
        )
        self.d2 = np.array(
            [0 if p[1].dobj is None else arg_ids[p[1].dobj] for p in pairs], dtype=np.int64
        )
        self.p2 = np.array(
            [0 if p[1].prt is None else prt_ids[p[1].prt] for p in pairs], dtype=np.int64
        )
        self.counts = np.array(counts, dtype=np.int64)


class CountTable:
    """Exact unigram and directional windowed pair counts, with query-time
    generalized counting.  Read-only after construction; the memo caches are
    idempotent, so concurrent readers are safe."""

    def __init__(self, exact_counts, pair_counts, instances_total, window=DEFAULT_WINDOW,
                 alpha=DEFAULT_ALPHA):
        if window < 1:
            raise ValueError(f"window must be >= 1, got {window}")
        if alpha < 0:
            raise ValueError(f"smoothing alpha must be >= 0, got {alpha}")
        self.window = int(window)
        self.alpha = float(alpha)
        self.instances_total = int(instances_total)
        self._exact = dict(exact_counts)
        self._pair_counts = dict(pair_counts)
        if sum(self._exact.values()) != self.instances_total:
            raise CorpusFormatError("unigram counts do not sum to instance total")
        for (e1, e2), c in self._pair_counts.items():
            if c < 1:
                raise CorpusFormatError("stored pair with count < 1")
            if e1 not in self._exact or e2 not in self._exact:
                raise CorpusFormatError("pair references an event missing from unigrams")

        self._arg_ids: dict = {}
        self._prt_ids: dict = {}
        for event in self._exact:
            if event.dobj is not None and event.dobj not in self._arg_ids:
                self._arg_ids[event.dobj] = len(self._arg_ids) + 1
            if event.prt is not None and event.prt not in self._prt_ids:
                self._prt_ids[event.prt] = len(self._prt_ids) + 1

        by_verb: dict = {}
        for event in self._exact:
            by_verb.setdefault(event.verb, []).append(event)
        self._verb_buckets = {
            verb: _VerbBucket(evs, self._arg_ids, self._prt_ids, self._exact)
            for verb, evs in by_verb.items()
        }

        by_verb_pair: dict = {}
        for pair, count in self._pair_counts.items():
            key = (pair[0].verb, pair[1].verb)
            by_verb_pair.setdefault(key, ([], []))
            by_verb_pair[key][0].append(pair)
            by_verb_pair[key][1].append(count)
        self._pair_buckets = {
            key: _PairBucket(pairs, counts, self._arg_ids, self._prt_ids)
            for key, (pairs, counts) in by_verb_pair.items()
        }

        self._gc_memo: dict = {}
        self._gpc_memo: dict = {}
        self._sorted_pairs = None

    # --- exact views ------------------------------------------------------

    @property
    def n_distinct(self) -> int:
        return len(self._exact)

    def distinct_events(self) -> list[Event]:
        return list(self._exact.keys())

    def exact_count(self, event: Event) -> int:
        return self._exact.get(event, 0)

    def exact_pair_count(self, e1: Event, e2: Event) -> int:
        return self._pair_counts.get((e1, e2), 0)

    def pairs(self):
        """Stored ordered pairs with counts, in canonical sorted order."""
        if self._sorted_pairs is None:
            self._sorted_pairs = sorted(
                self._pair_counts.items(),
                key=lambda item: (event_sort_key(item[0][0]), event_sort_key(item[0][1])),
            )
        return list(self._sorted_pairs)

    # --- generalized queries ------------------------------------------------

    def _encode_query(self, event: Event) -> tuple[int, int]:
        if event.dobj is None:
            qd = 0
        else:
            qd = self._arg_ids.get(event.dobj, -1)
        if event.prt is None:
            qp = 0
        else:
            qp = self._prt_ids.get(event.prt, -1)
        return qd, qp

    def generalized_count(self, event: Event) -> int:
        cached = self._gc_memo.get(event)
        if cached is not None:
            return cached
        bucket = self._verb_buckets.get(event.verb)
        if bucket is None:
            result = 0
        else:
            qd, qp = self._encode_query(event)
            result = _kernels.match_sum(bucket.dobj, bucket.prt, bucket.counts, qd, qp)
        self._gc_memo[event] = result
        return result

    def generalized_pair_count(self, e1: Event, e2: Event) -> int:
        key = (e1, e2)
        cached = self._gpc_memo.get(key)
        if cached is not None:
            return cached
        bucket = self._pair_buckets.get((e1.verb, e2.verb))
        if bucket is None:
            result = 0
        else:
            qd1, qp1 = self._encode_query(e1)
            qd2, qp2 = self._encode_query(e2)
            result = _kernels.pair_match_sum(
                bucket.d1, bucket.p1, bucket.d2, bucket.p2, bucket.counts,
                qd1, qp1, qd2, qp2,
            )
        self._gpc_memo[key] = result
        return result


def build_counts(instances, window: int = DEFAULT_WINDOW, alpha: float = DEFAULT_ALPHA) -> CountTable:
    """Build a CountTable from an event-instance stream.

    Instances are grouped by document (order of first appearance); within
    each document seq must be consecutive from 0.  Cross-document pairs are
    never counted, so document order cannot affect the result.
    """
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window}")
    groups: dict[str, list] = {}
    for inst in instances:
        groups.setdefault(inst.doc_id, []).append(inst)
    for doc_id, group in groups.items():
        if [i.seq for i in group] != list(range(len(group))):
            raise CorpusFormatError(
                f"doc {doc_id!r}: event seq values are not consecutive from 0"
            )

    event_ids: dict[Event, int] = {}
    vocab: list[Event] = []
    ids_flat: list[int] = []
    starts = [0]
    for group in groups.values():
        for inst in group:
            eid = event_ids.get(inst.event)
            if eid is None:
                eid = len(vocab)
                event_ids[inst.event] = eid
                vocab.append(inst.event)
            ids_flat.append(eid)
        starts.append(len(ids_flat))
    if len(vocab) >= (1 << 31):
        raise ValueError("event vocabulary too large for packed pair keys")

    ids_arr = np.array(ids_flat, dtype=np.int64)
    starts_arr = np.array(starts, dtype=np.int64)
    if len(ids_arr):
        exact_arr = np.bincount(ids_arr, minlength=len(vocab))
    else:
        exact_arr = np.zeros(0, dtype=np.int64)
    exact = {vocab[i]: int(exact_arr[i]) for i in range(len(vocab))}

    keys = _kernels.pair_keys(ids_arr, starts_arr, window)
    pair_counts: dict = {}
    if len(keys):
        uniq, cnts = np.unique(keys, return_counts=True)
        for key, count in zip(uniq.tolist(), cnts.tolist()):
            pair_counts[(vocab[key >> 32], vocab[key & 0xFFFFFFFF])] = int(count)

    return CountTable(exact, pair_counts, len(ids_flat), window=window, alpha=alpha)


# --- snapshot files ---------------------------------------------------------
#
# Header records N, window, alpha, and the distinct-event count; then one
# "U" record per distinct event and one "P" record per stored ordered pair,
# both in canonical sorted order.  Round-trips are bit-exact.


def snapshot_lines(table: CountTable) -> list[str]:
    lines = [
        f"# N={table.instances_total}",
        f"# window={table.window}",
        f"# alpha={table.alpha!r}",
        f"# V={table.n_distinct}",
    ]
    unigrams = sorted(table._exact.items(), key=lambda item: event_sort_key(item[0]))
    for event, count in unigrams:
        lines.append("U\t" + "\t".join(stream_fields(event)) + f"\t{count}")
    for (e1, e2), count in table.pairs():
        lines.append(
            "P\t"
            + "\t".join(stream_fields(e1))
            + "\t"
            + "\t".join(stream_fields(e2))
            + f"\t{count}"
        )
    return lines


def save_snapshot(table: CountTable, dest) -> None:
    text = "\n".join(snapshot_lines(table)) + "\n"
    if isinstance(dest, (str, Path)):
        Path(dest).write_text(text, encoding="utf-8", newline="\n")
    else:
        dest.write(text)


def load_snapshot(source) -> CountTable:
    if isinstance(source, (str, Path)):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source.read()
    header: dict[str, str] = {}
    exact: dict[Event, int] = {}
    pair_counts: dict = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            header[key.strip()] = value.strip()
            continue
        cols = line.split("\t")
        if cols[0] == "U" and len(cols) == 6:
            event = parse_event_fields(cols[1:5])
            if event in exact:
                raise CorpusFormatError(f"snapshot line {lineno}: duplicate unigram")
            exact[event] = int(cols[5])
        elif cols[0] == "P" and len(cols) == 10:
            pair = (parse_event_fields(cols[1:5]), parse_event_fields(cols[5:9]))
            if pair in pair_counts:
                raise CorpusFormatError(f"snapshot line {lineno}: duplicate pair")
            pair_counts[pair] = int(cols[9])
        else:
            raise CorpusFormatError(f"snapshot line {lineno}: unrecognized record")
    try:
        n = int(header["N"])
        window = int(header["window"])
        alpha = float(header["alpha"])
        v = int(header["V"])
    except KeyError as exc:
        raise CorpusFormatError(f"snapshot missing header field {exc}") from None
    if v != len(exact):
        raise CorpusFormatError(
            f"snapshot header V={v} but {len(exact)} unigram records"
        )
    return CountTable(exact, pair_counts, n, window=window, alpha=alpha)
