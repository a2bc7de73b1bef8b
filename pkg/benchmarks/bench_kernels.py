#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Two sections: raw kernel microbenchmarks (windowed pair-key generation and
generalized-match sums over large arrays), then end-to-end count-table
construction and query throughput, checking that both backends produce
identical results.

    python benchmarks/bench_kernels.py [--docs 20000] [--doc-len 14]
"""

import argparse
import random
import time

import numpy as np

import eventpairs.counts as counts_mod
from eventpairs import Event, EventInstance
from eventpairs._kernels import get_backend
from eventpairs.events import lexeme


def time_call(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def kernel_micro(backends):
    rng = np.random.default_rng(3)
    n = 400_000
    ids = rng.integers(0, 5000, size=n, dtype=np.int64)
    starts = np.arange(0, n + 1, 16, dtype=np.int64)
    if starts[-1] != n:
        starts = np.append(starts, n)

    k = 200_000
    dobj = rng.integers(0, 300, size=k, dtype=np.int64)
    prt = rng.integers(0, 4, size=k, dtype=np.int64)
    counts = rng.integers(1, 50, size=k, dtype=np.int64)

    print(f"-- kernel microbenchmarks ({n} instances, {k}-event bucket)")
    print(f"{'backend':>9} {'pair_keys':>12} {'match_sum':>12}")
    reference = {}
    for name, impl in backends.items():
        t_keys, keys = time_call(impl.pair_keys, ids, starts, 3)
        t_match, total = time_call(impl.match_sum, dobj, prt, counts, 17, 2)
        reference.setdefault("keys", keys.tolist())
        reference.setdefault("match", total)
        assert keys.tolist() == reference["keys"] and total == reference["match"]
        print(f"{name:>9} {t_keys:>11.4f}s {t_match:>11.4f}s")


def synth_stream(n_docs: int, doc_len: int, seed: int = 1):
    rng = random.Random(seed)
    verbs = [f"verb{i}" for i in range(40)]
    objs = [lexeme(f"obj{i}") for i in range(300)]
    instances = []
    for d in range(n_docs):
        for i in range(doc_len):
            event = Event(
                verbs[rng.randrange(len(verbs))],
                dobj=objs[rng.randrange(len(objs))] if rng.random() < 0.6 else None,
                prt="up" if rng.random() < 0.1 else None,
            )
            instances.append(EventInstance(event=event, doc_id=f"d{d}", seq=i, sentence_index=i))
    return instances


def run_backend(impl, instances, query_events):
    counts_mod._kernels = impl
    t0 = time.perf_counter()
    table = counts_mod.build_counts(instances, window=3, alpha=0.5)
    build_s = time.perf_counter() - t0

    t0 = time.perf_counter()
    gc_sum = 0
    for e in query_events:
        gc_sum += table.generalized_count(e)
    gc_s = time.perf_counter() - t0

    pairs = table.pairs()[: len(query_events)]
    t0 = time.perf_counter()
    gpc_sum = 0
    for (e1, e2), _ in pairs:
        gpc_sum += table.generalized_pair_count(e1, e2)
    gpc_s = time.perf_counter() - t0
    return build_s, gc_s, gpc_s, (table.instances_total, len(table.pairs()), gc_sum, gpc_sum)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--docs", type=int, default=20000)
    parser.add_argument("--doc-len", type=int, default=14)
    args = parser.parse_args()

    backends = {}
    for name in ("pure", "compiled"):
        try:
            backends[name] = get_backend(name)
        except ImportError:
            print(f"{name}: not available, skipping")
    kernel_micro(backends)

    instances = synth_stream(args.docs, args.doc_len)
    print(f"-- end to end ({len(instances)} instances across {args.docs} documents)")
    probe = counts_mod.build_counts(instances[: 50 * args.doc_len], window=3)
    query_events = probe.distinct_events() * 40

    results = {}
    for name, impl in backends.items():
        results[name] = run_backend(impl, instances, query_events)
    if len(results) == 2:
        assert results["pure"][3] == results["compiled"][3], "backend results differ"
        print(f"checksums identical across backends: {results['pure'][3]}")

    print(f"{'backend':>9} {'build':>10} {'gen-count':>12} {'gen-pair':>12}")
    for name, (build_s, gc_s, gpc_s, _) in results.items():
        print(
            f"{name:>9} {build_s:>9.3f}s {len(query_events)/gc_s:>9.0f}q/s "
            f"{len(query_events)/max(gpc_s, 1e-9):>9.0f}q/s"
        )


if __name__ == "__main__":
    main()
