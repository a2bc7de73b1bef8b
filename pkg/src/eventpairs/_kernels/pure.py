"""Pure-Python kernels: the import-time fallback when the compiled
extension is unavailable.  Must stay value-identical to ``_ckern``."""

from __future__ import annotations

import numpy as np

BACKEND = "pure"


def total_window_pairs(starts, window: int) -> int:
    total = 0
    for d in range(len(starts) - 1):
        n = int(starts[d + 1] - starts[d])
        for k in range(1, min(window, n - 1) + 1):
            total += n - k
    return total


def pair_keys(ids, starts, window: int):
    """Packed (first << 32 | second) keys for every ordered instance pair
    at distance 1..window within a document, in stream order."""
    ids_list = ids.tolist() if hasattr(ids, "tolist") else list(ids)
    starts_list = starts.tolist() if hasattr(starts, "tolist") else list(starts)
    out = np.empty(total_window_pairs(starts_list, window), dtype=np.int64)
    pos = 0
    for d in range(len(starts_list) - 1):
        lo, hi = starts_list[d], starts_list[d + 1]
        for i in range(lo, hi):
            first = ids_list[i] << 32
            for j in range(i + 1, min(i + window, hi - 1) + 1):
                out[pos] = first | ids_list[j]
                pos += 1
    return out


def _matches(d: int, p: int, qd: int, qp: int) -> bool:
    if qd != 0 and d == qd:
        return True
    if qp != 0 and p == qp:
        return True
    return qd == 0 and qp == 0 and d == 0 and p == 0


def match_sum(dobj, prt, counts, q_dobj: int, q_prt: int) -> int:
    total = 0
    for d, p, c in zip(dobj.tolist(), prt.tolist(), counts.tolist()):
        if _matches(d, p, q_dobj, q_prt):
            total += c
    return total


def pair_match_sum(
    d1, p1, d2, p2, counts, qd1: int, qp1: int, qd2: int, qp2: int
) -> int:
    total = 0
    for a, b, c, e, cnt in zip(
        d1.tolist(), p1.tolist(), d2.tolist(), p2.tolist(), counts.tolist()
    ):
        if _matches(a, b, qd1, qp1) and _matches(c, e, qd2, qp2):
            total += cnt
    return total
