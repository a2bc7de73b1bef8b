"""Independent brute-force oracle for window counts and pair scorers.

Everything here recomputes from the raw per-document event lists by direct
enumeration: no CountTable, no verb index, no memoization, and its own copy
of the generalized-match predicate.  Tests compare the production path
against this module.
"""

import math


def oracle_match(a, b, bare_matches_bare=True):
    if a.verb != b.verb:
        return False
    if a.dobj is not None and b.dobj is not None and a.dobj == b.dobj:
        return True
    if a.prt is not None and b.prt is not None and a.prt == b.prt:
        return True
    return (
        bare_matches_bare
        and a.dobj is None
        and a.prt is None
        and b.dobj is None
        and b.prt is None
    )


class OracleCounts:
    """Counts by direct enumeration over per-document event lists."""

    def __init__(self, docs, window=3):
        self.window = window
        self.events = [e for doc in docs for e in doc]
        self.n = len(self.events)
        self.instance_pairs = []
        for doc in docs:
            for i in range(len(doc)):
                for j in range(i + 1, min(i + window, len(doc) - 1) + 1):
                    self.instance_pairs.append((doc[i], doc[j]))
        self.vocab = []
        seen = set()
        for e in self.events:
            if e not in seen:
                seen.add(e)
                self.vocab.append(e)

    def count(self, e, bare_matches_bare=True):
        return sum(
            1 for x in self.events if oracle_match(e, x, bare_matches_bare=bare_matches_bare)
        )

    def pair_count(self, e1, e2):
        return sum(
            1
            for a, b in self.instance_pairs
            if oracle_match(e1, a) and oracle_match(e2, b)
        )

    def unigram(self, e):
        return self.count(e) / self.n if self.n else 0.0

    def bigram(self, e1, e2):
        c1 = self.count(e1)
        if c1 == 0:
            return 0.0
        return self.pair_count(e1, e2) / c1

    def scp(self, e1, e2):
        c1, c2 = self.count(e1), self.count(e2)
        if c1 == 0 or c2 == 0:
            return 0.0
        f = self.pair_count(e1, e2)
        return (f / c1) * (f / c2)

    def cp(self, e1, e2, alpha=0.5):
        v = len(self.vocab)
        c1, c2 = self.count(e1), self.count(e2)
        f = self.pair_count(e1, e2)
        b = self.pair_count(e2, e1)
        p_cond = (f + alpha) / (c1 + alpha * v)
        p_e2 = (c2 + alpha) / (self.n + alpha * v)
        return math.log(p_cond / p_e2) + math.log((f + alpha) / (b + alpha))
