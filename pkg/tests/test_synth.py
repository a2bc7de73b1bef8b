import io
from collections import Counter

from eventpairs import (
    extract_corpus_events,
    load_conllu,
    save_conllu,
)
from eventpairs.patterns import EventPattern, extract_patterns
from eventpairs.synth import (
    CHAINS,
    CLOSER_EVENTS,
    NOISE_CHAINS,
    OPENER_EVENTS,
    TOPIC,
    TOPIC_PATTERN_HINTS,
    ground_truth_positive,
    make_chain_corpus,
    make_topic_corpus,
    planted_adjacent_pairs,
)


def test_verb_vocabularies_are_disjoint():
    groups = [
        {s.verb for s in steps} for steps in CHAINS.values()
    ] + [
        {v for v, _ in seq} for seq in NOISE_CHAINS.values()
    ] + [{v for v, _ in OPENER_EVENTS + CLOSER_EVENTS}]
    seen = set()
    for group in groups:
        assert not (group & seen), group & seen
        seen |= group


def test_deterministic_for_fixed_seed():
    a = make_chain_corpus(30, seed=5)
    b = make_chain_corpus(30, seed=5)
    assert a.doc_ids() == b.doc_ids()
    for d1, d2 in zip(a, b):
        assert d1.sentences == d2.sentences
    c = make_chain_corpus(30, seed=6)
    assert any(d1.sentences != d3.sentences for d1, d3 in zip(a, c))


def test_documents_survive_conllu_round_trip():
    corpus = make_chain_corpus(20, seed=5)
    buf = io.StringIO()
    save_conllu(corpus, buf)
    again = load_conllu(io.StringIO(buf.getvalue()), "synthetic-chains")
    for d1, d2 in zip(corpus, again):
        assert d1.sentences == d2.sentences


def test_noise_rate_near_target(lexicon):
    corpus = make_chain_corpus(200, seed=93451, noise_rate=0.4)
    instances = extract_corpus_events(corpus, lexicon)
    chain_verbs = {s.verb for steps in CHAINS.values() for s in steps}
    noise = sum(1 for i in instances if i.event.verb not in chain_verbs)
    assert abs(noise / len(instances) - 0.4) < 0.05


def test_private_state_sentences_are_filtered(lexicon):
    corpus = make_chain_corpus(100, seed=8)
    has_private_parse = any(
        tok.lemma in lexicon
        for doc in corpus
        for sent in doc.sentences
        for tok in sent
        if tok.upos == "VERB"
    )
    assert has_private_parse
    for inst in extract_corpus_events(corpus, lexicon):
        assert inst.event.verb not in lexicon


def test_planted_pairs_cover_all_chains():
    pairs = planted_adjacent_pairs()
    assert len(pairs) == sum(len(steps) - 1 for steps in CHAINS.values())
    verbs = {a.verb for a, _ in pairs} | {b.verb for _, b in pairs}
    for steps in CHAINS.values():
        assert {s.verb for s in steps} <= verbs


def test_topic_corpus_labels_and_ground_truth():
    corpus = make_topic_corpus(20, 60, seed=3)
    labels = Counter(d.label_for(TOPIC) for d in corpus)
    assert labels["POSITIVE"] == 20 and labels["NEGATIVE"] == 60
    for doc in corpus:
        assert ground_truth_positive(doc.doc_id) == (doc.label_for(TOPIC) == "POSITIVE")


def test_salted_patterns_occur_in_positives():
    corpus = make_topic_corpus(60, 30, seed=3)
    counts = Counter()
    for doc in corpus:
        if doc.label_for(TOPIC) == "POSITIVE":
            counts.update(extract_patterns(doc))
    for template, anchors in TOPIC_PATTERN_HINTS:
        assert counts[EventPattern(template, anchors)] >= 2, (template, anchors)
