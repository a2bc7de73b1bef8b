import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eventpairs import Corpus, Document, Event
from eventpairs.events import lexeme
from eventpairs.patterns import (
    ACTVB_PRT,
    NP_PREP_NP,
    SUBJ_ACTVB,
    SUBJ_ACTVB_DOBJ,
    SUBJ_AUXVP_DOBJ,
    EventPattern,
    ThresholdConfig,
    bootstrap,
    classify_story,
    extract_patterns,
    pattern_to_event,
    read_indicative_patterns,
    read_pattern_stats,
    score_patterns,
    select_indicative,
    strip_gerund,
    tune_thresholds,
    write_indicative_patterns,
    write_pattern_stats,
)

from conftest import T

WENT_CAMPING = (
    T(1, "we", "we", "PRON", 2, "nsubj"),
    T(2, "went", "go", "VERB", 0, "root"),
    T(3, "camping", "camping", "NOUN", 2, "dobj"),
)
HAVE_DAMAGE = (
    T(1, "we", "we", "PRON", 2, "nsubj"),
    T(2, "have", "have", "VERB", 0, "root"),
    T(3, "damage", "damage", "NOUN", 2, "dobj"),
)
TENT_IN_VALLEY = (
    T(1, "our", "our", "PRON", 2, "nmod:poss"),
    T(2, "tent", "tent", "NOUN", 0, "root"),
    T(3, "in", "in", "ADP", 5, "case"),
    T(4, "the", "the", "DET", 5, "det"),
    T(5, "valley", "valley", "NOUN", 2, "nmod"),
)
PUT_UP = (
    T(1, "we", "we", "PRON", 2, "nsubj"),
    T(2, "put", "put", "VERB", 0, "root"),
    T(3, "up", "up", "ADP", 2, "compound:prt"),
    T(4, "the", "the", "DET", 5, "det"),
    T(5, "tent", "tent", "NOUN", 2, "dobj"),
)
RESTORED = (
    T(1, "they", "they", "PRON", 2, "nsubj"),
    T(2, "restored", "restore", "VERB", 0, "root"),
)
PASSIVE = (
    T(1, "power", "power", "NOUN", 3, "nsubj:pass"),
    T(2, "was", "be", "AUX", 3, "aux:pass"),
    T(3, "restored", "restore", "VERB", 0, "root"),
)


def doc_with(*sentences, doc_id="d", repeat=1):
    return Document(doc_id=doc_id, sentences=tuple(sentences) * repeat)


def corpus_with(docs, name="c"):
    return Corpus(name, tuple(docs))


class TestExtractPatterns:
    def test_went_camping_fires_both_verb_templates(self):
        pats = extract_patterns(doc_with(WENT_CAMPING))
        assert EventPattern(SUBJ_ACTVB_DOBJ, ("go", "camping")) in pats
        assert EventPattern(SUBJ_ACTVB, ("go",)) in pats

    def test_have_damage_uses_aux_template_only(self):
        pats = extract_patterns(doc_with(HAVE_DAMAGE))
        assert pats == [EventPattern(SUBJ_AUXVP_DOBJ, ("have", "damage"))]

    def test_tent_in_valley(self):
        pats = extract_patterns(doc_with(TENT_IN_VALLEY))
        assert pats == [EventPattern(NP_PREP_NP, ("tent", "in"))]

    def test_particle_template(self):
        pats = extract_patterns(doc_with(PUT_UP))
        assert EventPattern(ACTVB_PRT, ("put", "up")) in pats

    def test_intransitive_active(self):
        assert extract_patterns(doc_with(RESTORED)) == [
            EventPattern(SUBJ_ACTVB, ("restore",))
        ]

    def test_passive_fires_nothing(self):
        assert extract_patterns(doc_with(PASSIVE)) == []

    def test_multiplicity(self):
        pats = extract_patterns(doc_with(WENT_CAMPING, repeat=3))
        assert pats.count(EventPattern(SUBJ_ACTVB_DOBJ, ("go", "camping"))) == 3


class TestScorePatterns:
    def test_forty_relevant_ten_irrelevant(self):
        relevant = corpus_with([doc_with(WENT_CAMPING, doc_id="r", repeat=40)])
        irrelevant = corpus_with([doc_with(WENT_CAMPING, doc_id="i", repeat=10)])
        stats = {s.pattern: s for s in score_patterns(relevant, irrelevant)}
        s = stats[EventPattern(SUBJ_ACTVB_DOBJ, ("go", "camping"))]
        assert s.freq == 40 and s.total == 50 and s.cond_prob == pytest.approx(0.8, abs=1e-12)

    def test_irrelevant_only_pattern_absent(self):
        relevant = corpus_with([doc_with(WENT_CAMPING, doc_id="r")])
        irrelevant = corpus_with([doc_with(PUT_UP, doc_id="i")])
        templates = {s.pattern.template for s in score_patterns(relevant, irrelevant)}
        assert ACTVB_PRT not in templates

    def test_tie_break_is_lexicographic_and_stable(self):
        relevant = corpus_with([doc_with(WENT_CAMPING, PUT_UP, RESTORED, doc_id="r")])
        irrelevant = corpus_with([doc_with(HAVE_DAMAGE, doc_id="i")])
        first = score_patterns(relevant, irrelevant)
        second = score_patterns(relevant, irrelevant)
        assert first == second
        equal_run = [s.pattern for s in first if s.cond_prob == 1.0 and s.freq == 1]
        assert equal_run == sorted(equal_run, key=lambda p: (p.template, p.anchors))

    def test_cond_prob_is_exact_ratio(self):
        relevant = corpus_with([doc_with(WENT_CAMPING, doc_id="r", repeat=7)])
        irrelevant = corpus_with([doc_with(WENT_CAMPING, doc_id="i", repeat=3)])
        for s in score_patterns(relevant, irrelevant):
            assert abs(s.cond_prob - s.freq / s.total) < 1e-12


class TestSelectClassify:
    STATS = None

    def make_stats(self):
        relevant = corpus_with([doc_with(WENT_CAMPING, doc_id="r", repeat=40)])
        irrelevant = corpus_with([doc_with(WENT_CAMPING, doc_id="i", repeat=10)])
        return score_patterns(relevant, irrelevant)

    def test_select_thresholds(self):
        stats = self.make_stats()
        assert select_indicative(stats, ThresholdConfig(5, 0.75, 2))
        assert not select_indicative(stats, ThresholdConfig(41, 0.75, 2))
        assert not select_indicative(stats, ThresholdConfig(5, 0.81, 2))
        assert select_indicative([], ThresholdConfig(5, 0.75, 2)) == []

    def test_select_shrinks_as_thresholds_rise(self):
        stats = self.make_stats()
        base = select_indicative(stats, ThresholdConfig(1, 0.1, 1))
        for cfg in (ThresholdConfig(2, 0.1, 1), ThresholdConfig(1, 0.5, 1)):
            assert set(select_indicative(stats, cfg)) <= set(base)

    def test_classify_strictly_greater(self):
        indicative = {EventPattern(SUBJ_ACTVB_DOBJ, ("go", "camping"))}
        five = doc_with(WENT_CAMPING, repeat=5)
        three = doc_with(WENT_CAMPING, repeat=3)
        empty = doc_with(PUT_UP)
        assert classify_story(five, indicative, 3) is True
        assert classify_story(three, indicative, 3) is False
        assert classify_story(empty, indicative, 0) is False

    @given(extra=st.integers(0, 6), n=st.integers(1, 4))
    @settings(max_examples=40, deadline=None)
    def test_monotonicity_adding_hits_never_flips_to_negative(self, extra, n):
        indicative = {EventPattern(SUBJ_ACTVB_DOBJ, ("go", "camping"))}
        base = doc_with(WENT_CAMPING, repeat=n + 1)
        assert classify_story(base, indicative, n)
        bigger = doc_with(WENT_CAMPING, repeat=n + 1 + extra)
        assert classify_story(bigger, indicative, n)


def labeled_corpus(n_pos, n_neg, topic="camping", pos_repeat=4, neg_salt=0):
    docs = []
    for i in range(n_pos):
        d = doc_with(WENT_CAMPING, PUT_UP, doc_id=f"p{i}", repeat=pos_repeat)
        d.labels[topic] = "POSITIVE"
        docs.append(d)
    for i in range(n_neg):
        sents = (HAVE_DAMAGE, RESTORED)
        if neg_salt and i % neg_salt == 0:
            sents = sents + (WENT_CAMPING,)
        d = doc_with(*sents, doc_id=f"n{i}")
        d.labels[topic] = "NEGATIVE"
        docs.append(d)
    return corpus_with(docs)


class TestTune:
    def test_finds_high_precision_config(self):
        train = labeled_corpus(20, 40, neg_salt=5)
        dev = labeled_corpus(10, 20, neg_salt=5)
        result = tune_thresholds(train, dev, "camping", [1, 5], [0.5, 0.9], [1, 3])
        assert result.constraint_met
        best = [
            gp for gp in result.grid
            if (gp.f_threshold, gp.p_threshold, gp.n_threshold)
            == (result.config.f_threshold, result.config.p_threshold, result.config.n_threshold)
        ][0]
        assert best.precision >= 0.9
        feasible = [gp for gp in result.grid if gp.precision >= 0.9]
        assert best.recall == max(gp.recall for gp in feasible)

    def test_deterministic(self):
        train = labeled_corpus(12, 24, neg_salt=4)
        dev = labeled_corpus(6, 12, neg_salt=4)
        a = tune_thresholds(train, dev, "camping", [1, 2], [0.5, 0.8], [1, 2])
        b = tune_thresholds(train, dev, "camping", [1, 2], [0.5, 0.8], [1, 2])
        assert a.config == b.config and a.grid == b.grid

    def test_fallback_flag_when_floor_unreachable(self):
        train = labeled_corpus(8, 8, neg_salt=1)  # every negative salted
        dev = labeled_corpus(4, 4, neg_salt=1)
        result = tune_thresholds(
            train, dev, "camping", [1], [0.1], [1], precision_floor=0.999
        )
        assert not result.constraint_met

    def test_empty_grid_rejected(self):
        train = labeled_corpus(4, 4)
        dev = labeled_corpus(2, 2)
        with pytest.raises(ValueError, match="non-empty"):
            tune_thresholds(train, dev, "camping", [], [0.5], [1])

    def test_perfect_dev_gives_precision_one(self):
        train = labeled_corpus(10, 10)
        dev = labeled_corpus(5, 5)
        result = tune_thresholds(train, dev, "camping", [2], [0.9], [1])
        best = result.grid[0]
        assert best.precision == 1.0 and best.recall == 1.0


class TestBootstrap:
    def test_self_consistency_and_order(self):
        corpus = labeled_corpus(6, 6, neg_salt=0)
        indicative = {EventPattern(SUBJ_ACTVB_DOBJ, ("go", "camping"))}
        ids = bootstrap(corpus, indicative, 2)
        assert ids == [f"p{i}" for i in range(6)]

    def test_empty_indicative_set(self):
        corpus = labeled_corpus(3, 3)
        assert bootstrap(corpus, set(), 1) == []

    def test_invariant_to_document_order(self):
        corpus = labeled_corpus(5, 5, neg_salt=2)
        indicative = {EventPattern(SUBJ_ACTVB_DOBJ, ("go", "camping"))}
        flipped = Corpus("r", tuple(reversed(corpus.documents)))
        assert set(bootstrap(corpus, indicative, 2)) == set(
            bootstrap(flipped, indicative, 2)
        )


class TestPatternToEvent:
    def test_gerund_object_maps_to_event(self):
        p = EventPattern(SUBJ_ACTVB_DOBJ, ("go", "camping"))
        assert pattern_to_event(p) == Event("go", dobj=lexeme("camp"))

    def test_particle_pattern(self):
        p = EventPattern(ACTVB_PRT, ("put", "up"))
        assert pattern_to_event(p) == Event("put", prt="up")

    def test_prep_pattern_has_no_event_form(self):
        assert pattern_to_event(EventPattern(NP_PREP_NP, ("tent", "in"))) is None

    def test_bare_and_aux_templates(self):
        assert pattern_to_event(EventPattern(SUBJ_ACTVB, ("restore",))) == Event("restore")
        assert pattern_to_event(
            EventPattern(SUBJ_AUXVP_DOBJ, ("have", "damage"))
        ) == Event("have", dobj=lexeme("damage"))

    @pytest.mark.parametrize(
        "gerund,stem",
        [
            ("camping", "camp"), ("swimming", "swim"), ("running", "run"),
            ("passing", "pass"), ("telling", "tell"), ("thing", "thing"),
            ("spring", "spring"), ("ring", "ring"), ("skiing", "ski"),
        ],
    )
    def test_gerund_stripper(self, gerund, stem):
        assert strip_gerund(gerund) == stem


class TestPatternIO:
    def test_stats_round_trip(self, tmp_path):
        relevant = corpus_with([doc_with(WENT_CAMPING, PUT_UP, doc_id="r", repeat=3)])
        irrelevant = corpus_with([doc_with(WENT_CAMPING, doc_id="i")])
        stats = score_patterns(relevant, irrelevant)
        path = tmp_path / "patterns.tsv"
        write_pattern_stats(stats, path)
        assert read_pattern_stats(path) == stats
        write_pattern_stats(read_pattern_stats(path), tmp_path / "again.tsv")
        assert (tmp_path / "again.tsv").read_bytes() == path.read_bytes()

    def test_indicative_round_trip(self, tmp_path):
        patterns = [
            EventPattern(SUBJ_ACTVB_DOBJ, ("go", "camping")),
            EventPattern(NP_PREP_NP, ("tent", "in")),
        ]
        path = tmp_path / "indicative.tsv"
        write_indicative_patterns(patterns, path)
        assert read_indicative_patterns(path) == patterns
