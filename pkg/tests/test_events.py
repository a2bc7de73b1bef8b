import io

from hypothesis import given, settings
from hypothesis import strategies as st

from eventpairs import (
    Document,
    Event,
    PrivateStateLexicon,
    event_matches,
    extract_events,
    normalize_argument,
    read_event_stream,
    render_readable,
    write_event_stream,
)
from eventpairs.events import ArgValue, lexeme, netype, stream_fields

from conftest import T
from oracle import oracle_match


def sent(*tokens):
    return tuple(tokens)


def doc(*sentences, doc_id="d"):
    return Document(doc_id=doc_id, sentences=tuple(sentences))


class TestNormalizeArgument:
    def test_personal_pronoun_maps_to_person(self):
        assert normalize_argument(T(1, "we", "we", "PRON", 2, "nsubj")) == netype("PERSON")
        assert normalize_argument(T(1, "They", "they", "PRON", 2, "nsubj")) == netype("PERSON")

    def test_ner_tag_maps_to_its_type(self):
        tok = T(7, "Campground", "Campground", "PROPN", 2, "dobj", ner="LOCATION")
        assert normalize_argument(tok) == netype("LOCATION")

    def test_common_noun_stays_lexeme(self):
        assert normalize_argument(T(4, "oatmeal", "oatmeal", "NOUN", 2, "dobj")) == lexeme("oatmeal")

    def test_non_personal_pronoun_stays_lexeme(self):
        assert normalize_argument(T(1, "something", "something", "PRON", 2, "nsubj")) == lexeme(
            "something"
        )

    def test_lemma_fallback_to_surface_never_empty(self):
        got = normalize_argument(T(1, "Thing", "_", "NOUN", 2, "dobj"))
        assert got == lexeme("thing") and got.value


class TestExtractEvents:
    def test_putting_up_the_tent(self, lexicon):
        d = doc(
            sent(
                T(1, "but", "but", "CCONJ", 6, "cc"),
                T(2, "it", "it", "PRON", 6, "nsubj"),
                T(3, "was", "be", "AUX", 6, "cop"),
                T(4, "n't", "not", "PART", 6, "advmod"),
                T(5, "at_all", "at_all", "ADV", 6, "advmod"),
                T(6, "frustrating", "frustrating", "ADJ", 0, "root"),
                T(7, "putting", "put", "VERB", 6, "csubj"),
                T(8, "up", "up", "ADP", 7, "compound:prt"),
                T(9, "the", "the", "DET", 10, "det"),
                T(10, "tent", "tent", "NOUN", 7, "dobj"),
            )
        )
        events = [i.event for i in extract_events(d, lexicon)]
        assert events == [Event("put", dobj=lexeme("tent"), prt="up")]

    def test_subordinate_clause_and_main_clause_in_order(self, lexicon):
        # "once the rain stopped, we built a campfire"
        d = doc(
            sent(
                T(1, "once", "once", "SCONJ", 4, "mark"),
                T(2, "the", "the", "DET", 3, "det"),
                T(3, "rain", "rain", "NOUN", 4, "nsubj"),
                T(4, "stopped", "stop", "VERB", 6, "advcl"),
                T(5, "we", "we", "PRON", 6, "nsubj"),
                T(6, "built", "build", "VERB", 0, "root"),
                T(7, "a", "a", "DET", 8, "det"),
                T(8, "campfire", "campfire", "NOUN", 6, "dobj"),
            )
        )
        # token order of the verbs decides stream order
        events = [i.event for i in extract_events(d, lexicon)]
        assert events == [
            Event("stop", subj=lexeme("rain")),
            Event("build", subj=netype("PERSON"), dobj=lexeme("campfire")),
        ]

    def test_private_state_only_verb_yields_nothing(self, lexicon):
        d = doc(
            sent(
                T(1, "We", "we", "PRON", 2, "nsubj"),
                T(2, "know", "know", "VERB", 0, "root"),
            )
        )
        assert extract_events(d, lexicon) == []

    def test_private_state_drops_clause_not_sentence(self, lexicon):
        d = doc(
            sent(
                T(1, "We", "we", "PRON", 2, "nsubj"),
                T(2, "knew", "know", "VERB", 0, "root"),
                T(3, "we", "we", "PRON", 4, "nsubj"),
                T(4, "packed", "pack", "VERB", 2, "ccomp"),
            )
        )
        events = [i.event for i in extract_events(d, lexicon)]
        assert events == [Event("pack", subj=netype("PERSON"))]

    def test_auxiliaries_and_copulas_never_yield_events(self, lexicon):
        d = doc(
            sent(
                T(1, "We", "we", "PRON", 3, "nsubj"),
                T(2, "had", "have", "VERB", 3, "aux"),
                T(3, "gone", "go", "VERB", 0, "root"),
            )
        )
        events = [i.event for i in extract_events(d, lexicon)]
        assert events == [Event("go", subj=netype("PERSON"))]

    def test_seq_consecutive_and_textual_order(self, micro_corpus, lexicon):
        for d in micro_corpus:
            instances = extract_events(d, lexicon)
            assert [i.seq for i in instances] == list(range(len(instances)))
            order = [(i.sentence_index, i.seq) for i in instances]
            assert order == sorted(order)

    def test_no_private_state_verbs_survive(self, micro_corpus, lexicon):
        for d in micro_corpus:
            for inst in extract_events(d, lexicon):
                assert inst.event.verb not in lexicon

    def test_first_conjunct_only_for_coordinated_objects(self, lexicon):
        d = doc(
            sent(
                T(1, "We", "we", "PRON", 2, "nsubj"),
                T(2, "packed", "pack", "VERB", 0, "root"),
                T(3, "tents", "tent", "NOUN", 2, "dobj"),
                T(4, "and", "and", "CCONJ", 5, "cc"),
                T(5, "bags", "bag", "NOUN", 3, "conj"),
            )
        )
        events = [i.event for i in extract_events(d, lexicon)]
        assert events == [Event("pack", subj=netype("PERSON"), dobj=lexeme("tent"))]


EV_GO_P_CAMP = Event("go", subj=netype("PERSON"), dobj=lexeme("camp"))
EV_GO_CAMP = Event("go", dobj=lexeme("camp"))
EV_GO_FAM_CAMP = Event("go", subj=lexeme("family"), dobj=lexeme("camp"))
EV_GO_OUT = Event("go", prt="out")
EV_GO = Event("go")


class TestEventMatches:
    def test_shared_dobj_matches(self):
        assert event_matches(EV_GO_P_CAMP, EV_GO_CAMP)
        assert event_matches(EV_GO_P_CAMP, EV_GO_FAM_CAMP)

    def test_no_shared_non_subject_argument(self):
        assert not event_matches(EV_GO_CAMP, EV_GO_OUT)

    def test_bare_verbs_match_by_convention(self):
        assert event_matches(EV_GO, EV_GO)
        assert event_matches(EV_GO, Event("go", subj=lexeme("dog")))
        assert not event_matches(EV_GO, EV_GO, bare_matches_bare=False)

    def test_bare_never_matches_argumented(self):
        assert not event_matches(EV_GO, EV_GO_CAMP)
        assert not event_matches(EV_GO, EV_GO_OUT)

    def test_different_verbs_never_match(self):
        assert not event_matches(Event("walk", dobj=lexeme("camp")), EV_GO_CAMP)

    def test_non_transitivity_witness(self):
        a = Event("go", dobj=lexeme("camp"), prt="out")
        b = EV_GO_CAMP
        c = EV_GO_OUT
        assert event_matches(a, b) and event_matches(a, c)
        assert not event_matches(b, c)

    EVENTS = st.builds(
        Event,
        verb=st.sampled_from(["go", "pack", "see"]),
        subj=st.one_of(st.none(), st.sampled_from([netype("PERSON"), lexeme("dog")])),
        dobj=st.one_of(st.none(), st.sampled_from([lexeme("camp"), lexeme("tent")])),
        prt=st.one_of(st.none(), st.sampled_from(["up", "out"])),
    )

    @given(a=EVENTS, b=EVENTS)
    @settings(max_examples=200, deadline=None)
    def test_reflexive_symmetric_and_oracle_agreement(self, a, b):
        assert event_matches(a, a)
        assert event_matches(a, b) == event_matches(b, a)
        assert event_matches(a, b) == oracle_match(a, b)


class TestRenderReadable:
    def test_full_event(self):
        e = Event("hike", subj=netype("PERSON"), dobj=lexeme("trail"), prt="up")
        assert render_readable(e) == "person - hike up - trail"

    def test_absent_subject(self):
        assert render_readable(Event("put", dobj=lexeme("tent"), prt="up")) == "put up - tent"

    def test_bare_verb(self):
        assert render_readable(EV_GO) == "go"


class TestLexicon:
    def test_default_contains_required_verbs(self, lexicon):
        for verb in ("belong", "depend", "feel", "know"):
            assert verb in lexicon

    def test_from_file_with_comments(self, tmp_path):
        p = tmp_path / "lex.txt"
        p.write_text("# comment\nfoo\nbar  # trailing\n\n")
        lex = PrivateStateLexicon.from_file(p)
        assert lex.verbs == frozenset({"foo", "bar"})


class TestEventStreamIO:
    def test_round_trip_is_bit_exact(self, micro_corpus, lexicon):
        from eventpairs import extract_corpus_events

        instances = extract_corpus_events(micro_corpus, lexicon)
        buf = io.StringIO()
        write_event_stream(instances, buf)
        text = buf.getvalue()
        again = read_event_stream(io.StringIO(text))
        assert [(i.doc_id, i.seq, i.event) for i in again] == [
            (i.doc_id, i.seq, i.event) for i in instances
        ]
        buf2 = io.StringIO()
        write_event_stream(again, buf2)
        assert buf2.getvalue() == text

    def test_netype_and_absent_markers(self):
        e = Event("reach", subj=netype("PERSON"), dobj=netype("LOCATION"))
        assert stream_fields(e) == ("reach", "@PERSON", "@LOCATION", "-")

    def test_awkward_lexemes_escape(self):
        from eventpairs.events import parse_event_fields

        for value in ("-", "@odd", "\\x"):
            e = Event("go", dobj=ArgValue("LEXEME", value))
            assert parse_event_fields(stream_fields(e)) == e


class TestParallelExtraction:
    def test_worker_count_does_not_change_the_stream(self, micro_corpus, lexicon):
        from eventpairs import extract_corpus_events

        serial = extract_corpus_events(micro_corpus, lexicon, threads=1)
        threaded = extract_corpus_events(micro_corpus, lexicon, threads=4)
        assert serial == threaded
