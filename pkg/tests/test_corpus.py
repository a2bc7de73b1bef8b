import io

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eventpairs import (
    Corpus,
    Document,
    apply_labels,
    load_conllu,
    load_labels,
    merge_corpora,
    save_conllu,
    split_corpus,
)
from eventpairs.corpus import conllu_lines
from eventpairs.errors import CorpusFormatError

from conftest import T

TWO_DOC_STREAM = """# newdoc id = a
1\tWe\twe\tPRON\t_\t_\t2\tnsubj\t_\t_
2\tleft\tleave\tVERB\t_\t_\t0\troot\t_\t_

1\tWe\twe\tPRON\t_\t_\t2\tnsubj\t_\t_
2\tarrived\tarrive\tVERB\t_\t_\t0\troot\t_\t_

1\tIt\tit\tPRON\t_\t_\t2\tnsubj\t_\t_
2\trained\train\tVERB\t_\t_\t0\troot\t_\t_

# newdoc id = b
1\tWe\twe\tPRON\t_\t_\t2\tnsubj\t_\t_
2\tslept\tsleep\tVERB\t_\t_\t0\troot\t_\t_

1\tWe\twe\tPRON\t_\t_\t2\tnsubj\t_\t_
2\twoke\twake\tVERB\t_\t_\t0\troot\t_\t_

1\tWe\twe\tPRON\t_\t_\t2\tnsubj\t_\t_
2\tate\teat\tVERB\t_\t_\t0\troot\t_\t_
"""


def doc_of(doc_id, n_sents=1):
    sent = (T(1, "We", "we", "PRON", 2, "nsubj"), T(2, "go", "go", "VERB", 0, "root"))
    return Document(doc_id=doc_id, sentences=tuple(sent for _ in range(n_sents)))


def corpus_of(n, prefix="d"):
    return Corpus("test", tuple(doc_of(f"{prefix}{i}") for i in range(n)))


class TestLoadConllu:
    def test_two_documents_three_sentences_each(self):
        corpus = load_conllu(io.StringIO(TWO_DOC_STREAM), "pair")
        assert len(corpus) == 2
        assert [len(d.sentences) for d in corpus] == [3, 3]
        assert corpus.doc_ids() == ["a", "b"]

    def test_byte_stream_accepted(self):
        corpus = load_conllu(io.BytesIO(TWO_DOC_STREAM.encode()), "pair")
        assert len(corpus) == 2

    def test_nine_columns_is_an_error_with_line_number(self):
        bad = TWO_DOC_STREAM.replace(
            "2\trained\train\tVERB\t_\t_\t0\troot\t_\t_",
            "2\trained\train\tVERB\t_\t_\t0\troot\t_",
        )
        with pytest.raises(CorpusFormatError, match=r"line 9: expected 10 columns"):
            load_conllu(io.StringIO(bad), "pair")

    def test_head_out_of_range_names_doc_and_sentence(self):
        bad = TWO_DOC_STREAM.replace(
            "2\tarrived\tarrive\tVERB\t_\t_\t0\troot\t_\t_",
            "2\tarrived\tarrive\tVERB\t_\t_\t7\troot\t_\t_",
        )
        with pytest.raises(CorpusFormatError, match=r"doc 'a', sentence 2"):
            load_conllu(io.StringIO(bad), "pair")

    def test_duplicate_doc_id_rejected(self):
        bad = TWO_DOC_STREAM.replace("# newdoc id = b", "# newdoc id = a")
        with pytest.raises(CorpusFormatError, match=r"duplicate doc_id 'a'"):
            load_conllu(io.StringIO(bad), "pair")

    def test_file_without_newdoc_is_one_document(self):
        stream = "\n".join(TWO_DOC_STREAM.splitlines()[1:9]) + "\n"
        corpus = load_conllu(io.StringIO(stream), "solo")
        assert corpus.doc_ids() == ["solo"]

    def test_ner_parsed_from_misc(self, micro_corpus):
        doc = micro_corpus["micro-2"]
        assert doc.sentences[1][6].ner == "LOCATION"
        assert doc.sentences[0][0].ner == "NONE"

    def test_empty_lemma_for_verb_rejected(self):
        bad = TWO_DOC_STREAM.replace(
            "2\tleft\tleave\tVERB", "2\tleft\t_\tVERB"
        )
        with pytest.raises(CorpusFormatError, match="empty lemma"):
            load_conllu(io.StringIO(bad), "pair")

    def test_nonconsecutive_token_ids_rejected(self):
        bad = TWO_DOC_STREAM.replace(
            "2\tleft\tleave\tVERB\t_\t_\t0\troot\t_\t_",
            "3\tleft\tleave\tVERB\t_\t_\t0\troot\t_\t_",
        )
        with pytest.raises(CorpusFormatError, match="consecutive"):
            load_conllu(io.StringIO(bad), "pair")


class TestRoundTrip:
    def test_load_serialize_load_identical(self, micro_corpus):
        buf = io.StringIO()
        save_conllu(micro_corpus, buf)
        again = load_conllu(io.StringIO(buf.getvalue()), "micro")
        assert again.doc_ids() == micro_corpus.doc_ids()
        for d1, d2 in zip(micro_corpus, again):
            assert d1.sentences == d2.sentences
        buf2 = io.StringIO()
        save_conllu(again, buf2)
        assert buf.getvalue() == buf2.getvalue()

    def test_serialization_is_line_based(self, micro_corpus):
        lines = list(conllu_lines(micro_corpus))
        assert lines[0] == "# newdoc id = micro-1"


class TestSplit:
    def test_basic_partition(self):
        corpus = corpus_of(100)
        train, test = split_corpus(corpus, 0.2, seed=7)
        assert len(train) == 80 and len(test) == 20
        assert set(train.doc_ids()).isdisjoint(test.doc_ids())
        assert sorted(train.doc_ids() + test.doc_ids()) == sorted(corpus.doc_ids())

    def test_deterministic(self):
        corpus = corpus_of(50)
        a = split_corpus(corpus, 0.3, seed=11)
        b = split_corpus(corpus, 0.3, seed=11)
        assert a[0].doc_ids() == b[0].doc_ids()
        assert a[1].doc_ids() == b[1].doc_ids()
        c = split_corpus(corpus, 0.3, seed=12)
        assert c[1].doc_ids() != a[1].doc_ids()

    def test_paper_scale_fraction_reproduces_4000_200(self):
        corpus = corpus_of(4200)
        train, test = split_corpus(corpus, 200 / 4200, seed=1)
        assert len(train) == 4000 and len(test) == 200

    def test_degenerate_fractions_rejected(self):
        corpus = corpus_of(4)
        with pytest.raises(ValueError, match="empty test"):
            split_corpus(corpus, 0.01, seed=1)
        with pytest.raises(ValueError, match="empty train"):
            split_corpus(corpus, 0.99, seed=1)

    @given(n=st.integers(2, 60), seed=st.integers(0, 2**32 - 1),
           fraction=st.floats(0.05, 0.95))
    @settings(max_examples=60, deadline=None)
    def test_partition_exact_for_all_seeds(self, n, seed, fraction):
        k = int(fraction * n + 0.5)
        if k == 0 or k == n:
            return
        corpus = corpus_of(n)
        train, test = split_corpus(corpus, fraction, seed)
        assert len(train) + len(test) == n
        assert set(train.doc_ids()) | set(test.doc_ids()) == set(corpus.doc_ids())
        assert set(train.doc_ids()) & set(test.doc_ids()) == set()


class TestMerge:
    def test_paper_scale_sizes(self):
        assert len(merge_corpora(corpus_of(263, "s"), corpus_of(971, "b"))) == 1234
        assert len(merge_corpora(corpus_of(192, "s"), corpus_of(870, "b"))) == 1062

    def test_merge_with_empty_additions_is_identity(self):
        base = corpus_of(5)
        merged = merge_corpora(base, Corpus("empty", ()))
        assert merged.doc_ids() == base.doc_ids()

    def test_order_preserved_base_first(self):
        merged = merge_corpora(corpus_of(2, "a"), corpus_of(2, "b"))
        assert merged.doc_ids() == ["a0", "a1", "b0", "b1"]

    def test_collision_names_the_id(self):
        with pytest.raises(CorpusFormatError, match="'d0'"):
            merge_corpora(corpus_of(3), corpus_of(2))


class TestLabels:
    def test_apply_and_query(self):
        corpus = corpus_of(3)
        records = load_labels(io.StringIO("d0\tcamping\tPOSITIVE\nd1\tcamping\tNEGATIVE\n"))
        apply_labels(corpus, records)
        assert corpus["d0"].label_for("camping") == "POSITIVE"
        assert corpus["d1"].label_for("camping") == "NEGATIVE"
        assert corpus["d2"].label_for("camping") == "UNLABELED"
        assert corpus.where_label("camping", "POSITIVE").doc_ids() == ["d0"]

    def test_bad_label_value_rejected(self):
        with pytest.raises(CorpusFormatError, match="POSITIVE or NEGATIVE"):
            load_labels(io.StringIO("d0\tcamping\tMAYBE\n"))

    def test_unknown_doc_id_rejected(self):
        corpus = corpus_of(1)
        with pytest.raises(CorpusFormatError, match="unknown doc_id"):
            apply_labels(corpus, [("zz", "camping", "POSITIVE")])
