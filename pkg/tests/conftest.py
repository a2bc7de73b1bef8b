import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from eventpairs import PrivateStateLexicon, load_conllu

DATA = Path(__file__).parent / "data"


def T(index, surface, lemma, upos, head, deprel, ner="NONE"):
    from eventpairs import Token

    return Token(
        index=index, surface=surface, lemma=lemma, upos=upos, head=head,
        deprel=deprel, ner=ner,
    )


@pytest.fixture(scope="session")
def lexicon():
    return PrivateStateLexicon.default()


@pytest.fixture(scope="session")
def micro_corpus():
    return load_conllu(DATA / "micro.conllu", "micro")


@pytest.fixture(scope="session")
def micro_docs(micro_corpus, lexicon):
    """Per-document event lists of the micro corpus (oracle input shape)."""
    from eventpairs import extract_events

    return [[inst.event for inst in extract_events(doc, lexicon)] for doc in micro_corpus]
