"""Seeded synthetic story generators for end-to-end checks.

Documents are emitted as parsed token sequences, so they flow through the
regular extraction path.  Each document follows one template chain of
events, interleaved with noise drawn from a per-chain pool plus a few
high-frequency hub events shared by every chain; object slots vary between
a common and some rarer lexemes so that held-out streams contain both seen
and unseen transitions.  Topic corpora add prepositional scene fragments
and reuse the non-topic chains as negatives.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .corpus import Corpus, Document, Token
from .events import Event, lexeme, netype


@dataclass(frozen=True)
class StepSpec:
    verb: str
    dobjs: tuple[tuple[str | None, float], ...] = ((None, 1.0),)
    prt: str | None = None
    subj: str | None = "PERSON"  # "PERSON", a noun lemma, or None


def _steps(*specs):
    return tuple(specs)


def _var(*lemmas):
    weight = 1.0 / len(lemmas)
    return tuple((lemma, weight) for lemma in lemmas)


CHAINS: dict[str, tuple[StepSpec, ...]] = {
    "camping": _steps(
        StepSpec("wake", prt="up"),
        StepSpec("pack", dobjs=_var("backpack", "bag", "cooler", "duffel", "crate", "satchel", "tote")),
        StepSpec("drive", dobjs=_var("car", "van", "truck", "jeep", "wagon", "camper")),
        StepSpec("reach", dobjs=_var("campground", "site", "valley", "ridge", "clearing", "meadow", "overlook")),
        StepSpec("pitch", dobjs=_var("tent", "shelter", "tarp", "canopy", "hammock", "leanto")),
        StepSpec("light", dobjs=_var("fire", "stove", "lantern", "kindling", "coal", "torch", "briquette")),
        StepSpec("roast", dobjs=_var("marshmallow", "sausage", "corn", "apple", "chestnut", "kebab")),
        StepSpec("sleep"),
    ),
    "storm": _steps(
        StepSpec("track", dobjs=_var("storm", "hurricane", "front", "squall", "cyclone", "gale")),
        StepSpec("tape", dobjs=_var("window", "door", "pane", "glass", "frame", "skylight", "shutter")),
        StepSpec("lose", dobjs=_var("power", "signal", "water", "heat", "internet", "pressure")),
        StepSpec("huddle"),
        StepSpec("assess", dobjs=_var("damage", "roof", "yard", "fence", "shed", "porch", "carport")),
        StepSpec("clear", dobjs=_var("branch", "debris", "driveway", "gutterline", "limb", "trunk")),
        StepSpec("patch", dobjs=_var("shingle", "gutter", "siding", "eave", "flashing", "soffit")),
        StepSpec("rebuild"),
    ),
    "cooking": _steps(
        StepSpec("chop", dobjs=_var("onion", "carrot", "garlic", "celery", "leek", "shallot", "fennel")),
        StepSpec("heat", dobjs=_var("pan", "oven", "skillet", "wok", "griddle", "kettle")),
        StepSpec("fry", dobjs=_var("egg", "rice", "tofu", "noodle", "plantain", "dumpling", "patty")),
        StepSpec("season", dobjs=_var("soup", "stew", "broth", "curry", "chili", "gumbo")),
        StepSpec("serve", dobjs=_var("dinner", "plate", "bowl", "tray", "platter", "portion")),
        StepSpec("wash", dobjs=_var("dish", "pot", "cup", "pitcher", "saucer", "ladle")),
        StepSpec("scrub", dobjs=_var("sink", "counter", "stovetop", "hood", "backsplash", "drainboard")),
        StepSpec("relax"),
    ),
    "diving": _steps(
        StepSpec("rent", dobjs=_var("gear", "equipment", "wetsuit", "regulator", "bcd", "computer")),
        StepSpec("sail"),
        StepSpec("descend"),
        StepSpec("spot", dobjs=_var("fish", "turtle", "coral", "ray", "eel", "octopus", "seahorse")),
        StepSpec("surface"),
        StepSpec("haul", prt="in", dobjs=_var("line", "anchor", "net", "buoy", "rope", "ladder")),
        StepSpec("rinse", dobjs=_var("mask", "suit", "fin", "snorkel", "hood2", "glove")),
        StepSpec("log", dobjs=_var("dive", "depth", "time", "site_name", "visibility", "temperature")),
    ),
    "garden": _steps(
        StepSpec("dig", dobjs=_var("bed", "plot", "furrow", "border", "trench", "mound")),
        StepSpec("sow", dobjs=_var("seed", "lettuce", "radish", "beet", "chard", "kale", "turnip")),
        StepSpec("water", dobjs=_var("plant", "row", "pot", "planter", "seedbed", "sapling")),
        StepSpec("weed"),
        StepSpec("prune", dobjs=_var("rose", "hedge", "shrub", "bramble", "vine2", "fern")),
        StepSpec("harvest", dobjs=_var("tomato", "bean", "squash", "pepper", "okra", "melon", "gourd")),
        StepSpec("compost", dobjs=_var("scrap", "leaf", "stalk", "peel_bin", "husk", "rind")),
        StepSpec("mulch"),
    ),
}

# Ordered filler sequences: stories' background events are chronological
# too, so each chain has a side sequence walked in order as noise slots
# come up (plus the framing events below).
NOISE_CHAINS: dict[str, tuple[tuple[str, str | None], ...]] = {
    "camping": (
        ("stretch", None), ("paddle", "canoe"), ("hike", None), ("swim", None),
        ("grill", "burger"), ("gaze", None), ("doze", None),
    ),
    "storm": (
        ("listen", None), ("charge", "phone"), ("stack", "sandbag"),
        ("refill", "jug"), ("pace", None), ("mop", "floor"), ("wade", None),
    ),
    "cooking": (
        ("wipe", "cutting_board"), ("peel", "potato"), ("stir", "sauce"),
        ("taste", None), ("simmer", None), ("plate", "garnish"), ("sip", "wine"),
    ),
    "diving": (
        ("stow", "tank"), ("kick", None), ("breathe", None), ("signal", "buddy"),
        ("drift", None), ("float", None), ("bask", None),
    ),
    "garden": (
        ("kneel", None), ("rake", "leaf"), ("hoe", None), ("stake", "vine"),
        ("snip", "stem"), ("weigh", "basket"), ("wander", None),
    ),
}

# Framing noise shared by every story: openers before the chain gets going,
# closers once it is done.  Stories are chronological, so these are heavy
# carriers of order information.
OPENER_EVENTS: tuple[tuple[str, str | None], ...] = (
    ("rise", None), ("plan", "day"), ("leave", "house"),
)
CLOSER_EVENTS: tuple[tuple[str, str | None], ...] = (
    ("return", "home"), ("tidy", "gear"), ("unwind", None),
)

SCENES: dict[str, tuple[tuple[str, str, str], ...]] = {
    "camping": (("tent", "in", "valley"), ("trail", "by", "river")),
    "storm": (("tree", "on", "roof"), ("water", "in", "street")),
    "cooking": (("pot", "on", "stove"), ("bowl", "on", "table")),
    "diving": (("reef", "under", "boat"), ("wreck", "near", "shore")),
    "garden": (("bed", "near", "fence"), ("vine", "over", "gate")),
}

SIDE_NOISE_RATE = 0.18
EXTRA_FRAME_PROB = 0.0
PRIVATE_STATE_RATE = 0.05
SCENE_RATE = 0.35


def _weighted(rng: random.Random, options) -> str | None:
    r = rng.random()
    acc = 0.0
    for value, weight in options:
        acc += weight
        if r <= acc:
            return value
    return options[-1][0]


def _event_sentence(verb, subj, dobj, prt) -> tuple[Token, ...]:
    tokens = []
    if subj == "PERSON":
        tokens.append(("We", "we", "PRON", "nsubj"))
    elif subj is not None:
        tokens.append(("The", "the", "DET", "det:subj"))
        tokens.append((subj, subj, "NOUN", "nsubj"))
    verb_pos = len(tokens) + 1
    tokens.append((verb, verb, "VERB", "root"))
    if prt is not None:
        tokens.append((prt, prt, "ADP", "compound:prt"))
    if dobj is not None:
        tokens.append(("the", "the", "DET", "det"))
        tokens.append((dobj, dobj, "NOUN", "dobj"))
    tokens.append((".", ".", "PUNCT", "punct"))

    out = []
    dobj_pos = None
    for i, (surface, lem, upos, deprel) in enumerate(tokens, start=1):
        if deprel == "dobj":
            dobj_pos = i
    for i, (surface, lem, upos, deprel) in enumerate(tokens, start=1):
        if deprel == "root":
            head = 0
        elif deprel == "det":
            head = dobj_pos
        elif deprel == "det:subj":
            head, deprel = i + 1, "det"
        else:
            head = verb_pos
        out.append(
            Token(index=i, surface=surface, lemma=lem, upos=upos, head=head, deprel=deprel)
        )
    return tuple(out)


def _scene_sentence(np1, prep, np2) -> tuple[Token, ...]:
    return (
        Token(1, "The", "the", "DET", 2, "det"),
        Token(2, np1, np1, "NOUN", 0, "root"),
        Token(3, prep, prep, "ADP", 5, "case"),
        Token(4, "the", "the", "DET", 5, "det"),
        Token(5, np2, np2, "NOUN", 2, "nmod"),
        Token(6, ".", ".", "PUNCT", 2, "punct"),
    )


_PRIVATE_SENTENCES = (("feel", None), ("know", "way"), ("want", "rest"))


def step_event(spec: StepSpec, dobj: str | None) -> Event:
    subj = None
    if spec.subj == "PERSON":
        subj = netype("PERSON")
    elif spec.subj is not None:
        subj = lexeme(spec.subj)
    return Event(
        spec.verb,
        subj=subj,
        dobj=lexeme(dobj) if dobj else None,
        prt=spec.prt,
    )


def noise_event(verb: str, dobj: str | None) -> Event:
    return Event(verb, subj=netype("PERSON"), dobj=lexeme(dobj) if dobj else None)


def make_chain_document(
    rng: random.Random,
    chain: str,
    doc_id: str,
    noise_rate: float = 0.4,
    scenes: bool = False,
) -> Document:
    steps = list(CHAINS[chain])
    side = NOISE_CHAINS[chain]
    sentences = []

    def emit_noise(pair):
        verb, dobj = pair
        sentences.append(_event_sentence(verb, "PERSON", dobj, None))

    # openers: the first two always fire, in canonical order
    emit_noise(OPENER_EVENTS[0])
    emit_noise(OPENER_EVENTS[1])
    if rng.random() < EXTRA_FRAME_PROB:
        emit_noise(OPENER_EVENTS[2])

    for idx, spec in enumerate(steps):
        dobj = _weighted(rng, spec.dobjs)
        sentences.append(_event_sentence(spec.verb, spec.subj, dobj, spec.prt))
        # each filler is tied to one gap of the chain, so filler-step order
        # is consistent across stories
        if idx < len(side) and rng.random() < SIDE_NOISE_RATE:
            emit_noise(side[idx])
        if rng.random() < PRIVATE_STATE_RATE:
            verb, dobj = _PRIVATE_SENTENCES[rng.randrange(len(_PRIVATE_SENTENCES))]
            sentences.append(_event_sentence(verb, "PERSON", dobj, None))

    # closers, canonical order
    emit_noise(CLOSER_EVENTS[0])
    emit_noise(CLOSER_EVENTS[1])
    if rng.random() < EXTRA_FRAME_PROB:
        emit_noise(CLOSER_EVENTS[2])
    if scenes:
        for np1, prep, np2 in SCENES[chain]:
            if rng.random() < SCENE_RATE:
                pos = rng.randrange(len(sentences) + 1)
                sentences.insert(pos, _scene_sentence(np1, prep, np2))
    return Document(doc_id=doc_id, sentences=tuple(sentences))


def make_chain_corpus(
    n_docs: int = 200, seed: int = 93451, noise_rate: float = 0.4
) -> Corpus:
    """Chain-structured corpus: each document follows one of the five
    template chains, interleaved with noise at the given rate."""
    rng = random.Random(seed)
    names = sorted(CHAINS)
    docs = []
    for i in range(n_docs):
        chain = names[rng.randrange(len(names))]
        docs.append(make_chain_document(rng, chain, f"syn-{chain}-{i:04d}", noise_rate))
    return Corpus("synthetic-chains", tuple(docs), f"chain generator seed={seed}")


def planted_adjacent_pairs() -> list[tuple[Event, Event]]:
    """Canonical (most frequent form) adjacent step pairs of every chain."""
    pairs = []
    for chain in sorted(CHAINS):
        steps = CHAINS[chain]
        for a, b in zip(steps, steps[1:]):
            pairs.append((step_event(a, a.dobjs[0][0]), step_event(b, b.dobjs[0][0])))
    return pairs


TOPIC = "camping"

TOPIC_PATTERN_HINTS = (
    ("SUBJ_ACTVB_DOBJ", ("pack", "backpack")),
    ("SUBJ_ACTVB_DOBJ", ("pitch", "tent")),
    ("SUBJ_ACTVB_DOBJ", ("roast", "marshmallow")),
    ("SUBJ_ACTVB_DOBJ", ("light", "fire")),
    ("ACTVB_PRT", ("wake", "up")),
    ("SUBJ_ACTVB", ("hike",)),
    ("NP_PREP_NP", ("tent", "in")),
    ("NP_PREP_NP", ("trail", "by")),
)


def make_topic_corpus(
    n_pos: int = 100,
    n_neg: int = 300,
    seed: int = 70144,
    noise_rate: float = 0.4,
    salt_rate: float = 0.1,
    id_prefix: str = "topic",
) -> Corpus:
    """Labeled topic corpus: positives follow the topic chain (salted with
    its scene fragments), negatives follow the other chains; a small share
    of negatives carries one stray topic sentence."""
    rng = random.Random(seed)
    others = [name for name in sorted(CHAINS) if name != TOPIC]
    docs = []
    for i in range(n_pos):
        doc = make_chain_document(
            rng, TOPIC, f"{id_prefix}-pos-{i:04d}", noise_rate, scenes=True
        )
        doc.labels[TOPIC] = "POSITIVE"
        docs.append(doc)
    for i in range(n_neg):
        chain = others[rng.randrange(len(others))]
        doc = make_chain_document(
            rng, chain, f"{id_prefix}-neg-{i:04d}", noise_rate, scenes=True
        )
        if rng.random() < salt_rate:
            spec = CHAINS[TOPIC][rng.randrange(len(CHAINS[TOPIC]))]
            stray = _event_sentence(
                spec.verb, spec.subj, _weighted(rng, spec.dobjs), spec.prt
            )
            sentences = list(doc.sentences)
            sentences.insert(rng.randrange(len(sentences) + 1), stray)
            doc = Document(doc_id=doc.doc_id, sentences=tuple(sentences), labels=doc.labels)
        doc.labels[TOPIC] = "NEGATIVE"
        docs.append(doc)
    order = list(range(len(docs)))
    rng.shuffle(order)
    return Corpus(
        f"synthetic-{TOPIC}",
        tuple(docs[i] for i in order),
        f"topic generator seed={seed}",
    )


def ground_truth_positive(doc_id: str) -> bool:
    return "-pos-" in doc_id
