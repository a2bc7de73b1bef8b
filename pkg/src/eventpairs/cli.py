"""Staged command-line pipeline.

Stages communicate only through files under the configured output
directory, and every stage records sha256 digests of its inputs and
outputs in ``manifest.json``.  A stage refuses to consume an intermediate
artifact whose digest no longer matches the manifest (stale input).
Artifact writes go through a temp file and rename, so interrupted runs
never leave half-written outputs.

Exit codes: 0 success, 1 processing error, 2 missing/stale input,
3 invalid configuration.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from . import corpus as corpus_mod
from .choice import evaluate, generate_questions, report_lines, read_questions, question_lines
from .config import PipelineConfig, load_config
from .counts import build_counts, load_snapshot, snapshot_lines
from .corpus import POSITIVE, NEGATIVE, apply_labels, load_conllu, load_labels, merge_corpora, split_corpus
from .errors import ConfigError, EventPairsError, MissingInputError
from .events import (
    PrivateStateLexicon,
    event_stream_lines,
    extract_corpus_events,
    read_event_stream,
    stream_fields,
    parse_event_fields,
)
from .indicative import (
    aggregate_ratings,
    annotation_lines,
    filter_topic_pairs,
    read_ratings,
    top_n_pairs,
)
from .patterns import (
    bootstrap,
    pattern_stats_lines,
    pattern_to_event,
    read_indicative_patterns,
    read_pattern_stats,
    score_patterns,
    select_indicative,
    tune_thresholds,
)

STAGES = (
    "ingest", "extract", "mine", "tune", "bootstrap",
    "counts", "questions", "eval", "top-pairs", "aggregate-ratings",
)


def _sha256(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def _atomic_write(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8", newline="\n")
    os.replace(tmp, path)


class StageRunner:
    """Resolves stage inputs/outputs under out_dir and keeps the manifest."""

    def __init__(self, cfg: PipelineConfig):
        self.cfg = cfg
        self.out = Path(cfg.out_dir)
        self.out.mkdir(parents=True, exist_ok=True)
        self.manifest_path = self.out / "manifest.json"
        if self.manifest_path.exists():
            self.manifest = json.loads(self.manifest_path.read_text(encoding="utf-8"))
        else:
            self.manifest = {"config": {}, "stages": {}}
        self._inputs: dict[str, str] = {}
        self._outputs: dict[str, str] = {}

    def _recorded_digest(self, path: Path) -> str | None:
        name = str(path)
        for stage in self.manifest["stages"].values():
            if name in stage.get("outputs", {}):
                return stage["outputs"][name]
        return None

    def need(self, path: Path, what: str) -> Path:
        """Declare a stage input; missing or stale files abort the stage."""
        if not path.exists():
            raise MissingInputError(f"{path} ({what})")
        digest = _sha256(path)
        recorded = self._recorded_digest(path)
        if recorded is not None and recorded != digest:
            raise MissingInputError(f"{path} ({what})", reason="stale")
        self._inputs[str(path)] = digest
        return path

    def write(self, path: Path, lines_or_text) -> Path:
        if isinstance(lines_or_text, str):
            text = lines_or_text
        else:
            text = "\n".join(lines_or_text)
            text += "\n" if text else ""
        _atomic_write(path, text)
        self._outputs[str(path)] = _sha256(path)
        return path

    def finish(self, stage: str) -> None:
        self.manifest["config"] = self.cfg.resolved()
        self.manifest["stages"][stage] = {
            "inputs": dict(sorted(self._inputs.items())),
            "outputs": dict(sorted(self._outputs.items())),
        }
        _atomic_write(
            self.manifest_path,
            json.dumps(self.manifest, indent=2, sort_keys=True) + "\n",
        )


def _lexicon(cfg: PipelineConfig) -> PrivateStateLexicon:
    if cfg.private_state_lexicon:
        return PrivateStateLexicon.from_file(cfg.private_state_lexicon)
    return PrivateStateLexicon.default()


def _load_labeled(runner: StageRunner, name: str):
    corpus = load_conllu(runner.need(runner.out / f"{name}.conllu", f"{name} corpus"), name)
    labels_path = runner.out / "labels.tsv"
    if labels_path.exists():
        apply_labels(corpus, load_labels(runner.need(labels_path, "labels")), strict=False)
    return corpus


def _events_source(cfg: PipelineConfig) -> str:
    if cfg.counts_source != "auto":
        return cfg.counts_source
    return "train_hl" if cfg.topic else "train"


def _questions_source(cfg: PipelineConfig) -> str:
    return "test_hl" if cfg.topic else "test"


# --- stages -------------------------------------------------------------------


def stage_ingest(runner: StageRunner) -> None:
    cfg = runner.cfg
    if not cfg.corpus:
        raise ConfigError("ingest requires the 'corpus' config key")
    source = Path(cfg.corpus)
    if not source.exists():
        raise MissingInputError(f"{source} (corpus)")
    runner._inputs[str(source)] = _sha256(source)
    corpus = load_conllu(source, "corpus")
    if cfg.labels:
        labels_path = Path(cfg.labels)
        if not labels_path.exists():
            raise MissingInputError(f"{labels_path} (labels)")
        runner._inputs[str(labels_path)] = _sha256(labels_path)
        apply_labels(corpus, load_labels(labels_path))
    train, test = split_corpus(corpus, cfg.test_fraction, cfg.split_seed)
    runner.write(runner.out / "train.conllu", corpus_mod.conllu_lines(train))
    runner.write(runner.out / "test.conllu", corpus_mod.conllu_lines(test))
    label_lines = []
    for part in (train, test):
        for doc in part:
            for topic in sorted(doc.labels):
                label_lines.append(f"{doc.doc_id}\t{topic}\t{doc.labels[topic]}")
    runner.write(runner.out / "labels.tsv", label_lines)
    if cfg.topic:
        train_hl = train.where_label(cfg.topic, POSITIVE, name="train_hl")
        test_hl = test.where_label(cfg.topic, POSITIVE, name="test_hl")
        runner.write(runner.out / "train_hl.conllu", corpus_mod.conllu_lines(train_hl))
        runner.write(runner.out / "test_hl.conllu", corpus_mod.conllu_lines(test_hl))


def stage_extract(runner: StageRunner) -> None:
    cfg = runner.cfg
    lexicon = _lexicon(cfg)
    stems = ["train", "test", "train_hl", "test_hl", "train_bs"]
    found = False
    for stem in stems:
        path = runner.out / f"{stem}.conllu"
        if not path.exists():
            continue
        found = True
        corpus = load_conllu(runner.need(path, f"{stem} corpus"), stem)
        instances = extract_corpus_events(corpus, lexicon, threads=cfg.threads)
        runner.write(runner.out / f"{stem}.events", event_stream_lines(instances))
    if not found:
        raise MissingInputError(f"{runner.out}/train.conllu (run ingest first)")


def stage_mine(runner: StageRunner) -> None:
    cfg = runner.cfg
    if not cfg.topic:
        raise ConfigError("mine requires the 'topic' config key")
    train = _load_labeled(runner, "train")
    relevant = train.where_label(cfg.topic, POSITIVE)
    irrelevant = train.where_label(cfg.topic, NEGATIVE)
    stats = score_patterns(relevant, irrelevant)
    runner.write(runner.out / "patterns.tsv", pattern_stats_lines(stats))


def stage_tune(runner: StageRunner) -> None:
    cfg = runner.cfg
    if not cfg.topic:
        raise ConfigError("tune requires the 'topic' config key")
    train = _load_labeled(runner, "train")
    dev = _load_labeled(runner, "test")
    runner.need(runner.out / "patterns.tsv", "pattern stats (run mine first)")
    result = tune_thresholds(
        train, dev, cfg.topic, cfg.grid_f, cfg.grid_p, cfg.grid_n,
        precision_floor=cfg.precision_floor,
    )
    report = [
        "f_threshold\tp_threshold\tn_threshold\tprecision\trecall\tf_measure"
    ] + [
        f"{gp.f_threshold}\t{gp.p_threshold!r}\t{gp.n_threshold}"
        f"\t{gp.precision!r}\t{gp.recall!r}\t{gp.f_measure!r}"
        for gp in result.grid
    ]
    runner.write(runner.out / "tune_report.tsv", report)
    runner.write(
        runner.out / "thresholds.json",
        json.dumps(
            {
                "f_threshold": result.config.f_threshold,
                "p_threshold": result.config.p_threshold,
                "n_threshold": result.config.n_threshold,
                "precision_floor_met": result.constraint_met,
            },
            indent=2,
            sort_keys=True,
        )
        + "\n",
    )
    stats = read_pattern_stats(runner.out / "patterns.tsv")
    indicative = select_indicative(stats, result.config)
    runner.write(
        runner.out / "indicative_patterns.tsv",
        [f"{p.template}\t{p.anchor_text()}" for p in indicative],
    )
    events, seen = [], set()
    for pattern in indicative:
        event = pattern_to_event(pattern)
        if event is not None and event not in seen:
            seen.add(event)
            events.append(event)
    runner.write(
        runner.out / "indicative_events.tsv",
        ["\t".join(stream_fields(e)) for e in events],
    )


def stage_bootstrap(runner: StageRunner) -> None:
    cfg = runner.cfg
    if not cfg.unlabeled_corpus:
        raise ConfigError("bootstrap requires the 'unlabeled_corpus' config key")
    patterns = read_indicative_patterns(
        runner.need(runner.out / "indicative_patterns.tsv", "indicative patterns (run tune first)")
    )
    thresholds = json.loads(
        runner.need(runner.out / "thresholds.json", "thresholds (run tune first)").read_text()
    )
    unlabeled_path = Path(cfg.unlabeled_corpus)
    if not unlabeled_path.exists():
        raise MissingInputError(f"{unlabeled_path} (unlabeled_corpus)")
    runner._inputs[str(unlabeled_path)] = _sha256(unlabeled_path)
    unlabeled = load_conllu(unlabeled_path, "unlabeled")
    ids = bootstrap(unlabeled, set(patterns), thresholds["n_threshold"])
    runner.write(runner.out / "bootstrap_ids.txt", ids)
    base_stem = "train_hl" if cfg.topic else "train"
    base = load_conllu(runner.need(runner.out / f"{base_stem}.conllu", "base corpus"), base_stem)
    merged = merge_corpora(base, unlabeled.subset(ids, name="bootstrapped"))
    runner.write(runner.out / "train_bs.conllu", corpus_mod.conllu_lines(merged))


def stage_counts(runner: StageRunner) -> None:
    cfg = runner.cfg
    stem = _events_source(cfg)
    events_path = runner.need(
        runner.out / f"{stem}.events", f"{stem} events (run extract first)"
    )
    instances = read_event_stream(events_path)
    table = build_counts(instances, window=cfg.window, alpha=cfg.alpha)
    runner.write(runner.out / f"counts_{stem}.snapshot", snapshot_lines(table))


def stage_questions(runner: StageRunner) -> None:
    cfg = runner.cfg
    stem = _questions_source(cfg)
    events_path = runner.need(
        runner.out / f"{stem}.events", f"{stem} events (run extract first)"
    )
    instances = read_event_stream(events_path)
    questions = generate_questions(
        instances, cfg.window, cfg.distractor_seed, distractor_mode=cfg.distractor_mode
    )
    runner.write(runner.out / "questions.tsv", question_lines(questions))


def stage_eval(runner: StageRunner) -> None:
    cfg = runner.cfg
    stem = _events_source(cfg)
    table = load_snapshot(
        runner.need(runner.out / f"counts_{stem}.snapshot", "counts (run counts first)")
    )
    questions = read_questions(runner.need(runner.out / "questions.tsv", "questions"))
    reports = [evaluate(table, model, questions) for model in cfg.models]
    runner.write(runner.out / "eval_report.tsv", report_lines(reports))


def stage_top_pairs(runner: StageRunner) -> None:
    cfg = runner.cfg
    stem = _events_source(cfg)
    table = load_snapshot(
        runner.need(runner.out / f"counts_{stem}.snapshot", "counts (run counts first)")
    )
    if cfg.topic:
        events_path = runner.need(
            runner.out / "indicative_events.tsv", "indicative events (run tune first)"
        )
        indicative = [
            parse_event_fields(line.split("\t"))
            for line in events_path.read_text(encoding="utf-8").splitlines()
            if line
        ]
        filtered = filter_topic_pairs(
            table, indicative, cfg.min_freq, exact_counts=cfg.exact_pair_filter
        )
    else:
        indicative = []
        filtered = [
            pair
            for pair, raw in table.pairs()
            if (
                raw
                if cfg.exact_pair_filter
                else table.generalized_pair_count(*pair)
            )
            >= cfg.min_freq
        ]
    pair_set = top_n_pairs(
        table,
        filtered,
        cfg.pairs_model,
        cfg.top_n,
        topic=cfg.topic,
        min_freq=cfg.min_freq,
        indicative_events=indicative,
    )
    runner.write(runner.out / "top_pairs.tsv", annotation_lines(pair_set, table.alpha))


def stage_aggregate_ratings(runner: StageRunner) -> None:
    cfg = runner.cfg
    if not cfg.ratings:
        raise ConfigError("aggregate-ratings requires the 'ratings' config key")
    ratings_path = Path(cfg.ratings)
    if not ratings_path.exists():
        raise MissingInputError(f"{ratings_path} (ratings)")
    runner._inputs[str(ratings_path)] = _sha256(ratings_path)
    summaries = aggregate_ratings(read_ratings(ratings_path))
    runner.write(
        runner.out / "ratings_summary.tsv",
        [f"{s.pair_rank}\t{s.n_ratings}\t{s.mean!r}\t{s.bucket}" for s in summaries],
    )


_STAGE_FUNCS = {
    "ingest": stage_ingest,
    "extract": stage_extract,
    "mine": stage_mine,
    "tune": stage_tune,
    "bootstrap": stage_bootstrap,
    "counts": stage_counts,
    "questions": stage_questions,
    "eval": stage_eval,
    "top-pairs": stage_top_pairs,
    "aggregate-ratings": stage_aggregate_ratings,
}


def run_stage(stage: str, cfg: PipelineConfig) -> int:
    runner = StageRunner(cfg)
    _STAGE_FUNCS[stage](runner)
    runner.finish(stage)
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="eventpairs",
        description="Learn contingent event pairs from parsed story corpora.",
    )
    sub = parser.add_subparsers(dest="stage", required=True)
    for stage in STAGES:
        p = sub.add_parser(stage, help=f"run the {stage} stage")
        p.add_argument("--config", required=True, help="path to the pipeline config file")
        p.add_argument("--threads", type=int, default=None, help="worker threads within the stage")
        p.add_argument("--seed", type=int, default=None,
                       help="override the stage-relevant seed (split for ingest, distractor for questions)")
        p.add_argument("--topic", default=None, help="override the configured topic")
    args = parser.parse_args(argv)

    try:
        try:
            cfg = load_config(args.config)
        except OSError as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from None
        if args.threads is not None:
            cfg.threads = args.threads
        if args.topic is not None:
            cfg.topic = args.topic
        if args.seed is not None:
            if args.stage == "questions":
                cfg.distractor_seed = args.seed
            else:
                cfg.split_seed = args.seed
        return run_stage(args.stage, cfg)
    except ConfigError as exc:
        print(f"eventpairs: config error: {exc}", file=sys.stderr)
        return 3
    except MissingInputError as exc:
        print(f"eventpairs: {exc}", file=sys.stderr)
        return 2
    except (EventPairsError, ValueError, OSError) as exc:
        print(f"eventpairs: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
