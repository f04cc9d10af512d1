"""Error-driven construction of the exception tree.

Layer 1 seeds one node per tag the first-guess tagger produced, each
passing its tag through unchanged.  Every training token is then filed
at the node that currently decides it, as a wrong or a correct record.
Nodes with wrong records grow exception children: candidate rules come
from filling templates with the wrong records' own context values, a
candidate's score is (records it fixes) minus (records it breaks), and
the best scorer above the level's threshold is attached.  Matching
records move down to the new child, which is expanded in turn before
the parent looks for its next exception.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

from .corpus import TaggedCorpus, check_aligned
from .initial_tagger import (
    DEFAULT_ENGLISH_RULES,
    MODE_GENERIC,
    InitialTagger,
    InitialTaggerOptions,
    initialize_corpus,
)
from .lexicon import build_lexicon
from .scrdr import (
    FIELD_INDEX,
    Node,
    Rule,
    TagObject,
    evaluate,
    insert_exception,
    make_tag_objects,
    new_root,
    render_rule,
)
from .templates import CATALOG, Template, instantiate, project

_CURRENT_TAG = FIELD_INDEX["currentTag"]

DEFAULT_MAX_LEVEL = 50


class LearnerStateError(RuntimeError):
    """The incremental record bookkeeping disagrees with the final tree."""


@dataclass(frozen=True)
class Thresholds:
    """Minimum rule scores per layer.

    ``layer2`` gates exceptions to the seed nodes, ``deeper`` gates
    everything below.  With ``strict`` (the default) a rule must score
    strictly above the threshold.
    """

    layer2: int = 3
    deeper: int = 2
    strict: bool = True

    def __post_init__(self) -> None:
        if self.layer2 < 1 or self.deeper < 1:
            raise ValueError("thresholds must be at least 1")

    def for_level(self, level: int) -> int:
        return self.layer2 if level == 2 else self.deeper

    def passes(self, score: int, level: int) -> bool:
        t = self.for_level(level)
        return score > t if self.strict else score >= t


@dataclass(frozen=True)
class TrainOptions:
    thresholds: Thresholds = Thresholds()
    mode: str = MODE_GENERIC
    mask_hapax: bool = True
    regex_rules: tuple[tuple[str, str], ...] = DEFAULT_ENGLISH_RULES
    max_level: int = DEFAULT_MAX_LEVEL
    workers: int = 1
    self_check: bool = True
    separator: str = "/"


class Record(NamedTuple):
    obj: TagObject
    gold: str


class Selection(NamedTuple):
    rule: Rule
    template_id: int
    a: int
    b: int
    score: int


class LearnResult(NamedTuple):
    root: Node
    audit: list[dict]


class _NodeRecords:
    __slots__ = ("wrong", "correct")

    def __init__(self) -> None:
        self.wrong: list[Record] = []
        self.correct: list[Record] = []


def _best_for_template(
    template: Template,
    wrong: list[Record],
    correct: list[Record] | None,
    thresholds: Thresholds,
    level: int,
) -> tuple[tuple, Template, tuple[str, ...], str, int, int] | None:
    """Best admissible candidate from one template, or None.

    Candidates are grouped by their projected field values, so each
    (values, conclusion) pair is scored once however many records
    propose it: a = wrong records the rule would fix, b = wrong records
    it would still leave wrong.
    """
    by_values: dict[tuple[str, ...], Counter[str]] = {}
    for r in wrong:
        values = project(template, r.obj)
        if values is not None:
            by_values.setdefault(values, Counter())[r.gold] += 1
    if not by_values:
        return None
    blocked: set[tuple[str, ...]] = set()
    if correct is not None:
        for r in correct:
            values = project(template, r.obj)
            if values is not None:
                blocked.add(values)
    best = None
    for values, counter in by_values.items():
        if values in blocked:
            continue
        total = sum(counter.values())
        for conclusion, a in counter.items():
            score = 2 * a - total
            if not thresholds.passes(score, level):
                continue
            key = (-score, template.id, values, conclusion)
            if best is None or key < best[0]:
                best = (key, template, values, conclusion, a, total - a)
    return best


def select_rule(
    wrong: list[Record],
    correct: list[Record] | None,
    thresholds: Thresholds,
    level: int,
    workers: int = 1,
) -> Selection | None:
    """Pick the highest-scoring candidate rule for one node.

    ``correct`` enables the no-regression check: candidates matching
    any correct record are discarded.  Pass None to skip it (used at
    the seed nodes, whose correct sets are most of the corpus).

    Ties break on template id, then field values, then conclusion, so
    the choice never depends on iteration order.
    """
    if not wrong:
        return None
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(
                    lambda t: _best_for_template(t, wrong, correct, thresholds, level),
                    CATALOG,
                )
            )
    else:
        results = [
            _best_for_template(t, wrong, correct, thresholds, level) for t in CATALOG
        ]
    best = None
    for result in results:
        if result is not None and (best is None or result[0] < best[0]):
            best = result
    if best is None:
        return None
    _, template, values, conclusion, a, b = best
    return Selection(instantiate(template, values, conclusion), template.id, a, b, a - b)


class _Learning:
    """One learning run: tree plus per-node record sets plus audit."""

    def __init__(self, thresholds: Thresholds, max_level: int, workers: int) -> None:
        self.thresholds = thresholds
        self.max_level = max_level
        self.workers = workers
        self.root = new_root()
        self.addresses: dict[Node, str] = {self.root: ""}
        self.records: dict[Node, _NodeRecords] = {}
        self.audit: list[dict] = []

    def attach(self, parent: Node, rule: Rule) -> Node:
        node = insert_exception(parent, rule)
        if parent.except_child is node:
            base, edge = self.addresses[parent], "e"
        else:
            prev = parent.except_child
            while prev.ifnot_child is not node:
                prev = prev.ifnot_child
            base, edge = self.addresses[prev], "i"
        self.addresses[node] = f"{base}.{edge}" if base else edge
        self.records[node] = _NodeRecords()
        return node

    def seed(self, tag: str) -> Node:
        node = self.attach(self.root, Rule(((_CURRENT_TAG, tag),), tag))
        self.audit.append(
            {
                "event": "seed",
                "address": self.addresses[node],
                "level": 1,
                "rule": render_rule(node.rule),
            }
        )
        return node

    def expand(self, node: Node) -> None:
        level = node.level + 1
        if level > self.max_level:
            return
        state = self.records[node]
        while state.wrong:
            correct = state.correct if node.level >= 2 else None
            selection = select_rule(
                state.wrong, correct, self.thresholds, level, self.workers
            )
            if selection is None:
                return
            child = self.attach(node, selection.rule)
            moved = self.migrate(state, child)
            self.audit.append(
                {
                    "event": "insert",
                    "address": self.addresses[child],
                    "level": level,
                    "rule": render_rule(child.rule),
                    "template": selection.template_id,
                    "a": selection.a,
                    "b": selection.b,
                    "score": selection.score,
                    "threshold": self.thresholds.for_level(level),
                    "moved_wrong": selection.a + selection.b,
                    "moved_correct": moved,
                }
            )
            self.expand(child)

    def migrate(self, state: _NodeRecords, child: Node) -> int:
        """Move records the new child captures; returns how many were correct."""
        rule = child.rule
        child_state = self.records[child]
        kept_wrong, kept_correct = [], []
        for r in state.wrong:
            if rule.matches(r.obj):
                dest = (
                    child_state.correct
                    if r.gold == rule.conclusion
                    else child_state.wrong
                )
                dest.append(r)
            else:
                kept_wrong.append(r)
        moved_correct = 0
        for r in state.correct:
            if rule.matches(r.obj):
                moved_correct += 1
                dest = (
                    child_state.correct
                    if r.gold == rule.conclusion
                    else child_state.wrong
                )
                dest.append(r)
            else:
                kept_correct.append(r)
        state.wrong = kept_wrong
        state.correct = kept_correct
        return moved_correct

    def check_against_tree(self, all_records: list[Record]) -> None:
        """Re-derive every node's record sets from the finished tree.

        The incremental moves done during learning must land each
        record exactly where a fresh tree walk says it belongs; any
        difference means the learner corrupted its own state.
        """
        fresh: dict[Node, tuple[Counter, Counter]] = {
            node: (Counter(), Counter()) for node in self.records
        }
        for r in all_records:
            node = evaluate(self.root, r.obj).node
            if node not in fresh:
                raise LearnerStateError(f"record landed on untracked node {node!r}")
            wrong_c, correct_c = fresh[node]
            (correct_c if r.gold == node.rule.conclusion else wrong_c)[r] += 1
        for node, state in self.records.items():
            wrong_c, correct_c = fresh[node]
            if Counter(state.wrong) != wrong_c or Counter(state.correct) != correct_c:
                raise LearnerStateError(
                    f"stale record sets at {render_rule(node.rule)!r}"
                )


def learn_tree(
    initialized: TaggedCorpus,
    gold: TaggedCorpus,
    thresholds: Thresholds = Thresholds(),
    max_level: int = DEFAULT_MAX_LEVEL,
    workers: int = 1,
    self_check: bool = True,
) -> LearnResult:
    """Grow an exception tree that corrects the initialized corpus toward gold.

    Both corpora must share the same words in the same layout; the
    initialized one carries first-guess tags, the gold one the truth.
    """
    check_aligned(initialized, gold)
    if max_level < 1:
        raise ValueError(f"max_level must be at least 1, got {max_level}")
    learning = _Learning(thresholds, max_level, workers)
    learning.audit.append(
        {
            "event": "begin",
            "sentences": len(gold),
            "tokens": gold.token_count,
            "seed_tags": list(initialized.tags_in_order()),
            "layer2_threshold": thresholds.layer2,
            "deeper_threshold": thresholds.deeper,
            "strict": thresholds.strict,
            "max_level": max_level,
        }
    )

    all_records: list[Record] = []
    for init_sent, gold_sent in zip(initialized.sentences, gold.sentences):
        words = [t.word for t in init_sent]
        tags = [t.tag for t in init_sent]
        objects = make_tag_objects(words, tags)
        for obj, gold_token in zip(objects, gold_sent):
            all_records.append(Record(obj, gold_token.tag))

    seeds = [learning.seed(tag) for tag in initialized.tags_in_order()]
    by_tag = {node.rule.conclusion: node for node in seeds}
    for r in all_records:
        node = by_tag[r.obj.currentTag]
        state = learning.records[node]
        (state.correct if r.gold == r.obj.currentTag else state.wrong).append(r)

    for node in seeds:
        learning.expand(node)

    if self_check:
        learning.check_against_tree(all_records)
    return LearnResult(learning.root, learning.audit)


def train_model(
    gold: TaggedCorpus,
    options: TrainOptions = TrainOptions(),
    init_corpus: TaggedCorpus | None = None,
):
    """Full pipeline: lexicon, first guesses, tree.  Returns a Model.

    ``init_corpus`` substitutes externally produced first-guess tags
    for training; tagging still uses the built-in first-guess chain, so
    only use this when the external tagger behaves like it.
    """
    from .tagger import Model

    lexicon = build_lexicon(gold)
    initial = InitialTagger(
        lexicon,
        InitialTaggerOptions(mode=options.mode, regex_rules=options.regex_rules),
    )
    if init_corpus is None:
        initialized = initialize_corpus(gold, initial, mask_hapax=options.mask_hapax)
    else:
        check_aligned(init_corpus, gold)
        initialized = init_corpus
    result = learn_tree(
        initialized,
        gold,
        thresholds=options.thresholds,
        max_level=options.max_level,
        workers=options.workers,
        self_check=options.self_check,
    )
    return Model(
        lexicon=lexicon,
        tree=result.root,
        mode=options.mode,
        regex_rules=options.regex_rules,
        separator=options.separator,
        audit=tuple(result.audit),
    )
