"""Shared test utilities: an independent tree interpreter and random
model generators.

The interpreter here deliberately re-implements evaluation from the
written description (recursive, attribute access by name) so tests can
cross-check the package's iterative, index-based implementations
against something with no shared code.
"""

from __future__ import annotations

import random

from rippletag.lexicon import SUFFIX_LENGTHS, Lexicon
from rippletag.scrdr import FIELD_NAMES, Node, Rule, TagObject, insert_exception, new_root

POOL = ("alpha", "beta", "gamma", "delta", "NN", "VB", "ing", "ed")


def ref_matches(rule: Rule, obj: TagObject) -> bool:
    for field_idx, value in rule.tests:
        if getattr(obj, FIELD_NAMES[field_idx]) != value:
            return False
    return True


def reference_evaluate(root: Node, obj: TagObject):
    """Plain walk: try each sibling, descend on the first that fires."""
    path = [root]

    def walk(chain: Node | None, last: Node) -> Node:
        node = chain
        while node is not None:
            path.append(node)
            if ref_matches(node.rule, obj):
                return walk(node.except_child, node)
            node = node.ifnot_child
        return last

    last = walk(root.except_child, root)
    return last, tuple(path)


def random_rule(rng: random.Random, pool=POOL) -> Rule:
    n_tests = rng.randint(1, 3)
    fields = rng.sample(range(len(FIELD_NAMES)), n_tests)
    tests = tuple(sorted((f, rng.choice(pool)) for f in fields))
    return Rule(tests, rng.choice(pool))


def random_tree(rng: random.Random, n_rules: int, pool=POOL) -> Node:
    root = new_root()
    nodes = [root]
    for _ in range(n_rules):
        parent = rng.choice(nodes)
        nodes.append(insert_exception(parent, random_rule(rng, pool)))
    return root


def random_object(rng: random.Random, pool=POOL) -> TagObject:
    def maybe() -> str | None:
        return None if rng.random() < 0.2 else rng.choice(pool)

    return TagObject(
        prev2Word=maybe(),
        prev2Tag=maybe(),
        prev1Word=maybe(),
        prev1Tag=maybe(),
        word=rng.choice(pool),
        currentTag=rng.choice(pool),
        next1Word=maybe(),
        next1Tag=maybe(),
        next2Word=maybe(),
        next2Tag=maybe(),
        suffix2=maybe(),
        suffix3=maybe(),
        suffix4=maybe(),
    )


def random_lexicon(rng: random.Random) -> Lexicon:
    tags = ("NN", "VB", "JJ", "CD")
    words = rng.sample(
        [f"word{i}" for i in range(40)] + ["x", "Price", "39-year", 'odd"one', "a\\b"],
        rng.randint(1, 20),
    )
    suffix_tags = {}
    for n in SUFFIX_LENGTHS:
        table = {}
        for _ in range(rng.randint(0, 5)):
            suffix = "".join(rng.choice("abcdefg") for _ in range(n))
            table[suffix] = rng.choice(tags)
        suffix_tags[n] = table
    return Lexicon(
        word_tags={w: rng.choice(tags) for w in words},
        suffix_tags=suffix_tags,
        numeric_tag=rng.choice(tags),
        capitalized_tag=rng.choice(tags),
        lowercase_tag=rng.choice(tags),
    )
