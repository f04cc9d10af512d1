#!/usr/bin/env python3
"""Train on the bundled sample corpus and look around the result.

Walks through the whole training pipeline once, then pokes at the
pieces: the lexicon the first-guess tagger uses, the exception tree
it learned, and the audit trail saying why each rule was accepted.
"""

from rippletag.data import load_toy_corpus
from rippletag.learner import train_model
from rippletag.scrdr import (
    count_rules,
    evaluate,
    layer_census,
    make_tag_objects,
    render_rule,
    serialize_tree,
)
from rippletag.tagger import Tagger

corpus = load_toy_corpus()
print(f"corpus: {len(corpus)} sentences, {corpus.token_count} tokens, "
      f"{len(corpus.tagset)} tags")

model = train_model(corpus)
print(f"learned {count_rules(model.tree)} rules, by layer: "
      f"{layer_census(model.tree)}")

# The seed layer passes first guesses through; everything below it is
# a learned correction.  Print just the corrections.
print()
print("corrections (layer 2 and deeper):")
for line in serialize_tree(model.tree).splitlines():
    if line.startswith("\t\t"):
        print("   ", line.lstrip("\t"))

# Each insertion was logged with its score at the time: a = errors it
# fixed, b = errors it left wrong among the records it matched.
print()
print("why they were accepted:")
for event in model.audit:
    if event["event"] == "insert":
        print(f"    a={event['a']:3d} b={event['b']} "
              f"score={event['score']:3d} > {event['threshold']}  "
              f"{event['rule']}")

# Follow one token through the tree: "report" right after a modal
# starts as NN (its most frequent tag) and gets corrected to VB.
tagger = Tagger(model)
words = ["the", "team", "will", "report", "it", "."]
initial = tagger.initial.tag_sentence(words)
final = tagger.tag_sentence(words)
obj = make_tag_objects(words, initial)[3]
result = evaluate(model.tree, obj)
print()
print("one token's walk:", words[3])
print("    first guess:", initial[3], "-> final:", final[3])
for node in result.path:
    fired = "fired " if node.rule.matches(obj) else "failed"
    print(f"    {fired}  {render_rule(node.rule)}")
