#!/usr/bin/env python3
"""Tag free text with a model trained on the bundled sample corpus.

Pass sentences as arguments (one per argument) or run without any to
tag a few built-in ones.  Shows both the first guess and the final
tag so the tree's corrections stand out.
"""

import sys

from rippletag.data import load_toy_corpus
from rippletag.learner import train_model
from rippletag.tagger import Tagger

DEFAULT_SENTENCES = [
    "the team will report the budget .",
    "teams report it .",
    "she wants to visit the office .",
    "the deal was closed by the team .",
]

sentences = sys.argv[1:] or DEFAULT_SENTENCES

model = train_model(load_toy_corpus())
tagger = Tagger(model)

for sentence in sentences:
    words = sentence.split()
    if not words:
        continue
    initial = tagger.initial.tag_sentence(words)
    final = tagger.tag_sentence(words)
    print(sentence)
    for word, first, tag in zip(words, initial, final):
        marker = "   " if first == tag else "-> "
        print(f"    {word:<12} {marker}{tag}" + (f"  (was {first})" if first != tag else ""))
    print()
