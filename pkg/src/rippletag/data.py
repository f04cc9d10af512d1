"""Access to the bundled sample corpus.

The corpus is small English text with deliberately ambiguous verb and
noun forms, sized so that training and cross-validation finish in
seconds.  It ships with the package for tests and demos; regenerate it
with demos/build_toy_corpus.py.
"""

from __future__ import annotations

from importlib.resources import files
from pathlib import Path

from .corpus import TaggedCorpus, read_tagged_corpus

TOY_CORPUS_NAME = "toy.tagged"


def toy_corpus_path() -> Path:
    return Path(str(files("rippletag") / "data" / TOY_CORPUS_NAME))


def load_toy_corpus() -> TaggedCorpus:
    text = (files("rippletag") / "data" / TOY_CORPUS_NAME).read_text("utf-8")
    return read_tagged_corpus(text)
