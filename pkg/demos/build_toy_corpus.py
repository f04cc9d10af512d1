#!/usr/bin/env python3
"""Rebuild the bundled sample corpus (src/rippletag/data/toy.tagged).

The text is synthetic English built from fixed sentence frames plus
randomized unambiguous filler, shuffled with a fixed seed so the same
invocation always produces the same bytes.  Three word classes carry
the ambiguity the learner is supposed to resolve:

  * noun/verb words ("report", "plan", ...): mostly NN, but VB after a
    modal or "to" and VBP after a plural subject.  A handful of
    sentences put them right after a plural noun while still being NN,
    which forces a deeper exception under the learned VBP rule.
  * plural/third-person words ("works", "plans", ...): mostly NNS,
    VBZ after a pronoun subject.
  * past/participle words ("opened", "closed", ...): mostly VBD,
    VBN after "was".

Every word type occurs at least twice, so nothing is rare enough to be
masked as unknown when training on the full corpus.
"""

import argparse
import random
import sys
from pathlib import Path

from rippletag.corpus import TaggedCorpus, write_tagged_corpus

SEED = 20250817
FILLER_COUNT = 475

NOUN_VERB_WORDS = (
    "report",
    "plan",
    "deal",
    "review",
    "support",
    "visit",
    "walk",
    "answer",
    "offer",
    "study",
)
PLURAL_VERB_WORDS = ("works", "plans", "deals", "visits", "offers")
PAST_PART_WORDS = ("opened", "closed", "moved", "tested", "shipped", "checked")

DETERMINERS = ("the", "a", "this", "each", "some", "several")
NOUNS = (
    "team",
    "budget",
    "market",
    "office",
    "product",
    "quarter",
    "meeting",
    "contract",
    "change",
)
PLURALS = (
    "teams",
    "budgets",
    "markets",
    "reports",
    "clients",
    "changes",
    "delays",
    "customers",
    "workers",
)
NAMES = ("Alice", "Bob", "Acme", "Berlin", "Tokyo", "Kyoto")
ADJECTIVES = ("strong", "new", "major", "small", "minor", "busy")
PRONOUNS = ("they", "we", "she", "he")
NUMBERS = ("3", "12", "45", "120", "7", "2019")


def parse(line: str) -> list[tuple[str, str]]:
    return [tuple(token.rsplit("/", 1)) for token in line.split()]


def noun_verb_sentences(x: str) -> list[str]:
    return [
        # six plain-noun uses
        f"the/DT {x}/NN was/VBD approved/VBN ./.",
        f"they/PRP discussed/VBD the/DT {x}/NN in/IN Berlin/NNP ./.",
        f"a/DT major/JJ {x}/NN ended/VBD early/RB ./.",
        f"the/DT {x}/NN seems/VBZ strong/JJ ./.",
        f"each/DT {x}/NN needs/VBZ attention/NN ./.",
        f"the/DT {x}/NN grew/VBD quickly/RB ./.",
        # VB after a modal
        f"the/DT team/NN will/MD {x}/VB the/DT budget/NN ./.",
        f"we/PRP must/MD {x}/VB this/DT contract/NN ./.",
        f"he/PRP may/MD {x}/VB the/DT office/NN soon/RB ./.",
        f"they/PRP will/MD {x}/VB it/PRP soon/RB ./.",
        f"she/PRP must/MD {x}/VB the/DT market/NN ./.",
        # VB after "to"
        f"she/PRP wants/VBZ to/TO {x}/VB it/PRP ./.",
        f"they/PRP need/VBP to/TO {x}/VB the/DT product/NN ./.",
        # VBP after a plural subject
        f"the/DT clients/NNS {x}/VBP the/DT product/NN ./.",
        f"the/DT workers/NNS {x}/VBP the/DT change/NN ./.",
        f"teams/NNS {x}/VBP it/PRP ./.",
        f"the/DT markets/NNS {x}/VBP the/DT contract/NN ./.",
        # still NN right after a plural noun: the exception to the exception
        f"despite/IN the/DT delays/NNS {x}/NN remained/VBD strong/JJ ./.",
        f"despite/IN the/DT changes/NNS {x}/NN stayed/VBD small/JJ ./.",
    ]


def plural_verb_sentences(s: str) -> list[str]:
    return [
        f"the/DT {s}/NNS were/VBD late/JJ ./.",
        f"they/PRP discussed/VBD the/DT {s}/NNS ./.",
        f"the/DT {s}/NNS seem/VBP strong/JJ ./.",
        f"several/DT {s}/NNS arrived/VBD ./.",
        f"it/PRP {s}/VBZ quickly/RB ./.",
        f"she/PRP {s}/VBZ in/IN Tokyo/NNP ./.",
        f"he/PRP {s}/VBZ often/RB ./.",
    ]


def past_part_sentences(e: str) -> list[str]:
    return [
        f"they/PRP {e}/VBD the/DT office/NN ./.",
        f"she/PRP {e}/VBD it/PRP quickly/RB ./.",
        f"the/DT team/NN {e}/VBD the/DT contract/NN ./.",
        f"we/PRP {e}/VBD this/DT market/NN ./.",
        f"the/DT office/NN was/VBD {e}/VBN ./.",
        f"it/PRP was/VBD {e}/VBN in/IN 2019/CD ./.",
    ]


def filler_sentence(rng: random.Random) -> list[tuple[str, str]]:
    dt = rng.choice(DETERMINERS)
    dt2 = rng.choice(DETERMINERS)
    nn = rng.choice(NOUNS)
    nn2 = rng.choice(NOUNS)
    nns = rng.choice(PLURALS)
    jj = rng.choice(ADJECTIVES)
    jj2 = rng.choice(ADJECTIVES)
    prp = rng.choice(PRONOUNS)
    cd = rng.choice(NUMBERS)
    cd2 = rng.choice(NUMBERS)
    name, name2 = rng.sample(NAMES, 2)
    name3 = rng.choice(NAMES)
    frames = [
        f"{dt}/DT {nn}/NN seems/VBZ {jj}/JJ ./.",
        f"{prp}/PRP discussed/VBD {dt}/DT {nn}/NN in/IN {name}/NNP ./.",
        f"{name}/NNP and/CC {name2}/NNP arrived/VBD in/IN {name3}/NNP ./.",
        f"{dt}/DT {nns}/NNS were/VBD {jj}/JJ and/CC {jj2}/JJ ./.",
        f"{prp}/PRP will/MD improve/VB {dt}/DT {nn}/NN soon/RB ./.",
        f"{nns}/NNS grew/VBD by/IN {cd}/CD in/IN {cd2}/CD ./.",
        f"{dt}/DT {nn}/NN ended/VBD after/IN {dt2}/DT {nn2}/NN ./.",
        f"{rng.choice(('they', 'we'))}/PRP never/RB agree/VBP with/IN {dt}/DT {nns}/NNS ./.",
        f"{name}/NNP wants/VBZ to/TO deliver/VB {cd}/CD {nns}/NNS ./.",
        f"{dt}/DT {jj}/JJ {nns}/NNS stayed/VBD in/IN {dt2}/DT {nn}/NN ./.",
        f"{prp}/PRP arrived/VBD on/IN {dt}/DT {nn}/NN before/IN {dt2}/DT {nn2}/NN ./.",
        f"{dt}/DT {nn}/NN was/VBD {jj}/JJ but/CC {dt2}/DT {nns}/NNS were/VBD {jj2}/JJ ./.",
    ]
    return parse(rng.choice(frames))


def build_corpus(seed: int) -> TaggedCorpus:
    rng = random.Random(seed)
    sentences: list[list[tuple[str, str]]] = []
    for x in NOUN_VERB_WORDS:
        sentences.extend(parse(line) for line in noun_verb_sentences(x))
    for s in PLURAL_VERB_WORDS:
        sentences.extend(parse(line) for line in plural_verb_sentences(s))
    for e in PAST_PART_WORDS:
        sentences.extend(parse(line) for line in past_part_sentences(e))
    for _ in range(FILLER_COUNT):
        sentences.append(filler_sentence(rng))
    rng.shuffle(sentences)
    return TaggedCorpus.from_pairs(sentences)


def main() -> int:
    default_out = (
        Path(__file__).resolve().parents[1] / "src" / "rippletag" / "data" / "toy.tagged"
    )
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--output", type=Path, default=default_out)
    parser.add_argument("--seed", type=int, default=SEED)
    args = parser.parse_args()

    corpus = build_corpus(args.seed)
    args.output.parent.mkdir(parents=True, exist_ok=True)
    with open(args.output, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(write_tagged_corpus(corpus))
    counts = {}
    for token in corpus.tokens():
        counts[token.word] = counts.get(token.word, 0) + 1
    rare = [w for w, c in counts.items() if c < 2]
    print(
        f"{len(corpus)} sentences, {corpus.token_count} tokens, "
        f"{len(corpus.tagset)} tags, {len(counts)} word types -> {args.output}",
        file=sys.stderr,
    )
    if rare:
        print(f"warning: words occurring once: {sorted(rare)}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
