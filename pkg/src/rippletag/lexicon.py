"""Frequency lexicon: word and suffix statistics from a training corpus.

The lexicon stores, for every training word, its most frequent tag.  It
also keeps majority tags for word-final character n-grams (lengths 2..5)
when the winning count clears a per-length threshold, plus three default
tags used when nothing else matches: one for tokens containing a digit,
one for capitalized tokens and one for everything else.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .corpus import TaggedCorpus

SUFFIX_LENGTHS = (2, 3, 4, 5)

# Minimum winning count for a suffix entry, per suffix length.  Longer
# suffixes are more specific, so they are admitted on less evidence.
SUFFIX_MIN_COUNT = {5: 2, 4: 3, 3: 4, 2: 5}

# Reserved keys in the serialized form.
_NUM_KEY = "%%NUM%%"
_CAP_KEY = "%%CAP%%"
_LOW_KEY = "%%LOW%%"
_SUFFIX_KEY = {n: f"%%S{n}%%" for n in SUFFIX_LENGTHS}
_KEY_SUFFIX = {v: k for k, v in _SUFFIX_KEY.items()}


class LexiconFormatError(ValueError):
    """Malformed serialized lexicon."""


def contains_digit(word: str) -> bool:
    return any(c.isdecimal() for c in word)


def is_capitalized(word: str) -> bool:
    return bool(word) and word[0].isupper()


@dataclass(frozen=True)
class Lexicon:
    word_tags: dict[str, str]
    suffix_tags: dict[int, dict[str, str]]
    numeric_tag: str
    capitalized_tag: str
    lowercase_tag: str
    hapax_words: frozenset[str] = field(default_factory=frozenset)

    def most_frequent_tag(self, word: str) -> str | None:
        return self.word_tags.get(word)

    def suffix_tag(self, word: str, n: int) -> str | None:
        """Majority tag for the last n characters, proper suffixes only."""
        if len(word) <= n:
            return None
        return self.suffix_tags.get(n, {}).get(word[-n:])

    def default_tag(self, word: str) -> str:
        if contains_digit(word):
            return self.numeric_tag
        if is_capitalized(word):
            return self.capitalized_tag
        return self.lowercase_tag

    @property
    def tagset(self) -> frozenset[str]:
        tags = set(self.word_tags.values())
        for table in self.suffix_tags.values():
            tags.update(table.values())
        tags.update((self.numeric_tag, self.capitalized_tag, self.lowercase_tag))
        return frozenset(tags)


def _majority(counter: Counter[str], first_seen: dict[str, int]) -> str:
    """Highest count; ties go to the tag seen earliest in the corpus."""
    return min(counter, key=lambda t: (-counter[t], first_seen[t]))


def build_lexicon(corpus: TaggedCorpus) -> Lexicon:
    word_tag_counts: dict[str, Counter[str]] = {}
    word_counts: Counter[str] = Counter()
    suffix_tag_counts: dict[int, dict[str, Counter[str]]] = {
        n: {} for n in SUFFIX_LENGTHS
    }
    class_counts = {"num": Counter(), "cap": Counter(), "low": Counter()}
    all_tag_counts: Counter[str] = Counter()
    first_seen: dict[str, int] = {}

    for index, (word, tag) in enumerate(corpus.tokens()):
        first_seen.setdefault(tag, index)
        word_counts[word] += 1
        word_tag_counts.setdefault(word, Counter())[tag] += 1
        all_tag_counts[tag] += 1
        for n in SUFFIX_LENGTHS:
            if len(word) > n:
                suffix_tag_counts[n].setdefault(word[-n:], Counter())[tag] += 1
        if contains_digit(word):
            class_counts["num"][tag] += 1
        elif is_capitalized(word):
            class_counts["cap"][tag] += 1
        else:
            class_counts["low"][tag] += 1

    if not all_tag_counts:
        raise ValueError("cannot build a lexicon from an empty corpus")

    word_tags = {
        word: _majority(tags, first_seen) for word, tags in word_tag_counts.items()
    }

    suffix_tags: dict[int, dict[str, str]] = {}
    for n in SUFFIX_LENGTHS:
        table = {}
        for suffix, tags in suffix_tag_counts[n].items():
            winner = _majority(tags, first_seen)
            if tags[winner] >= SUFFIX_MIN_COUNT[n]:
                table[suffix] = winner
        suffix_tags[n] = table

    fallback = _majority(all_tag_counts, first_seen)

    def class_default(key: str) -> str:
        counter = class_counts[key]
        return _majority(counter, first_seen) if counter else fallback

    hapax = frozenset(w for w, c in word_counts.items() if c == 1)

    return Lexicon(
        word_tags=word_tags,
        suffix_tags=suffix_tags,
        numeric_tag=class_default("num"),
        capitalized_tag=class_default("cap"),
        lowercase_tag=class_default("low"),
        hapax_words=hapax,
    )


def serialize_lexicon(lexicon: Lexicon) -> str:
    """Stable text form: defaults, then suffix tables, then words.

    Word entries starting with ``%%`` would collide with the reserved
    keys, so they are rejected.
    """
    def entry(key: str, tag: str) -> str:
        for part in (key, tag):
            if any(c.isspace() for c in part):
                raise ValueError(f"whitespace in lexicon entry ({key!r}, {tag!r})")
        return f"{key}\t{tag}"

    lines = [
        entry(_NUM_KEY, lexicon.numeric_tag),
        entry(_CAP_KEY, lexicon.capitalized_tag),
        entry(_LOW_KEY, lexicon.lowercase_tag),
    ]
    for n in SUFFIX_LENGTHS:
        table = lexicon.suffix_tags.get(n, {})
        for suffix in sorted(table):
            lines.append(entry(f"{_SUFFIX_KEY[n]}{suffix}", table[suffix]))
    for word in sorted(lexicon.word_tags):
        if word.startswith("%%"):
            raise ValueError(f"word {word!r} collides with reserved %% keys")
        lines.append(entry(word, lexicon.word_tags[word]))
    return "".join(line + "\n" for line in lines)


def parse_lexicon(text: str) -> Lexicon:
    word_tags: dict[str, str] = {}
    suffix_tags: dict[int, dict[str, str]] = {n: {} for n in SUFFIX_LENGTHS}
    defaults: dict[str, str] = {}

    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        key, sep, tag = line.partition("\t")
        if not sep or not key or not tag:
            raise LexiconFormatError(f"line {lineno}: expected 'key<TAB>tag'")
        if key in (_NUM_KEY, _CAP_KEY, _LOW_KEY):
            if key in defaults:
                raise LexiconFormatError(f"line {lineno}: duplicate {key}")
            defaults[key] = tag
        elif key.startswith("%%S") and len(key) >= 6 and key[:6] in _KEY_SUFFIX:
            n = _KEY_SUFFIX[key[:6]]
            suffix = key[6:]
            if len(suffix) != n:
                raise LexiconFormatError(
                    f"line {lineno}: suffix {suffix!r} is not {n} characters"
                )
            if suffix in suffix_tags[n]:
                raise LexiconFormatError(f"line {lineno}: duplicate suffix {suffix!r}")
            suffix_tags[n][suffix] = tag
        elif key.startswith("%%"):
            raise LexiconFormatError(f"line {lineno}: unknown reserved key {key!r}")
        else:
            if key in word_tags:
                raise LexiconFormatError(f"line {lineno}: duplicate word {key!r}")
            word_tags[key] = tag

    missing = [k for k in (_NUM_KEY, _CAP_KEY, _LOW_KEY) if k not in defaults]
    if missing:
        raise LexiconFormatError(f"missing default entries: {', '.join(missing)}")

    return Lexicon(
        word_tags=word_tags,
        suffix_tags=suffix_tags,
        numeric_tag=defaults[_NUM_KEY],
        capitalized_tag=defaults[_CAP_KEY],
        lowercase_tag=defaults[_LOW_KEY],
    )
