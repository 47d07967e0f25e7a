"""Terminology gazetteer, synonym store, and stopword list.

All three are small flat files loaded once at startup and immutable
afterwards, so they are safe to share across request threads.

File formats:
  gazetteer  one phrase per line, '#' starts a comment line
  synonyms   TSV: head phrase, then one or more related phrases
  stopwords  one token per line
"""

from dataclasses import dataclass, field
from typing import Iterable

from .errors import EncodingError, FormatError
from .textnorm import MAX_PHRASE_TOKENS, normalize_phrase


@dataclass(frozen=True)
class Gazetteer:
    """Set of normalized terminology phrases, each 1..5 tokens long."""

    phrases: frozenset[str] = field(default_factory=frozenset)

    def __contains__(self, phrase: str) -> bool:
        return phrase in self.phrases

    def __len__(self) -> int:
        return len(self.phrases)


@dataclass(frozen=True)
class SynonymStore:
    """Mapping from a normalized head phrase to its related phrases.

    Related lists keep file order, are deduplicated, and never contain
    the head itself.
    """

    entries: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)


def _iter_lines(source: Iterable[str], what: str) -> Iterable[tuple[int, str]]:
    # Decoding of a text stream happens lazily during iteration, so the
    # UTF-8 failure surfaces here rather than at open().
    try:
        for lineno, line in enumerate(source, start=1):
            yield lineno, line.rstrip("\n").rstrip("\r")
    except UnicodeDecodeError as exc:
        raise EncodingError(f"{what} is not valid UTF-8: {exc}") from exc


def load_gazetteer(source: Iterable[str]) -> Gazetteer:
    """Read a gazetteer file: one phrase per line, '#' comments, blanks ignored."""
    phrases: set[str] = set()
    for lineno, line in _iter_lines(source, "gazetteer"):
        if line.startswith("#"):
            continue
        phrase = normalize_phrase(line)
        if not phrase:
            continue
        if phrase.count(" ") + 1 > MAX_PHRASE_TOKENS:
            raise FormatError(
                f"gazetteer line {lineno}: phrase exceeds "
                f"{MAX_PHRASE_TOKENS} tokens: {line.strip()!r}"
            )
        phrases.add(phrase)
    return Gazetteer(frozenset(phrases))


def load_synonym_store(source: Iterable[str]) -> SynonymStore:
    """Read a synonym TSV: head phrase, then one or more related phrases."""
    entries: dict[str, list[str]] = {}
    for lineno, line in _iter_lines(source, "synonym file"):
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) < 2:
            raise FormatError(f"synonym file line {lineno}: expected at least 2 tab-separated fields")
        head = normalize_phrase(fields[0])
        if not head:
            raise FormatError(f"synonym file line {lineno}: head phrase is empty after normalization")
        related = entries.setdefault(head, [])
        for raw in fields[1:]:
            phrase = normalize_phrase(raw)
            if not phrase or phrase == head or phrase in related:
                continue
            related.append(phrase)
    return SynonymStore({head: tuple(rel) for head, rel in entries.items()})


def serialize_synonym_store(store: SynonymStore) -> str:
    """Render a store back to TSV text, one head per line in store order."""
    lines = [
        head + "\t" + "\t".join(related)
        for head, related in store.entries.items()
    ]
    return "".join(line + "\n" for line in lines)


def load_stopwords(source: Iterable[str]) -> frozenset[str]:
    """Read a stopword file: one token per line, '#' comments, blanks ignored."""
    words: set[str] = set()
    for _, line in _iter_lines(source, "stopword file"):
        if line.startswith("#"):
            continue
        for tok in normalize_phrase(line).split():
            words.add(tok)
    return frozenset(words)


def is_terminology(gazetteer: Gazetteer, phrase: str) -> bool:
    """True iff the normalized *phrase* is a known terminology."""
    return phrase in gazetteer.phrases


def expand_term(store: SynonymStore, phrase: str) -> tuple[str, ...]:
    """Related phrases for *phrase*, in file order; empty if none stored."""
    return store.entries.get(phrase, ())
