"""MEDLINE corpus parsing, the phrase-occurrence index, and document matching.

Records come in as MEDLINE tagged text (PMID/TI/AB fields). The index holds
token-aligned n-gram counts up to 5 tokens, the same cap the lexicons use,
so any phrase the relation list can produce is answerable by lookup.
"""

import re
from dataclasses import dataclass, field
from typing import Iterable, TextIO

from .errors import (
    DocumentNotFoundError,
    DuplicateIdError,
    EncodingError,
    FormatError,
    IndexVersionError,
)
from .query import RelationEntry, RelationList
from .textnorm import MAX_PHRASE_TOKENS, normalize_text

INDEX_MAGIC = "RTIDX"
INDEX_VERSION = 1

# Continuation lines in MEDLINE records are indented by exactly 6 spaces.
_CONTINUATION = "      "

# Field lines look like "PMID- " / "TI  - ": a short uppercase tag padded
# to four columns, then "- ".
_TAG_RE = re.compile(r"^([A-Z][A-Z0-9]{0,3})\s*- (.*)$")


@dataclass(frozen=True)
class Document:
    id: str
    title: str
    abstract: str
    source: str = "medline"

    def matchable_text(self) -> str:
        return self.title + " " + self.abstract


@dataclass(frozen=True)
class CorpusIndex:
    """Immutable phrase index over a parsed corpus.

    postings maps a normalized phrase to {doc id: occurrence count}; counts
    are token-aligned positions of the phrase in title+abstract, never
    substring hits.
    """

    documents: dict[str, Document] = field(default_factory=dict)
    postings: dict[str, dict[str, int]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.documents)

    def get_document(self, doc_id: str) -> Document:
        try:
            return self.documents[doc_id]
        except KeyError:
            raise DocumentNotFoundError(f"unknown document id: {doc_id!r}") from None


@dataclass(frozen=True)
class DocMatch:
    entry: RelationEntry
    count: int


def _decode_guard(source: Iterable[str], what: str) -> Iterable[str]:
    try:
        yield from source
    except UnicodeDecodeError as exc:
        raise EncodingError(f"{what} is not valid UTF-8: {exc}") from exc


def parse_medline_records(source: Iterable[str]) -> list[Document]:
    """Parse MEDLINE tagged text into Documents.

    Records are separated by blank lines. Recognized fields are PMID, TI,
    and AB; anything else is ignored. Continuation lines (6-space indent)
    join onto the previous field with a single space.
    """
    documents: list[Document] = []
    seen_ids: set[str] = set()
    fields: dict[str, list[str]] = {}
    current_tag: str | None = None
    ordinal = 0

    def flush() -> None:
        nonlocal fields, current_tag, ordinal
        if not fields:
            return
        ordinal += 1
        pmid = " ".join(fields.get("PMID", [])).strip()
        if not pmid:
            raise FormatError(f"record {ordinal} has no PMID")
        if pmid in seen_ids:
            raise DuplicateIdError(f"duplicate PMID {pmid!r} at record {ordinal}")
        title = " ".join(fields.get("TI", []))
        abstract = " ".join(fields.get("AB", []))
        if not title and not abstract:
            raise FormatError(f"record {ordinal} (PMID {pmid}) has neither title nor abstract")
        seen_ids.add(pmid)
        documents.append(Document(pmid, title, abstract))
        fields = {}
        current_tag = None

    for line in _decode_guard(source, "corpus"):
        line = line.rstrip("\n").rstrip("\r")
        if not line.strip():
            flush()
            continue
        if line.startswith(_CONTINUATION) and current_tag is not None:
            fields[current_tag].append(line[len(_CONTINUATION):].strip())
            continue
        tagged = _TAG_RE.match(line)
        if tagged is None:
            continue
        current_tag = tagged.group(1)
        fields.setdefault(current_tag, []).append(tagged.group(2).strip())
    flush()
    return documents


def serialize_medline_records(docs: Iterable[Document]) -> str:
    """Render Documents back to MEDLINE tagged text (single-line fields)."""
    blocks = []
    for doc in docs:
        lines = [f"PMID- {doc.id}"]
        if doc.title:
            lines.append(f"TI  - {doc.title}")
        if doc.abstract:
            lines.append(f"AB  - {doc.abstract}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def build_index(docs: Iterable[Document]) -> CorpusIndex:
    """Index every n-gram (1..5 tokens) of each document's title+abstract."""
    documents: dict[str, Document] = {}
    postings: dict[str, dict[str, int]] = {}
    for doc in docs:
        if doc.id in documents:
            raise DuplicateIdError(f"duplicate document id {doc.id!r}")
        documents[doc.id] = doc
        tokens = normalize_text(doc.matchable_text())
        for start in range(len(tokens)):
            for width in range(1, min(MAX_PHRASE_TOKENS, len(tokens) - start) + 1):
                phrase = " ".join(tokens[start : start + width])
                per_doc = postings.setdefault(phrase, {})
                per_doc[doc.id] = per_doc.get(doc.id, 0) + 1
    return CorpusIndex(documents, postings)


def count_occurrences(index: CorpusIndex, doc_id: str, phrase: str) -> int:
    """Token-aligned occurrence count of *phrase* in one document (0 if absent)."""
    if doc_id not in index.documents:
        raise DocumentNotFoundError(f"unknown document id: {doc_id!r}")
    return index.postings.get(phrase, {}).get(doc_id, 0)


def match_documents(index: CorpusIndex, rlist: RelationList) -> dict[str, list[DocMatch]]:
    """Collect per-document matches for every relation entry with a posting.

    When two entries carry the same phrase (a synonym of one term spelled
    like another term), the earlier, higher-priority entry claims it; the
    phrase is never counted twice for a document.
    """
    matches: dict[str, list[DocMatch]] = {}
    claimed: set[str] = set()
    for entry in rlist:
        if entry.phrase in claimed:
            continue
        claimed.add(entry.phrase)
        for doc_id, count in index.postings.get(entry.phrase, {}).items():
            matches.setdefault(doc_id, []).append(DocMatch(entry, count))
    return matches


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n")


def _unescape(text: str) -> str:
    out: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\\" and i + 1 < len(text):
            nxt = text[i + 1]
            if nxt == "t":
                out.append("\t")
            elif nxt == "n":
                out.append("\n")
            else:
                out.append(nxt)
            i += 2
        else:
            out.append(ch)
            i += 1
    return "".join(out)


def write_index(index: CorpusIndex, stream: TextIO) -> None:
    """Persist the corpus behind *index*; postings are rebuilt on load."""
    stream.write(f"{INDEX_MAGIC} v{INDEX_VERSION}\n")
    for doc in index.documents.values():
        stream.write(
            "\t".join(
                (_escape(doc.id), _escape(doc.source), _escape(doc.title), _escape(doc.abstract))
            )
            + "\n"
        )


def read_index(source: Iterable[str]) -> CorpusIndex:
    """Load an index file written by write_index; unknown versions are rejected."""
    lines = iter(_decode_guard(source, "index file"))
    try:
        header = next(lines).rstrip("\n").rstrip("\r")
    except StopIteration:
        raise FormatError("index file is empty") from None
    parts = header.split()
    if len(parts) != 2 or parts[0] != INDEX_MAGIC or not parts[1].startswith("v"):
        raise FormatError(f"not an index file (bad header {header!r})")
    if parts[1] != f"v{INDEX_VERSION}":
        raise IndexVersionError(
            f"unsupported index version {parts[1]!r}; this build reads v{INDEX_VERSION}"
        )
    docs: list[Document] = []
    for lineno, line in enumerate(lines, start=2):
        line = line.rstrip("\n").rstrip("\r")
        if not line:
            continue
        cells = line.split("\t")
        if len(cells) != 4:
            raise FormatError(f"index file line {lineno}: expected 4 fields, got {len(cells)}")
        doc_id, source_label, title, abstract = (_unescape(c) for c in cells)
        if not doc_id:
            raise FormatError(f"index file line {lineno}: empty document id")
        docs.append(Document(doc_id, title, abstract, source_label))
    return build_index(docs)
