"""Query analysis: split search text into keywords and terminologies,
then expand both into the priority-ordered relation list of searchable
phrases (exact phrases first, related phrases after).
"""

import enum
from dataclasses import dataclass

from .errors import EmptyQueryError
from .lexicon import Gazetteer, SynonymStore, expand_term
from .textnorm import MAX_PHRASE_TOKENS, normalize_text

__all__ = [
    "TermClass",
    "QueryTerm",
    "Query",
    "MatchClass",
    "RelationEntry",
    "RelationList",
    "normalize_text",
    "analyze_query",
    "build_relation_list",
]


class TermClass(enum.Enum):
    KEYWORD = "keyword"
    TERMINOLOGY = "terminology"


@dataclass(frozen=True)
class QueryTerm:
    phrase: str
    term_class: TermClass


@dataclass(frozen=True)
class Query:
    raw_text: str
    terms: tuple[QueryTerm, ...]
    keyword_count: int
    terminology_count: int

    @property
    def term_count(self) -> int:
        return self.keyword_count + self.terminology_count


class MatchClass(enum.Enum):
    """How a searchable phrase relates to the query, in priority order."""

    DIRECT_TERMINOLOGY = "direct_terminology"
    DIRECT_KEYWORD = "direct_keyword"
    INDIRECT_TERMINOLOGY = "indirect_terminology"
    INDIRECT_KEYWORD = "indirect_keyword"

    @property
    def is_direct(self) -> bool:
        return self in (MatchClass.DIRECT_TERMINOLOGY, MatchClass.DIRECT_KEYWORD)


@dataclass(frozen=True)
class RelationEntry:
    phrase: str
    origin: QueryTerm
    match_class: MatchClass


@dataclass(frozen=True)
class RelationList:
    entries: tuple[RelationEntry, ...]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def analyze_query(raw: str, gazetteer: Gazetteer, stopwords: frozenset[str]) -> Query:
    """Partition *raw* into distinct keyword and terminology terms.

    Terminologies are found by greedy longest match against the gazetteer,
    scanning left to right with a window of up to 5 tokens; matched tokens
    are consumed. Leftover tokens become keywords unless they are stopwords.
    Repeated phrases keep their first occurrence only.
    """
    tokens = normalize_text(raw)
    terms: list[QueryTerm] = []
    seen: set[str] = set()
    i = 0
    while i < len(tokens):
        matched = None
        for width in range(min(MAX_PHRASE_TOKENS, len(tokens) - i), 0, -1):
            candidate = " ".join(tokens[i : i + width])
            if candidate in gazetteer:
                matched = (candidate, width)
                break
        if matched is not None:
            phrase, width = matched
            if phrase not in seen:
                seen.add(phrase)
                terms.append(QueryTerm(phrase, TermClass.TERMINOLOGY))
            i += width
        else:
            tok = tokens[i]
            if tok not in stopwords and tok not in seen:
                seen.add(tok)
                terms.append(QueryTerm(tok, TermClass.KEYWORD))
            i += 1
    if not terms:
        raise EmptyQueryError(f"empty query: no searchable terms in {raw!r}")
    k_count = sum(1 for t in terms if t.term_class is TermClass.KEYWORD)
    return Query(raw, tuple(terms), k_count, len(terms) - k_count)


def build_relation_list(query: Query, store: SynonymStore) -> RelationList:
    """Expand *query* into searchable phrases, highest priority first.

    One direct entry per query term plus one indirect entry per stored
    synonym. Order: direct terminologies, direct keywords, indirect
    terminologies, indirect keywords; within each class query order,
    then synonym-file order.
    """
    direct_t: list[RelationEntry] = []
    direct_k: list[RelationEntry] = []
    indirect_t: list[RelationEntry] = []
    indirect_k: list[RelationEntry] = []
    for term in query.terms:
        if term.term_class is TermClass.TERMINOLOGY:
            direct_t.append(RelationEntry(term.phrase, term, MatchClass.DIRECT_TERMINOLOGY))
            bucket, match_class = indirect_t, MatchClass.INDIRECT_TERMINOLOGY
        else:
            direct_k.append(RelationEntry(term.phrase, term, MatchClass.DIRECT_KEYWORD))
            bucket, match_class = indirect_k, MatchClass.INDIRECT_KEYWORD
        for phrase in expand_term(store, term.phrase):
            bucket.append(RelationEntry(phrase, term, match_class))
    return RelationList(tuple(direct_t + direct_k + indirect_t + indirect_k))
