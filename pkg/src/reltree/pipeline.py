"""End-to-end search pipeline and the precision/recall evaluation harness."""

from dataclasses import dataclass
from typing import Iterable

from .config import AppConfig, open_lexicon_file
from .corpus import CorpusIndex, match_documents
from .errors import ConsistencyError, FormatError
from .lexicon import (
    Gazetteer,
    SynonymStore,
    load_gazetteer,
    load_stopwords,
    load_synonym_store,
)
from .query import analyze_query, build_relation_list
from .ranking import ordering_key, score_document, summarize_matches
from .tree import RankTree, build_tree


@dataclass(frozen=True)
class Lexicons:
    gazetteer: Gazetteer
    synonyms: SynonymStore
    stopwords: frozenset[str]


def load_lexicons(config: AppConfig) -> Lexicons:
    """Load gazetteer, synonyms, and stopwords from config or bundled files."""
    with open_lexicon_file(config.gazetteer, "gazetteer.txt") as handle:
        gazetteer = load_gazetteer(handle)
    with open_lexicon_file(config.synonyms, "synonyms.tsv") as handle:
        synonyms = load_synonym_store(handle)
    with open_lexicon_file(config.stopwords, "stopwords.txt") as handle:
        stopwords = load_stopwords(handle)
    return Lexicons(gazetteer, synonyms, stopwords)


def run_search(config: AppConfig, index: CorpusIndex, lexicons: Lexicons,
               raw_query: str, max_results: int | None = None) -> RankTree:
    """Analyze, expand, match, score, and assemble the rank tree.

    Every document with at least one counted match is retrieved; when more
    than max_results match, the globally best-ranked ones are kept.
    """
    if index is None:
        raise ConsistencyError("no index loaded")
    query = analyze_query(raw_query, lexicons.gazetteer, lexicons.stopwords)
    rlist = build_relation_list(query, lexicons.synonyms)
    matches = match_documents(index, rlist)
    scores = [
        score_document(summarize_matches(doc_id, doc_matches, query), config.weights)
        for doc_id, doc_matches in matches.items()
    ]
    scores.sort(key=ordering_key)
    limit = config.max_results if max_results is None else max_results
    return build_tree(scores[:limit], index.documents, query, config.weights.levels)


@dataclass(frozen=True)
class QrelsEntry:
    query_text: str
    relevant: frozenset[str]


@dataclass(frozen=True)
class Qrels:
    entries: dict[str, QrelsEntry]

    def __len__(self) -> int:
        return len(self.entries)


def load_qrels(source: Iterable[str]) -> Qrels:
    """Read relevance judgments: `query-id TAB query text TAB id[,id...]`."""
    entries: dict[str, QrelsEntry] = {}
    for lineno, raw in enumerate(source, start=1):
        line = raw.rstrip("\n").rstrip("\r")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise FormatError(f"qrels line {lineno}: expected 3 tab-separated fields")
        qid, text, ids = (f.strip() for f in fields)
        if not qid or not text:
            raise FormatError(f"qrels line {lineno}: empty query id or text")
        if qid in entries:
            raise FormatError(f"qrels line {lineno}: duplicate query id {qid!r}")
        relevant = frozenset(part.strip() for part in ids.split(",") if part.strip())
        if not relevant:
            raise FormatError(f"qrels line {lineno}: no relevant document ids")
        entries[qid] = QrelsEntry(text, relevant)
    return Qrels(entries)


def serialize_qrels(qrels: Qrels) -> str:
    lines = [
        f"{qid}\t{entry.query_text}\t{','.join(sorted(entry.relevant))}"
        for qid, entry in qrels.entries.items()
    ]
    return "\n".join(lines) + ("\n" if lines else "")


@dataclass(frozen=True)
class QueryEval:
    query_id: str
    query_text: str
    precision: float
    recall: float
    retrieved_count: int
    relevant_count: int


@dataclass(frozen=True)
class EvalReport:
    rows: tuple[QueryEval, ...]
    macro_precision: float
    macro_recall: float


def evaluate(config: AppConfig, index: CorpusIndex, lexicons: Lexicons,
             qrels: Qrels) -> EvalReport:
    """Run every qrels query and report per-query and macro precision/recall."""
    rows = []
    for qid, entry in qrels.entries.items():
        missing = entry.relevant - index.documents.keys()
        if missing:
            raise ConsistencyError(
                f"qrels {qid!r} references unknown document ids: {', '.join(sorted(missing))}"
            )
        tree = run_search(config, index, lexicons, entry.query_text)
        retrieved = {child.doc_id for node in tree.cluster_nodes for child in node.children}
        hits = len(retrieved & entry.relevant)
        precision = hits / len(retrieved) if retrieved else 0.0
        recall = hits / len(entry.relevant)
        rows.append(QueryEval(qid, entry.query_text, precision, recall,
                              len(retrieved), len(entry.relevant)))
    count = len(rows)
    macro_p = sum(r.precision for r in rows) / count if count else 0.0
    macro_r = sum(r.recall for r in rows) / count if count else 0.0
    return EvalReport(tuple(rows), macro_p, macro_r)
