"""Biomedical document retrieval with relativeness clustering.

Search text is split into keywords and biomedical terminologies, expanded
with related phrases, matched against a MEDLINE corpus, and the hits are
scored and grouped into a rank tree of relativeness levels.
"""

from .config import AppConfig, load_config
from .corpus import (
    CorpusIndex,
    Document,
    build_index,
    count_occurrences,
    match_documents,
    parse_medline_records,
    read_index,
    serialize_medline_records,
    write_index,
)
from .errors import RelTreeError
from .lexicon import (
    Gazetteer,
    SynonymStore,
    expand_term,
    is_terminology,
    load_gazetteer,
    load_stopwords,
    load_synonym_store,
    serialize_synonym_store,
)
from .pipeline import (
    Lexicons,
    Qrels,
    evaluate,
    load_lexicons,
    load_qrels,
    run_search,
    serialize_qrels,
)
from .query import (
    MatchClass,
    Query,
    QueryTerm,
    RelationEntry,
    RelationList,
    TermClass,
    analyze_query,
    build_relation_list,
    normalize_text,
)
from .ranking import (
    MatchSummary,
    RankScore,
    Weights,
    assign_cluster,
    order_cluster,
    score_document,
    summarize_matches,
)
from .tree import RankTree, build_tree, parse_tree_json, render_tree_text, serialize_tree

__version__ = "0.1.0"
