"""The rank tree: cluster-level parent nodes over rank-ordered documents.

This is the presentation shape both the CLI and the HTTP API emit. Cluster
nodes appear in ascending level order (level 1 = most relative), each
holding its documents best-first with explicit 1-based ranks.
"""

import json
from dataclasses import dataclass

from .errors import ConsistencyError, FormatError
from .query import Query, QueryTerm, TermClass
from .corpus import Document
from .ranking import RankScore, order_cluster

# Serialized titles are capped to keep payloads bounded.
TITLE_LIMIT = 200


@dataclass(frozen=True)
class DocNode:
    doc_id: str
    title: str
    rank: int
    score: float
    relativeness: float
    direct_pct: float
    indirect_pct: float


@dataclass(frozen=True)
class ClusterNode:
    level: int
    band: tuple[float, float]
    children: tuple[DocNode, ...]


@dataclass(frozen=True)
class RankTree:
    query_echo: Query
    cluster_nodes: tuple[ClusterNode, ...]

    @property
    def document_count(self) -> int:
        return sum(len(node.children) for node in self.cluster_nodes)


def cluster_band(level: int, levels: int) -> tuple[float, float]:
    """The (low, high] relativeness range covered by *level*."""
    return ((levels - level) * 100.0 / levels, (levels - level + 1) * 100.0 / levels)


def build_tree(scores: list[RankScore], docs: dict[str, Document],
               query: Query, levels: int) -> RankTree:
    """Group scores by cluster level and rank each group."""
    seen: set[str] = set()
    by_level: dict[int, list[RankScore]] = {}
    for score in scores:
        if score.doc_id in seen:
            raise ConsistencyError(f"document {score.doc_id!r} scored twice")
        if score.doc_id not in docs:
            raise ConsistencyError(f"scored document {score.doc_id!r} missing from corpus")
        seen.add(score.doc_id)
        by_level.setdefault(score.cluster, []).append(score)

    nodes = []
    for level in sorted(by_level):
        ranked = order_cluster(by_level[level])
        children = tuple(
            DocNode(
                doc_id=s.doc_id,
                title=docs[s.doc_id].title,
                rank=position,
                score=s.score,
                relativeness=s.relativeness,
                direct_pct=s.direct_pct,
                indirect_pct=s.indirect_pct,
            )
            for position, s in enumerate(ranked, start=1)
        )
        nodes.append(ClusterNode(level, cluster_band(level, levels), children))
    return RankTree(query, tuple(nodes))


def render_tree_text(tree: RankTree) -> str:
    """Plain-text view: one band line per cluster, one ranked line per document."""
    if not tree.cluster_nodes:
        return "(no results)"
    lines = []
    for node in tree.cluster_nodes:
        low, high = node.band
        lines.append(f"[L{node.level}] {low:.4f}–{high:.4f}%")
        for child in node.children:
            lines.append(
                f"  #{child.rank} {child.doc_id} DS={child.score:.4f} CL={child.relativeness:.4f}"
            )
    return "\n".join(lines)


def _tree_payload(tree: RankTree) -> dict:
    return {
        "query": {
            "terms": [
                {"phrase": term.phrase, "class": term.term_class.value}
                for term in tree.query_echo.terms
            ]
        },
        "clusters": [
            {
                "level": node.level,
                "band": [node.band[0], node.band[1]],
                # "id" is the document id; the indirect percentage therefore
                # travels as "id_pct" (a JSON object cannot repeat a key).
                "documents": [
                    {
                        "id": child.doc_id,
                        "title": child.title[:TITLE_LIMIT],
                        "rank": child.rank,
                        "ds": child.score,
                        "cl": child.relativeness,
                        "d": child.direct_pct,
                        "id_pct": child.indirect_pct,
                    }
                    for child in node.children
                ],
            }
            for node in tree.cluster_nodes
        ],
    }


def serialize_tree(tree: RankTree) -> str:
    """JSON wire form; key order and float text are stable across runs."""
    return json.dumps(_tree_payload(tree), ensure_ascii=False, separators=(",", ":"))


def parse_tree_json(text: str) -> RankTree:
    """Rebuild a RankTree from serialize_tree output."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"tree JSON is malformed: {exc}") from exc
    try:
        terms = tuple(
            QueryTerm(t["phrase"], TermClass(t["class"]))
            for t in payload["query"]["terms"]
        )
        k_count = sum(1 for t in terms if t.term_class is TermClass.KEYWORD)
        query = Query(
            raw_text=" ".join(t.phrase for t in terms),
            terms=terms,
            keyword_count=k_count,
            terminology_count=len(terms) - k_count,
        )
        nodes = []
        for cluster in payload["clusters"]:
            children = tuple(
                DocNode(
                    doc_id=doc["id"],
                    title=doc["title"],
                    rank=doc["rank"],
                    score=doc["ds"],
                    relativeness=doc["cl"],
                    direct_pct=doc["d"],
                    indirect_pct=doc["id_pct"],
                )
                for doc in cluster["documents"]
            )
            band = cluster["band"]
            nodes.append(ClusterNode(cluster["level"], (band[0], band[1]), children))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"tree JSON has an unexpected shape: {exc}") from exc
    return RankTree(query, tuple(nodes))
