"""Scoring and clustering.

A document's relativeness percentage is the weighted share of query terms
it matched (direct matches weigh 1, indirect ones less), its rank score
adds the raw occurrence volume on top, and the percentage places it into
one of `levels` equal-width cluster bands, band 1 being the most relative.
"""

from dataclasses import dataclass

from .errors import ConsistencyError, DomainError, NoMatchError
from .query import Query, TermClass
from .corpus import DocMatch

# Absolute tolerance for band-edge comparisons; keeps a percentage that is
# mathematically on a boundary from drifting across it in float arithmetic.
EDGE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Weights:
    """Match-class weights, the direct-dominance bonus, and the band count."""

    direct_keyword: float = 1.0
    direct_terminology: float = 1.0
    indirect_keyword: float = 0.5
    indirect_terminology: float = 0.8
    bonus: float = 0.2
    levels: int = 7

    def validate(self) -> None:
        for name in ("direct_keyword", "direct_terminology", "indirect_keyword",
                     "indirect_terminology", "bonus"):
            if getattr(self, name) < 0:
                raise DomainError(f"weight {name} must be >= 0")
        if self.levels < 1:
            raise DomainError("levels must be >= 1")


@dataclass(frozen=True)
class MatchSummary:
    """Per-document tally of matched origin terms and their occurrences.

    Each query term counts in at most one bucket: direct when its own
    phrase occurred, else indirect when any of its synonyms did.
    occurrence_total sums the document occurrences of every phrase that
    was counted.
    """

    doc_id: str
    direct_keywords: int
    direct_terminologies: int
    indirect_keywords: int
    indirect_terminologies: int
    occurrence_total: int
    query_term_count: int

    @property
    def match_count(self) -> int:
        return (self.direct_keywords + self.direct_terminologies
                + self.indirect_keywords + self.indirect_terminologies)


@dataclass(frozen=True)
class RankScore:
    doc_id: str
    score: float
    relativeness: float
    direct_pct: float
    indirect_pct: float
    bonus_applied: bool
    cluster: int
    occurrence_total: int


def summarize_matches(doc_id: str, matches: list[DocMatch], query: Query) -> MatchSummary:
    """Tally one document's matches against the query terms.

    A direct hit on a term supersedes that term's synonym hits entirely;
    otherwise the term counts once as indirect and every matched synonym's
    occurrences feed the total.
    """
    known = {term.phrase: term for term in query.terms}
    direct: dict[str, DocMatch] = {}
    indirect: dict[str, list[DocMatch]] = {}
    for match in matches:
        origin = match.entry.origin
        if known.get(origin.phrase) != origin:
            raise ConsistencyError(
                f"match origin {origin.phrase!r} is not a term of query {query.raw_text!r}"
            )
        if match.entry.match_class.is_direct:
            direct[origin.phrase] = match
        else:
            indirect.setdefault(origin.phrase, []).append(match)

    n_direct = {TermClass.KEYWORD: 0, TermClass.TERMINOLOGY: 0}
    n_indirect = {TermClass.KEYWORD: 0, TermClass.TERMINOLOGY: 0}
    occurrences = 0
    for term in query.terms:
        hit = direct.get(term.phrase)
        if hit is not None:
            n_direct[term.term_class] += 1
            occurrences += hit.count
        elif term.phrase in indirect:
            n_indirect[term.term_class] += 1
            occurrences += sum(m.count for m in indirect[term.phrase])
    return MatchSummary(
        doc_id=doc_id,
        direct_keywords=n_direct[TermClass.KEYWORD],
        direct_terminologies=n_direct[TermClass.TERMINOLOGY],
        indirect_keywords=n_indirect[TermClass.KEYWORD],
        indirect_terminologies=n_indirect[TermClass.TERMINOLOGY],
        occurrence_total=occurrences,
        query_term_count=query.term_count,
    )


def score_document(summary: MatchSummary, weights: Weights) -> RankScore:
    """Score one document from its match summary.

    The weighted match fraction (as a percentage) is the relativeness;
    the score is that fraction plus total occurrences, plus the bonus
    when direct matching outweighs indirect.
    """
    if summary.match_count == 0:
        raise NoMatchError(f"document {summary.doc_id!r} has no matches to score")
    if summary.query_term_count < 1:
        raise DomainError("query term count must be >= 1")
    direct_part = (weights.direct_keyword * summary.direct_keywords
                   + weights.direct_terminology * summary.direct_terminologies)
    indirect_part = (weights.indirect_keyword * summary.indirect_keywords
                     + weights.indirect_terminology * summary.indirect_terminologies)
    numerator = direct_part + indirect_part
    fraction = numerator / summary.query_term_count
    relativeness = fraction * 100.0
    direct_pct = direct_part / summary.query_term_count * 100.0
    indirect_pct = indirect_part / summary.query_term_count * 100.0
    bonus_applied = direct_pct > indirect_pct
    score = fraction + summary.occurrence_total + (weights.bonus if bonus_applied else 0.0)
    return RankScore(
        doc_id=summary.doc_id,
        score=score,
        relativeness=relativeness,
        direct_pct=direct_pct,
        indirect_pct=indirect_pct,
        bonus_applied=bonus_applied,
        cluster=assign_cluster(relativeness, weights.levels),
        occurrence_total=summary.occurrence_total,
    )


def assign_cluster(relativeness: float, levels: int) -> int:
    """Map a relativeness percentage to its cluster level (1 = highest band).

    Bands are equal width; a percentage exactly on a boundary belongs to
    the band below it. Equivalent to levels + 1 - ceil(pct * levels / 100)
    in exact arithmetic, with a small tolerance so boundary values computed
    in floating point stay in their band.
    """
    if levels < 1:
        raise DomainError("levels must be >= 1")
    if not (relativeness > 0.0 and relativeness <= 100.0 + EDGE_TOLERANCE):
        raise DomainError(f"relativeness must be in (0, 100], got {relativeness!r}")
    for band in range(1, levels + 1):
        upper = band * 100.0 / levels
        if relativeness <= upper + EDGE_TOLERANCE:
            return levels + 1 - band
    # Unreachable for arguments that pass the range check.
    raise DomainError(f"relativeness {relativeness!r} exceeds every band")


def ordering_key(score: RankScore) -> tuple:
    """Total-order sort key: best first, document id as the final tiebreak."""
    return (-score.score, -score.direct_pct, -score.indirect_pct,
            -score.occurrence_total, score.doc_id)


def order_cluster(scores: list[RankScore]) -> list[RankScore]:
    """Rank the scores of one cluster, best first, deterministically."""
    clusters = {s.cluster for s in scores}
    if len(clusters) > 1:
        raise ConsistencyError(f"scores span clusters {sorted(clusters)}; expected one")
    return sorted(scores, key=ordering_key)
