"""Corpus analytics: scoped term weights, coverage gaps, reviewer matching.

Gap analysis compares the submission term distribution against the PC's
aggregated publication distribution; a term is flagged when the PC covers
it at less than a configurable fraction of its submission share. Reviewer
matching is plain cosine similarity over raw term frequencies (no IDF).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .corpus import Conference, Reviewer
from .textpipe import RawDocument, build_corpus_weights

DEFAULT_MIN_SHARE = 0.01
DEFAULT_RATIO_THRESHOLD = 0.5


@dataclass(frozen=True)
class GapEntry:
    term: str
    sub_share: float
    pc_share: float
    ratio: float
    flagged: bool


@dataclass(frozen=True)
class Suggestion:
    reviewer_id: str
    score: float


def submissions_weights(
    conference: Conference, stopwords: frozenset[str], title_boost: float = 1.0
) -> dict[str, float]:
    """Term weights over every submitted paper's title and abstract."""
    docs = [
        RawDocument(id=p.id, title=p.title, abstract=p.abstract, source="submission")
        for p in conference.papers
    ]
    return build_corpus_weights(docs, stopwords, title_boost)


def reviewer_weights(
    reviewer: Reviewer, stopwords: frozenset[str], title_boost: float = 1.0
) -> dict[str, float]:
    """Term weights over one reviewer's publication record."""
    return build_corpus_weights(reviewer.publications, stopwords, title_boost)


def pc_weights(
    conference: Conference, stopwords: frozenset[str], title_boost: float = 1.0
) -> dict[str, float]:
    """Term-wise sum of reviewer_weights over the whole committee."""
    total: dict[str, float] = {}
    for reviewer in conference.reviewers:
        for term, weight in reviewer_weights(reviewer, stopwords, title_boost).items():
            total[term] = total.get(term, 0.0) + weight
    return total


def normalize(weights: Mapping[str, float]) -> dict[str, float]:
    """Scale weights to shares summing to 1; empty weights stay empty."""
    total = sum(weights.values())
    if total <= 0:
        return {}
    return {term: w / total for term, w in weights.items()}


def coverage_gap_report(
    sub: Mapping[str, float],
    pc: Mapping[str, float],
    min_share: float = DEFAULT_MIN_SHARE,
    ratio_threshold: float = DEFAULT_RATIO_THRESHOLD,
) -> list[GapEntry]:
    """Compare submission demand against PC competence, term by term.

    Covers every term holding at least ``min_share`` of the submission
    distribution; flags it when the PC share falls below ``ratio_threshold``
    times its submission share. Sorted by submission share descending.
    """
    if not 0 < min_share <= 1:
        raise ValueError(f"min_share must be in (0, 1], got {min_share}")
    if ratio_threshold < 0 or math.isnan(ratio_threshold):
        raise ValueError(f"ratio_threshold must be nonnegative, got {ratio_threshold}")
    entries = []
    for term, sub_share in sub.items():
        if sub_share < min_share:
            continue
        pc_share = pc.get(term, 0.0)
        ratio = pc_share / sub_share
        entries.append(
            GapEntry(
                term=term,
                sub_share=sub_share,
                pc_share=pc_share,
                ratio=ratio,
                flagged=ratio < ratio_threshold,
            )
        )
    entries.sort(key=lambda e: (-e.sub_share, e.term))
    return entries


def match_score(paper: Mapping[str, float], reviewer: Mapping[str, float]) -> float:
    """Cosine similarity between two term-weight vectors, in [0, 1].

    fsum keeps the sums exact, so the score is bitwise symmetric in its
    arguments regardless of dict iteration order.
    """
    dot = math.fsum(w * reviewer[t] for t, w in paper.items() if t in reviewer)
    if dot == 0.0:
        return 0.0
    paper_norm = math.sqrt(math.fsum(w * w for w in paper.values()))
    reviewer_norm = math.sqrt(math.fsum(w * w for w in reviewer.values()))
    if paper_norm == 0.0 or reviewer_norm == 0.0:
        return 0.0
    return min(dot / (paper_norm * reviewer_norm), 1.0)


def suggest_reviewers(
    conference: Conference,
    paper_id: str,
    k: int,
    stopwords: frozenset[str],
    title_boost: float = 1.0,
) -> list[Suggestion]:
    """Rank reviewers by match against one paper; top ``k`` by score.

    Zero-score reviewers sort last, so they only surface when there are
    fewer than ``k`` reviewers with any overlap.
    """
    paper = conference.paper_by_id(paper_id)
    if paper is None:
        raise KeyError(paper_id)
    doc = RawDocument(id=paper.id, title=paper.title, abstract=paper.abstract)
    paper_vec = build_corpus_weights([doc], stopwords, title_boost)
    scored = [
        Suggestion(
            reviewer_id=r.id,
            score=match_score(paper_vec, reviewer_weights(r, stopwords, title_boost)),
        )
        for r in conference.reviewers
    ]
    scored.sort(key=lambda s: (-s.score, s.reviewer_id))
    return scored[: max(k, 0)]


def gap_entry_to_json(entry: GapEntry) -> dict:
    return {
        "term": entry.term,
        "subShare": entry.sub_share,
        "pcShare": entry.pc_share,
        "ratio": entry.ratio,
        "flagged": entry.flagged,
    }


def suggestion_to_json(suggestion: Suggestion) -> dict:
    return {"reviewerId": suggestion.reviewer_id, "score": round(suggestion.score, 6)}
