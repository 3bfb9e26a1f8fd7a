"""Text pipeline: sanitize free-style titles/abstracts into term weights.

Pipeline stages: tokenize (lowercase, strip punctuation), drop stopwords,
count occurrences, aggregate across documents with an optional title boost.
No stemming; terms are matched verbatim after lowercasing.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

# Kept inside tokens; everything else that is not a letter or digit splits.
_JOINERS = "-'"


@dataclass(frozen=True)
class RawDocument:
    """One title+abstract unit: a submission or a reviewer's publication."""

    id: str
    title: str
    abstract: str = ""
    source: str = "submission"  # "submission" | "publication"


def _keep(ch: str) -> bool:
    return ch.isalpha() or ch.isdigit() or ch in _JOINERS


def is_valid_token(surface: str) -> bool:
    """True if ``surface`` obeys the token rules tokenize() guarantees."""
    if len(surface) < 2:
        return False
    if surface[0] in _JOINERS or surface[-1] in _JOINERS:
        return False
    if not all(_keep(ch) for ch in surface):
        return False
    return any(ch.isalpha() for ch in surface)


def tokenize(text: str) -> list[str]:
    """Split text into lowercase tokens, keeping internal hyphens/apostrophes.

    Characters other than letters, digits, ``-`` and ``'`` become spaces.
    Pieces are stripped of leading/trailing joiners, then dropped if they
    carry no letter or are shorter than 2 characters. Order and duplicates
    are preserved.
    """
    lowered = text.lower()
    cleaned = "".join(ch if _keep(ch) else " " for ch in lowered)
    tokens = []
    for piece in cleaned.split():
        piece = piece.strip(_JOINERS)
        if len(piece) < 2:
            continue
        if not any(ch.isalpha() for ch in piece):
            continue
        tokens.append(piece)
    return tokens


def remove_stopwords(tokens: Iterable[str], stopwords: frozenset[str]) -> list[str]:
    """Return the tokens not present in ``stopwords``, order preserved."""
    return [t for t in tokens if t not in stopwords]


def count_terms(tokens: Iterable[str]) -> dict[str, float]:
    """Map each term to its occurrence count."""
    return dict(Counter(tokens))


def build_corpus_weights(
    docs: Iterable[RawDocument],
    stopwords: frozenset[str],
    title_boost: float = 1.0,
) -> dict[str, float]:
    """Aggregate term weights over documents.

    Each title occurrence counts ``title_boost``, each abstract occurrence 1.
    """
    if title_boost <= 0:
        raise ValueError(f"title_boost must be positive, got {title_boost}")
    weights: dict[str, float] = {}
    for doc in docs:
        for term in remove_stopwords(tokenize(doc.title), stopwords):
            weights[term] = weights.get(term, 0.0) + title_boost
        for term in remove_stopwords(tokenize(doc.abstract), stopwords):
            weights[term] = weights.get(term, 0.0) + 1.0
    return weights


def top_terms(weights: Mapping[str, float], n: int) -> list[tuple[str, float]]:
    """First ``n`` entries by weight descending, ties by term ascending."""
    ranked = sorted(weights.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked[: max(n, 0)]


def parse_stopwords(text: str) -> frozenset[str]:
    """Parse a stopword file body: one word per line, ``#`` comments allowed."""
    words = set()
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        words.add(line.lower())
    return frozenset(words)


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Load a stopword list from a UTF-8 file."""
    return parse_stopwords(Path(path).read_text(encoding="utf-8"))


def default_stopwords() -> frozenset[str]:
    """The bundled English stopword list."""
    body = resources.files("chairtools").joinpath("data/stopwords_en.txt").read_text("utf-8")
    return parse_stopwords(body)
