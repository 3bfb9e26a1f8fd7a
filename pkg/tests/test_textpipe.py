from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chairtools.textpipe import (
    RawDocument,
    build_corpus_weights,
    count_terms,
    default_stopwords,
    is_valid_token,
    load_stopwords,
    parse_stopwords,
    remove_stopwords,
    tokenize,
    top_terms,
)
from oracles import oracle_corpus_weights, oracle_tokenize


class TestTokenize:
    def test_punctuation_becomes_spaces(self):
        assert tokenize("Word clouds, in CMS!") == ["word", "clouds", "in", "cms"]

    def test_empty_text(self):
        assert tokenize("") == []

    def test_hyphen_terms_kept_numbers_dropped(self):
        assert tokenize("state-of-the-art 5G systems (2021)") == [
            "state-of-the-art",
            "5g",
            "systems",
        ]

    def test_strips_edge_joiners(self):
        assert tokenize("--word-- ''cloud''") == ["word", "cloud"]

    def test_single_letters_dropped(self):
        assert tokenize("a b cd") == ["cd"]

    def test_duplicates_and_order_preserved(self):
        assert tokenize("beta alpha beta") == ["beta", "alpha", "beta"]

    def test_apostrophes_inside_words(self):
        assert tokenize("the chair's agenda") == ["the", "chair's", "agenda"]


@given(st.text(max_size=200))
def test_tokens_satisfy_token_invariants(text):
    for token in tokenize(text):
        assert is_valid_token(token), repr(token)


@given(st.text(max_size=200))
def test_tokenize_idempotent_on_own_output(text):
    once = tokenize(text)
    assert tokenize(" ".join(once)) == once


@given(st.text(max_size=200))
def test_tokenize_matches_independent_implementation(text):
    assert tokenize(text) == oracle_tokenize(text)


class TestRemoveStopwords:
    def test_filters_listed_words(self):
        tokens = ["word", "clouds", "in", "cms"]
        assert remove_stopwords(tokens, frozenset({"in", "the", "of"})) == [
            "word",
            "clouds",
            "cms",
        ]

    def test_empty_input(self):
        assert remove_stopwords([], frozenset({"the"})) == []

    def test_all_filtered(self):
        assert remove_stopwords(["the", "of", "in"], frozenset({"the", "of", "in"})) == []


@given(
    st.lists(st.sampled_from(["alpha", "beta", "gamma", "the", "of"]), max_size=30),
    st.frozensets(st.sampled_from(["alpha", "the", "of"])),
)
def test_remove_stopwords_properties(tokens, stopwords):
    result = remove_stopwords(tokens, stopwords)
    assert not set(result) & stopwords
    assert len(result) <= len(tokens)


class TestCountTerms:
    def test_counts(self):
        assert count_terms(["word", "cloud", "word"]) == {"word": 2, "cloud": 1}

    def test_empty(self):
        assert count_terms([]) == {}

    def test_repeated_single_term(self):
        assert count_terms(["a1", "a1", "a1"]) == {"a1": 3}


@given(st.lists(st.sampled_from(["aa", "bb", "cc", "dd"]), max_size=50))
def test_count_terms_mass_conservation(tokens):
    counts = count_terms(tokens)
    assert sum(counts.values()) == len(tokens)
    assert all(v >= 1 for v in counts.values())


class TestCorpusWeights:
    def test_title_boost_one(self):
        doc = RawDocument(id="d1", title="cloud cloud", abstract="cloud")
        assert build_corpus_weights([doc], frozenset()) == {"cloud": 3}

    def test_title_boost_two(self):
        doc = RawDocument(id="d1", title="cloud cloud", abstract="cloud")
        assert build_corpus_weights([doc], frozenset(), title_boost=2) == {"cloud": 5}

    def test_nonpositive_boost_rejected(self):
        with pytest.raises(ValueError):
            build_corpus_weights([], frozenset(), title_boost=0)

    def test_empty_docs(self):
        assert build_corpus_weights([], frozenset()) == {}


def _random_docs(rng: random.Random, n: int) -> list[RawDocument]:
    vocabulary = [
        "cloud", "word", "review", "paper", "chair", "the", "of", "graph",
        "model", "data", "5g", "state-of-the-art", "committee", "in",
    ]
    noise = ["!", ",", ".", "(", ")", ":", ";", "2021", "x", "--"]
    docs = []
    for i in range(n):
        title = " ".join(
            rng.choice(vocabulary if rng.random() < 0.8 else noise)
            for _ in range(rng.randint(1, 8))
        )
        abstract = " ".join(
            rng.choice(vocabulary if rng.random() < 0.8 else noise)
            for _ in range(rng.randint(0, 30))
        )
        docs.append(RawDocument(id=f"d{i}", title=title or "fallback", abstract=abstract))
    return docs


def test_corpus_weights_match_naive_recount():
    rng = random.Random(1234)
    docs = _random_docs(rng, 20)
    stopwords = frozenset({"the", "of", "in"})
    for boost in (1.0, 2.5):
        assert build_corpus_weights(docs, stopwords, boost) == pytest.approx(
            oracle_corpus_weights(docs, stopwords, boost)
        )


def test_corpus_weights_boost_one_equals_count_of_concatenation():
    rng = random.Random(99)
    docs = _random_docs(rng, 15)
    stopwords = frozenset({"the", "of"})
    all_tokens = []
    for doc in docs:
        all_tokens += remove_stopwords(tokenize(doc.title), stopwords)
        all_tokens += remove_stopwords(tokenize(doc.abstract), stopwords)
    assert build_corpus_weights(docs, stopwords, 1.0) == count_terms(all_tokens)


class TestTopTerms:
    def test_tie_broken_lexicographically(self):
        assert top_terms({"a": 2, "b": 2, "c": 1}, 2) == [("a", 2), ("b", 2)]

    def test_empty_weights(self):
        assert top_terms({}, 5) == []

    def test_zero_n(self):
        assert top_terms({"x": 9, "y": 1}, 0) == []

    def test_orders_by_weight_descending(self):
        assert top_terms({"x": 1, "y": 3, "z": 2}, 3) == [("y", 3), ("z", 2), ("x", 1)]


@given(
    st.dictionaries(
        st.sampled_from(["aa", "bb", "cc", "dd", "ee"]),
        st.floats(min_value=0.1, max_value=100),
        max_size=5,
    ),
    st.integers(min_value=0, max_value=8),
)
def test_top_terms_nonincreasing_and_deterministic(weights, n):
    result = top_terms(weights, n)
    assert result == top_terms(dict(weights), n)
    assert len(result) == min(n, len(weights))
    for (_, w1), (_, w2) in zip(result, result[1:]):
        assert w1 >= w2


class TestStopwordLists:
    def test_parse_skips_comments_blanks_and_lowercases(self):
        text = "# comment\n\nThe\n of \nAND\n"
        assert parse_stopwords(text) == frozenset({"the", "of", "and"})

    def test_load_from_file(self, tmp_path):
        path = tmp_path / "stop.txt"
        path.write_text("alpha\n# nope\nBETA\n", encoding="utf-8")
        assert load_stopwords(path) == frozenset({"alpha", "beta"})

    def test_bundled_list_well_formed(self):
        words = default_stopwords()
        assert {"the", "of", "and", "in", "is"} <= words
        for word in words:
            assert word == word.strip().lower()
            assert word
