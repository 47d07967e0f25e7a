import io

import pytest

from reltree import (
    MatchClass,
    TermClass,
    analyze_query,
    build_relation_list,
    load_gazetteer,
    load_synonym_store,
    normalize_text,
)
from reltree.errors import EmptyQueryError


@pytest.fixture(scope="module")
def gazetteer():
    return load_gazetteer(io.StringIO("heart attack\ndisease of the heart\n"))


@pytest.fixture(scope="module")
def synonyms():
    return load_synonym_store(io.StringIO(
        "aspirin\tacetylsalicylic acid\n"
        "treatment\ttherapy\n"
        "heart attack\tmyocardial infarction\n"
    ))


STOPWORDS = frozenset({"of", "the"})


class TestNormalizeText:
    def test_punctuation_and_case(self):
        assert normalize_text("Aspirin, therapy!") == ["aspirin", "therapy"]

    def test_single_letters_dropped_digits_kept(self):
        assert normalize_text("p53 & X") == ["p53"]
        assert normalize_text("vitamin C level 7") == ["vitamin", "level", "7"]

    def test_empty(self):
        assert normalize_text("") == []

    def test_underscore_is_a_separator(self):
        assert normalize_text("gene_therapy") == ["gene", "therapy"]

    def test_unicode_words_survive(self):
        assert normalize_text("naïve Bayes") == ["naïve", "bayes"]


class TestAnalyzeQuery:
    def test_fixture_partition(self, gazetteer):
        q = analyze_query("aspirin treatment of heart attack", gazetteer, STOPWORDS)
        assert [(t.phrase, t.term_class) for t in q.terms] == [
            ("aspirin", TermClass.KEYWORD),
            ("treatment", TermClass.KEYWORD),
            ("heart attack", TermClass.TERMINOLOGY),
        ]
        assert (q.keyword_count, q.terminology_count) == (2, 1)

    def test_duplicate_phrases_collapse(self, gazetteer):
        q = analyze_query("heart attack heart attack", gazetteer, STOPWORDS)
        assert [t.phrase for t in q.terms] == ["heart attack"]
        assert q.terminology_count == 1

    def test_all_stopwords_raises(self, gazetteer):
        with pytest.raises(EmptyQueryError):
            analyze_query("of the", gazetteer, STOPWORDS)

    def test_empty_string_raises(self, gazetteer):
        with pytest.raises(EmptyQueryError):
            analyze_query("", gazetteer, STOPWORDS)

    def test_longest_match_wins(self, gazetteer):
        # "disease of the heart" must swallow its inner stopwords whole.
        q = analyze_query("disease of the heart attack", gazetteer, STOPWORDS)
        assert [t.phrase for t in q.terms] == ["disease of the heart", "attack"]
        assert q.terms[0].term_class is TermClass.TERMINOLOGY

    def test_consumed_tokens_not_rescanned(self, gazetteer):
        # After "heart attack" is consumed, the scan resumes past it.
        q = analyze_query("heart attack attack", gazetteer, STOPWORDS)
        assert [t.phrase for t in q.terms] == ["heart attack", "attack"]

    def test_raw_text_preserved(self, gazetteer):
        q = analyze_query("Aspirin!", gazetteer, STOPWORDS)
        assert q.raw_text == "Aspirin!"

    def test_reanalysis_is_stable(self, gazetteer):
        q = analyze_query("aspirin treatment of heart attack", gazetteer, STOPWORDS)
        again = analyze_query(" ".join(t.phrase for t in q.terms), gazetteer, STOPWORDS)
        assert [t.phrase for t in again.terms] == [t.phrase for t in q.terms]


class TestBuildRelationList:
    def test_fixture_order(self, gazetteer, synonyms):
        q = analyze_query("aspirin treatment of heart attack", gazetteer, STOPWORDS)
        rlist = build_relation_list(q, synonyms)
        assert [(e.phrase, e.match_class) for e in rlist] == [
            ("heart attack", MatchClass.DIRECT_TERMINOLOGY),
            ("aspirin", MatchClass.DIRECT_KEYWORD),
            ("treatment", MatchClass.DIRECT_KEYWORD),
            ("myocardial infarction", MatchClass.INDIRECT_TERMINOLOGY),
            ("acetylsalicylic acid", MatchClass.INDIRECT_KEYWORD),
            ("therapy", MatchClass.INDIRECT_KEYWORD),
        ]

    def test_no_synonym_coverage(self, gazetteer):
        q = analyze_query("zebra crossing", gazetteer, STOPWORDS)
        rlist = build_relation_list(q, load_synonym_store(io.StringIO("")))
        assert all(e.match_class.is_direct for e in rlist)
        assert len(rlist) == 2

    def test_single_keyword(self, gazetteer, synonyms):
        q = analyze_query("aspirin", gazetteer, STOPWORDS)
        rlist = build_relation_list(q, synonyms)
        assert [(e.phrase, e.match_class) for e in rlist] == [
            ("aspirin", MatchClass.DIRECT_KEYWORD),
            ("acetylsalicylic acid", MatchClass.INDIRECT_KEYWORD),
        ]

    def test_direct_count_matches_terms(self, gazetteer, synonyms):
        q = analyze_query("aspirin treatment of heart attack", gazetteer, STOPWORDS)
        rlist = build_relation_list(q, synonyms)
        direct = [e for e in rlist if e.match_class.is_direct]
        assert len(direct) == q.term_count

    def test_indirect_entries_trace_to_origin(self, gazetteer, synonyms):
        q = analyze_query("aspirin treatment of heart attack", gazetteer, STOPWORDS)
        rlist = build_relation_list(q, synonyms)
        for entry in rlist:
            if not entry.match_class.is_direct:
                assert entry.phrase != entry.origin.phrase
                assert entry.origin in q.terms
