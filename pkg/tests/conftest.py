import io
from pathlib import Path

import pytest

from reltree import (
    build_index,
    load_config,
    load_gazetteer,
    load_qrels,
    load_stopwords,
    load_synonym_store,
    parse_medline_records,
)
from reltree.pipeline import Lexicons, load_lexicons

DATA_DIR = Path(__file__).parent / "data"

FIXTURE_QUERY = "aspirin treatment of heart attack"


@pytest.fixture(scope="session")
def config():
    return load_config(env={})


@pytest.fixture(scope="session")
def lexicons(config):
    return load_lexicons(config)


@pytest.fixture(scope="session")
def fixture_docs():
    with open(DATA_DIR / "fixture_corpus.nbib", encoding="utf-8") as handle:
        return parse_medline_records(handle)


@pytest.fixture(scope="session")
def fixture_index(fixture_docs):
    return build_index(fixture_docs)


@pytest.fixture(scope="session")
def eval_index():
    with open(DATA_DIR / "eval_corpus.nbib", encoding="utf-8") as handle:
        return build_index(parse_medline_records(handle))


@pytest.fixture(scope="session")
def eval_qrels():
    with open(DATA_DIR / "eval_qrels.tsv", encoding="utf-8") as handle:
        return load_qrels(handle)


def make_lexicons(gazetteer_lines="", synonym_lines="", stopword_lines=""):
    """Build Lexicons straight from strings; test helper."""
    return Lexicons(
        gazetteer=load_gazetteer(io.StringIO(gazetteer_lines)),
        synonyms=load_synonym_store(io.StringIO(synonym_lines)),
        stopwords=load_stopwords(io.StringIO(stopword_lines)),
    )


def analyzed_fixture_query(lexicons):
    """The standard fixture query, analyzed and expanded."""
    from reltree import analyze_query, build_relation_list

    query = analyze_query(FIXTURE_QUERY, lexicons.gazetteer, lexicons.stopwords)
    return query, build_relation_list(query, lexicons.synonyms)
