import pytest
from hypothesis import given, strategies as st

from sentinews.textprep import (
    CleanConfig, TokenSequence, clean_corpus, clean_pipeline, lemmatize,
    load_lemma_exceptions, load_slang_table, load_stopwords, lowercase,
    normalize_slang, pos_tag, remove_stopwords, strip_special, tokenize,
)


def test_lowercase():
    assert lowercase("Stocks RALLY Today") == "stocks rally today"


def test_strip_special_folds_accents_and_symbols():
    assert strip_special("café sà, 12% up!") == "cafe sa 12 up"
    assert strip_special("a\t b\n  c") == "a b c"


def test_normalize_slang_whole_words_only():
    table = load_slang_table()
    assert normalize_slang("see u 2moro", table) == "see you tomorrow"
    # no substring replacement: "u" inside a word stays put
    assert normalize_slang("pull up", table) == "pull up"


def test_tokenize_whitespace():
    assert tokenize("give your best shot").tokens == ("give", "your", "best", "shot")


def test_stopwords_removed():
    stop = load_stopwords()
    assert "the" in stop and "is" in stop and len(stop) == 179
    seq = tokenize("the market is strong")
    assert remove_stopwords(seq, stop).tokens == ("market", "strong")


def test_pos_tag_rules():
    tags = dict(pos_tag(tokenize("the plan to launch failed quickly")))
    assert tags["the"] == "det"
    assert tags["launch"] == "verb"       # after "to"
    assert tags["quickly"] == "adv"       # -ly suffix
    assert tags["plan"] == "noun"         # default


def test_lemmatize_rules_and_exceptions():
    exceptions = load_lemma_exceptions()
    assert lemmatize("went", "verb", exceptions) == "go"
    assert lemmatize("better", "adj", exceptions) == "good"
    assert lemmatize("running", "verb", exceptions) == "run"   # undoubling
    assert lemmatize("falling", "verb", exceptions) == "fall"  # ll protected
    assert lemmatize("companies", "noun", exceptions) == "company"
    assert lemmatize("churches", "noun", exceptions) == "church"
    assert lemmatize("status", "noun", exceptions) == "status"  # -us protected
    assert lemmatize("markets", "noun", exceptions) == "market"


def test_clean_config_stem_and_lemmatize_conflict():
    with pytest.raises(ValueError):
        CleanConfig(stem=True, lemmatize=True)


def test_clean_pipeline_default_order():
    seq = clean_pipeline("The Markets RALLIED sharply, u see!", CleanConfig())
    # lowercased, punctuation stripped, slang expanded, stopwords dropped,
    # lemmatized
    assert seq.tokens == ("market", "rally", "sharply", "see")


def test_clean_pipeline_stemming_variant():
    cfg = CleanConfig(stem=True, lemmatize=False)
    seq = clean_pipeline("trading happily", cfg)
    assert seq.tokens == ("trade", "happili")


def test_clean_pipeline_none_is_identity_tokenizer():
    seq = clean_pipeline("The CAT, sat!", CleanConfig.none())
    assert seq.tokens == ("The", "CAT,", "sat!")


def test_clean_corpus_maps_each_text():
    out = clean_corpus(["good results", "bad results"], CleanConfig())
    assert len(out) == 2
    assert all(isinstance(s, TokenSequence) for s in out)


@given(st.text(max_size=80))
def test_pipeline_total_and_tokens_nonempty(text):
    seq = clean_pipeline(text, CleanConfig())
    assert all(tok for tok in seq.tokens)
    assert all(" " not in tok for tok in seq.tokens)
