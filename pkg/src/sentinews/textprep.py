"""Eight-stage headline cleaning pipeline.

Fixed stage order: lowercase -> strip special characters -> slang
normalization -> tokenization -> stopword removal -> stemming or
lemmatization. All operations are pure.
"""

from __future__ import annotations

import csv
import unicodedata
from dataclasses import dataclass, field
from importlib import resources

from . import porter

_DATA = resources.files("sentinews") / "data"


def load_stopwords(path=None) -> frozenset[str]:
    """One token per line, UTF-8. Defaults to the bundled English list."""
    if path is None:
        text = (_DATA / "stopwords.txt").read_text(encoding="utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return frozenset(line.strip() for line in text.splitlines() if line.strip())


def _load_two_column_csv(path, default_name):
    if path is None:
        text = (_DATA / default_name).read_text(encoding="utf-8")
        rows = list(csv.reader(text.splitlines()))
    else:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
    return {row[0]: row[1] for row in rows[1:] if len(row) >= 2}


def load_slang_table(path=None) -> dict[str, str]:
    """Two-column CSV variant,canonical."""
    return _load_two_column_csv(path, "slang.csv")


def load_lemma_exceptions(path=None) -> dict[str, str]:
    """Two-column CSV irregular form,lemma."""
    return _load_two_column_csv(path, "lemma_exceptions.csv")


@dataclass(frozen=True)
class TokenSequence:
    tokens: tuple[str, ...]
    origin: object = None

    def __iter__(self):
        return iter(self.tokens)

    def __len__(self):
        return len(self.tokens)


@dataclass
class CleanConfig:
    lowercase: bool = True
    strip_special: bool = True
    normalize_slang: bool = True
    stopwords: bool = True
    stem: bool = False
    lemmatize: bool = True
    pos_tag: bool = False
    stopword_path: str | None = None
    slang_path: str | None = None
    lemma_exception_path: str | None = None

    def __post_init__(self):
        if self.stem and self.lemmatize:
            raise ValueError("stem and lemmatize are mutually exclusive")

    @classmethod
    def none(cls) -> "CleanConfig":
        return cls(lowercase=False, strip_special=False, normalize_slang=False,
                   stopwords=False, stem=False, lemmatize=False, pos_tag=False)


def lowercase(text: str) -> str:
    return text.lower()


def strip_special(text: str) -> str:
    """Fold accents to ASCII, drop non-alphanumerics, collapse whitespace."""
    folded = unicodedata.normalize("NFKD", text)
    folded = "".join(ch for ch in folded if not unicodedata.combining(ch))
    kept = "".join(ch if ch.isalnum() else " " for ch in folded)
    kept = kept.encode("ascii", "ignore").decode("ascii")
    return " ".join(kept.split())


def normalize_slang(text: str, table: dict[str, str]) -> str:
    words = text.split()
    return " ".join(table.get(w, w) for w in words)


def tokenize(text: str, origin=None) -> TokenSequence:
    return TokenSequence(tokens=tuple(text.split()), origin=origin)


def remove_stopwords(seq: TokenSequence, stopword_set) -> TokenSequence:
    return TokenSequence(
        tokens=tuple(t for t in seq.tokens if t not in stopword_set),
        origin=seq.origin,
    )


def porter_stem(token: str) -> str:
    return porter.stem(token)


# Closed-class lookup for the POS tagger.
_POS_LEXICON = {}
for _tag, _words in {
    "det": ("the", "a", "an", "this", "that", "these", "those", "my", "your",
            "his", "her", "its", "our", "their", "some", "any", "each",
            "every", "no"),
    "pron": ("i", "me", "you", "he", "she", "it", "we", "they", "him",
             "them", "us", "who", "whom", "what", "which"),
    "prep": ("of", "in", "on", "at", "by", "for", "with", "from", "into",
             "over", "under", "about", "after", "before", "between",
             "during", "through", "against", "above", "below"),
    "conj": ("and", "or", "but", "if", "because", "while", "although",
             "though", "since", "unless"),
    "modal": ("can", "could", "will", "would", "shall", "should", "may",
              "might", "must"),
    "to": ("to",),
    "verb": ("be", "am", "is", "are", "was", "were", "been", "being",
             "have", "has", "had", "do", "does", "did", "give", "take",
             "make", "get", "go", "say", "see", "know"),
}.items():
    for _w in _words:
        _POS_LEXICON.setdefault(_w, _tag)

_ADJ_SUFFIXES = ("ous", "ful", "able", "ible", "ive", "ic", "ish", "less")
_NOUN_SUFFIXES = ("tion", "sion", "ment", "ness", "ship", "ity", "ism")
_VERB_SUFFIXES = ("ing", "ed", "ise", "ize", "ify")


def _suffix_tag(token: str) -> str | None:
    if token.isdigit():
        return "num"
    if token.endswith("ly"):
        return "adv"
    for s in _NOUN_SUFFIXES:
        if token.endswith(s):
            return "noun"
    for s in _VERB_SUFFIXES:
        if token.endswith(s):
            return "verb"
    for s in _ADJ_SUFFIXES:
        if token.endswith(s):
            return "adj"
    return None


def pos_tag(seq: TokenSequence) -> list[tuple[str, str]]:
    """Lexicon lookup, then suffix heuristics, default noun.

    Context rules: a token directly after "to" or a modal is a verb; an
    open-class sentence-initial token followed by a determiner is a verb.
    """
    tokens = list(seq.tokens)
    tags = []
    for i, tok in enumerate(tokens):
        tag = _POS_LEXICON.get(tok)
        if tag == "to":
            tag = "prep"
        if tag is None:
            if i > 0 and (tokens[i - 1] == "to" or _POS_LEXICON.get(tokens[i - 1]) == "modal"):
                tag = "verb"
            elif i == 0 and len(tokens) > 1 and _POS_LEXICON.get(tokens[1]) == "det":
                tag = "verb"
            else:
                tag = _suffix_tag(tok) or "noun"
        tags.append((tok, tag))
    return tags


def lemmatize(token: str, tag: str, exceptions: dict[str, str] | None = None) -> str:
    """Exception-table lookup first, then suffix rules; unknown forms pass through."""
    if exceptions is None:
        exceptions = _default_exceptions()
    if token in exceptions:
        return exceptions[token]
    if tag == "verb":
        if token.endswith("ied") and len(token) > 4:
            return token[:-3] + "y"
        for suffix in ("ing", "ed"):
            if token.endswith(suffix) and len(token) > len(suffix) + 2:
                stem = token[: -len(suffix)]
                if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] not in "lsz":
                    stem = stem[:-1]
                return stem
        if token.endswith("ies") and len(token) > 4:
            return token[:-3] + "y"
        if token.endswith("s") and not token.endswith("ss"):
            return token[:-1]
        return token
    if tag == "noun":
        if token.endswith("ies") and len(token) > 4:
            return token[:-3] + "y"
        for suffix in ("ches", "shes", "sses", "xes", "zes"):
            if token.endswith(suffix):
                return token[:-2]
        if token.endswith("s") and not token.endswith(("ss", "us", "is")):
            return token[:-1]
    return token


_EXCEPTIONS_CACHE = None


def _default_exceptions() -> dict[str, str]:
    global _EXCEPTIONS_CACHE
    if _EXCEPTIONS_CACHE is None:
        _EXCEPTIONS_CACHE = load_lemma_exceptions()
    return _EXCEPTIONS_CACHE


def clean_pipeline(text: str, cfg: CleanConfig, origin=None) -> TokenSequence:
    """Apply the enabled stages in the fixed pipeline order."""
    if cfg.lowercase:
        text = lowercase(text)
    if cfg.strip_special:
        text = strip_special(text)
    if cfg.normalize_slang:
        text = normalize_slang(text, load_slang_table(cfg.slang_path))
    seq = tokenize(text, origin=origin)
    if cfg.stopwords:
        seq = remove_stopwords(seq, load_stopwords(cfg.stopword_path))
    if cfg.stem:
        seq = TokenSequence(tuple(porter_stem(t) for t in seq.tokens), origin=seq.origin)
    elif cfg.lemmatize:
        exceptions = load_lemma_exceptions(cfg.lemma_exception_path)
        tagged = pos_tag(seq)
        seq = TokenSequence(
            tuple(lemmatize(t, tag, exceptions) for t, tag in tagged),
            origin=seq.origin,
        )
    return seq


def clean_corpus(texts, cfg: CleanConfig) -> list[TokenSequence]:
    return [clean_pipeline(t, cfg) for t in texts]
