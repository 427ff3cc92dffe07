"""Regenerate the bundled test fixtures.

Run from the repository root:  python3 tools/make_fixtures.py

Produces:
  src/sentinews/data/golden_sentences.csv  -- 50 sentences scored by the
      reference scorer in tests/reference_vader.py over the bundled lexicon
  src/sentinews/data/pretrained_10k.txt    -- synthetic 10k-token, 50-dim
      vector file with exact analogy structure (king - man + woman = queen)
  tests/data/porter_sample.csv             -- 200 (word, stem) pairs frozen
      from the validated Porter implementation
"""

import csv
import pathlib
import sys

import numpy as np

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT / "tests"))

from sentinews.lexicon import DEFAULT_BOOSTERS, DEFAULT_NEGATORS, load_lexicon  # noqa: E402
from sentinews.porter import stem  # noqa: E402
from reference_vader import ReferenceScorer  # noqa: E402

GOLDEN_SENTENCES = [
    # plain polarity
    "profits soar after strong quarter",
    "shares crash amid widening loss",
    "the committee met on tuesday",
    "good results",
    "bad results",
    "growth continues",
    "markets slump on panic selling",
    "a happy outcome for investors",
    "fear grips the trading floor",
    "the firm reported a surge in revenue",
    # boosters at varying distance
    "very good results",
    "results were very very good",
    "extremely bad quarter for the bank",
    "slightly weak demand in europe",
    "an extremely strong rally lifted stocks",
    "really quite strong numbers today",
    "so good",
    "barely a gain this month",
    "the outlook is somewhat weak",
    "highly unusual but great execution",
    # negation
    "not good",
    "not a good sign",
    "this is not bad at all",
    "no growth expected this year",
    "never a loss like this before",
    "earnings did not surge",
    "without risk there is no profit",
    "hardly a success",
    "nothing bad happened",
    "the deal is not not good",
    # caps emphasis
    "GREAT results from the lender",
    "a truly GREAT rally",
    "BAD news for shareholders",
    "THIS IS ALL CAPS GOOD",
    "mixed case with one GOOD word",
    # exclamation
    "profits soar!",
    "profits soar!!!",
    "what a crash!!!!",
    "flat session today!",
    "great win!!",
    # combinations
    "not very good!",
    "VERY bad quarter!!",
    "an extremely good and happy surprise",
    "weak start but strong finish",
    "no panic despite the slump",
    "the CEO said growth will continue",
    "analysts fear a very weak recovery",
    "totally safe investment they said",
    "success follows failure follows success",
    "",
]


def write_golden(path):
    lex = load_lexicon()
    scorer = ReferenceScorer(lex.valences, DEFAULT_BOOSTERS, DEFAULT_NEGATORS)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["text", "neg", "neu", "pos", "compound"])
        for sentence in GOLDEN_SENTENCES:
            s = scorer.score(sentence)
            writer.writerow([sentence, repr(s["neg"]), repr(s["neu"]),
                             repr(s["pos"]), repr(s["compound"])])
    print(f"wrote {path} ({len(GOLDEN_SENTENCES)} sentences)")


ANALOGY_WORDS = [
    # the acceptance quartet first, then filler structure words
    "king", "queen", "man", "woman", "paris", "france", "rome", "italy",
    "berlin", "germany", "madrid", "spain", "london", "england",
    "big", "bigger", "small", "smaller", "good", "better", "bad", "worse",
    "stock", "stocks", "market", "markets", "profit", "loss", "bank",
    "money", "trade", "price", "share", "bond", "fund", "rate", "growth",
]


def write_pretrained(path, n_tokens=10_000, dim=50, seed=13):
    rng = np.random.default_rng(seed)
    vectors = rng.normal(size=(n_tokens, dim))
    vectors /= np.linalg.norm(vectors, axis=1, keepdims=True)
    tokens = list(ANALOGY_WORDS)
    tokens += [f"tok{i:05d}" for i in range(n_tokens - len(tokens))]
    index = {t: i for i, t in enumerate(tokens)}
    # Plant exact analogy structure: at unit norm, a random pair's cosine
    # stays below ~0.5 at this scale, so the planted vector is a clear top-1.
    for a, b, c, d in (("man", "king", "woman", "queen"),
                       ("france", "paris", "italy", "rome"),
                       ("germany", "berlin", "spain", "madrid")):
        planted = (vectors[index[b]] - vectors[index[a]] + vectors[index[c]])
        vectors[index[d]] = planted / np.linalg.norm(planted)
    with open(path, "w", encoding="utf-8") as fh:
        for token, row in zip(tokens, vectors):
            fh.write(token + " " + " ".join(f"{v:.4f}" for v in row) + "\n")
    print(f"wrote {path} ({n_tokens} tokens, dim {dim})")


PORTER_WORDS = [
    "caresses", "ponies", "ties", "caress", "cats", "feed", "agreed",
    "plastered", "bled", "motoring", "sing", "conflated", "troubled",
    "sized", "hopping", "tanned", "falling", "hissing", "fizzed",
    "failing", "filing", "happy", "sky", "relational", "conditional",
    "rational", "valenci", "hesitanci", "digitizer", "conformabli",
    "radicalli", "differentli", "vileli", "analogousli", "vietnamization",
    "predication", "operator", "feudalism", "decisiveness", "hopefulness",
    "callousness", "formaliti", "sensitiviti", "sensibiliti", "triplicate",
    "formative", "formalize", "electriciti", "electrical", "hopeful",
    "goodness", "revival", "allowance", "inference", "airliner",
    "gyroscopic", "adjustable", "defensible", "irritant", "replacement",
    "adjustment", "dependent", "adoption", "homologou", "communism",
    "activate", "angulariti", "homologous", "effective", "bowdlerize",
    "probate", "rate", "cease", "controll", "roll", "stocks", "trading",
    "investors", "markets", "profits", "earnings", "losses", "gains",
    "rallied", "crashed", "surged", "plunged", "soared", "slumped",
    "banking", "financial", "economists", "analysts", "companies",
    "shares", "dividends", "volatility", "inflation", "recession",
    "recovery", "growing", "falling", "rising", "buying", "selling",
    "holdings", "positions", "valuations", "estimates", "forecasts",
    "projections", "announcements", "statements", "reports", "quarterly",
    "annually", "monthly", "weekly", "daily", "hourly", "generalizations",
    "oscillators", "characterization", "nationalism", "rationalization",
    "happiness", "sadness", "readiness", "tiredness", "awareness",
    "argued", "arguing", "argues", "argument", "arguments", "running",
    "runner", "runners", "swimming", "swimmer", "jumping", "jumped",
    "played", "playing", "player", "players", "studied", "studying",
    "studies", "student", "students", "teaching", "teacher", "taught",
    "learning", "learned", "learner", "knowledge", "knowing", "known",
    "thinking", "thought", "believed", "believing", "believer", "beliefs",
    "created", "creating", "creation", "creative", "creativity",
    "connected", "connecting", "connection", "connections", "connectivity",
    "organized", "organizing", "organization", "organizational",
    "possibly", "possible", "possibility", "probable", "probably",
    "probability", "national", "nationally", "international",
    "internationalization", "traditional", "traditionally", "combine",
    "combined", "combination", "determine", "determined", "determination",
    "explain", "explained", "explanation", "suggest", "suggested",
    "suggestion", "suggestions",
]


def write_porter_sample(path):
    words = PORTER_WORDS[:200]
    assert len(words) == 200, len(words)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["word", "stem"])
        for word in words:
            writer.writerow([word, stem(word)])
    print(f"wrote {path} ({len(words)} pairs)")


if __name__ == "__main__":
    data = ROOT / "src" / "sentinews" / "data"
    tests_data = ROOT / "tests" / "data"
    tests_data.mkdir(exist_ok=True)
    write_golden(data / "golden_sentences.csv")
    write_pretrained(data / "pretrained_10k.txt")
    write_porter_sample(tests_data / "porter_sample.csv")
