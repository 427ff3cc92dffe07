"""Rule-augmented lexicon sentiment scorer.

Scores are computed on the RAW headline string (capitalization and
punctuation carry signal); cleaning is a separate concern. Each matched
token's valence is adjusted by booster words, short-range negation, and
ALL-CAPS emphasis; exclamation marks amplify the total. The compound
score normalizes the adjusted sum into [-1, +1] via s / sqrt(s^2 + 15).
"""

from __future__ import annotations

import enum
import math
import string
from dataclasses import dataclass, field
from importlib import resources

from .errors import ParseError

VALENCE_MIN = -4.0
VALENCE_MAX = 4.0

# Rule constants (empirical scorer rule set).
BOOSTER_INCR = 0.293
BOOSTER_DECR = -0.293
CAPS_INCR = 0.733
NEGATION_SCALAR = -0.74
EXCLAIM_INCR = 0.292
MAX_EXCLAIM = 4
NORMALIZE_ALPHA = 15.0
NEGATION_SCOPE = 3  # preceding tokens inspected for a negator
BOOSTER_DAMPING = (1.0, 0.95, 0.9)  # by distance 1, 2, 3

DEFAULT_NEGATORS = frozenset({
    "not", "no", "never", "none", "neither", "nor", "nothing", "nobody",
    "cannot", "cant", "can't", "dont", "don't", "doesnt", "doesn't",
    "didnt", "didn't", "isnt", "isn't", "wasnt", "wasn't", "wont",
    "won't", "wouldnt", "wouldn't", "couldnt", "couldn't", "shouldnt",
    "shouldn't", "aint", "ain't", "hardly", "rarely", "without",
})

DEFAULT_BOOSTERS = {
    "absolutely": BOOSTER_INCR, "completely": BOOSTER_INCR,
    "considerably": BOOSTER_INCR, "decidedly": BOOSTER_INCR,
    "deeply": BOOSTER_INCR, "enormously": BOOSTER_INCR,
    "especially": BOOSTER_INCR, "exceptionally": BOOSTER_INCR,
    "extremely": BOOSTER_INCR, "greatly": BOOSTER_INCR,
    "highly": BOOSTER_INCR, "hugely": BOOSTER_INCR,
    "incredibly": BOOSTER_INCR, "intensely": BOOSTER_INCR,
    "majorly": BOOSTER_INCR, "really": BOOSTER_INCR,
    "remarkably": BOOSTER_INCR, "sharply": BOOSTER_INCR,
    "significantly": BOOSTER_INCR, "so": BOOSTER_INCR,
    "substantially": BOOSTER_INCR, "thoroughly": BOOSTER_INCR,
    "totally": BOOSTER_INCR, "tremendously": BOOSTER_INCR,
    "unusually": BOOSTER_INCR, "utterly": BOOSTER_INCR,
    "very": BOOSTER_INCR,
    "almost": BOOSTER_DECR, "barely": BOOSTER_DECR,
    "kind of": BOOSTER_DECR, "kinda": BOOSTER_DECR,
    "less": BOOSTER_DECR, "little": BOOSTER_DECR,
    "marginally": BOOSTER_DECR, "occasionally": BOOSTER_DECR,
    "partly": BOOSTER_DECR, "scarcely": BOOSTER_DECR,
    "slightly": BOOSTER_DECR, "somewhat": BOOSTER_DECR,
    "sort of": BOOSTER_DECR, "sorta": BOOSTER_DECR,
}


@dataclass(frozen=True)
class SentimentLexicon:
    valences: dict[str, float]
    boosters: dict[str, float] = field(default_factory=lambda: dict(DEFAULT_BOOSTERS))
    negators: frozenset[str] = DEFAULT_NEGATORS


@dataclass(frozen=True)
class SentimentScore:
    neg: float
    neu: float
    pos: float
    compound: float


class SentimentLabel(enum.Enum):
    NEGATIVE = 0
    POSITIVE = 1
    NEUTRAL = "neutral"


def load_lexicon(path=None, boosters=None, negators=None) -> SentimentLexicon:
    """Load token<TAB>valence lines ('#' comments allowed); reject out-of-range entries."""
    if path is None:
        text = (resources.files("sentinews") / "data" / "lexicon.txt").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    valences: dict[str, float] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) < 2:
            raise ParseError(f"expected token<TAB>valence, got {line!r}", lineno)
        token = parts[0]
        try:
            valence = float(parts[1])
        except ValueError:
            raise ParseError(f"bad valence {parts[1]!r}", lineno) from None
        if not VALENCE_MIN <= valence <= VALENCE_MAX:
            raise ParseError(
                f"valence {valence} outside [{VALENCE_MIN}, {VALENCE_MAX}]", lineno
            )
        valences[token] = valence
    return SentimentLexicon(
        valences=valences,
        boosters=dict(DEFAULT_BOOSTERS) if boosters is None else dict(boosters),
        negators=DEFAULT_NEGATORS if negators is None else frozenset(negators),
    )


def _strip_punct(token: str) -> str:
    return token.strip(string.punctuation)


def _sign(x: float) -> float:
    return 1.0 if x > 0 else -1.0 if x < 0 else 0.0


def polarity_scores(text: str, lex: SentimentLexicon) -> SentimentScore:
    """Score a raw string; unknown tokens contribute zero valence."""
    raw_tokens = text.split()
    words = [_strip_punct(t) for t in raw_tokens]
    lookups = [w.lower() for w in words]

    caps = [w.isupper() and len(w) > 1 and any(c.isalpha() for c in w) for w in words]
    # Emphasis applies only when some but not all alphabetic tokens are in caps.
    alpha_caps = [c for c, w in zip(caps, words) if any(ch.isalpha() for ch in w)]
    cap_differential = any(alpha_caps) and not all(alpha_caps)

    valences: list[float] = []
    for i, lookup in enumerate(lookups):
        if lookup not in lex.valences:
            valences.append(0.0)
            continue
        v = lex.valences[lookup]
        if caps[i] and cap_differential:
            v += CAPS_INCR * _sign(v)
        for dist in range(1, NEGATION_SCOPE + 1):
            j = i - dist
            if j < 0:
                break
            prev = lookups[j]
            if prev in lex.valences:
                continue
            if prev in lex.boosters:
                b = lex.boosters[prev] * _sign(v) * BOOSTER_DAMPING[dist - 1]
                if caps[j] and cap_differential:
                    b += CAPS_INCR * _sign(v)
                v += b
        if any(
            lookups[i - d] in lex.negators
            for d in range(1, NEGATION_SCOPE + 1)
            if i - d >= 0
        ):
            v *= NEGATION_SCALAR
        valences.append(v)

    if not valences:
        return SentimentScore(neg=0.0, neu=0.0, pos=0.0, compound=0.0)

    total = sum(valences)
    exclaim = min(text.count("!"), MAX_EXCLAIM) * EXCLAIM_INCR
    if total > 0:
        total += exclaim
    elif total < 0:
        total -= exclaim

    compound = total / math.sqrt(total * total + NORMALIZE_ALPHA)
    compound = max(-1.0, min(1.0, compound))

    pos_sum = sum(v + 1.0 for v in valences if v > 0)
    neg_sum = sum(v - 1.0 for v in valences if v < 0)
    neu_count = sum(1 for v in valences if v == 0)
    if total > 0:
        pos_sum += exclaim
    elif total < 0:
        neg_sum -= exclaim
    denom = pos_sum + abs(neg_sum) + neu_count
    if denom == 0:
        return SentimentScore(neg=0.0, neu=0.0, pos=0.0, compound=compound)
    return SentimentScore(
        neg=abs(neg_sum) / denom,
        neu=neu_count / denom,
        pos=pos_sum / denom,
        compound=compound,
    )


def label(compound: float, threshold: float = 0.0) -> SentimentLabel:
    """Positive above +threshold, negative below -threshold, else neutral."""
    if threshold < 0:
        raise ValueError(f"threshold must be >= 0, got {threshold}")
    if compound > threshold:
        return SentimentLabel.POSITIVE
    if compound < -threshold:
        return SentimentLabel.NEGATIVE
    return SentimentLabel.NEUTRAL
