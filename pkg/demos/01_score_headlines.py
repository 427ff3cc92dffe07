"""Score a handful of headlines with the rule-based lexicon scorer.

Shows how caps emphasis, boosters, negation and exclamation marks move
the compound score, and how the compound maps onto a trading action.
"""

from sentinews.lexicon import load_lexicon, polarity_scores
from sentinews.signals import decide

HEADLINES = [
    "Shares rally as earnings beat expectations",
    "Shares RALLY as earnings beat expectations!!",
    "Earnings were not good this quarter",
    "Earnings were very good this quarter",
    "Markets plunge amid fears of a deep recession",
    "Company reports quarterly results",
]


def main():
    lex = load_lexicon()
    print(f"{'headline':<50} {'compound':>9} {'action':>7}")
    for text in HEADLINES:
        score = polarity_scores(text, lex)
        action = decide(score.compound)
        print(f"{text:<50} {score.compound:>9.4f} {action:>7}")


if __name__ == "__main__":
    main()
