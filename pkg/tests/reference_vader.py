"""Independent reference implementation of the lexicon sentiment rules.

Written separately from sentinews.lexicon as an oracle: same pinned rule
set, different structure. Used to generate (and re-generate) the golden
sentence file and to cross-check the production scorer in tests.

Rule set:
  * whitespace tokenization of the raw string; punctuation stripped from
    both ends of each token before lookup; lookups are lowercase
  * ALL-CAPS emphasis (+/-0.733 toward the valence sign) when some but not
    all alphabetic tokens are upper-case
  * booster words within 3 tokens before a hit adjust the valence by
    +/-0.293 damped (1.0, 0.95, 0.9) by distance; boosters that are
    themselves lexicon entries are skipped; an ALL-CAPS booster adds a
    further undamped +/-0.733
  * a negator within the 3 preceding tokens multiplies the valence by -0.74
  * each '!' (up to 4) adds 0.292 to the total, toward its sign
  * compound = s / sqrt(s^2 + 15), clipped to [-1, 1]
  * pos/neg/neu are normalized from sum(v+1 | v>0), sum(v-1 | v<0) and the
    count of zero-valence tokens, with the exclamation amplitude added to
    the dominant side
"""

import math
import string


def _clean(token):
    return token.strip(string.punctuation)


def _is_caps(word):
    return len(word) > 1 and word.isupper() and any(ch.isalpha() for ch in word)


class ReferenceScorer:
    B_DAMP = (1.0, 0.95, 0.9)
    CAPS_BUMP = 0.733
    NEG_SCALAR = -0.74
    EXCL_BUMP = 0.292
    ALPHA = 15.0

    def __init__(self, valences, boosters, negators):
        self.valences = dict(valences)
        self.boosters = dict(boosters)
        self.negators = set(negators)

    def _mixed_case(self, words):
        flags = [_is_caps(w) for w in words if any(ch.isalpha() for ch in w)]
        return any(flags) and not all(flags)

    def _adjusted_valence(self, position, words, lookups, mixed):
        base = self.valences[lookups[position]]
        sign = (base > 0) - (base < 0)
        if mixed and _is_caps(words[position]):
            base += self.CAPS_BUMP * sign
        start = max(0, position - 3)
        for j in range(position - 1, start - 1, -1):
            if lookups[j] in self.valences:
                continue
            if lookups[j] in self.boosters:
                bump = self.boosters[lookups[j]] * sign * self.B_DAMP[position - j - 1]
                if mixed and _is_caps(words[j]):
                    bump += self.CAPS_BUMP * sign
                base += bump
        if any(lookups[j] in self.negators for j in range(start, position)):
            base *= self.NEG_SCALAR
        return base

    def score(self, text):
        words = [_clean(t) for t in text.split()]
        lookups = [w.lower() for w in words]
        if not words:
            return {"neg": 0.0, "neu": 0.0, "pos": 0.0, "compound": 0.0}
        mixed = self._mixed_case(words)
        adjusted = [
            self._adjusted_valence(i, words, lookups, mixed)
            if lookups[i] in self.valences else 0.0
            for i in range(len(words))
        ]

        total = sum(adjusted)
        punch = min(4, text.count("!")) * self.EXCL_BUMP
        if total > 0:
            total += punch
        elif total < 0:
            total -= punch
        compound = total / math.sqrt(total * total + self.ALPHA)
        compound = min(1.0, max(-1.0, compound))

        up = sum(v + 1.0 for v in adjusted if v > 0)
        down = sum(v - 1.0 for v in adjusted if v < 0)
        flat = sum(1 for v in adjusted if v == 0.0)
        if total > 0:
            up += punch
        elif total < 0:
            down -= punch
        norm = up + abs(down) + flat
        if norm == 0:
            return {"neg": 0.0, "neu": 0.0, "pos": 0.0, "compound": compound}
        return {
            "neg": abs(down) / norm,
            "neu": flat / norm,
            "pos": up / norm,
            "compound": compound,
        }
