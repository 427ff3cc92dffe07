"""Train word2vec, GloVe and fastText on a tiny two-topic corpus.

The corpus mixes fruit sentences with metal sentences; after training,
nearest neighbors should stay inside their own topic, and the fastText
model can produce a vector even for a word it never saw.
"""

import numpy as np

from sentinews.embeddings.fasttext import fasttext_word_vector, train_fasttext
from sentinews.embeddings.glove import build_cooccurrence, train_glove
from sentinews.embeddings.matrix import cosine_similarity, most_similar
from sentinews.embeddings.word2vec import train_word2vec_sgns


def build_corpus(n_sentences=600, seed=0):
    rng = np.random.default_rng(seed)
    topics = (["apple", "banana", "cherry", "grape", "melon"],
              ["steel", "copper", "iron", "zinc", "nickel"])
    return [tuple(rng.choice(topics[i % 2], size=6))
            for i in range(n_sentences)]


def main():
    corpus = build_corpus()

    w2v = train_word2vec_sgns(corpus, dim=16, window=3, epochs=3, seed=1)
    print("word2vec neighbors of 'apple':",
          [w for w, _ in most_similar("apple", w2v, n=3)])

    glove = train_glove(build_cooccurrence(corpus, window=3),
                        dim=16, epochs=30, seed=1)
    print("glove neighbors of 'steel':  ",
          [w for w, _ in most_similar("steel", glove, n=3)])

    table = train_fasttext(corpus, dim=16, window=3, epochs=3, seed=1,
                           bucket_count=2048)
    oov = fasttext_word_vector("bananas", table)   # never in the corpus
    seen = fasttext_word_vector("banana", table)
    print(f"fasttext cos(banana, bananas) = "
          f"{cosine_similarity(seen, oov):.3f}  (OOV via shared n-grams)")


if __name__ == "__main__":
    main()
