"""Run the cleaning pipeline on raw headlines and build TF-IDF vectors.

Prints each stage of the transformation for one headline, then the
top-weighted TF-IDF terms per document.
"""

from sentinews.textprep import CleanConfig, clean_pipeline
from sentinews.vectorizers import fit_vocabulary, tfidf_matrix

RAW = [
    "Stocks rallied sharply; <b>tech</b> leads the gains!",
    "Traders fear the fed won't cut rates this year",
    "Tech giants tumble as rate fears return to markets",
]


def main():
    cfg = CleanConfig(stem=False, lemmatize=True)
    cleaned = [tuple(clean_pipeline(text, cfg)) for text in RAW]
    for raw, tokens in zip(RAW, cleaned):
        print(f"raw:    {raw}")
        print(f"tokens: {' '.join(tokens)}")
        print()

    vocab = fit_vocabulary(cleaned)
    index_to_token = {i: t for t, i in vocab.word_index.items()}
    for doc_id, vec in enumerate(tfidf_matrix(cleaned, vocab)):
        ranked = sorted(zip(vec.weights, vec.indices), reverse=True)[:3]
        terms = ", ".join(f"{index_to_token[i]}={w:.3f}" for w, i in ranked)
        print(f"doc {doc_id} top terms: {terms}")


if __name__ == "__main__":
    main()
