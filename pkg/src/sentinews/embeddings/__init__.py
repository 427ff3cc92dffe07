"""Dense word representations: trained, loaded, and queried."""

from .matrix import (
    EmbeddingMatrix,
    analogy,
    cosine_similarity,
    embedding_layer_matrix,
    load_pretrained_text,
    load_sentence_vectors,
    most_similar,
    pca_project_2d,
    save_text,
)
from .word2vec import train_word2vec_sgns
from .fasttext import SubwordTable, char_ngrams, fasttext_word_vector, train_fasttext
from .glove import (
    CooccurrenceTable,
    GloveModel,
    build_cooccurrence,
    fit_glove,
    glove_loss,
    train_glove,
    weighting,
)

__all__ = [
    "EmbeddingMatrix", "analogy", "cosine_similarity", "embedding_layer_matrix",
    "load_pretrained_text", "load_sentence_vectors", "most_similar",
    "pca_project_2d", "save_text", "train_word2vec_sgns", "SubwordTable",
    "char_ngrams", "fasttext_word_vector", "train_fasttext",
    "CooccurrenceTable", "GloveModel", "build_cooccurrence", "fit_glove",
    "glove_loss", "train_glove", "weighting",
]
