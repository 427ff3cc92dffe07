"""Financial news sentiment pipeline.

Headline ingestion, text cleaning, lexicon sentiment scoring, word
embeddings (sparse and dense), recurrent neural classifiers trained from
scratch, evaluation reports, exploratory statistics, and buy/sell signal
emission joined to OHLCV price data.
"""

__version__ = "0.1.0"
