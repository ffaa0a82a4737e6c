"""cbtext: sentiment, lexicon word counts, LDA topics, and time-series
econometrics for dated central-bank communications."""

__version__ = "0.1.0"

from .corpus import (  # noqa: F401
    Channel,
    Corpus,
    Document,
    TokenizedDocument,
    TokenizerRules,
    build_vocab,
    load_corpus,
    tokenize,
    tokenize_corpus,
)
from .econometrics import (  # noqa: F401
    BreakResult,
    GrangerResult,
    UnitRootResult,
    VarModel,
    adf_test,
    compare_break_magnitudes,
    detect_break,
    fit_var,
    granger_test,
    kpss_test,
    select_lag_bic,
)
from .errors import ConfigError, DataError, ToolkitError  # noqa: F401
from .lexicon import (  # noqa: F401
    MatchResult,
    SentimentLexicon,
    TermLexicon,
    ValenceShifterTable,
    WeightedLexicon,
    load_sentiment_lexicon,
    load_shifters,
    load_term_lexicon,
    load_weighted_lexicon,
    match_sentiment,
    match_terms,
)
from .sentiment import (  # noqa: F401
    ScoreRecord,
    aggregate_sentiment,
    indicator_value,
    net_score,
    polarity_score,
    ratio_score,
    uncertainty_ratio,
)
from .timeseries import (  # noqa: F401
    AlignedPanel,
    TimeSeries,
    align,
    build_series,
    difference,
    load_external_csv,
    pearson_correlation,
    zscore,
)
from .topics import (  # noqa: F401
    CoherenceReport,
    PeriodTopicDistribution,
    TopicModel,
    fit_lda,
    kl_divergence,
    npmi_coherence,
    period_topic_distribution,
    top_topics,
    topic_probabilities,
)
