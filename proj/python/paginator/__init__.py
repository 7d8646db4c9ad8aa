"""Break-point prediction for news articles."""

from ._core import (
    ArticleRecord,
    Corpus,
    DegenerateInputError,
    Error,
    ParseError,
    PreconditionError,
    SubjectSet,
    UndefinedStatisticError,
    UsageError,
    ValidationError,
    anova,
    baseline,
    curve,
    load_corpus,
    load_subject,
    max_agreement,
    methods,
    parse_corpus,
    predict,
    readability,
    run,
    spearman,
    split_sentences,
    subject_from_corpuses,
    t_test,
    tokenize,
    truncated_svd,
)

__all__ = [name for name in dir() if not name.startswith("_")]
