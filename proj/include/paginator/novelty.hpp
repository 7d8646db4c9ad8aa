#pragma once

#include <span>

#include "paginator/linalg.hpp"
#include "paginator/text.hpp"
#include "paginator/types.hpp"

namespace paginator {

struct NoveltyOptions {
  std::size_t svd_k = kDefaultSvdRank;
  std::size_t keyword_cap = kDefaultKeywordCap;
  SvdOptions svd;
};

// values[i] is the summed weight of the distinct retained words first seen in
// sentences 1..i+1.
ScoreCurve novelty_curve(std::span<const TokenizedSentence> sentences, const KeywordWeights& weights,
                         Method method = Method::NoveltyArticle);

struct LogFit {
  double intercept = 0.0;
  double slope = 0.0;
  double r_squared = 0.0;
};

// Least-squares line through (ln i, min-max normalized value_i).
// Requires a non-constant curve of length >= 2.
LogFit log_fit(std::span<const double> values);

// Break at round(e^slope) of the log fit, clamped to [1, m]. A constant curve
// falls back to the last sentence. Throws PreconditionError for m < 3.
BreakPoint inflection_break(const ScoreCurve& curve);

KeywordWeights article_keyword_weights(const PreparedArticle& article, const NoveltyOptions& opts = {});

// One matrix over every sentence of every article; the cap applies once.
KeywordWeights corpus_keyword_weights(const PreparedCorpus& corpus, const NoveltyOptions& opts = {});

BreakPoint predict_novelty(const PreparedArticle& article, const KeywordWeights& weights, Method method);

// Corpus context requires an accepted corpus (UsageError when absent,
// PreconditionError when rejected).
BreakPoint predict_novelty(const PreparedArticle& article, Context context, const PreparedCorpus* corpus,
                           const NoveltyOptions& opts = {});

}  // namespace paginator
