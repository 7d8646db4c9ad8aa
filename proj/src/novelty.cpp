#include "paginator/novelty.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "paginator/error.hpp"

namespace paginator {

namespace {

bool has_tokens(std::span<const TokenizedSentence> sentences) {
  return std::any_of(sentences.begin(), sentences.end(),
                     [](const TokenizedSentence& s) { return !s.tokens.empty(); });
}

KeywordWeights weights_for(std::span<const TokenizedSentence> sentences, const NoveltyOptions& opts) {
  if (!has_tokens(sentences)) return {};
  const auto mat = build_matrix(sentences);
  const auto svd = truncated_svd(mat, opts.svd_k, opts.svd);
  return keyword_weights(svd, mat.vocab(), opts.keyword_cap);
}

}  // namespace

ScoreCurve novelty_curve(std::span<const TokenizedSentence> sentences, const KeywordWeights& weights,
                         Method method) {
  std::unordered_map<std::string, double> retained;
  for (const auto& w : weights.retained) retained.emplace(w, weights.weights.at(w));

  ScoreCurve curve;
  curve.method = method;
  curve.values.reserve(sentences.size());
  std::unordered_set<std::string> seen;
  double total = 0.0;
  for (const auto& s : sentences) {
    for (const auto& tok : s.tokens) {
      auto it = retained.find(tok);
      if (it != retained.end() && seen.insert(tok).second) total += it->second;
    }
    curve.values.push_back(total);
  }
  return curve;
}

LogFit log_fit(std::span<const double> values) {
  const std::size_t m = values.size();
  if (m < 2) throw PreconditionError("log fit needs at least two points");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double min = *lo, range = *hi - *lo;
  if (!(range > 0.0)) throw DegenerateInputError("log fit of a constant curve");

  double mean_x = 0.0, mean_y = 0.0;
  std::vector<double> x(m), y(m);
  for (std::size_t i = 0; i < m; ++i) {
    x[i] = std::log(static_cast<double>(i + 1));
    y[i] = (values[i] - min) / range;
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= static_cast<double>(m);
  mean_y /= static_cast<double>(m);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double dx = x[i] - mean_x, dy = y[i] - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  LogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

BreakPoint inflection_break(const ScoreCurve& curve) {
  const std::size_t m = curve.values.size();
  if (m < 3) throw PreconditionError("inflection break needs at least 3 sentences, got " + std::to_string(m));
  BreakPoint bp;
  bp.method = curve.method;
  const auto [lo, hi] = std::minmax_element(curve.values.begin(), curve.values.end());
  if (!(*hi > *lo)) {
    bp.fallback = true;
    bp.sentence_index = m;
    bp.diagnostics["degenerate_fit"] = 1.0;
    return bp;
  }
  const LogFit fit = log_fit(curve.values);
  const double candidate = std::exp(fit.slope);
  const double rounded = std::floor(candidate + 0.5);
  bp.sentence_index = static_cast<std::size_t>(std::clamp(rounded, 1.0, static_cast<double>(m)));
  bp.diagnostics["intercept"] = fit.intercept;
  bp.diagnostics["slope"] = fit.slope;
  bp.diagnostics["r_squared"] = fit.r_squared;
  bp.diagnostics["candidate"] = candidate;
  return bp;
}

KeywordWeights article_keyword_weights(const PreparedArticle& article, const NoveltyOptions& opts) {
  return weights_for(article.tokens, opts);
}

KeywordWeights corpus_keyword_weights(const PreparedCorpus& corpus, const NoveltyOptions& opts) {
  std::vector<TokenizedSentence> rows;
  for (const auto& a : corpus.articles) rows.insert(rows.end(), a.tokens.begin(), a.tokens.end());
  return weights_for(rows, opts);
}

BreakPoint predict_novelty(const PreparedArticle& article, const KeywordWeights& weights, Method method) {
  auto curve = novelty_curve(article.tokens, weights, method);
  BreakPoint bp = inflection_break(curve);
  bp.article_id = article.id;
  bp.diagnostics["retained_words"] = static_cast<double>(weights.retained.size());
  return bp;
}

BreakPoint predict_novelty(const PreparedArticle& article, Context context, const PreparedCorpus* corpus,
                           const NoveltyOptions& opts) {
  if (context == Context::Article) {
    return predict_novelty(article, article_keyword_weights(article, opts), Method::NoveltyArticle);
  }
  if (corpus == nullptr) throw UsageError("corpus context requires a corpus");
  if (!corpus->accepted) throw PreconditionError("corpus '" + corpus->id + "' is not accepted");
  return predict_novelty(article, corpus_keyword_weights(*corpus, opts), Method::NoveltyCorpus);
}

}  // namespace paginator
