#include "paginator/baselines.hpp"

#include <algorithm>

#include "paginator/error.hpp"

namespace paginator {

namespace {

std::size_t last_of_first_paragraph(const std::vector<Sentence>& sentences) {
  const std::size_t first = sentences.front().paragraph_index;
  std::size_t idx = sentences.front().index;
  for (const auto& s : sentences) {
    if (s.paragraph_index != first) break;
    idx = s.index;
  }
  return idx;
}

std::size_t twenty_percent(const std::vector<Sentence>& sentences, double fraction) {
  std::size_t total = 0;
  for (const auto& s : sentences) total += s.char_count;
  const double threshold = fraction * static_cast<double>(total);
  // Exact boundaries must survive rounding in fraction * total.
  const double slack = 1e-9 * static_cast<double>(total);
  std::size_t cumulative = 0;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    cumulative += sentences[i].char_count;
    const bool paragraph_end =
        i + 1 == sentences.size() || sentences[i + 1].paragraph_index != sentences[i].paragraph_index;
    if (paragraph_end && static_cast<double>(cumulative) + slack >= threshold) return sentences[i].index;
  }
  return sentences.back().index;
}

}  // namespace

BreakPoint predict_baseline(const PreparedArticle& article, Method kind, double fraction) {
  if (!is_baseline(kind)) throw UsageError("not a baseline method: " + std::string(method_name(kind)));
  if (article.sentences.empty()) throw PreconditionError("article '" + article.id + "' has no sentences");
  if (!(fraction > 0.0 && fraction <= 1.0)) throw UsageError("twenty-percent fraction must lie in (0, 1]");

  BreakPoint bp;
  bp.article_id = article.id;
  bp.method = kind;
  const std::size_t m = article.sentences.size();
  switch (kind) {
    case Method::OneSentence:
      bp.sentence_index = 1;
      break;
    case Method::TwoSentences:
      bp.sentence_index = std::min<std::size_t>(2, m);
      break;
    case Method::OneParagraph:
      bp.sentence_index = last_of_first_paragraph(article.sentences);
      break;
    case Method::TwentyPercent:
      bp.sentence_index = twenty_percent(article.sentences, fraction);
      break;
    default:
      break;
  }
  return bp;
}

}  // namespace paginator
