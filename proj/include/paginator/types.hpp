#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace paginator {

enum class Method {
  OneSentence,
  TwoSentences,
  OneParagraph,
  TwentyPercent,
  NoveltyArticle,
  NoveltyCorpus,
  SlmArticle,
  SlmCorpus,
};

enum class Context { Article, Corpus };

// Command-line spelling, e.g. "slm-corpus".
std::string_view method_name(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;
const std::vector<Method>& all_methods();

bool is_baseline(Method m) noexcept;
bool uses_corpus(Method m) noexcept;

// Per-prefix series: values[i] belongs to the first i+1 sentences.
struct ScoreCurve {
  Method method = Method::NoveltyArticle;
  std::vector<double> values;
  bool normalized = false;
  std::map<std::string, double> diagnostics;

  std::size_t size() const noexcept { return values.size(); }
};

struct BreakPoint {
  std::string article_id;
  std::size_t sentence_index = 0;  // 1-based
  Method method = Method::OneSentence;
  bool fallback = false;
  std::map<std::string, double> diagnostics;
};

}  // namespace paginator
