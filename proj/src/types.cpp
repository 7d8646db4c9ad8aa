#include "paginator/types.hpp"

#include <array>
#include <utility>

namespace paginator {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 8> kNames = {{
    {Method::OneSentence, "one-sentence"},
    {Method::TwoSentences, "two-sentences"},
    {Method::OneParagraph, "one-paragraph"},
    {Method::TwentyPercent, "twenty-percent"},
    {Method::NoveltyArticle, "novelty-article"},
    {Method::NoveltyCorpus, "novelty-corpus"},
    {Method::SlmArticle, "slm-article"},
    {Method::SlmCorpus, "slm-corpus"},
}};

}  // namespace

std::string_view method_name(Method m) noexcept {
  for (const auto& [method, name] : kNames) {
    if (method == m) return name;
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  for (const auto& [method, n] : kNames) {
    if (n == name) return method;
  }
  return std::nullopt;
}

const std::vector<Method>& all_methods() {
  static const std::vector<Method> methods = [] {
    std::vector<Method> v;
    for (const auto& entry : kNames) v.push_back(entry.first);
    return v;
  }();
  return methods;
}

bool is_baseline(Method m) noexcept {
  return m == Method::OneSentence || m == Method::TwoSentences || m == Method::OneParagraph ||
         m == Method::TwentyPercent;
}

bool uses_corpus(Method m) noexcept { return m == Method::NoveltyCorpus || m == Method::SlmCorpus; }

}  // namespace paginator
