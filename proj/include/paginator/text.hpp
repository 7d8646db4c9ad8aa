#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "paginator/corpus.hpp"

namespace paginator {

struct Sentence {
  std::size_t index = 0;            // 1-based, document order
  std::string text;
  std::size_t char_count = 0;       // UTF-8 code points in `text`
  std::size_t paragraph_index = 0;  // 1-based

  bool operator==(const Sentence&) const = default;
};

struct TokenizedSentence {
  std::size_t sentence_index = 0;
  std::vector<std::string> tokens;

  bool operator==(const TokenizedSentence&) const = default;
};

// sentence_index -> noun tokens, as produced by an external tagger.
using NounAnnotations = std::map<std::size_t, std::vector<std::string>>;

struct FilterConfig {
  std::set<std::string> stopwords = default_stopwords();
  std::size_t min_token_length = 2;
  std::optional<NounAnnotations> pos_annotations;

  static const std::set<std::string>& default_stopwords();
};

// Abbreviations that never end a sentence when followed by a period. Stored
// lowercase without the trailing period.
const std::set<std::string>& sentence_abbreviations();

std::size_t utf8_length(std::string_view s) noexcept;

std::vector<std::string> split_paragraphs(std::string_view body);
std::vector<Sentence> split_sentences(std::string_view body);

// Lowercased alphanumeric runs (ASCII folding only; bytes >= 0x80 are kept as
// word characters). Runs without a letter are dropped.
std::vector<std::string> tokenize(std::string_view text);

// Plural stripping only: -ies -> -y, -sses -> -ss, -xes/-ches/-shes/-zes lose
// -es, other -s is dropped unless the word ends in -ss, -us or -is. Words
// shorter than four characters are left alone.
std::string strip_plural(std::string_view word);

// Stopword, length and plural filtering on already-split words. Idempotent.
std::vector<std::string> filter_words(const std::vector<std::string>& words, const FilterConfig& cfg);

TokenizedSentence filter_tokens(const Sentence& s, const FilterConfig& cfg);

// Sidecar lines: `sentence_index<TAB>token1 token2 ...`.
NounAnnotations parse_noun_annotations(const std::string& text, const std::string& source = "<memory>");
NounAnnotations load_noun_annotations(const std::filesystem::path& path);

// An article segmented and filtered once, ready for every predictor.
struct PreparedArticle {
  std::string id;
  std::vector<std::string> paragraphs;
  std::vector<Sentence> sentences;
  std::vector<TokenizedSentence> tokens;

  std::size_t sentence_count() const noexcept { return sentences.size(); }
  std::vector<std::string> all_tokens() const;
};

PreparedArticle prepare_article(const ArticleRecord& record, const FilterConfig& cfg = {});

struct PreparedCorpus {
  std::string id;
  std::string subject;
  bool accepted = false;
  std::vector<PreparedArticle> articles;

  const PreparedArticle* find(const std::string& article_id) const;
};

// `nouns`, when given, maps article id to that article's noun sidecar and
// overrides cfg.pos_annotations per article.
PreparedCorpus prepare_corpus(const Corpus& corpus, const FilterConfig& cfg = {},
                              const std::map<std::string, NounAnnotations>* nouns = nullptr);

}  // namespace paginator
