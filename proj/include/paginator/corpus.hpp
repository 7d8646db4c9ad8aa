#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace paginator {

inline constexpr std::size_t kDefaultMinArticles = 50;

struct ArticleRecord {
  std::string id;
  std::string corpus_id;
  std::string subject;
  std::string title;
  std::string body;  // paragraphs separated by "\n\n"

  bool operator==(const ArticleRecord&) const = default;
};

// A set of articles on one topic. Immutable once built; `accepted` is derived
// from the unique-id count and the threshold it was built with.
class Corpus {
 public:
  // Collapses duplicate ids to their first occurrence. Throws EmptyCorpusError
  // when `records` is empty.
  static Corpus from_records(std::string id, std::string subject,
                             std::vector<ArticleRecord> records,
                             std::size_t min_articles = kDefaultMinArticles);

  const std::string& id() const noexcept { return id_; }
  const std::string& subject() const noexcept { return subject_; }
  const std::vector<ArticleRecord>& articles() const noexcept { return articles_; }
  bool accepted() const noexcept { return accepted_; }
  std::size_t min_articles() const noexcept { return min_articles_; }
  std::size_t duplicate_count() const noexcept { return duplicates_; }

  // nullptr when absent.
  const ArticleRecord* find(const std::string& article_id) const;

  bool operator==(const Corpus&) const = default;

 private:
  Corpus() = default;

  std::string id_;
  std::string subject_;
  std::vector<ArticleRecord> articles_;
  bool accepted_ = false;
  std::size_t min_articles_ = kDefaultMinArticles;
  std::size_t duplicates_ = 0;
};

bool corpus_accepted(std::size_t unique_articles, std::size_t min_articles) noexcept;

// All corpuses of one subject. Rejected corpuses are kept; check accepted().
class SubjectSet {
 public:
  // Throws ConsistencyError naming every corpus whose label differs from the
  // first one.
  static SubjectSet from_corpuses(std::vector<Corpus> corpuses);

  const std::string& subject() const noexcept { return subject_; }
  const std::vector<Corpus>& corpuses() const noexcept { return corpuses_; }

  std::size_t corpus_count() const noexcept { return corpuses_.size(); }
  std::size_t accepted_count() const noexcept;
  std::size_t article_count() const noexcept;

  bool operator==(const SubjectSet&) const = default;

 private:
  SubjectSet() = default;

  std::string subject_;
  std::vector<Corpus> corpuses_;
};

// One JSON object per line with keys exactly id, corpus_id, subject, title
// and body. Blank lines are skipped.
Corpus parse_corpus(const std::string& text, std::size_t min_articles = kDefaultMinArticles,
                    const std::string& source = "<memory>");
Corpus load_corpus(const std::filesystem::path& path,
                   std::size_t min_articles = kDefaultMinArticles);

// Loads every *.jsonl file in `dir`, in file-name order.
SubjectSet load_subject(const std::filesystem::path& dir,
                        std::size_t min_articles = kDefaultMinArticles);

std::string format_record(const ArticleRecord& record);
std::string format_corpus(const Corpus& corpus);
void write_corpus(const Corpus& corpus, const std::filesystem::path& path);

}  // namespace paginator
