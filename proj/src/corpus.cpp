#include "paginator/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "paginator/error.hpp"

namespace paginator {

namespace {

constexpr const char* kKeys[] = {"id", "corpus_id", "subject", "title", "body"};

bool is_blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; });
}

ArticleRecord parse_record(const std::string& line, const std::string& source, std::size_t lineno) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source, lineno, std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) throw ParseError(source, lineno, "record is not a JSON object");
  if (obj.size() != std::size(kKeys)) {
    throw ParseError(source, lineno, "record must have exactly the keys id, corpus_id, subject, title, body");
  }
  for (const char* key : kKeys) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(source, lineno, std::string("missing key '") + key + "'");
    if (!it->is_string()) throw ParseError(source, lineno, std::string("key '") + key + "' is not a string");
  }
  ArticleRecord rec{obj["id"].get<std::string>(), obj["corpus_id"].get<std::string>(),
                    obj["subject"].get<std::string>(), obj["title"].get<std::string>(),
                    obj["body"].get<std::string>()};
  if (rec.id.empty()) throw ParseError(source, lineno, "empty article id");
  if (is_blank(rec.body)) throw ParseError(source, lineno, "article '" + rec.id + "' has an empty body");
  return rec;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path.string());
  return ss.str();
}

}  // namespace

bool corpus_accepted(std::size_t unique_articles, std::size_t min_articles) noexcept {
  return unique_articles >= min_articles;
}

Corpus Corpus::from_records(std::string id, std::string subject, std::vector<ArticleRecord> records,
                            std::size_t min_articles) {
  if (records.empty()) throw EmptyCorpusError("corpus '" + id + "' has no articles");
  if (min_articles == 0) throw UsageError("min_articles must be positive");
  Corpus c;
  c.id_ = std::move(id);
  c.subject_ = std::move(subject);
  c.min_articles_ = min_articles;
  std::unordered_set<std::string> seen;
  for (auto& rec : records) {
    if (seen.insert(rec.id).second) {
      c.articles_.push_back(std::move(rec));
    } else {
      ++c.duplicates_;
    }
  }
  c.accepted_ = corpus_accepted(c.articles_.size(), min_articles);
  return c;
}

const ArticleRecord* Corpus::find(const std::string& article_id) const {
  auto it = std::find_if(articles_.begin(), articles_.end(),
                         [&](const ArticleRecord& a) { return a.id == article_id; });
  return it == articles_.end() ? nullptr : &*it;
}

SubjectSet SubjectSet::from_corpuses(std::vector<Corpus> corpuses) {
  if (corpuses.empty()) throw EmptyCorpusError("subject has no corpuses");
  const std::string& label = corpuses.front().subject();
  std::string offenders;
  for (const auto& c : corpuses) {
    if (c.subject() != label) {
      if (!offenders.empty()) offenders += ", ";
      offenders += c.id() + " (" + c.subject() + ")";
    }
  }
  if (!offenders.empty()) {
    throw ConsistencyError("mixed subject labels; expected '" + label + "' but found: " + offenders);
  }
  SubjectSet s;
  s.subject_ = label;
  s.corpuses_ = std::move(corpuses);
  return s;
}

std::size_t SubjectSet::accepted_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(corpuses_.begin(), corpuses_.end(), [](const Corpus& c) { return c.accepted(); }));
}

std::size_t SubjectSet::article_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : corpuses_) n += c.articles().size();
  return n;
}

Corpus parse_corpus(const std::string& text, std::size_t min_articles, const std::string& source) {
  std::vector<ArticleRecord> records;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    records.push_back(parse_record(line, source, lineno));
    const auto& first = records.front();
    const auto& rec = records.back();
    if (rec.corpus_id != first.corpus_id) {
      throw ParseError(source, lineno, "corpus_id '" + rec.corpus_id + "' differs from '" + first.corpus_id + "'");
    }
    if (rec.subject != first.subject) {
      throw ConsistencyError(source + ":" + std::to_string(lineno) + ": subject '" + rec.subject +
                             "' differs from '" + first.subject + "'");
    }
  }
  if (records.empty()) throw EmptyCorpusError(source + ": no articles");
  std::string id = records.front().corpus_id;
  std::string subject = records.front().subject;
  return Corpus::from_records(std::move(id), std::move(subject), std::move(records), min_articles);
}

Corpus load_corpus(const std::filesystem::path& path, std::size_t min_articles) {
  return parse_corpus(read_file(path), min_articles, path.string());
}

SubjectSet load_subject(const std::filesystem::path& dir, std::size_t min_articles) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw IoError("not a directory: " + dir.string());
  std::set<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".jsonl") files.insert(entry.path());
  }
  if (ec) throw IoError("cannot list " + dir.string() + ": " + ec.message());
  if (files.empty()) throw EmptyCorpusError("no corpus files (*.jsonl) in " + dir.string());
  std::vector<Corpus> corpuses;
  corpuses.reserve(files.size());
  for (const auto& f : files) corpuses.push_back(load_corpus(f, min_articles));
  return SubjectSet::from_corpuses(std::move(corpuses));
}

std::string format_record(const ArticleRecord& record) {
  nlohmann::ordered_json obj;
  obj["id"] = record.id;
  obj["corpus_id"] = record.corpus_id;
  obj["subject"] = record.subject;
  obj["title"] = record.title;
  obj["body"] = record.body;
  return obj.dump();
}

std::string format_corpus(const Corpus& corpus) {
  std::string out;
  for (const auto& a : corpus.articles()) {
    out += format_record(a);
    out += '\n';
  }
  return out;
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << format_corpus(corpus);
  if (!out) throw IoError("error while writing " + path.string());
}

}  // namespace paginator
