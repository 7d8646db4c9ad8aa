#include "paginator/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "paginator/error.hpp"

namespace paginator {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }

// Closing quotes and brackets that may trail sentence-final punctuation.
// Returns the byte length of the closer at `pos`, or 0.
std::size_t closer_length(std::string_view s, std::size_t pos) {
  char c = s[pos];
  if (c == '"' || c == '\'' || c == ')' || c == ']') return 1;
  // U+2019 and U+201D
  if (pos + 2 < s.size() && static_cast<unsigned char>(c) == 0xE2 &&
      static_cast<unsigned char>(s[pos + 1]) == 0x80 &&
      (static_cast<unsigned char>(s[pos + 2]) == 0x99 || static_cast<unsigned char>(s[pos + 2]) == 0x9D)) {
    return 3;
  }
  return 0;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// "U.S", "e.g", "a.m": single letters joined by periods.
bool is_dotted_initialism(std::string_view w) {
  if (w.size() < 3) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool want_letter = i % 2 == 0;
    if (want_letter != (std::isalpha(static_cast<unsigned char>(w[i])) != 0)) return false;
    if (!want_letter && w[i] != '.') return false;
  }
  return w.size() % 2 == 1;
}

// The word immediately before the period at `dot`, without leading quotes or
// brackets.
std::string_view word_before(std::string_view p, std::size_t dot) {
  std::size_t b = dot;
  while (b > 0 && !is_space(p[b - 1])) --b;
  std::string_view w = p.substr(b, dot - b);
  while (!w.empty() && (w.front() == '"' || w.front() == '\'' || w.front() == '(' || w.front() == '[')) {
    w.remove_prefix(1);
  }
  return w;
}

bool suppresses_boundary(std::string_view word) {
  if (word.empty()) return false;
  if (word.size() == 1 && std::isupper(static_cast<unsigned char>(word[0]))) return true;  // initial
  if (is_dotted_initialism(word)) return true;
  return sentence_abbreviations().count(ascii_lower(word)) > 0;
}

void split_paragraph(std::string_view p, std::size_t paragraph_index, std::vector<Sentence>& out) {
  auto emit = [&](std::string_view text) {
    text = trim(text);
    if (text.empty()) return;
    Sentence s;
    s.index = out.size() + 1;
    s.text = std::string(text);
    s.char_count = utf8_length(text);
    s.paragraph_index = paragraph_index;
    out.push_back(std::move(s));
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < p.size()) {
    if (!is_terminal(p[i])) {
      ++i;
      continue;
    }
    const std::size_t first = i;
    while (i < p.size() && is_terminal(p[i])) ++i;
    const bool single_period = p[first] == '.' && i - first == 1;
    while (i < p.size()) {
      std::size_t n = closer_length(p, i);
      if (n == 0) break;
      i += n;
    }
    const std::size_t end = i;
    if (end >= p.size() || !is_space(p[end])) continue;
    std::size_t next = end;
    while (next < p.size() && is_space(p[next])) ++next;
    if (next >= p.size()) continue;
    if (std::islower(static_cast<unsigned char>(p[next]))) continue;
    if (single_period && suppresses_boundary(word_before(p, first))) continue;
    emit(p.substr(start, end - start));
    start = next;
    i = next;
  }
  emit(p.substr(start));
}

// Decodes one code point; malformed sequences decode as a single byte.
char32_t decode(std::string_view s, std::size_t& pos) {
  auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  unsigned char c = byte(pos);
  std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : (c >> 3) == 0x1E ? 4 : 1;
  if (pos + len > s.size()) len = 1;
  for (std::size_t k = 1; k < len; ++k) {
    if ((byte(pos + k) & 0xC0) != 0x80) {
      len = 1;
      break;
    }
  }
  char32_t cp = len == 1 ? c : len == 2 ? (c & 0x1F) : len == 3 ? (c & 0x0F) : (c & 0x07);
  for (std::size_t k = 1; k < len; ++k) cp = (cp << 6) | (byte(pos + k) & 0x3F);
  pos += len;
  return cp;
}

bool is_word_codepoint(char32_t cp) {
  if (cp < 0x80) return std::isalnum(static_cast<int>(cp)) != 0;
  if (cp <= 0xBF) return false;                    // Latin-1 punctuation, symbols, NBSP
  if (cp == 0xD7 || cp == 0xF7) return false;      // multiplication, division
  if (cp >= 0x2000 && cp <= 0x206F) return false;  // general punctuation
  if (cp >= 0x20A0 && cp <= 0x20CF) return false;  // currency
  if (cp >= 0x3000 && cp <= 0x303F) return false;  // CJK punctuation
  if (cp == 0xFEFF) return false;
  return true;
}

const std::map<std::string, std::string>& irregular_plurals() {
  static const std::map<std::string, std::string> table = {
      {"children", "child"}, {"feet", "foot"}, {"geese", "goose"}, {"men", "man"},
      {"mice", "mouse"},     {"teeth", "tooth"}, {"women", "woman"},
  };
  return table;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

const std::set<std::string>& FilterConfig::default_stopwords() {
  static const std::set<std::string> words = {
      "a", "about", "above", "after", "again", "against", "all", "also", "am", "among", "an", "and",
      "any", "are", "around", "as", "at", "be", "because", "been", "before", "being", "below",
      "between", "both", "but", "by", "can", "could", "did", "do", "does", "doing", "down", "during",
      "each", "either", "else", "even", "ever", "every", "few", "for", "from", "further", "had", "has",
      "have", "having", "he", "her", "here", "hers", "herself", "him", "himself", "his", "how",
      "however", "i", "if", "in", "into", "is", "it", "its", "itself", "just", "less", "like", "many",
      "may", "me", "might", "more", "most", "much", "must", "my", "myself", "near", "neither", "no",
      "nor", "not", "now", "of", "off", "often", "on", "once", "only", "or", "other", "our", "ours",
      "ourselves", "out", "over", "own", "per", "quite", "rather", "said", "same", "say", "says",
      "shall", "she", "should", "since", "so", "some", "such", "than", "that", "the", "their",
      "theirs", "them", "themselves", "then", "there", "these", "they", "this", "those", "though",
      "through", "thus", "to", "too", "toward", "towards", "under", "until", "up", "upon", "us",
      "very", "via", "was", "we", "were", "what", "when", "where", "whether", "which", "while", "who",
      "whom", "whose", "why", "will", "with", "within", "without", "would", "yet", "you", "your",
      "yours", "yourself", "yourselves",
  };
  return words;
}

const std::set<std::string>& sentence_abbreviations() {
  static const std::set<std::string> abbrevs = {
      "adm", "apr", "aug", "capt", "cmdr", "col", "dec", "det", "dr", "feb", "ft", "gen", "gov",
      "hon", "jan", "jr", "jul", "jun", "lt", "maj", "mar", "mr", "mrs", "ms", "mt", "nov", "oct",
      "pres", "prof", "rep", "rev", "sen", "sep", "sept", "sgt", "sr", "st", "supt", "vs",
  };
  return abbrevs;
}

std::size_t utf8_length(std::string_view s) noexcept {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::vector<std::string> split_paragraphs(std::string_view body) {
  std::vector<std::string> paragraphs;
  std::string current;
  auto flush = [&] {
    std::string_view t = trim(current);
    if (!t.empty()) paragraphs.emplace_back(t);
    current.clear();
  };
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t nl = body.find('\n', pos);
    std::string_view line = body.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    if (trim(line).empty()) {
      flush();
    } else {
      if (!current.empty()) current += '\n';
      current.append(line);
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  flush();
  return paragraphs;
}

std::vector<Sentence> split_sentences(std::string_view body) {
  std::vector<Sentence> sentences;
  const auto paragraphs = split_paragraphs(body);
  for (std::size_t p = 0; p < paragraphs.size(); ++p) split_paragraph(paragraphs[p], p + 1, sentences);
  return sentences;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  bool has_letter = false;
  auto flush = [&] {
    if (!current.empty() && has_letter) tokens.push_back(current);
    current.clear();
    has_letter = false;
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t begin = pos;
    const char32_t cp = decode(text, pos);
    if (!is_word_codepoint(cp)) {
      flush();
      continue;
    }
    if (cp < 0x80) {
      const auto c = static_cast<unsigned char>(cp);
      if (std::isalpha(c)) has_letter = true;
      current.push_back(static_cast<char>(std::tolower(c)));
    } else {
      has_letter = true;
      current.append(text.substr(begin, pos - begin));
    }
  }
  flush();
  return tokens;
}

std::string strip_plural(std::string_view word) {
  std::string w(word);
  if (auto it = irregular_plurals().find(w); it != irregular_plurals().end()) return it->second;
  if (w.size() < 4) return w;
  if (ends_with(w, "ies") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
  if (ends_with(w, "sses")) return w.substr(0, w.size() - 2);
  if (ends_with(w, "xes") || ends_with(w, "ches") || ends_with(w, "shes") || ends_with(w, "zzes")) {
    return w.substr(0, w.size() - 2);
  }
  if (ends_with(w, "ss") || ends_with(w, "us") || ends_with(w, "is")) return w;
  if (ends_with(w, "s")) return w.substr(0, w.size() - 1);
  return w;
}

std::vector<std::string> filter_words(const std::vector<std::string>& words, const FilterConfig& cfg) {
  std::vector<std::string> out;
  for (const auto& raw : words) {
    for (auto& w : tokenize(raw)) {
      if (cfg.stopwords.count(w)) continue;
      std::string lemma = strip_plural(w);
      if (cfg.stopwords.count(lemma)) continue;
      if (utf8_length(lemma) < cfg.min_token_length) continue;
      out.push_back(std::move(lemma));
    }
  }
  return out;
}

TokenizedSentence filter_tokens(const Sentence& s, const FilterConfig& cfg) {
  TokenizedSentence ts;
  ts.sentence_index = s.index;
  ts.tokens = filter_words(tokenize(s.text), cfg);
  if (cfg.pos_annotations) {
    auto it = cfg.pos_annotations->find(s.index);
    if (it != cfg.pos_annotations->end()) {
      FilterConfig plain = cfg;
      plain.pos_annotations.reset();
      const auto nouns_list = filter_words(it->second, plain);
      const std::set<std::string> nouns(nouns_list.begin(), nouns_list.end());
      std::erase_if(ts.tokens, [&](const std::string& t) { return nouns.count(t) == 0; });
    }
  }
  return ts;
}

NounAnnotations parse_noun_annotations(const std::string& text, const std::string& source) {
  NounAnnotations out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(source, lineno, "expected sentence_index<TAB>tokens");
    const std::string idx = line.substr(0, tab);
    if (idx.empty() || !std::all_of(idx.begin(), idx.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw ParseError(source, lineno, "sentence index is not a positive integer");
    }
    const std::size_t index = std::stoul(idx);
    if (index == 0) throw ParseError(source, lineno, "sentence index is not a positive integer");
    if (out.count(index)) throw ParseError(source, lineno, "duplicate sentence index " + idx);
    std::vector<std::string> tokens;
    std::istringstream ts(line.substr(tab + 1));
    std::string tok;
    while (ts >> tok) tokens.push_back(tok);
    out.emplace(index, std::move(tokens));
  }
  return out;
}

NounAnnotations load_noun_annotations(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_noun_annotations(ss.str(), path.string());
}

std::vector<std::string> PreparedArticle::all_tokens() const {
  std::vector<std::string> out;
  for (const auto& ts : tokens) out.insert(out.end(), ts.tokens.begin(), ts.tokens.end());
  return out;
}

PreparedArticle prepare_article(const ArticleRecord& record, const FilterConfig& cfg) {
  PreparedArticle a;
  a.id = record.id;
  a.paragraphs = split_paragraphs(record.body);
  a.sentences = split_sentences(record.body);
  a.tokens.reserve(a.sentences.size());
  for (const auto& s : a.sentences) a.tokens.push_back(filter_tokens(s, cfg));
  return a;
}

const PreparedArticle* PreparedCorpus::find(const std::string& article_id) const {
  auto it = std::find_if(articles.begin(), articles.end(),
                         [&](const PreparedArticle& a) { return a.id == article_id; });
  return it == articles.end() ? nullptr : &*it;
}

PreparedCorpus prepare_corpus(const Corpus& corpus, const FilterConfig& cfg,
                              const std::map<std::string, NounAnnotations>* nouns) {
  PreparedCorpus out;
  out.id = corpus.id();
  out.subject = corpus.subject();
  out.accepted = corpus.accepted();
  out.articles.reserve(corpus.articles().size());
  for (const auto& rec : corpus.articles()) {
    if (nouns) {
      FilterConfig local = cfg;
      if (auto it = nouns->find(rec.id); it != nouns->end()) {
        local.pos_annotations = it->second;
      } else {
        local.pos_annotations.reset();
      }
      out.articles.push_back(prepare_article(rec, local));
    } else {
      out.articles.push_back(prepare_article(rec, cfg));
    }
  }
  return out;
}

}  // namespace paginator
