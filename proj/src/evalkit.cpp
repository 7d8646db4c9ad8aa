#include "paginator/evalkit.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "paginator/error.hpp"

namespace paginator {

namespace {

bool is_vowel(char c, bool first) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || (c == 'y' && !first);
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

double mean_of(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    fields.push_back(trim(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return fields;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Calls fn(line, lineno) for every non-blank line, CR stripped.
template <typename Fn>
void for_each_line(const std::string& text, Fn fn) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    fn(std::string_view(line), lineno);
  }
}

// Sum of squares within groups and between groups.
std::pair<double, double> anova_sums(std::span<const double> pooled, std::span<const std::size_t> sizes) {
  const double grand = mean_of(pooled);
  double within = 0.0, between = 0.0;
  std::size_t offset = 0;
  for (std::size_t n : sizes) {
    const auto group = pooled.subspan(offset, n);
    const double m = mean_of(group);
    for (double v : group) within += (v - m) * (v - m);
    between += static_cast<double>(n) * (m - grand) * (m - grand);
    offset += n;
  }
  return {within, between};
}

double f_from_sums(double within, double between, std::size_t k, std::size_t total) {
  const double msb = between / static_cast<double>(k - 1);
  const double msw = within / static_cast<double>(total - k);
  if (within == 0.0) {
    if (between == 0.0) throw UndefinedStatisticError("F is undefined: no variance within or between groups");
    return std::numeric_limits<double>::infinity();
  }
  return msb / msw;
}

double t_from(std::span<const double> a, std::span<const double> b) {
  const double ma = mean_of(a), mb = mean_of(b);
  double ssa = 0.0, ssb = 0.0;
  for (double v : a) ssa += (v - ma) * (v - ma);
  for (double v : b) ssb += (v - mb) * (v - mb);
  const double df = static_cast<double>(a.size() + b.size() - 2);
  const double pooled = (ssa + ssb) / df;
  const double diff = ma - mb;
  if (pooled == 0.0) {
    if (diff == 0.0) return 0.0;
    throw UndefinedStatisticError("t is undefined: zero pooled variance with unequal means");
  }
  return diff / std::sqrt(pooled * (1.0 / static_cast<double>(a.size()) + 1.0 / static_cast<double>(b.size())));
}

bool at_least(double value, double observed) {
  if (std::isinf(observed)) return value >= observed;
  return value >= observed - 1e-12 * std::abs(observed);
}

}  // namespace

// ---- Readability -----------------------------------------------------------

std::size_t count_syllables(std::string_view word) {
  std::string w;
  for (char c : word) {
    if (std::isalpha(static_cast<unsigned char>(c))) w.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (w.size() <= 3) return 1;

  std::size_t groups = 0;
  bool in_group = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool v = is_vowel(w[i], i == 0);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  const auto consonant_at = [&](std::size_t i) { return !is_vowel(w[i], i == 0); };
  const std::size_t n = w.size();
  if (groups > 1) {
    if (w[n - 1] == 'e' && consonant_at(n - 2)) {
      const bool consonant_le = w[n - 2] == 'l' && n >= 3 && consonant_at(n - 3);
      if (!consonant_le) --groups;
    } else if (ends_with(w, "ed") && consonant_at(n - 3)) {
      if (w[n - 3] != 't' && w[n - 3] != 'd') --groups;
    } else if (ends_with(w, "es") && consonant_at(n - 3)) {
      const bool sibilant = ends_with(w, "ses") || ends_with(w, "xes") || ends_with(w, "zes") ||
                            ends_with(w, "ches") || ends_with(w, "shes") || ends_with(w, "ces") ||
                            ends_with(w, "ges");
      if (!sibilant) --groups;
    }
  }
  return std::max<std::size_t>(groups, 1);
}

std::vector<std::string> readability_words(std::string_view sentence) {
  std::vector<std::string> words;
  std::istringstream in{std::string(sentence)};
  std::string piece;
  while (in >> piece) {
    const bool has_letter = std::any_of(piece.begin(), piece.end(), [](char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || (static_cast<unsigned char>(c) & 0x80);
    });
    if (has_letter) words.push_back(piece);
  }
  return words;
}

ReadabilityStats readability(std::span<const Sentence> sentences) {
  ReadabilityStats st;
  st.sentence_count = sentences.size();
  for (const auto& s : sentences) {
    for (const auto& w : readability_words(s.text)) {
      ++st.word_count;
      const std::size_t syl = count_syllables(w);
      st.syllable_count += syl;
      if (syl >= 3) ++st.complex_word_count;
    }
  }
  if (st.sentence_count == 0 || st.word_count == 0) {
    throw DegenerateInputError("readability needs at least one sentence and one word");
  }
  const double words_per_sentence = static_cast<double>(st.word_count) / static_cast<double>(st.sentence_count);
  const double syllables_per_word = static_cast<double>(st.syllable_count) / static_cast<double>(st.word_count);
  const double complex_share = static_cast<double>(st.complex_word_count) / static_cast<double>(st.word_count);
  st.grade_level = 0.39 * words_per_sentence + 11.8 * syllables_per_word - 15.59;
  st.reading_ease = 206.835 - 1.015 * words_per_sentence - 84.6 * syllables_per_word;
  st.fog_index = 0.4 * (words_per_sentence + 100.0 * complex_share);
  return st;
}

ReadabilityStats readability(const PreparedArticle& article) { return readability(article.sentences); }

// ---- Annotator agreement ---------------------------------------------------

std::size_t max_agreement(std::span<const std::size_t> picks, std::size_t tolerance) {
  std::vector<std::size_t> sorted(picks.begin(), picks.end());
  std::sort(sorted.begin(), sorted.end());
  std::size_t best = 0, lo = 0;
  for (std::size_t hi = 0; hi < sorted.size(); ++hi) {
    while (sorted[hi] - sorted[lo] > tolerance) ++lo;
    best = std::max(best, hi - lo + 1);
  }
  return best;
}

AgreementTable agreement_table(std::span<const AnnotationSet> annotations, std::span<const std::size_t> tolerances,
                               const std::map<std::string, std::size_t>* sentence_counts) {
  AgreementTable table;
  table.tolerances.assign(tolerances.begin(), tolerances.end());
  table.article_count = annotations.size();
  for (const auto& set : annotations) {
    if (set.picks.size() < 2) throw ValidationError("article '" + set.article_id + "' needs at least 2 picks");
    std::size_t limit = std::numeric_limits<std::size_t>::max();
    if (sentence_counts) {
      auto it = sentence_counts->find(set.article_id);
      if (it == sentence_counts->end()) throw ValidationError("unknown article '" + set.article_id + "'");
      limit = it->second;
    }
    for (std::size_t p : set.picks) {
      if (p < 1 || p > limit) {
        throw ValidationError("article '" + set.article_id + "': pick " + std::to_string(p) + " out of range");
      }
    }
    table.max_level = std::max(table.max_level, set.picks.size());
  }
  table.cells.assign(tolerances.size(), std::vector<std::size_t>(table.max_level, 0));
  for (std::size_t row = 0; row < tolerances.size(); ++row) {
    for (const auto& set : annotations) ++table.cells[row][max_agreement(set.picks, tolerances[row]) - 1];
  }
  return table;
}

// ---- Ratings ---------------------------------------------------------------

std::string_view rating_class_name(RatingClass c) noexcept {
  switch (c) {
    case RatingClass::TooShort: return "too-short";
    case RatingClass::Balanced: return "balanced";
    case RatingClass::TooLong: return "too-long";
  }
  return "unknown";
}

RatingClass rating_class(int rating) {
  if (rating < 1 || rating > 7) throw ValidationError("rating " + std::to_string(rating) + " outside 1..7");
  if (rating <= 3) return RatingClass::TooShort;
  if (rating == 4) return RatingClass::Balanced;
  return RatingClass::TooLong;
}

RatingHistogram rating_bins(std::span<const RatingRecord> records, double bin_width) {
  if (records.empty()) throw ValidationError("no rating records");
  if (!(bin_width > 0.0 && bin_width <= 1.0)) throw ValidationError("bin width must lie in (0, 1]");
  RatingHistogram h;
  h.bin_width = bin_width;
  h.bins = static_cast<std::size_t>(std::ceil(1.0 / bin_width - 1e-9));
  for (auto& c : h.counts) c.assign(h.bins, 0);
  for (const auto& r : records) {
    if (!(r.position >= 0.0 && r.position <= 1.0)) {
      throw ValidationError("article '" + r.article_id + "': position outside [0, 1]");
    }
    const auto cls = static_cast<std::size_t>(rating_class(r.rating));
    const auto bin = std::min(h.bins - 1, static_cast<std::size_t>(std::floor(r.position / bin_width + 1e-9)));
    ++h.counts[cls][bin];
    ++h.totals[cls];
  }
  for (std::size_t c = 0; c < 3; ++c) {
    h.fractions[c].assign(h.bins, 0.0);
    if (h.totals[c] == 0) continue;
    for (std::size_t b = 0; b < h.bins; ++b) {
      h.fractions[c][b] = static_cast<double>(h.counts[c][b]) / static_cast<double>(h.totals[c]);
    }
  }
  return h;
}

// ---- Significance tests ----------------------------------------------------

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

void shuffle(std::span<double> values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::swap(values[i - 1], values[uniform_below(rng, i)]);
  }
}

double anova_f(const std::vector<std::vector<double>>& groups) {
  if (groups.size() < 2) throw ValidationError("ANOVA needs at least 2 groups");
  std::vector<double> pooled;
  std::vector<std::size_t> sizes;
  for (const auto& g : groups) {
    if (g.size() < 2) throw ValidationError("every ANOVA group needs at least 2 values");
    pooled.insert(pooled.end(), g.begin(), g.end());
    sizes.push_back(g.size());
  }
  const auto [within, between] = anova_sums(pooled, sizes);
  return f_from_sums(within, between, groups.size(), pooled.size());
}

AnovaResult one_way_anova(const std::vector<std::vector<double>>& groups, Rng& rng, std::size_t permutations) {
  AnovaResult res;
  res.f = anova_f(groups);
  std::vector<double> pooled;
  std::vector<std::size_t> sizes;
  for (const auto& g : groups) {
    pooled.insert(pooled.end(), g.begin(), g.end());
    sizes.push_back(g.size());
  }
  res.df_between = groups.size() - 1;
  res.df_within = pooled.size() - groups.size();

  std::size_t hits = 0;
  for (std::size_t i = 0; i < permutations; ++i) {
    shuffle(pooled, rng);
    const auto [within, between] = anova_sums(pooled, sizes);
    const double f = within == 0.0 ? std::numeric_limits<double>::infinity()
                                   : (between / static_cast<double>(res.df_between)) /
                                         (within / static_cast<double>(res.df_within));
    if (at_least(f, res.f)) ++hits;
  }
  res.p = static_cast<double>(hits + 1) / static_cast<double>(permutations + 1);
  return res;
}

double student_t(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) throw ValidationError("t-test needs at least 2 values per sample");
  return t_from(a, b);
}

TTestResult t_test(std::span<const double> a, std::span<const double> b, Rng& rng, std::size_t permutations) {
  TTestResult res;
  res.t = student_t(a, b);
  res.df = a.size() + b.size() - 2;
  if (res.t == 0.0) {
    res.p = 1.0;
    return res;
  }
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  const std::span<const double> all(pooled);
  const double observed = std::abs(res.t);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < permutations; ++i) {
    shuffle(pooled, rng);
    double t;
    try {
      t = t_from(all.first(a.size()), all.subspan(a.size()));
    } catch (const UndefinedStatisticError&) {
      t = std::numeric_limits<double>::infinity();
    }
    if (at_least(std::abs(t), observed)) ++hits;
  }
  res.p = static_cast<double>(hits + 1) / static_cast<double>(permutations + 1);
  return res;
}

std::vector<double> average_ranks(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(x.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && x[order[j + 1]] == x[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ValidationError("spearman inputs differ in length");
  if (x.size() < 3) throw ValidationError("spearman needs at least 3 points");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double mx = mean_of(rx), my = mean_of(ry);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) throw UndefinedStatisticError("spearman is undefined for constant input");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

// ---- Input files -----------------------------------------------------------

std::vector<RatingRecord> parse_ratings(const std::string& text, const std::string& source) {
  std::vector<RatingRecord> out;
  bool first = true;
  for_each_line(text, [&](std::string_view line, std::size_t lineno) {
    const auto fields = split_fields(line);
    const bool header = first && !fields.empty() && fields[0] == "article_id";
    first = false;
    if (header) return;
    if (fields.size() != 4) throw ParseError(source, lineno, "expected article_id,method,rating,break_position_fraction");
    RatingRecord r;
    r.article_id = std::string(fields[0]);
    r.method = std::string(fields[1]);
    if (r.article_id.empty() || r.method.empty()) throw ParseError(source, lineno, "empty article id or method");
    if (!parse_number(fields[2], r.rating) || r.rating < 1 || r.rating > 7) {
      throw ParseError(source, lineno, "rating must be an integer in 1..7");
    }
    if (!parse_number(fields[3], r.position) || !(r.position >= 0.0 && r.position <= 1.0)) {
      throw ParseError(source, lineno, "break position must be a number in [0, 1]");
    }
    out.push_back(std::move(r));
  });
  return out;
}

std::vector<RatingRecord> load_ratings(const std::filesystem::path& path) {
  return parse_ratings(read_text(path), path.string());
}

std::vector<AnnotationSet> parse_annotations(const std::string& text, const std::string& source) {
  std::vector<AnnotationSet> out;
  bool first = true;
  for_each_line(text, [&](std::string_view line, std::size_t lineno) {
    const auto fields = split_fields(line);
    const bool header = first && !fields.empty() && fields[0] == "article_id";
    first = false;
    if (header) return;
    if (fields.size() < 3) throw ParseError(source, lineno, "expected article_id followed by at least 2 picks");
    AnnotationSet set;
    set.article_id = std::string(fields[0]);
    if (set.article_id.empty()) throw ParseError(source, lineno, "empty article id");
    for (std::size_t i = 1; i < fields.size(); ++i) {
      std::size_t pick = 0;
      if (!parse_number(fields[i], pick) || pick == 0) {
        throw ParseError(source, lineno, "pick " + std::to_string(i) + " is not a positive integer");
      }
      set.picks.push_back(pick);
    }
    out.push_back(std::move(set));
  });
  return out;
}

std::vector<AnnotationSet> load_annotations(const std::filesystem::path& path) {
  return parse_annotations(read_text(path), path.string());
}

}  // namespace paginator
