#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paginator/text.hpp"

namespace paginator {

// ---- Readability -----------------------------------------------------------

struct ReadabilityStats {
  double grade_level = 0.0;   // Flesch-Kincaid
  double reading_ease = 0.0;  // Flesch
  double fog_index = 0.0;     // Gunning Fog
  std::size_t sentence_count = 0;
  std::size_t word_count = 0;
  std::size_t syllable_count = 0;
  std::size_t complex_word_count = 0;  // three or more syllables
};

// Rule-based count: vowel groups (a e i o u, and y after the first letter),
// minus a silent final -e (kept for consonant + "le"), minus a silent -ed
// (kept after t/d) or -es (kept after s, x, z, ch, sh, c, g). Words of three
// letters or fewer, and words with no ASCII letters, count one syllable.
std::size_t count_syllables(std::string_view word);

// Whitespace-separated pieces that contain a letter.
std::vector<std::string> readability_words(std::string_view sentence);

// Throws DegenerateInputError without sentences or words.
ReadabilityStats readability(std::span<const Sentence> sentences);
ReadabilityStats readability(const PreparedArticle& article);

// ---- Annotator agreement ---------------------------------------------------

struct AnnotationSet {
  std::string article_id;
  std::vector<std::size_t> picks;  // 1-based sentence indices, one per annotator
};

// Size of the largest subset of picks whose spread (max - min) is <= tolerance.
std::size_t max_agreement(std::span<const std::size_t> picks, std::size_t tolerance);

struct AgreementTable {
  std::vector<std::size_t> tolerances;
  std::size_t max_level = 0;
  // cells[row][level - 1]: articles whose best agreement at tolerances[row]
  // is exactly `level`; level 1 means no two annotators agree.
  std::vector<std::vector<std::size_t>> cells;
  std::size_t article_count = 0;

  std::size_t count(std::size_t row, std::size_t level) const { return cells.at(row).at(level - 1); }
};

// Every set needs >= 2 picks, all >= 1. With `sentence_counts`, picks are also
// checked against the article length. Throws ValidationError.
AgreementTable agreement_table(std::span<const AnnotationSet> annotations,
                               std::span<const std::size_t> tolerances,
                               const std::map<std::string, std::size_t>* sentence_counts = nullptr);

// ---- Ratings ---------------------------------------------------------------

enum class RatingClass { TooShort, Balanced, TooLong };

std::string_view rating_class_name(RatingClass c) noexcept;
// 1-3 too short, 4 balanced, 5-7 too long. Throws ValidationError outside 1..7.
RatingClass rating_class(int rating);

struct RatingRecord {
  std::string article_id;
  std::string method;
  int rating = 0;
  double position = 0.0;  // break position as a fraction of the article
};

struct RatingHistogram {
  double bin_width = 0.05;
  std::size_t bins = 0;
  std::array<std::size_t, 3> totals{};
  std::array<std::vector<std::size_t>, 3> counts;
  std::array<std::vector<double>, 3> fractions;  // per class, sums to 1 when populated

  const std::vector<double>& of(RatingClass c) const { return fractions[static_cast<std::size_t>(c)]; }
};

RatingHistogram rating_bins(std::span<const RatingRecord> records, double bin_width = 0.05);

// ---- Significance tests ----------------------------------------------------

// Permutation tests draw from an explicitly passed engine.
using Rng = std::mt19937_64;
inline constexpr std::size_t kDefaultPermutations = 10000;

// Unbiased integer in [0, n) from raw engine output.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);
void shuffle(std::span<double> values, Rng& rng);

struct AnovaResult {
  double f = 0.0;
  std::size_t df_between = 0;
  std::size_t df_within = 0;
  double p = 1.0;
};

// Classical one-way F; +inf when only the within-group variance is zero.
// Throws UndefinedStatisticError when both variances are zero.
double anova_f(const std::vector<std::vector<double>>& groups);

// p = (1 + #{F_perm >= F}) / (1 + permutations).
AnovaResult one_way_anova(const std::vector<std::vector<double>>& groups, Rng& rng,
                          std::size_t permutations = kDefaultPermutations);

struct TTestResult {
  double t = 0.0;
  std::size_t df = 0;
  double p = 1.0;
};

// Two-sample Student's t with pooled variance.
double student_t(std::span<const double> a, std::span<const double> b);

// Two-sided permutation p-value on |t|.
TTestResult t_test(std::span<const double> a, std::span<const double> b, Rng& rng,
                   std::size_t permutations = kDefaultPermutations);

// 1-based ranks, ties share their average rank.
std::vector<double> average_ranks(std::span<const double> x);

// Pearson correlation of average ranks. Throws ValidationError on length
// mismatch or fewer than 3 points, UndefinedStatisticError on constant input.
double spearman(std::span<const double> x, std::span<const double> y);

// ---- Input files -----------------------------------------------------------

// `article_id,method,rating,break_position_fraction`; an optional header line
// starting with "article_id," is skipped.
std::vector<RatingRecord> parse_ratings(const std::string& text, const std::string& source = "<memory>");
std::vector<RatingRecord> load_ratings(const std::filesystem::path& path);

// `article_id,pick1,pick2,...`
std::vector<AnnotationSet> parse_annotations(const std::string& text, const std::string& source = "<memory>");
std::vector<AnnotationSet> load_annotations(const std::filesystem::path& path);

}  // namespace paginator
