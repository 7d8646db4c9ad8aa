#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paginator/baselines.hpp"
#include "paginator/corpus.hpp"
#include "paginator/evalkit.hpp"
#include "paginator/linalg.hpp"
#include "paginator/slm.hpp"
#include "paginator/types.hpp"

namespace paginator::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Every field has a flag of the same name (underscores become dashes) and a
// key in the PAGINATOR_CONFIG file, spelled with either separator.
struct RunConfig {
  std::string method;
  std::string subject_dir;
  std::string corpus;
  std::string article;
  std::string nouns_dir;
  std::string ratings;
  std::string annotations;
  std::string tolerances = "0,1,2,3";
  std::string out;
  std::size_t min_articles = kDefaultMinArticles;
  std::size_t svd_k = kDefaultSvdRank;
  std::size_t keyword_cap = kDefaultKeywordCap;
  double twenty_percent_fraction = kDefaultTwentyPercentFraction;
  double jump_sigma = kDefaultJumpSigma;
  std::uint64_t seed = 0;
  std::size_t permutations = kDefaultPermutations;

  // Throws UsageError on out-of-range values.
  void validate() const;
};

// `key = value` lines; blank lines and lines starting with '#' are ignored.
std::map<std::string, std::string> parse_config(const std::string& text, const std::string& source = "<memory>");
void apply_config(RunConfig& cfg, const std::map<std::string, std::string>& values);

// Shortest round-trip decimal form.
std::string format_number(double v);

struct PredictionRow {
  std::string article_id;
  std::string corpus_id;
  BreakPoint breakpoint;
};

// Library entry points behind the commands; each returns exactly what the
// command prints.
std::string ingest_report(const SubjectSet& subject);
std::vector<PredictionRow> predict(const SubjectSet& subject, Method method, const RunConfig& cfg,
                                   std::ostream* warnings = nullptr);
std::string format_predictions(const std::vector<PredictionRow>& rows);
ScoreCurve curve_for(const SubjectSet& subject, Method method, const std::string& article_id, const RunConfig& cfg);
std::string format_curve(const ScoreCurve& curve);
std::string stats_report(const SubjectSet& subject, const RunConfig& cfg);
std::string eval_report(const RunConfig& cfg, const SubjectSet* subject);

// Full command line, argv[0] included. `config_path` is the file named by
// PAGINATOR_CONFIG, if any; flags override its values.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::filesystem::path>& config_path = std::nullopt);

// Reads PAGINATOR_CONFIG from the process environment.
int main(int argc, char** argv);

}  // namespace paginator::cli
