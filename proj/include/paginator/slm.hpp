#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>

#include "paginator/text.hpp"
#include "paginator/types.hpp"

namespace paginator {

inline constexpr double kFallbackMu = 2500.0;
inline constexpr double kDefaultJumpSigma = 2.0;

// Word counts of a document or of a seen prefix. `total` is always the sum of
// `freqs`.
class DocModel {
 public:
  DocModel() = default;

  void add(const std::string& word, long long count = 1);
  void merge(const DocModel& other);

  long long count(const std::string& word) const;
  long long total() const noexcept { return total_; }
  const std::map<std::string, long long>& freqs() const noexcept { return freqs_; }

  bool operator==(const DocModel&) const = default;

 private:
  std::map<std::string, long long> freqs_;
  long long total_ = 0;
};

// A prefix of an article is modelled exactly like a document.
using PrefixModel = DocModel;

DocModel doc_model(std::span<const std::string> tokens);
DocModel doc_model(const PreparedArticle& article);
DocModel doc_model(const PreparedCorpus& corpus);

// Pooled p(w|s) over all documents. Throws DegenerateInputError when every
// document is empty.
std::map<std::string, double> subject_background(std::span<const DocModel> docs);

struct MuEstimate {
  double value = kFallbackMu;
  bool fallback = true;
};

// Moment estimate of the Dirichlet prior. Words with background probability 0
// or 1 and empty documents are left out of the sums; a zero denominator
// yields the fallback.
MuEstimate estimate_mu(std::span<const DocModel> docs, const std::map<std::string, double>& background);

struct SubjectModel {
  std::map<std::string, double> background;
  double mu = kFallbackMu;
  bool mu_fallback = false;
  std::size_t doc_count = 0;

  std::size_t vocab_size() const noexcept { return background.size(); }
  bool contains(const std::string& word) const { return background.count(word) > 0; }
  // p(w|s), 0 outside the vocabulary.
  double prob(const std::string& word) const;

  // Throws ValidationError unless mu > 0 and the background sums to 1.
  void validate() const;

  static SubjectModel build(std::span<const DocModel> docs);
};

// Every article of every corpus counts as one document.
SubjectModel build_subject_model(std::span<const PreparedCorpus> corpuses);

// Dirichlet-smoothed (f + mu p) / (T + mu). Throws OutOfVocabularyError.
double smoothed_prob(const std::string& word, const DocModel& model, const SubjectModel& subject);

// Sum over the distinct words of `ideal` of q_ideal * ln(q_ideal / q_seen).
// Words outside the subject vocabulary are skipped and counted in `dropped`.
double kl_divergence(const DocModel& ideal, const PrefixModel& seen, const SubjectModel& subject,
                     std::size_t* dropped = nullptr);

// values[i] = KL(ideal || first i+1 sentences). Prefix tokens outside the
// subject vocabulary are not counted. Throws PreconditionError for m < 3.
ScoreCurve kl_curve(std::span<const TokenizedSentence> sentences, const DocModel& ideal,
                    const SubjectModel& subject, Method method = Method::SlmArticle);

// First delta (from the second on) at least `sigma` population standard
// deviations from the mean delta. Falls back to the largest deviation, or to
// sentence 2 when the deltas do not vary.
BreakPoint jump_break(const ScoreCurve& curve, double sigma = kDefaultJumpSigma);

BreakPoint predict_slm(const PreparedArticle& article, const DocModel& ideal, const SubjectModel& subject,
                       Method method, double sigma = kDefaultJumpSigma);

BreakPoint predict_slm(const PreparedArticle& article, Context context, const PreparedCorpus* corpus,
                       const SubjectModel& subject, double sigma = kDefaultJumpSigma);

}  // namespace paginator
