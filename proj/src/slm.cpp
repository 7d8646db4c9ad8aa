#include "paginator/slm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "paginator/error.hpp"

namespace paginator {

void DocModel::add(const std::string& word, long long count) {
  if (count < 0) throw ValidationError("negative word count");
  if (count == 0) return;
  freqs_[word] += count;
  total_ += count;
}

void DocModel::merge(const DocModel& other) {
  for (const auto& [w, c] : other.freqs_) add(w, c);
}

long long DocModel::count(const std::string& word) const {
  auto it = freqs_.find(word);
  return it == freqs_.end() ? 0 : it->second;
}

DocModel doc_model(std::span<const std::string> tokens) {
  DocModel d;
  for (const auto& t : tokens) d.add(t);
  return d;
}

DocModel doc_model(const PreparedArticle& article) {
  DocModel d;
  for (const auto& s : article.tokens) {
    for (const auto& t : s.tokens) d.add(t);
  }
  return d;
}

DocModel doc_model(const PreparedCorpus& corpus) {
  DocModel d;
  for (const auto& a : corpus.articles) d.merge(doc_model(a));
  return d;
}

std::map<std::string, double> subject_background(std::span<const DocModel> docs) {
  DocModel pooled;
  for (const auto& d : docs) pooled.merge(d);
  if (pooled.total() == 0) throw DegenerateInputError("subject background needs at least one token");
  std::map<std::string, double> background;
  const double total = static_cast<double>(pooled.total());
  for (const auto& [w, c] : pooled.freqs()) background.emplace(w, static_cast<double>(c) / total);
  return background;
}

MuEstimate estimate_mu(std::span<const DocModel> docs, const std::map<std::string, double>& background) {
  // Per word: the ratio terms of documents that contain it; documents that
  // do not contain it each contribute m^2.
  std::map<std::string, double> present_sq;
  std::map<std::string, std::size_t> present_docs;
  std::size_t nonempty = 0;
  for (const auto& d : docs) {
    if (d.total() == 0) continue;
    ++nonempty;
    const double t = static_cast<double>(d.total());
    for (const auto& [w, c] : d.freqs()) {
      auto bg = background.find(w);
      if (bg == background.end()) continue;
      const double diff = static_cast<double>(c) / t - bg->second;
      present_sq[w] += diff * diff;
      ++present_docs[w];
    }
  }

  double numerator = 0.0, denominator = 0.0;
  for (const auto& [w, m] : background) {
    if (!(m > 0.0 && m < 1.0)) continue;
    const auto it = present_sq.find(w);
    const double inside = it == present_sq.end() ? 0.0 : it->second;
    const auto n_present = it == present_sq.end() ? 0 : present_docs[w];
    const double b = inside + static_cast<double>(nonempty - n_present) * m * m;
    const double v = m * (1.0 - m);
    numerator += b / v;
    denominator += (b * b) / (v * v);
  }
  if (!(denominator > 0.0)) return {kFallbackMu, true};
  return {numerator / denominator, false};
}

double SubjectModel::prob(const std::string& word) const {
  auto it = background.find(word);
  return it == background.end() ? 0.0 : it->second;
}

void SubjectModel::validate() const {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw ValidationError("smoothing constant must be positive");
  double sum = 0.0;
  for (const auto& [w, p] : background) {
    if (!(p >= 0.0)) throw ValidationError("negative background probability for " + w);
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ValidationError("background probabilities do not sum to 1");
}

SubjectModel SubjectModel::build(std::span<const DocModel> docs) {
  SubjectModel s;
  s.background = subject_background(docs);
  const MuEstimate mu = estimate_mu(docs, s.background);
  s.mu = mu.value;
  s.mu_fallback = mu.fallback;
  s.doc_count = docs.size();
  return s;
}

SubjectModel build_subject_model(std::span<const PreparedCorpus> corpuses) {
  std::vector<DocModel> docs;
  for (const auto& c : corpuses) {
    for (const auto& a : c.articles) docs.push_back(doc_model(a));
  }
  return SubjectModel::build(docs);
}

double smoothed_prob(const std::string& word, const DocModel& model, const SubjectModel& subject) {
  auto it = subject.background.find(word);
  if (it == subject.background.end()) throw OutOfVocabularyError(word);
  return (static_cast<double>(model.count(word)) + subject.mu * it->second) /
         (static_cast<double>(model.total()) + subject.mu);
}

double kl_divergence(const DocModel& ideal, const PrefixModel& seen, const SubjectModel& subject,
                     std::size_t* dropped) {
  const double mu = subject.mu;
  const double ideal_denominator = static_cast<double>(ideal.total()) + mu;
  const double seen_denominator = static_cast<double>(seen.total()) + mu;
  double kl = 0.0;
  std::size_t skipped = 0;
  for (const auto& [w, f] : ideal.freqs()) {
    auto bg = subject.background.find(w);
    if (bg == subject.background.end()) {
      ++skipped;
      continue;
    }
    const double prior = mu * bg->second;
    const double q_ideal = (static_cast<double>(f) + prior) / ideal_denominator;
    const double q_seen = (static_cast<double>(seen.count(w)) + prior) / seen_denominator;
    kl += std::log(q_ideal / q_seen) * q_ideal;
  }
  if (dropped) *dropped = skipped;
  return kl;
}

ScoreCurve kl_curve(std::span<const TokenizedSentence> sentences, const DocModel& ideal,
                    const SubjectModel& subject, Method method) {
  if (sentences.size() < 3) {
    throw PreconditionError("KL curve needs at least 3 sentences, got " + std::to_string(sentences.size()));
  }
  ScoreCurve curve;
  curve.method = method;
  curve.values.reserve(sentences.size());
  PrefixModel prefix;
  std::size_t oov_tokens = 0, oov_ideal = 0;
  for (const auto& s : sentences) {
    for (const auto& t : s.tokens) {
      if (subject.contains(t)) {
        prefix.add(t);
      } else {
        ++oov_tokens;
      }
    }
    curve.values.push_back(kl_divergence(ideal, prefix, subject, &oov_ideal));
  }
  curve.diagnostics["oov_prefix_tokens"] = static_cast<double>(oov_tokens);
  curve.diagnostics["oov_ideal_words"] = static_cast<double>(oov_ideal);
  return curve;
}

BreakPoint jump_break(const ScoreCurve& curve, double sigma) {
  const std::size_t m = curve.values.size();
  if (m < 3) throw PreconditionError("jump detection needs at least 3 sentences, got " + std::to_string(m));
  if (!(sigma > 0.0)) throw UsageError("jump sigma must be positive");

  // deltas[i - 1] is the change from prefix i to prefix i + 1.
  std::vector<double> deltas(m - 1);
  for (std::size_t i = 0; i + 1 < m; ++i) deltas[i] = curve.values[i + 1] - curve.values[i];
  const double n = static_cast<double>(deltas.size());
  const double mean = std::accumulate(deltas.begin(), deltas.end(), 0.0) / n;
  double var = 0.0, scale = 0.0;
  for (double d : deltas) {
    var += (d - mean) * (d - mean);
    scale = std::max(scale, std::abs(d));
  }
  const double sd = std::sqrt(var / n);

  BreakPoint bp;
  bp.method = curve.method;
  bp.diagnostics["delta_mean"] = mean;
  bp.diagnostics["delta_sd"] = sd;
  if (scale == 0.0 || sd <= 1e-12 * scale) {
    bp.fallback = true;
    bp.sentence_index = 2;
    bp.diagnostics["zero_variance"] = 1.0;
    return bp;
  }

  // Ties within rounding of the threshold count as reaching it.
  const double threshold = sigma * sd * (1.0 - 1e-12);
  std::size_t best = 2;
  double best_dev = -1.0;
  for (std::size_t i = 2; i <= m - 1; ++i) {
    const double dev = std::abs(deltas[i - 1] - mean);
    if (dev >= threshold) {
      bp.sentence_index = i;
      bp.diagnostics["deviation"] = dev;
      return bp;
    }
    if (dev > best_dev) {
      best_dev = dev;
      best = i;
    }
  }
  bp.fallback = true;
  bp.sentence_index = best;
  bp.diagnostics["deviation"] = best_dev;
  return bp;
}

BreakPoint predict_slm(const PreparedArticle& article, const DocModel& ideal, const SubjectModel& subject,
                       Method method, double sigma) {
  const ScoreCurve curve = kl_curve(article.tokens, ideal, subject, method);
  BreakPoint bp = jump_break(curve, sigma);
  bp.article_id = article.id;
  bp.diagnostics.insert(curve.diagnostics.begin(), curve.diagnostics.end());
  bp.diagnostics["mu"] = subject.mu;
  bp.diagnostics["mu_fallback"] = subject.mu_fallback ? 1.0 : 0.0;
  return bp;
}

BreakPoint predict_slm(const PreparedArticle& article, Context context, const PreparedCorpus* corpus,
                       const SubjectModel& subject, double sigma) {
  if (context == Context::Article) return predict_slm(article, doc_model(article), subject, Method::SlmArticle, sigma);
  if (corpus == nullptr) throw UsageError("corpus context requires a corpus");
  if (!corpus->accepted) throw PreconditionError("corpus '" + corpus->id + "' is not accepted");
  return predict_slm(article, doc_model(*corpus), subject, Method::SlmCorpus, sigma);
}

}  // namespace paginator
