#include "paginator/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "paginator/error.hpp"

namespace paginator {

namespace {

using Vec = std::vector<double>;

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// Uniform in [-1, 1) from raw engine output; std distributions are not
// reproducible across standard libraries.
double uniform_pm1(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

Vec random_vector(std::size_t n, std::mt19937_64& rng) {
  Vec v(n);
  for (auto& x : v) x = uniform_pm1(rng);
  return v;
}

// Modified Gram-Schmidt, two passes. Columns that collapse (numerically in
// the span of earlier ones) are replaced by fresh random directions.
void orthonormalize(std::vector<Vec>& cols, std::mt19937_64& rng) {
  const std::size_t n = cols.empty() ? 0 : cols.front().size();
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (int attempt = 0;; ++attempt) {
      Vec& v = cols[j];
      const double before = norm(v);
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < j; ++i) {
          const double c = dot(cols[i], v);
          for (std::size_t t = 0; t < n; ++t) v[t] -= c * cols[i][t];
        }
      }
      const double after = norm(v);
      if (after > 1e-10 * before && after > 0.0) {
        for (auto& x : v) x /= after;
        break;
      }
      if (attempt > 8) throw NumericalError("cannot complete orthonormal basis", after);
      v = random_vector(n, rng);
    }
  }
}

void apply_gram(const SentenceWordMatrix& mat, const Vec& x, Vec& tmp, Vec& out) {
  mat.multiply(x, tmp);
  mat.multiply_transposed(tmp, out);
}

}  // namespace

SentenceWordMatrix::SentenceWordMatrix(std::size_t rows, std::vector<std::string> vocab,
                                       std::vector<std::vector<Entry>> row_entries)
    : vocab_(std::move(vocab)), rows_(std::move(row_entries)) {
  rows_.resize(rows);
  for (std::size_t j = 0; j < vocab_.size(); ++j) index_.emplace(vocab_[j], j);
  for (const auto& r : rows_) {
    for (const auto& e : r) {
      if (e.col >= vocab_.size()) throw ValidationError("matrix entry column out of range");
      if (e.count < 0.0) throw ValidationError("matrix entries must be non-negative");
    }
  }
}

long SentenceWordMatrix::column(const std::string& word) const {
  auto it = index_.find(word);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

double SentenceWordMatrix::at(std::size_t i, std::size_t j) const {
  double v = 0.0;
  for (const auto& e : rows_.at(i)) {
    if (e.col == j) v += e.count;
  }
  return v;
}

std::size_t SentenceWordMatrix::nonzeros() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

void SentenceWordMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    double s = 0.0;
    for (const auto& e : rows_[i]) s += e.count * x[e.col];
    y[i] = s;
  }
}

void SentenceWordMatrix::multiply_transposed(std::span<const double> x, std::span<double> y) const {
  std::fill(y.begin(), y.end(), 0.0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (const auto& e : rows_[i]) y[e.col] += e.count * x[i];
  }
}

SentenceWordMatrix SentenceWordMatrix::scaled(double factor) const {
  auto rows = rows_;
  for (auto& r : rows) {
    for (auto& e : r) e.count *= factor;
  }
  const std::size_t count = rows.size();
  return SentenceWordMatrix(count, vocab_, std::move(rows));
}

SentenceWordMatrix build_matrix(std::span<const TokenizedSentence> sentences) {
  std::set<std::string> words;
  for (const auto& s : sentences) words.insert(s.tokens.begin(), s.tokens.end());
  if (words.empty()) throw DegenerateInputError("sentence-word matrix would be empty: no tokens");
  std::vector<std::string> vocab(words.begin(), words.end());
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t j = 0; j < vocab.size(); ++j) index.emplace(vocab[j], j);

  std::vector<std::vector<SentenceWordMatrix::Entry>> rows(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    std::map<std::size_t, double> counts;
    for (const auto& t : sentences[i].tokens) counts[index.at(t)] += 1.0;
    for (const auto& [col, c] : counts) rows[i].push_back({col, c});
  }
  return SentenceWordMatrix(sentences.size(), std::move(vocab), std::move(rows));
}

SentenceWordMatrix matrix_from_dense(const std::vector<std::vector<double>>& dense,
                                     std::vector<std::string> vocab) {
  const std::size_t n = dense.empty() ? 0 : dense.front().size();
  if (vocab.empty()) {
    for (std::size_t j = 0; j < n; ++j) vocab.push_back("w" + std::to_string(j));
  }
  if (vocab.size() != n) throw ValidationError("vocabulary size does not match column count");
  std::vector<std::vector<SentenceWordMatrix::Entry>> rows(dense.size());
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i].size() != n) throw ValidationError("ragged dense matrix");
    for (std::size_t j = 0; j < n; ++j) {
      if (dense[i][j] != 0.0) rows[i].push_back({j, dense[i][j]});
    }
  }
  return SentenceWordMatrix(dense.size(), std::move(vocab), std::move(rows));
}

std::size_t TruncatedSVD::rank() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(singular_values.begin(), singular_values.end(), [](double s) { return s > 0.0; }));
}

void symmetric_eigen(std::vector<std::vector<double>> a, std::vector<double>& values,
                     std::vector<std::vector<double>>& vectors) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0, diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      diag += a[i][i] * a[i][i];
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    }
    if (off <= 1e-32 * diag || off == 0.0) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a[x][x] > a[y][y]; });
  values.assign(n, 0.0);
  vectors.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    values[j] = a[order[j]][order[j]];
    for (std::size_t i = 0; i < n; ++i) vectors[i][j] = v[i][order[j]];
  }
}

TruncatedSVD truncated_svd(const SentenceWordMatrix& mat, std::size_t k, const SvdOptions& opts) {
  if (k == 0) throw UsageError("SVD rank must be positive");
  if (mat.nonzeros() == 0) throw DegenerateInputError("SVD of an all-zero matrix");
  const std::size_t n = mat.cols();
  const std::size_t m = mat.rows();
  const std::size_t block = std::min(n, k + 8);
  const std::size_t wanted = std::min(k, block);

  std::mt19937_64 rng(opts.seed);
  std::vector<Vec> q(block);
  for (auto& col : q) col = random_vector(n, rng);
  orthonormalize(q, rng);

  std::vector<Vec> aq(block, Vec(n));
  Vec tmp(m);
  std::vector<double> theta, prev_theta;
  std::vector<std::vector<double>> ritz;
  std::vector<Vec> y(block, Vec(n)), ay(block, Vec(n));
  double worst = 0.0;
  bool converged = false;
  std::size_t iter = 0;

  while (iter < opts.max_iterations) {
    ++iter;
    for (std::size_t j = 0; j < block; ++j) apply_gram(mat, q[j], tmp, aq[j]);

    std::vector<std::vector<double>> h(block, std::vector<double>(block));
    for (std::size_t i = 0; i < block; ++i) {
      for (std::size_t j = i; j < block; ++j) {
        const double v = 0.5 * (dot(q[i], aq[j]) + dot(q[j], aq[i]));
        h[i][j] = h[j][i] = v;
      }
    }
    symmetric_eigen(std::move(h), theta, ritz);

    for (std::size_t j = 0; j < block; ++j) {
      std::fill(y[j].begin(), y[j].end(), 0.0);
      std::fill(ay[j].begin(), ay[j].end(), 0.0);
      for (std::size_t i = 0; i < block; ++i) {
        const double c = ritz[i][j];
        for (std::size_t t = 0; t < n; ++t) {
          y[j][t] += c * q[i][t];
          ay[j][t] += c * aq[i][t];
        }
      }
    }

    const double scale = std::max(theta.front(), std::numeric_limits<double>::min());
    worst = 0.0;
    bool ok = prev_theta.size() == theta.size();
    for (std::size_t j = 0; j < wanted; ++j) {
      Vec r = ay[j];
      for (std::size_t t = 0; t < n; ++t) r[t] -= theta[j] * y[j][t];
      const double rel = norm(r) / scale;
      worst = std::max(worst, rel);
      if (rel > opts.tolerance) ok = false;
      if (ok && std::abs(theta[j] - prev_theta[j]) > opts.tolerance * scale) ok = false;
    }
    prev_theta = theta;
    if (ok) {
      converged = true;
      break;
    }
    q = ay;
    orthonormalize(q, rng);
  }
  if (!converged) throw NumericalError("truncated SVD did not converge", worst);

  TruncatedSVD out;
  out.iterations = iter;
  out.residual = worst;
  out.singular_values.assign(k, 0.0);
  out.right_vectors.assign(k, Vec(n, 0.0));
  Vec mv(m);
  double top = 0.0;
  for (std::size_t j = 0; j < wanted; ++j) {
    const double len = norm(y[j]);
    Vec v = y[j];
    for (auto& x : v) x /= len;
    mat.multiply(v, mv);
    const double sigma = norm(mv);
    if (j == 0) top = sigma;
    if (sigma <= 1e-10 * top) continue;  // numerical null space
    out.singular_values[j] = sigma;
    out.right_vectors[j] = std::move(v);
  }
  // Ritz order can disagree with ||Mv|| order in the last bits for tied values.
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return out.singular_values[x] > out.singular_values[y]; });
  TruncatedSVD sorted = out;
  for (std::size_t j = 0; j < k; ++j) {
    sorted.singular_values[j] = out.singular_values[order[j]];
    sorted.right_vectors[j] = out.right_vectors[order[j]];
  }
  return sorted;
}

double KeywordWeights::retained_weight(const std::string& word) const {
  if (std::find(retained.begin(), retained.end(), word) == retained.end()) return 0.0;
  auto it = weights.find(word);
  return it == weights.end() ? 0.0 : it->second;
}

double KeywordWeights::retained_total() const {
  double s = 0.0;
  for (const auto& w : retained) s += weights.at(w);
  return s;
}

KeywordWeights KeywordWeights::from_map(std::map<std::string, double> weights, std::size_t cap) {
  KeywordWeights kw;
  for (auto& [word, w] : weights) {
    if (!(w > 0.0)) w = 0.0;
    if (w > 0.0) kw.retained.push_back(word);
  }
  kw.weights = std::move(weights);
  std::stable_sort(kw.retained.begin(), kw.retained.end(), [&](const std::string& a, const std::string& b) {
    const double wa = kw.weights.at(a), wb = kw.weights.at(b);
    if (wa != wb) return wa > wb;
    return a < b;
  });
  if (kw.retained.size() > cap) kw.retained.resize(cap);
  return kw;
}

std::vector<double> sign_normalized(std::span<const double> v) {
  std::vector<double> out(v.begin(), v.end());
  const double sum = std::accumulate(out.begin(), out.end(), 0.0);
  bool flip = sum < 0.0;
  if (sum == 0.0) {
    auto it = std::find_if(out.begin(), out.end(), [](double x) { return x != 0.0; });
    flip = it != out.end() && *it < 0.0;
  }
  if (flip) {
    for (auto& x : out) x = -x;
  }
  return out;
}

std::vector<double> master_vector(const TruncatedSVD& svd) {
  const std::size_t n = svd.right_vectors.empty() ? 0 : svd.right_vectors.front().size();
  std::vector<double> master(n, 0.0);
  for (std::size_t i = 0; i < svd.singular_values.size(); ++i) {
    const double lambda = svd.singular_values[i];
    if (lambda == 0.0) continue;
    const auto xi = sign_normalized(svd.right_vectors[i]);
    for (std::size_t j = 0; j < n; ++j) master[j] += lambda * xi[j];
  }
  // The 1/4 factor is fixed; it does not track k.
  for (auto& x : master) x *= 0.25;
  return master;
}

KeywordWeights keyword_weights(const TruncatedSVD& svd, const std::vector<std::string>& vocab, std::size_t cap) {
  const auto master = master_vector(svd);
  if (!master.empty() && master.size() != vocab.size()) {
    throw ValidationError("vocabulary size does not match singular vector length");
  }
  std::map<std::string, double> weights;
  for (std::size_t j = 0; j < vocab.size(); ++j) weights[vocab[j]] = master.empty() ? 0.0 : master[j];
  return KeywordWeights::from_map(std::move(weights), cap);
}

}  // namespace paginator
