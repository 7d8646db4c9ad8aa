#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "paginator/text.hpp"

namespace paginator {

inline constexpr std::size_t kDefaultSvdRank = 4;
inline constexpr std::size_t kDefaultKeywordCap = 500;

// Sparse m x n count matrix: one row per sentence, one column per word.
// Columns follow lexicographic word order.
class SentenceWordMatrix {
 public:
  struct Entry {
    std::size_t col;
    double count;
  };

  SentenceWordMatrix(std::size_t rows, std::vector<std::string> vocab,
                     std::vector<std::vector<Entry>> row_entries);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return vocab_.size(); }
  const std::vector<std::string>& vocab() const noexcept { return vocab_; }
  std::span<const Entry> row(std::size_t i) const { return rows_.at(i); }

  // Column index of `word`, or -1.
  long column(const std::string& word) const;
  double at(std::size_t i, std::size_t j) const;
  std::size_t nonzeros() const noexcept;

  // y = M x (x has cols() entries).
  void multiply(std::span<const double> x, std::span<double> y) const;
  // y = M^T x (x has rows() entries).
  void multiply_transposed(std::span<const double> x, std::span<double> y) const;

  SentenceWordMatrix scaled(double factor) const;

 private:
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<Entry>> rows_;
};

// Throws DegenerateInputError when no sentence has a token.
SentenceWordMatrix build_matrix(std::span<const TokenizedSentence> sentences);

// Dense row-major convenience, mostly for tests and small inputs.
SentenceWordMatrix matrix_from_dense(const std::vector<std::vector<double>>& dense,
                                     std::vector<std::string> vocab = {});

struct SvdOptions {
  std::size_t max_iterations = 10000;
  double tolerance = 1e-10;
  std::uint64_t seed = 0x5eed5eedULL;
};

// Top-k right singular triplets, descending. Slots past the numerical rank
// hold a zero singular value and a zero vector.
struct TruncatedSVD {
  std::vector<double> singular_values;
  std::vector<std::vector<double>> right_vectors;
  std::size_t iterations = 0;
  double residual = 0.0;

  std::size_t rank() const noexcept;
};

// Block power iteration on M^T M with Rayleigh-Ritz extraction. Throws
// NumericalError if the top-k Ritz pairs do not converge within the cap.
TruncatedSVD truncated_svd(const SentenceWordMatrix& mat, std::size_t k = kDefaultSvdRank,
                           const SvdOptions& opts = {});

// Eigen-decomposition of a small dense symmetric matrix by cyclic Jacobi
// rotations. Returns eigenvalues descending and column eigenvectors in
// `vectors` (row-major, vectors[i][j] is component i of eigenvector j).
void symmetric_eigen(std::vector<std::vector<double>> a, std::vector<double>& values,
                     std::vector<std::vector<double>>& vectors);

struct KeywordWeights {
  std::map<std::string, double> weights;  // every vocabulary word, clamped at 0
  std::vector<std::string> retained;      // top words by weight, descending

  // Weight of a retained word; 0 for anything else.
  double retained_weight(const std::string& word) const;
  double retained_total() const;

  // Retains the top `cap` positive weights of an explicit map.
  static KeywordWeights from_map(std::map<std::string, double> weights,
                                 std::size_t cap = kDefaultKeywordCap);
};

// Flip each vector so its entries sum to >= 0 (first nonzero entry positive
// on an exact zero sum).
std::vector<double> sign_normalized(std::span<const double> v);

// Master vector 1/4 * sum_i lambda_i * xi_i over sign-normalized xi_i.
std::vector<double> master_vector(const TruncatedSVD& svd);

KeywordWeights keyword_weights(const TruncatedSVD& svd, const std::vector<std::string>& vocab,
                               std::size_t cap = kDefaultKeywordCap);

}  // namespace paginator
