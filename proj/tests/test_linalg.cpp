#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "paginator/error.hpp"
#include "paginator/linalg.hpp"

using namespace paginator;

namespace {

std::vector<TokenizedSentence> sentences(const std::vector<std::vector<std::string>>& words) {
  std::vector<TokenizedSentence> out;
  for (std::size_t i = 0; i < words.size(); ++i) out.push_back({i + 1, words[i]});
  return out;
}

oracle::Dense random_dense(std::mt19937_64& rng, std::size_t& rows, std::size_t& cols, int max_value = 3) {
  rows = 1 + rng() % 8;
  cols = 1 + rng() % 8;
  oracle::Dense d(rows, std::vector<double>(cols, 0.0));
  bool any = false;
  for (auto& r : d)
    for (auto& x : r) {
      if (rng() % 2 == 0) {
        x = static_cast<double>(rng() % static_cast<unsigned>(max_value + 1));
        any |= x != 0.0;
      }
    }
  if (!any) d[0][0] = 1.0;
  return d;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_CASE("build_matrix counts occurrences") {
  const auto m = build_matrix(sentences({{"a", "b"}, {"b", "b"}}));
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 2);
  CHECK(m.vocab() == std::vector<std::string>{"a", "b"});
  CHECK(m.column("a") == 0);
  CHECK(m.column("b") == 1);
  CHECK(m.column("zzz") == -1);
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(1, 0) == 0);
  CHECK(m.at(1, 1) == 2);

  const auto one = build_matrix(sentences({{"x"}}));
  CHECK(one.rows() == 1);
  CHECK(one.at(0, 0) == 1);

  CHECK_THROWS_AS(build_matrix(sentences({{}, {}})), DegenerateInputError);
}

TEST_CASE("rank-one and identity matrices") {
  const auto r1 = truncated_svd(matrix_from_dense({{2, 0}, {2, 0}}));
  REQUIRE(r1.singular_values.size() == 4);
  CHECK(r1.singular_values[0] == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(r1.right_vectors[0][0]) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(r1.right_vectors[0][1]) < 1e-12);
  for (int j = 1; j < 4; ++j) {
    CHECK(r1.singular_values[j] == 0.0);
    CHECK(r1.right_vectors[j] == std::vector<double>(2, 0.0));
  }
  CHECK(r1.rank() == 1);

  oracle::Dense id(4, std::vector<double>(4, 0.0));
  for (int i = 0; i < 4; ++i) id[i][i] = 1;
  const auto svd = truncated_svd(matrix_from_dense(id));
  for (double s : svd.singular_values) CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("random 6x5 integer matrix matches the dense oracle") {
  std::mt19937_64 rng(65);
  oracle::Dense d(6, std::vector<double>(5));
  for (auto& r : d)
    for (auto& x : r) x = static_cast<double>(rng() % 5);
  const auto svd = truncated_svd(matrix_from_dense(d), 5);
  const auto ref = oracle::dense_svd(d, 5);
  const auto jac = oracle::jacobi_singular_values(d, 5);
  for (std::size_t j = 0; j < 5; ++j) {
    CHECK(std::abs(svd.singular_values[j] - ref.values[j]) < 1e-6);
    CHECK(std::abs(svd.singular_values[j] - jac[j]) < 1e-6);
  }
  for (std::size_t j = 0; j < 5; ++j) {
    if (ref.values[j] < 1e-9) continue;
    CHECK(std::abs(dot(svd.right_vectors[j], ref.vectors[j])) >= 1 - 1e-6);
  }
}

TEST_CASE("returned vectors are orthonormal and the solver is deterministic") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 100; ++round) {
    std::size_t r = 0, c = 0;
    const auto d = random_dense(rng, r, c);
    const auto m = matrix_from_dense(d);
    const auto svd = truncated_svd(m);
    const auto again = truncated_svd(m);
    CHECK(svd.singular_values == again.singular_values);
    CHECK(svd.right_vectors == again.right_vectors);
    for (std::size_t i = 0; i < svd.rank(); ++i) {
      CHECK(std::abs(dot(svd.right_vectors[i], svd.right_vectors[i]) - 1) < 1e-8);
      for (std::size_t j = i + 1; j < svd.rank(); ++j) CHECK(std::abs(dot(svd.right_vectors[i], svd.right_vectors[j])) < 1e-6);
    }
    for (std::size_t i = 1; i < svd.singular_values.size(); ++i) CHECK(svd.singular_values[i] <= svd.singular_values[i - 1]);
  }
}

TEST_CASE("iteration cap reports a numerical error") {
  oracle::Dense d = {{3, 1, 0}, {1, 3, 1}, {0, 1, 3}, {1, 0, 1}};
  SvdOptions opts;
  opts.max_iterations = 1;
  opts.tolerance = 1e-300;
  CHECK_THROWS_AS(truncated_svd(matrix_from_dense(d), 2, opts), NumericalError);
}

TEST_CASE("keyword weights follow the master-vector formula") {
  TruncatedSVD svd;
  svd.singular_values = {1, 0, 0, 0};
  svd.right_vectors = {{0.6, 0.8}, {0, 0}, {0, 0}, {0, 0}};
  const auto w = keyword_weights(svd, {"a", "b"});
  CHECK(w.weights.at("a") == doctest::Approx(0.15).epsilon(1e-15));
  CHECK(w.weights.at("b") == doctest::Approx(0.20).epsilon(1e-15));
  CHECK(w.retained == std::vector<std::string>{"b", "a"});

  svd.singular_values = {0, 0, 0, 0};
  const auto zero = keyword_weights(svd, {"a", "b"});
  CHECK(zero.weights.at("a") == 0.0);
  CHECK(zero.retained.empty());

  svd.singular_values = {1, 0, 0, 0};
  svd.right_vectors[0] = {-0.6, -0.8};
  CHECK(keyword_weights(svd, {"a", "b"}).weights == w.weights);
}

TEST_CASE("sign normalization") {
  CHECK(sign_normalized(std::vector<double>{-1, -2}) == std::vector<double>{1, 2});
  CHECK(sign_normalized(std::vector<double>{1, -0.5}) == std::vector<double>{1, -0.5});
  CHECK(sign_normalized(std::vector<double>{0, -1, 1}) == std::vector<double>{0, 1, -1});
}

TEST_CASE("retained list is capped and tie-broken lexicographically") {
  const auto w = KeywordWeights::from_map({{"d", 1}, {"c", 2}, {"b", 2}, {"a", 0}, {"e", 0.5}}, 3);
  CHECK(w.retained == std::vector<std::string>{"b", "c", "d"});
  CHECK(w.retained_weight("e") == 0.0);
  CHECK(w.retained_weight("c") == 2.0);
  CHECK(w.retained_total() == 5.0);
}

TEST_CASE("a word in every sentence gets the largest weight") {
  const auto s = sentences({{"court", "judge", "ruling"},
                            {"court", "appeal"},
                            {"court", "judge", "lawyer"},
                            {"court", "verdict", "ruling"},
                            {"court", "jury"}});
  const auto m = build_matrix(s);
  const auto w = keyword_weights(truncated_svd(m), m.vocab());
  CHECK(w.retained.front() == "court");

  // Oracle: same formula over Eigen's vectors.
  oracle::Dense d(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m.at(i, j);
  const auto ref = oracle::dense_svd(d, m.cols());
  std::vector<double> master(m.cols(), 0.0);
  for (std::size_t k = 0; k < 4; ++k) {
    double sum = 0;
    for (double x : ref.vectors[k]) sum += x;
    const double sign = sum < 0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < m.cols(); ++j) master[j] += 0.25 * ref.values[k] * sign * ref.vectors[k][j];
  }
  const auto best = std::max_element(master.begin(), master.end()) - master.begin();
  CHECK(m.vocab()[static_cast<std::size_t>(best)] == "court");
}

TEST_CASE("sign flips of singular vectors leave weights unchanged") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 100; ++round) {
    std::size_t r = 0, c = 0;
    const auto d = random_dense(rng, r, c);
    const auto m = matrix_from_dense(d);
    auto svd = truncated_svd(m);
    const auto base = keyword_weights(svd, m.vocab());
    for (auto& v : svd.right_vectors)
      if (rng() % 2)
        for (auto& x : v) x = -x;
    const auto flipped = keyword_weights(svd, m.vocab());
    CHECK(flipped.weights == base.weights);
    CHECK(flipped.retained == base.retained);
  }
}

TEST_CASE("scaling the matrix scales weights and keeps the ranking") {
  std::mt19937_64 rng(22);
  std::size_t separated = 0;
  for (int round = 0; round < 200; ++round) {
    std::size_t r = 0, c = 0;
    const auto d = random_dense(rng, r, c);
    const auto m = matrix_from_dense(d);
    const auto base_svd = truncated_svd(m);
    const auto base = keyword_weights(base_svd, m.vocab());

    // Powers of two scale every intermediate exactly.
    const double pow2 = std::ldexp(1.0, static_cast<int>(rng() % 9) - 4);
    const auto exact = keyword_weights(truncated_svd(m.scaled(pow2)), m.vocab());
    for (const auto& [word, x] : base.weights) CHECK(exact.weights.at(word) == pow2 * x);
    CHECK(exact.retained == base.retained);

    // Other factors: singular vectors are unique only without tied singular
    // values among the top k + 1.
    const auto ref = oracle::dense_svd(d, c);
    bool distinct = true;
    for (std::size_t i = 0; i + 1 < std::min<std::size_t>(ref.values.size(), 5); ++i) {
      if (ref.values[i] - ref.values[i + 1] < 1e-3 * ref.values[0]) distinct = false;
    }
    if (!distinct) continue;
    ++separated;
    const double factor = 0.5 + static_cast<double>(rng() % 40) / 3.0;
    const auto scaled = keyword_weights(truncated_svd(m.scaled(factor)), m.vocab());
    double top = 0;
    for (const auto& [_, x] : base.weights) top = std::max(top, x);
    for (const auto& [word, x] : base.weights) CHECK(std::abs(scaled.weights.at(word) - factor * x) <= 1e-8 * factor * top);
    for (std::size_t i = 0; i + 1 < scaled.retained.size(); ++i) {
      const double a = base.weights.at(scaled.retained[i]), b = base.weights.at(scaled.retained[i + 1]);
      CHECK(a >= b - 1e-8 * top);
    }
    CHECK(scaled.retained.size() <= kDefaultKeywordCap);
  }
  CHECK(separated >= 20);
}
