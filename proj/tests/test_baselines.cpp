#include <doctest.h>

#include "paginator/baselines.hpp"
#include "paginator/error.hpp"
#include "test_util.hpp"

using namespace paginator;

namespace {

std::string sentence_of(std::size_t chars) {
  std::string s = "W";
  s.append(chars - 2, 'a');
  return s + ".";
}

// Paragraphs given as lists of sentence lengths.
PreparedArticle build(const std::vector<std::vector<std::size_t>>& paragraphs) {
  std::string body;
  for (const auto& p : paragraphs) {
    if (!body.empty()) body += "\n\n";
    for (std::size_t i = 0; i < p.size(); ++i) body += (i ? " " : "") + sentence_of(p[i]);
  }
  return prepare_article({"x", "c", "S", "t", body});
}

std::size_t predict(const PreparedArticle& a, Method m) { return predict_baseline(a, m).sentence_index; }

}  // namespace

TEST_CASE("one and two sentence previews") {
  const auto five = build({{20, 20, 20, 20, 20}});
  CHECK(predict(five, Method::OneSentence) == 1);
  CHECK(predict(five, Method::TwoSentences) == 2);
  const auto one = build({{20}});
  CHECK(predict(one, Method::TwoSentences) == 1);
}

TEST_CASE("twenty percent boundary cases") {
  // P1 = 100 chars of 500: exactly 20 percent.
  const auto exact = build({{40, 60}, {100, 150, 150}});
  CHECK(exact.sentences[1].char_count == 60);
  CHECK(predict(exact, Method::TwentyPercent) == 2);
  CHECK(predict(exact, Method::OneParagraph) == 2);
  // P1 = 99 of 499: threshold 99.8 not met.
  const auto short_p1 = build({{40, 59}, {100, 150, 150}});
  CHECK(predict(short_p1, Method::TwentyPercent) == 5);
}

TEST_CASE("baseline ordering and paragraph alignment") {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 300; ++round) {
    std::vector<std::vector<std::size_t>> paras(1 + rng() % 5);
    for (auto& p : paras) {
      p.resize(1 + rng() % 4);
      for (auto& n : p) n = 3 + rng() % 80;
    }
    const auto a = build(paras);
    const auto tp = predict(a, Method::TwentyPercent);
    const bool last_of_paragraph =
        tp == a.sentence_count() || a.sentences[tp].paragraph_index != a.sentences[tp - 1].paragraph_index;
    CHECK(last_of_paragraph);
    CHECK(tp >= predict(a, Method::OneParagraph));
    if (paras[0].size() >= 2) {
      CHECK(predict(a, Method::OneSentence) <= predict(a, Method::TwoSentences));
      CHECK(predict(a, Method::TwoSentences) <= predict(a, Method::OneParagraph));
    }
    CHECK(predict_baseline(a, Method::TwentyPercent, 1.0).sentence_index == a.sentence_count());
  }
}

TEST_CASE("invalid requests") {
  const auto a = build({{20, 20}});
  CHECK_THROWS_AS(predict_baseline(a, Method::SlmArticle), UsageError);
  CHECK_THROWS_AS(predict_baseline(a, Method::TwentyPercent, 0.0), UsageError);
  CHECK_THROWS_AS(predict_baseline(a, Method::TwentyPercent, 1.5), UsageError);
  const auto empty = prepare_article({"e", "c", "S", "t", "   "});
  CHECK_THROWS_AS(predict_baseline(empty, Method::OneSentence), PreconditionError);
}

TEST_CASE("hand-built fixture") {
  const auto corpus = load_corpus(testutil::source_dir() / "tests/data/baselines.jsonl", 1);
  REQUIRE(corpus.articles().size() == 10);
  // Columns: one-sentence, two-sentences, one-paragraph, twenty-percent.
  const std::map<std::string, std::array<std::size_t, 4>> expected = {
      {"b01", {1, 1, 1, 1}}, {"b02", {1, 2, 2, 2}}, {"b03", {1, 2, 2, 5}}, {"b04", {1, 2, 2, 2}},
      {"b05", {1, 2, 1, 3}}, {"b06", {1, 2, 3, 3}}, {"b07", {1, 2, 1, 3}}, {"b08", {1, 2, 1, 1}},
      {"b09", {1, 2, 1, 2}}, {"b10", {1, 2, 1, 2}},
  };
  const Method kinds[] = {Method::OneSentence, Method::TwoSentences, Method::OneParagraph, Method::TwentyPercent};
  for (const auto& r : corpus.articles()) {
    const auto a = prepare_article(r);
    for (std::size_t k = 0; k < 4; ++k) {
      CAPTURE(r.id);
      CAPTURE(k);
      CHECK(predict(a, kinds[k]) == expected.at(r.id)[k]);
    }
  }
}
