#include <doctest.h>

#include <random>

#include "paginator/error.hpp"
#include "paginator/text.hpp"

using namespace paginator;

namespace {

std::vector<std::string> toks(const std::string& text, const FilterConfig& cfg = {}, std::size_t index = 1) {
  Sentence s;
  s.index = index;
  s.text = text;
  return filter_tokens(s, cfg).tokens;
}

using V = std::vector<std::string>;

}  // namespace

TEST_CASE("paragraphs are blank-line separated blocks") {
  CHECK(split_paragraphs("A.\n\nB.") == V{"A.", "B."});
  CHECK(split_paragraphs("A.\n\n\n\nB.") == V{"A.", "B."});
  CHECK(split_paragraphs("A. B. C.") == V{"A. B. C."});
  CHECK(split_paragraphs("").empty());
  CHECK(split_paragraphs("\n \n\t\n").empty());
  CHECK(split_paragraphs("A.\n  \nB.\r\n\r\nC.").size() == 3);
  CHECK(split_paragraphs("line one\nline two") == V{"line one\nline two"});
}

TEST_CASE("sentence splitting") {
  auto texts = [](const std::string& body) {
    V out;
    for (const auto& s : split_sentences(body)) out.push_back(s.text);
    return out;
  };
  const auto two = split_sentences("Hello world. Bye now.");
  REQUIRE(two.size() == 2);
  CHECK(two[0].index == 1);
  CHECK(two[1].index == 2);
  CHECK(two[0].text == "Hello world.");
  CHECK(two[0].char_count == 12);

  CHECK(sentence_abbreviations().count("dr") == 1);
  CHECK(texts("Dr. Smith left. He returned.") == V{"Dr. Smith left.", "He returned."});
  CHECK(split_sentences("").empty());
  CHECK(texts("He met J. R. Smith. Then left.") == V{"He met J. R. Smith.", "Then left."});
  CHECK(texts("The U.S. team won. Fans cheered.") == V{"The U.S. team won.", "Fans cheered."});
  CHECK(texts("Really? Yes! Fine.") == V{"Really?", "Yes!", "Fine."});
  CHECK(texts("He said \"Go.\" Then he left.") == V{"He said \"Go.\"", "Then he left."});
  CHECK(texts("Pi is 3.14 today. ok then") == V{"Pi is 3.14 today. ok then"});
  CHECK(texts("No terminal punctuation") == V{"No terminal punctuation"});
}

TEST_CASE("paragraph indices follow paragraphs") {
  const auto s = split_sentences("A one. A two.\n\nB one.\n\n\nC one. C two. C three.");
  REQUIRE(s.size() == 6);
  const std::vector<std::size_t> para = {1, 1, 2, 3, 3, 3};
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i].index == i + 1);
    CHECK(s[i].paragraph_index == para[i]);
  }
}

TEST_CASE("char_count counts code points") {
  const auto s = split_sentences("Café über.");
  REQUIRE(s.size() == 1);
  CHECK(s[0].char_count == 10);
  CHECK(utf8_length("Ä✓") == 2);
}

TEST_CASE("filter_tokens examples") {
  CHECK(toks("The bombs exploded near the bridges.") == V{"bomb", "exploded", "bridge"});
  FilterConfig nouns;
  nouns.pos_annotations = NounAnnotations{{1, {"bombs", "bridges"}}};
  CHECK(toks("The bombs exploded near the bridges.", nouns) == V{"bomb", "bridge"});
  CHECK(toks("The bombs exploded near the bridges.", nouns, 2) == V{"bomb", "exploded", "bridge"});
  CHECK(toks("A an the of.").empty());
  CHECK(toks("Bomb bomb BOMBS.") == V{"bomb", "bomb", "bomb"});
}

TEST_CASE("plural stripping") {
  CHECK(strip_plural("bridges") == "bridge");
  CHECK(strip_plural("cities") == "city");
  CHECK(strip_plural("classes") == "class");
  CHECK(strip_plural("boxes") == "box");
  CHECK(strip_plural("churches") == "church");
  CHECK(strip_plural("bus") == "bus");
  CHECK(strip_plural("analysis") == "analysis");
  CHECK(strip_plural("glass") == "glass");
  CHECK(strip_plural("children") == "child");
  CHECK(strip_plural("women") == "woman");
  CHECK(strip_plural("its") == "its");
}

TEST_CASE("tokens carry no whitespace or punctuation-only strings") {
  const auto t = toks("Well -- it's 3:00, (maybe) \"late\"; re-match… ok? “Quoted” — dash");
  for (const auto& w : t) {
    CHECK(w.find_first_of(" \t\n") == std::string::npos);
    bool has_alnum = false;
    for (unsigned char c : w) has_alnum |= std::isalnum(c) || c >= 0x80;
    CHECK(has_alnum);
  }
}

TEST_CASE("filtering is idempotent") {
  std::mt19937_64 rng(5);
  const V words = {"The", "bombs", "Bridges", "near", "cities", "a", "classes", "glass", "runs", "x", "Ab",
                   "ss", "sss", "news", "is", "its", "boxes", "women", "Über", "ações"};
  const FilterConfig cfg;
  for (int round = 0; round < 500; ++round) {
    std::string text;
    for (std::size_t k = rng() % 12; k > 0; --k) text += words[rng() % words.size()] + " ";
    const auto once = toks(text);
    CHECK(filter_words(once, cfg) == once);
  }
}

TEST_CASE("segmentation is total and stable under re-joining") {
  std::mt19937_64 rng(9);
  const V pieces = {"Word", "word", ".", "!", "?", " ", "\n", "\n\n", "Dr.", "U.S.", "3.5", "\"", "é", "A.", ")", "x"};
  for (int round = 0; round < 1000; ++round) {
    std::string body;
    for (std::size_t k = rng() % 25; k > 0; --k) body += pieces[rng() % pieces.size()];
    const auto first = split_sentences(body);
    CHECK(split_sentences(body) == first);
    std::size_t chars = 0;
    for (const auto& s : first) chars += s.char_count;
    CHECK(chars <= utf8_length(body));
    // Paragraph breaks always end a sentence, so re-joining is checked
    // paragraph by paragraph.
    const auto paragraphs = split_paragraphs(body);
    for (std::size_t p = 0; p < paragraphs.size(); ++p) {
      std::string joined;
      std::size_t count = 0;
      for (const auto& s : first) {
        if (s.paragraph_index != p + 1) continue;
        joined += (joined.empty() ? "" : " ") + s.text;
        ++count;
      }
      CHECK(split_sentences(joined).size() == count);
      CHECK(split_sentences(paragraphs[p]).size() == count);
    }
  }
}

TEST_CASE("noun annotation sidecar") {
  const auto n = parse_noun_annotations("1\tbomb bridge\n3\t\n\n2\tcourt\n");
  CHECK(n.at(1) == V{"bomb", "bridge"});
  CHECK(n.at(2) == V{"court"});
  CHECK(n.at(3).empty());
  CHECK_THROWS_AS(parse_noun_annotations("x\tbomb\n"), ParseError);
}

TEST_CASE("prepare_article wires the pipeline") {
  const ArticleRecord r{"a1", "c1", "Sports", "t", "The bombs fell. Bridges broke.\n\nCourts met."};
  const auto a = prepare_article(r);
  CHECK(a.sentence_count() == 3);
  CHECK(a.paragraphs.size() == 2);
  REQUIRE(a.tokens.size() == 3);
  CHECK(a.tokens[2].sentence_index == 3);
  CHECK(a.all_tokens() == V{"bomb", "fell", "bridge", "broke", "court", "met"});
}
