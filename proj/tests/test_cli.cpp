#include <doctest.h>

#include <fstream>
#include <sstream>

#include "paginator/cli.hpp"
#include "paginator/novelty.hpp"
#include "test_util.hpp"

using namespace paginator;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, std::optional<std::filesystem::path> config = std::nullopt) {
  args.insert(args.begin(), "paginator");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, config);
  return {code, out.str(), err.str()};
}

std::string sports() { return (testutil::source_dir() / "data/sports").string(); }
std::string eval_file(const std::string& name) { return (testutil::source_dir() / "data/eval" / name).string(); }

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == cli::kExitUsage);
  const auto r = run({"predict", "--method", "three-sentences", "--subject-dir", sports()});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
  CHECK(run({"predict", "--subject-dir", sports()}).code == cli::kExitUsage);
  CHECK(run({"predict", "--method", "one-sentence"}).code == cli::kExitUsage);
  CHECK(run({"predict", "--method", "one-sentence", "--subject-dir", sports(), "--svd-k", "0"}).code == cli::kExitUsage);
  CHECK(run({"predict", "--method", "one-sentence", "--subject-dir", sports(), "--bogus"}).code == cli::kExitUsage);
  CHECK(run({"curve", "--method", "one-sentence", "--subject-dir", sports(), "--article", "x"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("data errors exit 2 and print no table") {
  const auto r = run({"predict", "--method", "slm-corpus", "--subject-dir", "/nonexistent/sports"});
  CHECK(r.code == cli::kExitData);
  CHECK(r.out.empty());
  const auto none = run({"predict", "--method", "one-sentence", "--subject-dir", sports(), "--min-articles", "61"});
  CHECK(none.code == cli::kExitData);
  CHECK(none.out.empty());
  const auto unknown = run({"curve", "--method", "slm-article", "--subject-dir", sports(), "--article", "nope"});
  CHECK(unknown.code == cli::kExitData);
}

TEST_CASE("ingest summarizes and writes normalized files") {
  const auto dir = testutil::scratch_dir("cli-ingest");
  const auto r = run({"ingest", "--subject-dir", sports(), "--out", dir.string()});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).at(1) == "sports-wire\tSports\t60\t0\ttrue");
  CHECK(read(dir / "sports-wire.jsonl") == read(std::filesystem::path(sports()) / "sports-wire.jsonl"));
}

TEST_CASE("predict matches the golden transcripts and is deterministic") {
  for (Method m : all_methods()) {
    const std::string name(method_name(m));
    CAPTURE(name);
    const auto a = run({"predict", "--method", name, "--subject-dir", sports()});
    const auto b = run({"predict", "--method", name, "--subject-dir", sports()});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(lines(a.out).size() == 60);
    CHECK(a.out == read(testutil::source_dir() / "tests/data/golden" / (name + ".tsv")));
  }
}

TEST_CASE("predict rows equal the library API") {
  const auto subject = load_subject(sports());
  const auto prepared = prepare_corpus(subject.corpuses()[0]);
  const std::vector<PreparedCorpus> all = {prepared};
  const auto model = build_subject_model(all);
  cli::RunConfig cfg;
  for (Method m : {Method::NoveltyArticle, Method::NoveltyCorpus, Method::SlmArticle, Method::SlmCorpus}) {
    const auto rows = cli::predict(subject, m, cfg);
    REQUIRE(rows.size() == prepared.articles.size());
    for (const auto& row : rows) {
      const auto* a = prepared.find(row.article_id);
      REQUIRE(a != nullptr);
      BreakPoint api;
      const Context ctx = uses_corpus(m) ? Context::Corpus : Context::Article;
      if (m == Method::NoveltyArticle || m == Method::NoveltyCorpus) {
        api = predict_novelty(*a, ctx, &prepared);
      } else {
        api = predict_slm(*a, ctx, &prepared, model);
      }
      CHECK(row.breakpoint.sentence_index == api.sentence_index);
      CHECK(row.breakpoint.fallback == api.fallback);
    }
  }
}

TEST_CASE("curve export") {
  const auto subject = load_subject(sports());
  const auto prepared = prepare_corpus(subject.corpuses()[0]);
  const auto& article = prepared.articles[4];
  const std::vector<PreparedCorpus> all = {prepared};
  for (const std::string method : {"novelty-article", "slm-article", "novelty-corpus", "slm-corpus"}) {
    CAPTURE(method);
    const auto r = run({"curve", "--method", method, "--subject-dir", sports(), "--article", article.id});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == article.sentence_count() + 1);
    CHECK(ls[0] == "sentence_index,value");
    ScoreCurve api;
    if (method == "novelty-article") api = novelty_curve(article.tokens, article_keyword_weights(article));
    if (method == "novelty-corpus") api = novelty_curve(article.tokens, corpus_keyword_weights(prepared));
    if (method == "slm-article") api = kl_curve(article.tokens, doc_model(article), build_subject_model(all));
    if (method == "slm-corpus") api = kl_curve(article.tokens, doc_model(prepared), build_subject_model(all));
    for (std::size_t i = 1; i < ls.size(); ++i) {
      CHECK(ls[i] == std::to_string(i) + "," + cli::format_number(api.values[i - 1]));
      CHECK(std::stod(ls[i].substr(ls[i].find(',') + 1)) == api.values[i - 1]);
    }
  }
}

TEST_CASE("stats lists every article") {
  const auto r = run({"stats", "--subject-dir", sports()});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).size() == 61);
}

TEST_CASE("eval reports") {
  const auto dir = testutil::scratch_dir("cli-eval");
  std::string ann = "article_id,pick1,pick2,pick3,pick4,pick5\n";
  for (int i = 0; i < 10; ++i) ann += "x" + std::to_string(i) + "," + std::to_string(1 + i % 3) + ",2,3,4,5\n";
  testutil::write_file(dir / "ann.csv", ann);
  const auto r = run({"eval", "--annotations", (dir / "ann.csv").string()});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 6);
  for (std::size_t row = 2; row < 6; ++row) {
    std::istringstream in(ls[row]);
    std::size_t tol = 0, cell = 0, sum = 0;
    in >> tol;
    while (in >> cell) sum += cell;
    CHECK(sum == 10);
  }

  testutil::write_file(dir / "two.csv", "a,m1,3,0.1\nb,m1,4,0.2\nc,m2,6,0.5\nd,m2,5,0.7\n");
  const auto two = run({"eval", "--ratings", (dir / "two.csv").string(), "--seed", "3"});
  REQUIRE(two.code == 0);
  const auto tl = lines(two.out);
  const auto at = std::find(tl.begin(), tl.end(), "== Pairwise t-tests ==");
  REQUIRE(at != tl.end());
  CHECK((at + 2)->rfind("m1", 0) == 0);
  CHECK((at + 3)->empty());

  testutil::write_file(dir / "bad.csv", "a,m1,3,0.1\nb,m1,x,0.2\n");
  const auto bad = run({"eval", "--ratings", (dir / "bad.csv").string()});
  CHECK(bad.code == cli::kExitData);
  CHECK(bad.out.empty());
  CHECK(bad.err.find(":2:") != std::string::npos);
}

TEST_CASE("eval with a fixed seed is byte-identical") {
  const std::vector<std::string> args = {"eval", "--subject-dir", sports(), "--ratings", eval_file("ratings.csv"),
                                         "--annotations", eval_file("annotations.csv"), "--seed", "7"};
  const auto a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == read(testutil::source_dir() / "tests/data/golden/eval.txt"));
}

TEST_CASE("config file values are overridden by flags") {
  const auto dir = testutil::scratch_dir("cli-config");
  testutil::write_file(dir / "paginator.conf", "# sample\nmethod = two-sentences\nmin-articles = 61\n");
  const auto from_file = run({"predict", "--subject-dir", sports()}, dir / "paginator.conf");
  CHECK(from_file.code == cli::kExitData);
  const auto flags = run({"predict", "--subject-dir", sports(), "--min-articles", "60"}, dir / "paginator.conf");
  REQUIRE(flags.code == 0);
  CHECK(lines(flags.out).at(0).find("\ttwo-sentences\t2\tfalse") != std::string::npos);
  testutil::write_file(dir / "snake.conf", "method = one-paragraph\nmin_articles = 61\n");
  CHECK(run({"predict", "--subject-dir", sports()}, dir / "snake.conf").code == cli::kExitData);
  testutil::write_file(dir / "bad.conf", "colour = blue\n");
  CHECK(run({"predict", "--subject-dir", sports()}, dir / "bad.conf").code == cli::kExitUsage);
}

TEST_CASE("--out writes the table to a file") {
  const auto dir = testutil::scratch_dir("cli-out");
  const auto r = run({"predict", "--method", "one-sentence", "--subject-dir", sports(), "--out", (dir / "p.tsv").string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  CHECK(lines(read(dir / "p.tsv")).size() == 60);
}
