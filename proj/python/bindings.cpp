#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "paginator/baselines.hpp"
#include "paginator/cli.hpp"
#include "paginator/corpus.hpp"
#include "paginator/error.hpp"
#include "paginator/evalkit.hpp"
#include "paginator/linalg.hpp"
#include "paginator/novelty.hpp"
#include "paginator/slm.hpp"
#include "paginator/text.hpp"

namespace py = pybind11;
using namespace paginator;

namespace {

Method method_arg(const std::string& name) {
  const auto m = parse_method(name);
  if (!m) throw UsageError("unknown method: " + name);
  return *m;
}

cli::RunConfig config_from(py::kwargs kwargs) {
  std::map<std::string, std::string> values;
  for (const auto& [k, v] : kwargs) values[py::str(k)] = py::str(v);
  cli::RunConfig cfg;
  cli::apply_config(cfg, values);
  cfg.validate();
  return cfg;
}

py::dict breakpoint_dict(const BreakPoint& bp) {
  py::dict d;
  d["article_id"] = bp.article_id;
  d["sentence_index"] = bp.sentence_index;
  d["method"] = std::string(method_name(bp.method));
  d["fallback"] = bp.fallback;
  d["diagnostics"] = bp.diagnostics;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Break-point prediction for news articles";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<UsageError>(m, "UsageError", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", error.ptr());
  py::register_exception<DegenerateInputError>(m, "DegenerateInputError", error.ptr());
  py::register_exception<UndefinedStatisticError>(m, "UndefinedStatisticError", error.ptr());

  m.def("methods", [] {
    std::vector<std::string> out;
    for (Method x : all_methods()) out.emplace_back(method_name(x));
    return out;
  });

  py::class_<ArticleRecord>(m, "ArticleRecord")
      .def_readonly("id", &ArticleRecord::id)
      .def_readonly("corpus_id", &ArticleRecord::corpus_id)
      .def_readonly("subject", &ArticleRecord::subject)
      .def_readonly("title", &ArticleRecord::title)
      .def_readonly("body", &ArticleRecord::body);

  py::class_<Corpus>(m, "Corpus")
      .def_property_readonly("id", &Corpus::id)
      .def_property_readonly("subject", &Corpus::subject)
      .def_property_readonly("accepted", &Corpus::accepted)
      .def_property_readonly("articles", &Corpus::articles)
      .def("__len__", [](const Corpus& c) { return c.articles().size(); });

  py::class_<SubjectSet>(m, "SubjectSet")
      .def_property_readonly("subject", &SubjectSet::subject)
      .def_property_readonly("corpuses", &SubjectSet::corpuses)
      .def_property_readonly("article_count", &SubjectSet::article_count)
      .def_property_readonly("accepted_count", &SubjectSet::accepted_count);

  m.def("parse_corpus", &parse_corpus, py::arg("text"), py::arg("min_articles") = kDefaultMinArticles,
        py::arg("source") = "<memory>");
  m.def("load_corpus", &load_corpus, py::arg("path"), py::arg("min_articles") = kDefaultMinArticles);
  m.def("load_subject", &load_subject, py::arg("dir"), py::arg("min_articles") = kDefaultMinArticles);
  m.def("subject_from_corpuses", &SubjectSet::from_corpuses, py::arg("corpuses"));

  m.def("split_sentences", [](const std::string& body) {
    std::vector<std::string> out;
    for (const auto& s : split_sentences(body)) out.push_back(s.text);
    return out;
  });
  m.def("tokenize", [](const std::string& text) { return tokenize(text); });

  m.def(
      "truncated_svd",
      [](const std::vector<std::vector<double>>& dense, std::size_t k) {
        const auto svd = truncated_svd(matrix_from_dense(dense), k);
        return py::make_tuple(svd.singular_values, svd.right_vectors);
      },
      py::arg("matrix"), py::arg("k") = kDefaultSvdRank, "Returns (singular values, right singular vectors).");

  m.def(
      "predict",
      [](const SubjectSet& subject, const std::string& method, py::kwargs kwargs) {
        const auto rows = cli::predict(subject, method_arg(method), config_from(kwargs));
        py::list out;
        for (const auto& r : rows) {
          auto d = breakpoint_dict(r.breakpoint);
          d["article_id"] = r.article_id;
          d["corpus_id"] = r.corpus_id;
          out.append(d);
        }
        return out;
      },
      py::arg("subject"), py::arg("method"));

  m.def(
      "curve",
      [](const SubjectSet& subject, const std::string& method, const std::string& article_id, py::kwargs kwargs) {
        return cli::curve_for(subject, method_arg(method), article_id, config_from(kwargs)).values;
      },
      py::arg("subject"), py::arg("method"), py::arg("article_id"));

  m.def(
      "baseline",
      [](const ArticleRecord& record, const std::string& method, double fraction) {
        return breakpoint_dict(predict_baseline(prepare_article(record), method_arg(method), fraction));
      },
      py::arg("record"), py::arg("method"), py::arg("fraction") = kDefaultTwentyPercentFraction);

  m.def(
      "readability",
      [](const std::string& body) {
        const auto s = readability(split_sentences(body));
        py::dict d;
        d["grade_level"] = s.grade_level;
        d["reading_ease"] = s.reading_ease;
        d["fog_index"] = s.fog_index;
        d["sentence_count"] = s.sentence_count;
        d["word_count"] = s.word_count;
        d["syllable_count"] = s.syllable_count;
        d["complex_word_count"] = s.complex_word_count;
        return d;
      },
      py::arg("body"));

  m.def(
      "max_agreement", [](const std::vector<std::size_t>& picks, std::size_t t) { return max_agreement(picks, t); },
      py::arg("picks"), py::arg("tolerance"));

  m.def(
      "anova",
      [](const std::vector<std::vector<double>>& groups, std::uint64_t seed, std::size_t permutations) {
        Rng rng(seed);
        const auto r = one_way_anova(groups, rng, permutations);
        return py::make_tuple(r.f, r.p);
      },
      py::arg("groups"), py::arg("seed") = 0, py::arg("permutations") = kDefaultPermutations, "Returns (F, p).");

  m.def(
      "t_test",
      [](const std::vector<double>& a, const std::vector<double>& b, std::uint64_t seed, std::size_t permutations) {
        Rng rng(seed);
        const auto r = t_test(a, b, rng, permutations);
        return py::make_tuple(r.t, r.p);
      },
      py::arg("a"), py::arg("b"), py::arg("seed") = 0, py::arg("permutations") = kDefaultPermutations,
      "Returns (t, p).");

  m.def(
      "spearman", [](const std::vector<double>& x, const std::vector<double>& y) { return spearman(x, y); },
      py::arg("x"), py::arg("y"));

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> full = {"paginator"};
        full.insert(full.end(), args.begin(), args.end());
        std::ostringstream out, err;
        const int code = cli::run(full, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs a command line; returns (exit code, stdout, stderr).");
}
