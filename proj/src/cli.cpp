#include "paginator/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "paginator/error.hpp"
#include "paginator/novelty.hpp"

namespace paginator::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename T>
T parse_config_value(const std::string& key, const std::string& value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw UsageError("config key '" + key + "': invalid value '" + value + "'");
  }
  return out;
}

// Left-aligned columns separated by two spaces.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& r : rows) {
    if (widths.size() < r.size()) widths.resize(r.size(), 0);
    for (std::size_t c = 0; c < r.size(); ++c) widths[c] = std::max(widths[c], r[c].size());
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line.append(widths[c] - r[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::vector<std::size_t> parse_tolerances(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t(trim(item));
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
      throw UsageError("invalid tolerance list '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty tolerance list");
  return out;
}

Method require_method(const RunConfig& cfg) {
  if (cfg.method.empty()) throw UsageError("--method is required");
  auto m = parse_method(cfg.method);
  if (!m) throw UsageError("unknown method '" + cfg.method + "'");
  return *m;
}

NoveltyOptions novelty_options(const RunConfig& cfg) {
  NoveltyOptions o;
  o.svd_k = cfg.svd_k;
  o.keyword_cap = cfg.keyword_cap;
  return o;
}

std::vector<PreparedCorpus> prepare_all(const SubjectSet& subject, const RunConfig& cfg) {
  const FilterConfig filter;
  std::vector<PreparedCorpus> out;
  for (const auto& corpus : subject.corpuses()) {
    if (cfg.nouns_dir.empty()) {
      out.push_back(prepare_corpus(corpus, filter));
      continue;
    }
    std::map<std::string, NounAnnotations> nouns;
    for (const auto& a : corpus.articles()) {
      const auto path = std::filesystem::path(cfg.nouns_dir) / (a.id + ".tsv");
      if (std::filesystem::exists(path)) nouns.emplace(a.id, load_noun_annotations(path));
    }
    out.push_back(prepare_corpus(corpus, filter, &nouns));
  }
  return out;
}

SubjectSet load_input(const RunConfig& cfg) {
  if (!cfg.subject_dir.empty() && !cfg.corpus.empty()) throw UsageError("give either --subject-dir or --corpus, not both");
  if (!cfg.subject_dir.empty()) return load_subject(cfg.subject_dir, cfg.min_articles);
  if (!cfg.corpus.empty()) {
    std::vector<Corpus> one;
    one.push_back(load_corpus(cfg.corpus, cfg.min_articles));
    return SubjectSet::from_corpuses(std::move(one));
  }
  throw UsageError("one of --subject-dir or --corpus is required");
}

void emit(const std::string& text, const RunConfig& cfg, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + cfg.out);
  f << text;
  if (!f) throw IoError("error while writing " + cfg.out);
}

std::string format_fixed(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double sample_sd(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

}  // namespace

void RunConfig::validate() const {
  if (min_articles < 1) throw UsageError("min-articles must be >= 1");
  if (svd_k < 1) throw UsageError("svd-k must be >= 1");
  if (keyword_cap < 1) throw UsageError("keyword-cap must be >= 1");
  if (!(twenty_percent_fraction > 0.0 && twenty_percent_fraction <= 1.0)) {
    throw UsageError("twenty-percent-fraction must lie in (0, 1]");
  }
  if (!(jump_sigma > 0.0) || !std::isfinite(jump_sigma)) throw UsageError("jump-sigma must be positive");
  if (permutations < 1) throw UsageError("permutations must be >= 1");
  if (!method.empty() && !parse_method(method)) throw UsageError("unknown method '" + method + "'");
}

std::map<std::string, std::string> parse_config(const std::string& text, const std::string& source) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos) throw UsageError(source + ":" + std::to_string(lineno) + ": expected key = value");
    out[std::string(trim(t.substr(0, eq)))] = std::string(trim(t.substr(eq + 1)));
  }
  return out;
}

void apply_config(RunConfig& cfg, const std::map<std::string, std::string>& values) {
  for (const auto& [raw, value] : values) {
    std::string key = raw;
    std::replace(key.begin(), key.end(), '_', '-');
    if (key == "method") cfg.method = value;
    else if (key == "subject-dir") cfg.subject_dir = value;
    else if (key == "corpus") cfg.corpus = value;
    else if (key == "article") cfg.article = value;
    else if (key == "nouns-dir") cfg.nouns_dir = value;
    else if (key == "ratings") cfg.ratings = value;
    else if (key == "annotations") cfg.annotations = value;
    else if (key == "tolerances") cfg.tolerances = value;
    else if (key == "out") cfg.out = value;
    else if (key == "min-articles") cfg.min_articles = parse_config_value<std::size_t>(key, value);
    else if (key == "svd-k") cfg.svd_k = parse_config_value<std::size_t>(key, value);
    else if (key == "keyword-cap") cfg.keyword_cap = parse_config_value<std::size_t>(key, value);
    else if (key == "twenty-percent-fraction") cfg.twenty_percent_fraction = parse_config_value<double>(key, value);
    else if (key == "jump-sigma") cfg.jump_sigma = parse_config_value<double>(key, value);
    else if (key == "seed") cfg.seed = parse_config_value<std::uint64_t>(key, value);
    else if (key == "permutations") cfg.permutations = parse_config_value<std::size_t>(key, value);
    else throw UsageError("unknown config key '" + key + "'");
  }
}

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::string ingest_report(const SubjectSet& subject) {
  std::string out = "corpus_id\tsubject\tarticles\tduplicates\taccepted\n";
  for (const auto& c : subject.corpuses()) {
    out += c.id() + "\t" + c.subject() + "\t" + std::to_string(c.articles().size()) + "\t" +
           std::to_string(c.duplicate_count()) + "\t" + (c.accepted() ? "true" : "false") + "\n";
  }
  return out;
}

std::vector<PredictionRow> predict(const SubjectSet& subject, Method method, const RunConfig& cfg,
                                   std::ostream* warnings) {
  const auto corpora = prepare_all(subject, cfg);
  const bool slm = method == Method::SlmArticle || method == Method::SlmCorpus;
  SubjectModel model;
  if (slm) model = build_subject_model(corpora);
  const auto opts = novelty_options(cfg);

  std::vector<PredictionRow> rows;
  std::size_t accepted = 0;
  for (const auto& corpus : corpora) {
    if (!corpus.accepted) {
      if (warnings) *warnings << "skipping corpus '" << corpus.id << "': not accepted\n";
      continue;
    }
    ++accepted;
    KeywordWeights corpus_weights;
    DocModel corpus_ideal;
    if (method == Method::NoveltyCorpus) corpus_weights = corpus_keyword_weights(corpus, opts);
    if (method == Method::SlmCorpus) corpus_ideal = doc_model(corpus);

    for (const auto& article : corpus.articles) {
      BreakPoint bp;
      try {
        switch (method) {
          case Method::NoveltyArticle:
            bp = predict_novelty(article, article_keyword_weights(article, opts), method);
            break;
          case Method::NoveltyCorpus:
            bp = predict_novelty(article, corpus_weights, method);
            break;
          case Method::SlmArticle:
            bp = predict_slm(article, doc_model(article), model, method, cfg.jump_sigma);
            break;
          case Method::SlmCorpus:
            bp = predict_slm(article, corpus_ideal, model, method, cfg.jump_sigma);
            break;
          default:
            bp = predict_baseline(article, method, cfg.twenty_percent_fraction);
            break;
        }
      } catch (const PreconditionError& e) {
        throw PreconditionError("article '" + article.id + "': " + e.what());
      }
      bp.article_id = article.id;
      rows.push_back({article.id, corpus.id, std::move(bp)});
    }
  }
  if (accepted == 0) throw PreconditionError("no accepted corpus (min-articles " + std::to_string(cfg.min_articles) + ")");
  std::sort(rows.begin(), rows.end(), [](const PredictionRow& a, const PredictionRow& b) {
    return std::tie(a.article_id, a.corpus_id) < std::tie(b.article_id, b.corpus_id);
  });
  return rows;
}

std::string format_predictions(const std::vector<PredictionRow>& rows) {
  std::string out;
  for (const auto& r : rows) {
    out += r.article_id + "\t" + std::string(method_name(r.breakpoint.method)) + "\t" +
           std::to_string(r.breakpoint.sentence_index) + "\t" + (r.breakpoint.fallback ? "true" : "false") + "\n";
  }
  return out;
}

ScoreCurve curve_for(const SubjectSet& subject, Method method, const std::string& article_id, const RunConfig& cfg) {
  if (is_baseline(method)) throw UsageError("baseline methods have no curve");
  if (article_id.empty()) throw UsageError("--article is required");
  const auto corpora = prepare_all(subject, cfg);
  const PreparedCorpus* home = nullptr;
  const PreparedArticle* article = nullptr;
  for (const auto& c : corpora) {
    if ((article = c.find(article_id))) {
      home = &c;
      break;
    }
  }
  if (!article) throw ValidationError("unknown article '" + article_id + "'");
  if (uses_corpus(method) && !home->accepted) throw PreconditionError("corpus '" + home->id + "' is not accepted");

  const auto opts = novelty_options(cfg);
  switch (method) {
    case Method::NoveltyArticle:
      return novelty_curve(article->tokens, article_keyword_weights(*article, opts), method);
    case Method::NoveltyCorpus:
      return novelty_curve(article->tokens, corpus_keyword_weights(*home, opts), method);
    case Method::SlmArticle:
      return kl_curve(article->tokens, doc_model(*article), build_subject_model(corpora), method);
    default:
      return kl_curve(article->tokens, doc_model(*home), build_subject_model(corpora), method);
  }
}

std::string format_curve(const ScoreCurve& curve) {
  std::string out = "sentence_index,value\n";
  for (std::size_t i = 0; i < curve.values.size(); ++i) {
    out += std::to_string(i + 1) + "," + format_number(curve.values[i]) + "\n";
  }
  return out;
}

std::string stats_report(const SubjectSet& subject, const RunConfig& cfg) {
  const auto corpora = prepare_all(subject, cfg);
  std::vector<std::pair<std::string, ReadabilityStats>> rows;
  for (const auto& c : corpora) {
    for (const auto& a : c.articles) {
      try {
        rows.emplace_back(a.id, readability(a));
      } catch (const DegenerateInputError& e) {
        throw DegenerateInputError("article '" + a.id + "': " + e.what());
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out = "article_id\tsentences\twords\tsyllables\tcomplex_words\tgrade_level\treading_ease\tfog_index\n";
  for (const auto& [id, st] : rows) {
    out += id + "\t" + std::to_string(st.sentence_count) + "\t" + std::to_string(st.word_count) + "\t" +
           std::to_string(st.syllable_count) + "\t" + std::to_string(st.complex_word_count) + "\t" +
           format_number(st.grade_level) + "\t" + format_number(st.reading_ease) + "\t" + format_number(st.fog_index) +
           "\n";
  }
  return out;
}

std::string eval_report(const RunConfig& cfg, const SubjectSet* subject) {
  if (cfg.ratings.empty() && cfg.annotations.empty()) throw UsageError("eval needs --ratings and/or --annotations");
  std::string out;

  std::vector<PreparedCorpus> corpora;
  std::map<std::string, std::size_t> sentence_counts;
  if (subject) {
    corpora = prepare_all(*subject, cfg);
    for (const auto& c : corpora) {
      for (const auto& a : c.articles) sentence_counts.emplace(a.id, a.sentence_count());
    }
  }

  if (!cfg.annotations.empty()) {
    const auto sets = load_annotations(cfg.annotations);
    const auto tolerances = parse_tolerances(cfg.tolerances);
    const auto table = agreement_table(sets, tolerances, subject ? &sentence_counts : nullptr);
    out += "== Agreement (" + std::to_string(table.article_count) + " articles) ==\n";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header = {"tolerance", "none"};
    for (std::size_t level = 2; level <= table.max_level; ++level) header.push_back(std::to_string(level));
    rows.push_back(header);
    for (std::size_t r = 0; r < tolerances.size(); ++r) {
      std::vector<std::string> row = {std::to_string(tolerances[r])};
      for (std::size_t level = 1; level <= table.max_level; ++level) row.push_back(std::to_string(table.count(r, level)));
      rows.push_back(row);
    }
    out += render_table(rows);
  }

  if (!cfg.ratings.empty()) {
    const auto records = load_ratings(cfg.ratings);
    if (records.empty()) throw ValidationError(cfg.ratings + ": no rating records");
    std::map<std::string, std::vector<double>> by_method;
    for (const auto& r : records) by_method[r.method].push_back(static_cast<double>(r.rating));

    if (!out.empty()) out += "\n";
    out += "== Ratings by method ==\n";
    std::vector<std::vector<std::string>> rows = {{"method", "n", "mean", "sd"}};
    for (const auto& [m, v] : by_method) {
      rows.push_back({m, std::to_string(v.size()), format_number(mean(v)), format_number(sample_sd(v))});
    }
    out += render_table(rows);

    std::vector<std::vector<double>> groups;
    std::vector<std::string> names;
    for (const auto& [m, v] : by_method) {
      if (v.size() >= 2) {
        groups.push_back(v);
        names.push_back(m);
      }
    }
    out += "\n== ANOVA ==\n";
    if (groups.size() < 2) {
      out += "needs at least 2 methods with 2 ratings each\n";
    } else {
      try {
        Rng rng(cfg.seed);
        const auto a = one_way_anova(groups, rng, cfg.permutations);
        out += render_table({{"F", "df_between", "df_within", "p"},
                             {format_number(a.f), std::to_string(a.df_between), std::to_string(a.df_within),
                              format_number(a.p)}});
      } catch (const UndefinedStatisticError&) {
        out += "undefined (no variance)\n";
      }
    }

    out += "\n== Pairwise t-tests ==\n";
    std::vector<std::vector<std::string>> trows = {{"method_a", "method_b", "t", "df", "p"}};
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (std::size_t j = i + 1; j < groups.size(); ++j) {
        try {
          Rng rng(cfg.seed);
          const auto t = t_test(groups[i], groups[j], rng, cfg.permutations);
          trows.push_back({names[i], names[j], format_number(t.t), std::to_string(t.df), format_number(t.p)});
        } catch (const UndefinedStatisticError&) {
          trows.push_back({names[i], names[j], "undefined", std::to_string(groups[i].size() + groups[j].size() - 2), "-"});
        }
      }
    }
    out += render_table(trows);

    const auto hist = rating_bins(records);
    out += "\n== Break position by rating class (fraction of class) ==\n";
    std::vector<std::vector<std::string>> hrows = {{"bin", "too-short", "balanced", "too-long"}};
    for (std::size_t b = 0; b < hist.bins; ++b) {
      if (hist.counts[0][b] + hist.counts[1][b] + hist.counts[2][b] == 0) continue;
      const std::string label = "[" + format_fixed(static_cast<double>(b) * hist.bin_width) + "," +
                                format_fixed(static_cast<double>(b + 1) * hist.bin_width) + ")";
      hrows.push_back({label, format_number(hist.fractions[0][b]), format_number(hist.fractions[1][b]),
                       format_number(hist.fractions[2][b])});
    }
    out += render_table(hrows);

    if (subject) {
      std::map<std::string, std::vector<double>> by_article;
      for (const auto& r : records) by_article[r.article_id].push_back(static_cast<double>(r.rating));
      std::vector<double> ratings, grade, ease, fog;
      for (const auto& c : corpora) {
        for (const auto& a : c.articles) {
          auto it = by_article.find(a.id);
          if (it == by_article.end()) continue;
          const auto st = readability(a);
          ratings.push_back(mean(it->second));
          grade.push_back(st.grade_level);
          ease.push_back(st.reading_ease);
          fog.push_back(st.fog_index);
        }
      }
      out += "\n== Spearman: mean rating vs readability (" + std::to_string(ratings.size()) + " articles) ==\n";
      std::vector<std::vector<std::string>> srows = {{"index", "rho"}};
      const std::pair<const char*, const std::vector<double>*> indices[] = {
          {"grade_level", &grade}, {"reading_ease", &ease}, {"fog_index", &fog}};
      for (const auto& [name, values] : indices) {
        std::string rho = "undefined";
        if (ratings.size() >= 3) {
          try {
            rho = format_number(spearman(ratings, *values));
          } catch (const UndefinedStatisticError&) {
          }
        }
        srows.push_back({name, rho});
      }
      out += render_table(srows);
    }
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::filesystem::path>& config_path) {
  RunConfig cfg;
  CLI::App app{"Predict lower-bound pagination break points for news articles"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--subject-dir", cfg.subject_dir, "Directory of <corpus_id>.jsonl files for one subject");
    sub->add_option("--corpus", cfg.corpus, "Single corpus file");
    sub->add_option("--min-articles", cfg.min_articles, "Unique articles needed to accept a corpus");
    sub->add_option("--nouns-dir", cfg.nouns_dir, "Directory of <article_id>.tsv noun annotations");
    sub->add_option("--out", cfg.out, "Write output here instead of stdout");
  };
  std::vector<std::string> names;
  for (Method m : all_methods()) names.emplace_back(method_name(m));
  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--method", cfg.method, "Prediction method")->check(CLI::IsMember(names));
    sub->add_option("--svd-k", cfg.svd_k, "Singular triplets used for keyword weights");
    sub->add_option("--keyword-cap", cfg.keyword_cap, "Keywords retained after SVD");
    sub->add_option("--twenty-percent-fraction", cfg.twenty_percent_fraction, "Fraction for the twenty-percent baseline");
    sub->add_option("--jump-sigma", cfg.jump_sigma, "Standard deviations that make a KL jump");
  };

  auto* ingest = app.add_subcommand("ingest", "Validate corpus files and summarize them");
  add_common(ingest);
  auto* predict_cmd = app.add_subcommand("predict", "Predict one break point per article");
  add_common(predict_cmd);
  add_model(predict_cmd);
  auto* curve = app.add_subcommand("curve", "Print the novelty or KL curve of one article");
  add_common(curve);
  add_model(curve);
  curve->add_option("--article", cfg.article, "Article id");
  auto* stats = app.add_subcommand("stats", "Readability statistics per article");
  add_common(stats);
  auto* eval = app.add_subcommand("eval", "Agreement, rating and significance report");
  add_common(eval);
  eval->add_option("--ratings", cfg.ratings, "Rating file");
  eval->add_option("--annotations", cfg.annotations, "Annotation file");
  eval->add_option("--tolerances", cfg.tolerances, "Comma-separated agreement tolerances");
  eval->add_option("--seed", cfg.seed, "Seed for permutation tests");
  eval->add_option("--permutations", cfg.permutations, "Shuffles per permutation test");

  try {
    if (config_path) apply_config(cfg, parse_config(read_text(*config_path), config_path->string()));
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    cfg.validate();
    std::string text;
    if (ingest->parsed()) {
      const auto subject = load_input(cfg);
      if (!cfg.out.empty()) {
        std::filesystem::create_directories(cfg.out);
        for (const auto& c : subject.corpuses()) write_corpus(c, std::filesystem::path(cfg.out) / (c.id() + ".jsonl"));
      }
      out << ingest_report(subject);
      return kExitOk;
    }
    if (predict_cmd->parsed()) {
      const Method method = require_method(cfg);
      const auto subject = load_input(cfg);
      text = format_predictions(predict(subject, method, cfg, &err));
    } else if (curve->parsed()) {
      const Method method = require_method(cfg);
      if (is_baseline(method)) throw UsageError("baseline methods have no curve");
      const auto subject = load_input(cfg);
      text = format_curve(curve_for(subject, method, cfg.article, cfg));
    } else if (stats->parsed()) {
      const auto subject = load_input(cfg);
      text = stats_report(subject, cfg);
    } else if (eval->parsed()) {
      std::optional<SubjectSet> subject;
      if (!cfg.subject_dir.empty() || !cfg.corpus.empty()) subject = load_input(cfg);
      text = eval_report(cfg, subject ? &*subject : nullptr);
    }
    emit(text, cfg, out);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::optional<std::filesystem::path> config;
  if (const char* env = std::getenv("PAGINATOR_CONFIG"); env && *env) config = env;
  return run(args, std::cout, std::cerr, config);
}

}  // namespace paginator::cli
