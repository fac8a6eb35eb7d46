// qcpg-kit: command-line front end for the quality-controlled paraphrase
// toolkit. Data goes to files or standard output, diagnostics to standard
// error. Each library error class has its own exit status (see exit_status).

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcpg/control_selection.hpp"
#include "qcpg/dataset.hpp"
#include "qcpg/errors.hpp"
#include "qcpg/evaluation.hpp"
#include "qcpg/generator.hpp"
#include "qcpg/parse_tree.hpp"
#include "qcpg/quality.hpp"
#include "qcpg/reference_predictor.hpp"
#include "qcpg/semantic.hpp"
#include "qcpg/synthetic.hpp"

namespace {

using namespace qcpg;

constexpr int kExitUsage = 2;
constexpr int kExitUnexpected = 3;
constexpr int kErrorExitBase = 10;

// 10 + the error code, so every class is distinct and above usage errors.
int exit_status(ErrorCode code) { return kErrorExitBase + static_cast<int>(code); }

constexpr const char* kScoredHeader = "source\ttarget\tcluster_id\tq_sem\tq_syn\tq_lex";
constexpr const char* kGeneratedHeader = "source\tsource_tree\tparaphrase\tparaphrase_tree";

struct Common {
  std::uint64_t seed = 42;
  std::string scorer = "builtin";
  std::string generator = "identity";
  std::string out;  // empty or "-" means standard output
};

void warn(const std::string& message) { std::cerr << "qcpg-kit: warning: " << message << '\n'; }

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r\n") == std::string::npos; }

double parse_number(const std::string& field, const std::string& what, std::size_t line_no) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(v)) {
    throw LocatedError(ErrorCode::kMalformedRecord, "bad " + what + " '" + field + "'", line_no);
  }
  return v;
}

// Writes to --out or standard output.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw Error(ErrorCode::kIoError, "cannot write '" + path + "'");
      path_ = path;
    }
  }
  std::ostream& stream() { return path_.empty() ? std::cout : file_; }
  void close() {
    stream().flush();
    if (!stream()) throw Error(ErrorCode::kIoError, "write failed for '" + (path_.empty() ? "stdout" : path_) + "'");
  }

 private:
  std::ofstream file_;
  std::string path_;
};

std::optional<ParseTree> parse_optional_tree(const std::string& text, const std::string& what) {
  if (blank(text)) return std::nullopt;
  try {
    return parse_bracketed(text);
  } catch (const Error& e) {
    warn(what + ": " + e.what());
    return std::nullopt;
  }
}

// --- score ------------------------------------------------------------------

struct ScoreArgs {
  std::string pairs;
  std::string source_trees;
  std::string target_trees;
};

int cmd_score(const Common& common, const ScoreArgs& args) {
  std::ifstream in(args.pairs);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + args.pairs + "'");
  auto pairs = read_pairs_tsv(in);
  auto apply_sidecar = [&](const std::string& path, bool source) {
    if (path.empty()) return;
    const auto lines = read_lines(path);
    if (lines.size() != pairs.size()) {
      throw Error(ErrorCode::kLengthMismatch, "tree file '" + path + "' has " + std::to_string(lines.size()) +
                                                  " lines for " + std::to_string(pairs.size()) + " pairs");
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) (source ? pairs[i].source_tree : pairs[i].target_tree) = lines[i];
  };
  apply_sidecar(args.source_trees, true);
  apply_sidecar(args.target_trees, false);

  const auto scorer = SemanticScorer::parse(common.scorer);
  std::vector<std::size_t> kept;
  std::vector<std::pair<ParseTree, ParseTree>> trees;
  std::vector<SentencePairView> views;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    const std::string where = "pair " + std::to_string(i + 1);
    auto ts = parse_optional_tree(p.source_tree.value_or(""), where + " source tree");
    auto tt = parse_optional_tree(p.target_tree.value_or(""), where + " target tree");
    if (!ts || !tt) {
      warn(where + " skipped: missing parse");
      continue;
    }
    kept.push_back(i);
    trees.emplace_back(std::move(*ts), std::move(*tt));
    views.emplace_back(p.source, p.target);
  }
  const auto raws = raw_scores(scorer, views);

  Output out(common.out);
  out.stream() << kScoredHeader << '\n';
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const auto& p = pairs[kept[k]];
    const auto q = quality_vector_from_raw(raws[k], p.source, p.target, trees[k].first, trees[k].second);
    out.stream() << p.source << '\t' << p.target << '\t' << p.cluster_id << '\t' << fixed(q.sem, 2) << '\t'
                 << fixed(q.syn, 2) << '\t' << fixed(q.lex, 2) << '\n';
  }
  out.close();
  return 0;
}

// --- split ------------------------------------------------------------------

struct SplitArgs {
  std::string clusters;
  std::size_t train = 0, dev = 0, test = 0;
  std::string mode = "all_unordered";
  std::string output_mode = "all_ordered";
};

int cmd_split(const Common& common, const SplitArgs& args) {
  const auto clusters = load_clusters(args.clusters);
  const PairMode quota_mode = parse_pair_mode(args.mode);
  const PairMode output_mode = parse_pair_mode(args.output_mode);
  const auto split = split_clusters(clusters, {args.train, args.dev, args.test}, common.seed, quota_mode);

  const std::filesystem::path dir = common.out.empty() || common.out == "-" ? "." : common.out;
  std::filesystem::create_directories(dir);
  std::map<std::string, const Cluster*> by_id;
  for (const auto& c : clusters) by_id[c.cluster_id] = &c;
  auto write = [&](const char* name, const std::vector<std::string>& ids) {
    std::vector<SentencePair> pairs;
    for (const auto& id : ids) {
      auto p = extract_pairs(*by_id.at(id), output_mode);
      pairs.insert(pairs.end(), p.begin(), p.end());
    }
    Output out((dir / (std::string(name) + ".tsv")).string());
    write_pairs_tsv(out.stream(), pairs);
    out.close();
    std::cerr << "qcpg-kit: " << name << ": " << ids.size() << " clusters, " << pairs.size() << " "
              << pair_mode_name(output_mode) << " pairs\n";
  };
  write("train", split.train_clusters);
  write("dev", split.dev_clusters);
  write("test", split.test_clusters);
  return 0;
}

// --- train-qp / predict-qp ---------------------------------------------------

std::vector<QualitySample> read_scored(const std::string& path) {
  const auto lines = read_lines(path);
  if (lines.empty() || lines.front() != kScoredHeader) {
    throw LocatedError(ErrorCode::kMalformedRecord, "'" + path + "' is not a scored pairs TSV", 1);
  }
  std::vector<QualitySample> samples;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto f = split_tabs(lines[i]);
    if (f.size() != 6) throw LocatedError(ErrorCode::kMalformedRecord, "scored rows need 6 columns", i + 1);
    samples.push_back({f[0],
                       {parse_number(f[3], "q_sem", i + 1), parse_number(f[4], "q_syn", i + 1),
                        parse_number(f[5], "q_lex", i + 1)}});
  }
  return samples;
}

struct TrainArgs {
  std::string train;
  std::string dev;
  double lambda = kDefaultLambda;
};

int cmd_train_qp(const Common& common, const TrainArgs& args) {
  if (common.out.empty() || common.out == "-") {
    throw Error(ErrorCode::kInvalidArgument, "train-qp needs --out for the model file");
  }
  const auto train = read_scored(args.train);
  const auto model = fit_reference_model(train, args.lambda);
  save_model(common.out, model);
  const auto& eval = args.dev.empty() ? train : read_scored(args.dev);
  const char* name = args.dev.empty() ? "train" : "dev";
  const auto mse = evaluate_mse(model, eval);
  const auto base = constant_predictor_mse(mean_quality(train), eval);
  std::cout << "set\tmse_sem\tmse_syn\tmse_lex\n";
  std::cout << name << "\t" << fixed(mse[0], 4) << '\t' << fixed(mse[1], 4) << '\t' << fixed(mse[2], 4) << '\n';
  std::cout << name << "_mean_predictor\t" << fixed(base[0], 4) << '\t' << fixed(base[1], 4) << '\t'
            << fixed(base[2], 4) << '\n';
  return 0;
}

struct PredictArgs {
  std::string model;
  std::string sentences;
};

int cmd_predict_qp(const Common& common, const PredictArgs& args) {
  const auto model = load_model(args.model);
  Output out(common.out);
  out.stream() << "sentence\tr_sem\tr_syn\tr_lex\n";
  for (const auto& s : read_lines(args.sentences)) {
    const auto r = model.predict(s);
    out.stream() << s << '\t' << fixed(r.sem, 4) << '\t' << fixed(r.syn, 4) << '\t' << fixed(r.lex, 4) << '\n';
  }
  out.close();
  return 0;
}

// --- grid / select -----------------------------------------------------------

GridSpec::Axis parse_axis(const std::string& text) {
  // min:step:max
  std::vector<double> v;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    v.push_back(parse_number(text.substr(start, colon == std::string::npos ? std::string::npos : colon - start),
                             "grid axis", 0));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (v.size() != 3) throw Error(ErrorCode::kInvalidArgument, "grid axis must be min:step:max, got '" + text + "'");
  return {v[0], v[1], v[2]};
}

DevSources parse_dev_sources(const std::string& s) {
  if (s == "all") return DevSources::kAll;
  if (s == "first") return DevSources::kFirst;
  throw Error(ErrorCode::kInvalidArgument, "dev sources must be 'all' or 'first'");
}

struct GridArgs {
  std::string clusters;
  std::string model;
  std::string sem = "0:5:50", syn = "0:5:50", lex = "0:5:50";
  std::string dev_sources = "all";
};

std::vector<DevItem> load_dev(const std::string& path, const std::string& sources) {
  std::vector<std::string> skipped;
  auto dev = make_dev_items(load_clusters(path), parse_dev_sources(sources), &skipped);
  for (const auto& s : skipped) warn("sentence " + s + " has no parse; skipped");
  return dev;
}

int cmd_grid(const Common& common, const GridArgs& args) {
  const auto scorer = SemanticScorer::parse(common.scorer);
  const auto generator = GeneratorSpec::parse(common.generator, common.seed);
  const GridSpec spec{parse_axis(args.sem), parse_axis(args.syn), parse_axis(args.lex)};
  QualityEstimator estimator(generator, load_model(args.model), load_dev(args.clusters, args.dev_sources), scorer);
  const auto grid = grid_search(estimator, spec.offsets());
  for (const auto& w : grid.warnings) warn(w);
  Output out(common.out);
  write_heatmap_csv(out.stream(), grid);
  out.close();
  std::cerr << "qcpg-kit: " << grid.rows.size() << " offsets, dev std (sem, syn, lex) = (" << fixed(grid.dim_std[0], 4)
            << ", " << fixed(grid.dim_std[1], 4) << ", " << fixed(grid.dim_std[2], 4) << ")\n";
  return 0;
}

struct SelectArgs {
  std::string heatmap;
  double baseline_sem = 0.0;
  double margin = kDefaultSemanticMargin;
};

int cmd_select(const Common& common, const SelectArgs& args) {
  std::ifstream in(args.heatmap);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + args.heatmap + "'");
  const auto grid = read_heatmap_csv(in);
  const auto point = select_operation_point(grid, {args.margin, args.baseline_sem});
  Output out(common.out);
  out.stream() << operation_point_to_json(point) << '\n';
  out.close();
  return 0;
}

// --- generate / eval ---------------------------------------------------------

struct GenerateArgs {
  std::string clusters;
  std::string model;
  std::string point;
  std::vector<double> offset;
  std::string dev_sources = "first";
};

int cmd_generate(const Common& common, const GenerateArgs& args) {
  const auto scorer = SemanticScorer::parse(common.scorer);
  const auto generator = GeneratorSpec::parse(common.generator, common.seed);
  Offset offset;
  if (!args.point.empty()) {
    std::ifstream in(args.point);
    if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + args.point + "'");
    std::stringstream text;
    text << in.rdbuf();
    offset = operation_point_from_json(text.str()).offset;
  } else if (!args.offset.empty()) {
    offset = {args.offset.at(0), args.offset.at(1), args.offset.at(2)};
  }
  const auto model = load_model(args.model);
  const auto dev = load_dev(args.clusters, args.dev_sources);

  std::vector<ControlVector> controls;
  for (const auto& item : dev) controls.push_back(apply_offset(model.predict(item.sentence()), offset));

  std::vector<Generation> outputs(dev.size());
  std::vector<bool> ok(dev.size(), true);
  if (generator.kind == GeneratorSpec::Kind::kExternalCommand) {
    std::vector<std::pair<std::string, ControlVector>> batch;
    for (std::size_t i = 0; i < dev.size(); ++i) batch.emplace_back(dev[i].sentence(), controls[i]);
    const auto raw = external_generate(generator.command, batch);
    for (std::size_t i = 0; i < dev.size(); ++i) {
      outputs[i].text = raw[i].text;
      if (raw[i].tree) {
        outputs[i].tree = parse_optional_tree(*raw[i].tree, "output " + std::to_string(i + 1));
      } else if (auto j = dev[i].cluster->index_of(raw[i].text)) {
        outputs[i].tree = dev[i].cluster->trees[*j];
      }
    }
  } else {
    for (std::size_t i = 0; i < dev.size(); ++i) {
      try {
        outputs[i] = generate(generator, dev[i].sentence(), controls[i], dev[i].cluster.get(), scorer);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kEmptyContext) throw;
        warn("no paraphrase for '" + dev[i].sentence() + "': " + e.what());
        ok[i] = false;
      }
    }
  }

  Output out(common.out);
  out.stream() << kGeneratedHeader << '\n';
  for (std::size_t i = 0; i < dev.size(); ++i) {
    out.stream() << dev[i].sentence() << '\t' << render(*dev[i].tree()) << '\t' << (ok[i] ? outputs[i].text : "")
                 << '\t' << (ok[i] && outputs[i].tree ? render(*outputs[i].tree) : "") << '\n';
  }
  out.close();
  return 0;
}

struct GeneratedFile {
  std::vector<std::string> sources;
  std::vector<std::optional<ParseTree>> source_trees;
  std::vector<std::string> outputs;
  std::vector<std::optional<ParseTree>> output_trees;
};

GeneratedFile read_generated(const std::string& path) {
  const auto lines = read_lines(path);
  if (lines.empty() || lines.front() != kGeneratedHeader) {
    throw LocatedError(ErrorCode::kMalformedRecord, "'" + path + "' is not a generate output TSV", 1);
  }
  GeneratedFile g;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto f = split_tabs(lines[i]);
    if (f.size() != 4) throw LocatedError(ErrorCode::kMalformedRecord, "generated rows need 4 columns", i + 1);
    const std::string where = path + ":" + std::to_string(i + 1);
    g.sources.push_back(f[0]);
    g.source_trees.push_back(parse_optional_tree(f[1], where));
    g.outputs.push_back(f[2]);
    g.output_trees.push_back(parse_optional_tree(f[3], where));
  }
  return g;
}

struct EvalArgs {
  std::vector<std::string> systems;  // name=path
  std::string references;
};

int cmd_eval(const Common& common, const EvalArgs& args) {
  const auto scorer = SemanticScorer::parse(common.scorer);
  std::vector<SystemOutput> systems;
  std::optional<GeneratedFile> first;
  for (const auto& spec : args.systems) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::kInvalidArgument, "--system expects name=path, got '" + spec + "'");
    }
    auto g = read_generated(spec.substr(eq + 1));
    if (first && g.sources != first->sources) {
      throw Error(ErrorCode::kLengthMismatch, "system '" + spec.substr(0, eq) + "' was run on different sources");
    }
    systems.push_back({spec.substr(0, eq), g.outputs, g.output_trees});
    if (!first) first = std::move(g);
  }
  std::optional<std::vector<std::vector<std::string>>> references;
  if (!args.references.empty()) {
    references.emplace();
    for (const auto& line : read_lines(args.references)) references->push_back(split_tabs(line));
  }
  EvalReport report;
  if (first) report = evaluate_systems(systems, first->sources, first->source_trees, references, scorer);
  Output out(common.out);
  write_report_tsv(out.stream(), report);
  out.close();
  return 0;
}

// --- synth -------------------------------------------------------------------

struct SynthArgs {
  std::size_t clusters = 50;
  std::size_t size = 6;
};

int cmd_synth(const Common& common, const SynthArgs& args) {
  const auto corpus = synthetic_corpus({args.clusters, args.size, common.seed});
  Output out(common.out);
  write_clusters(out.stream(), corpus);
  out.close();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcpg-kit: paraphrase quality metrics, control tokens and operation-point search"};
  app.set_config("--config", "", "Key-value config file (TOML/INI); command-line flags win");
  app.require_subcommand(1);

  Common common;
  app.add_option("--seed", common.seed, "Run seed")->capture_default_str();
  app.add_option("--scorer", common.scorer, "builtin | external:<command>")->capture_default_str();
  app.add_option("--generator", common.generator, "identity | retrieval | noisy:<std> | external:<command>")
      ->capture_default_str();
  app.add_option("--out", common.out, "Output file (directory for split); default standard output");

  auto* score = app.add_subcommand("score", "Append quality vectors to a pairs TSV");
  ScoreArgs score_args;
  score->add_option("pairs", score_args.pairs, "Pairs TSV")->required();
  score->add_option("--source-trees", score_args.source_trees, "Source parses, one per pair line");
  score->add_option("--target-trees", score_args.target_trees, "Target parses, one per pair line");

  auto* split = app.add_subcommand("split", "Leak-free train/dev/test split of a cluster corpus");
  SplitArgs split_args;
  split->add_option("clusters", split_args.clusters, "Cluster JSONL")->required();
  split->add_option("--train", split_args.train, "Train quota in pairs")->required();
  split->add_option("--dev", split_args.dev, "Dev quota in pairs")->required();
  split->add_option("--test", split_args.test, "Test quota in pairs")->required();
  split->add_option("--mode", split_args.mode, "Pair mode for quotas")->capture_default_str();
  split->add_option("--output-mode", split_args.output_mode, "Pair mode for the written TSVs")
      ->capture_default_str();

  auto* train = app.add_subcommand("train-qp", "Fit the reference predictor on scored pairs");
  TrainArgs train_args;
  train->add_option("train", train_args.train, "Scored train pairs")->required();
  train->add_option("--dev", train_args.dev, "Scored dev pairs for the reported MSE");
  train->add_option("--lambda", train_args.lambda, "Ridge strength")->capture_default_str();

  auto* predict = app.add_subcommand("predict-qp", "Predict r(s) for sentences, one per line");
  PredictArgs predict_args;
  predict->add_option("--model", predict_args.model, "Model JSON")->required();
  predict->add_option("sentences", predict_args.sentences, "Sentence file")->required();

  auto* grid = app.add_subcommand("grid", "Offset grid search; writes the heatmap CSV");
  GridArgs grid_args;
  grid->add_option("clusters", grid_args.clusters, "Dev cluster JSONL with trees")->required();
  grid->add_option("--model", grid_args.model, "Reference model JSON")->required();
  grid->add_option("--sem", grid_args.sem, "Semantic axis min:step:max")->capture_default_str();
  grid->add_option("--syn", grid_args.syn, "Syntactic axis min:step:max")->capture_default_str();
  grid->add_option("--lex", grid_args.lex, "Lexical axis min:step:max")->capture_default_str();
  grid->add_option("--dev-sources", grid_args.dev_sources, "all | first")->capture_default_str();

  auto* select = app.add_subcommand("select", "Pick the operation point from a heatmap CSV");
  SelectArgs select_args;
  select->add_option("heatmap", select_args.heatmap, "Heatmap CSV")->required();
  select->add_option("--baseline-sem", select_args.baseline_sem, "Baseline semantic score")->required();
  select->add_option("--margin", select_args.margin, "Required semantic advantage")->capture_default_str();

  auto* gen = app.add_subcommand("generate", "Paraphrase every source at an operation point");
  GenerateArgs gen_args;
  gen->add_option("clusters", gen_args.clusters, "Cluster JSONL with trees")->required();
  gen->add_option("--model", gen_args.model, "Reference model JSON")->required();
  auto* point_opt = gen->add_option("--point", gen_args.point, "Operation point JSON");
  gen->add_option("--offset", gen_args.offset, "Offset sem syn lex")->expected(3)->excludes(point_opt);
  gen->add_option("--dev-sources", gen_args.dev_sources, "all | first")->capture_default_str();

  auto* eval = app.add_subcommand("eval", "Aggregate quality and BLEU report");
  EvalArgs eval_args;
  eval->add_option("--system", eval_args.systems, "name=generate-output.tsv (repeatable)")->required();
  eval->add_option("--references", eval_args.references, "TAB-separated references, one line per item");

  auto* synth = app.add_subcommand("synth", "Write a synthetic cluster corpus with gold parses");
  SynthArgs synth_args;
  synth->add_option("--clusters", synth_args.clusters, "Number of clusters")->capture_default_str();
  synth->add_option("--size", synth_args.size, "Sentences per cluster")->capture_default_str();

  for (auto* sub : {score, split, train, predict, grid, select, gen, eval, synth}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*score) return cmd_score(common, score_args);
    if (*split) return cmd_split(common, split_args);
    if (*train) return cmd_train_qp(common, train_args);
    if (*predict) return cmd_predict_qp(common, predict_args);
    if (*grid) return cmd_grid(common, grid_args);
    if (*select) return cmd_select(common, select_args);
    if (*gen) return cmd_generate(common, gen_args);
    if (*eval) return cmd_eval(common, eval_args);
    if (*synth) return cmd_synth(common, synth_args);
  } catch (const Error& e) {
    std::cerr << "qcpg-kit: error [" << error_code_name(e.code()) << "]: " << e.what() << '\n';
    return exit_status(e.code());
  } catch (const std::exception& e) {
    std::cerr << "qcpg-kit: unexpected error: " << e.what() << '\n';
    return kExitUnexpected;
  }
  return kExitUsage;
}
