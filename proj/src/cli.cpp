#include "theta/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "theta/generators.hpp"
#include "theta/serialize.hpp"

namespace theta {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerifyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string input = "-";
  std::string output;
  std::string certificate;
  std::string model;
  int r = 0;
  int w = 0;
  int k = 0;
  int d = 0;
  int delta = 0;
  int alpha = 0;
  int beta = 0;
  int n = 0;
  int m = -1;
  int rows = 0;
  int cols = 0;
  int origin = 0;
  long long z = 0;
  std::optional<std::uint64_t> seed;
  bool verify = false;
};

Multigraph load_graph(const std::string& path, std::istream& in) {
  if (path == "-") return read_edge_list(in);
  std::ifstream file(path);
  if (!file) throw IoError("cannot open '" + path + "'");
  return read_edge_list(file);
}

void emit(const Config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw IoError("cannot write '" + cfg.output + "'");
  file << text;
}

void param(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

// Round-trips the document through its text form before checking it.
void reverify(const Multigraph& g, const Json& doc) {
  const auto report = verify_document(g, Json::parse(render(doc)));
  if (!report) throw VerifyFailure(report.summary());
}

int cmd_girth(const Config& cfg, std::istream& in, std::ostream& out) {
  param(cfg.r >= 1, "girth needs r >= 1");
  const auto g = load_graph(cfg.input, in);
  const auto result = brute_theta_girth(g, cfg.r);
  emit(cfg, result.value ? std::to_string(*result.value) + "\n" : std::string("infinity\n"), out);
  return kExitOk;
}

int cmd_thm4(const Config& cfg, std::istream& in, std::ostream& out) {
  param(cfg.r >= 2, "thm4 needs r >= 2");
  param(cfg.delta >= 3 * cfg.r, "thm4 needs delta >= 3r");
  param(cfg.z >= cfg.r, "thm4 needs z >= r");
  const auto g = load_graph(cfg.input, in);
  const auto outcome = run_theorem4(g, cfg.r, cfg.delta, cfg.z);
  const auto doc = outcome_document(outcome, cfg.r, cfg.delta, cfg.z);
  emit(cfg, render(doc), out);
  if (cfg.verify) reverify(g, doc);
  return kExitOk;
}

int cmd_thm5(const Config& cfg, std::istream& in, std::ostream& out) {
  param(cfg.r >= 2, "thm5 needs r >= 2");
  param(cfg.w >= 1, "thm5 needs w >= 1");
  param(cfg.z > cfg.r, "thm5 needs z > r");
  const auto g = load_graph(cfg.input, in);
  const auto outcome = run_theorem5(g, cfg.r, cfg.w, cfg.z);
  const auto doc = outcome_document(outcome, cfg.r, cfg.w, cfg.z);
  emit(cfg, render(doc), out);
  if (cfg.verify) reverify(g, doc);
  return kExitOk;
}

int cmd_pack(const Config& cfg, std::istream& in, std::ostream& out) {
  param(cfg.k >= 1, "pack needs k >= 1");
  param(cfg.r >= 1, "pack needs r >= 1");
  const auto g = load_graph(cfg.input, in);
  param(g.min_degree() >= cfg.k * (cfg.r + 1) - 1, "pack needs minimum degree >= k(r+1)-1");
  const auto packing = pack_k_theta(g, cfg.k, cfg.r, cfg.seed.value_or(1));
  const auto doc = packing_document(packing, cfg.k, cfg.r);
  emit(cfg, render(doc), out);
  if (cfg.verify) reverify(g, doc);
  return kExitOk;
}

int cmd_gen(const Config& cfg, std::ostream& out) {
  const auto& model = cfg.model;
  const bool random = model == "random-regular" || model == "random-multigraph";
  param(!random || cfg.seed.has_value(), "model '" + model + "' needs --seed");
  Multigraph g;
  if (model == "path") g = path_graph(cfg.n);
  else if (model == "cycle") g = cycle_graph(cfg.n);
  else if (model == "clique") g = complete_graph(cfg.n);
  else if (model == "theta") g = theta_graph(cfg.r);
  else if (model == "grid") g = grid_graph(cfg.rows, cfg.cols);
  else if (model == "random-regular") g = random_regular(cfg.n, cfg.d, *cfg.seed);
  else if (model == "random-multigraph") g = random_multigraph(cfg.n, cfg.m < 0 ? cfg.n : cfg.m, *cfg.seed);
  else throw ParameterError("unknown model '" + model + "'");
  emit(cfg, to_edge_list(g), out);
  return kExitOk;
}

int cmd_verify(const Config& cfg, std::istream& in, std::ostream& out) {
  std::ifstream file(cfg.certificate);
  if (!file) throw IoError("cannot open '" + cfg.certificate + "'");
  Json doc;
  try {
    doc = Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw IoError(std::string("certificate is not valid JSON: ") + e.what());
  }
  const auto g = load_graph(cfg.input, in);
  VerifyReport report;
  try {
    report = verify_document(g, doc);
  } catch (const Json::exception& e) {
    report.fail(std::string("malformed certificate: ") + e.what());
  }
  emit(cfg, render(Json{{"ok", report.ok}, {"violations", report.violations}}), out);
  return report ? kExitOk : kExitVerify;
}

int cmd_decompose(const Config& cfg, std::istream& in, std::ostream& out) {
  const auto g = load_graph(cfg.input, in);
  param(g.valid_vertex(cfg.origin), "origin is not a vertex");
  const auto dd = distance_decomposition(g, cfg.origin);
  emit(cfg, render(to_json(dd)), out);
  return kExitOk;
}

int cmd_partition(const Config& cfg, std::istream& in, std::ostream& out) {
  param(cfg.d >= 1, "partition needs d >= 1");
  const auto g = load_graph(cfg.input, in);
  const auto gp = grouped_partition(g, cfg.d);
  emit(cfg, render(to_json(gp, g)), out);
  return kExitOk;
}

int cmd_loose(const Config& cfg, std::istream& in, std::ostream& out) {
  param(cfg.alpha >= 0 && cfg.beta >= 0, "loose needs alpha, beta >= 0");
  const auto g = load_graph(cfg.input, in);
  const auto result = check_loose_connectivity(g, cfg.alpha, cfg.beta);
  Json doc{{"loosely_connected", result.loosely_connected}, {"alpha", cfg.alpha}, {"beta", cfg.beta}};
  if (result.witness) {
    doc["witness"] = Json{{"a_side", result.witness->a_side},
                          {"b_side", result.witness->b_side},
                          {"separator", result.witness->separator}};
  }
  emit(cfg, render(doc), out);
  return kExitOk;
}

int cmd_bound_lemma(const Config& cfg, std::ostream& out) {
  param(cfg.r >= 2 && cfg.k >= cfg.r, "bound-lemma needs k >= r >= 2");
  emit(cfg, check_bound_lemma(cfg.r, cfg.k) ? "true\n" : "false\n", out);
  return kExitOk;
}

void error_record(std::ostream& err, const char* kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"theta-miner: small theta_r-models, protrusions and minors in multigraphs"};
  app.require_subcommand(1);
  auto input = [&](CLI::App* sub) { sub->add_option("graph", cfg.input, "edge-list file, '-' for stdin"); };
  auto output = [&](CLI::App* sub) { sub->add_option("-o,--output", cfg.output, "write the result here"); };

  auto* girth = app.add_subcommand("girth", "exact theta_r-girth by exhaustive search");
  girth->add_option("-r,--r", cfg.r)->required();
  input(girth);
  output(girth);

  auto* thm4 = app.add_subcommand("thm4", "theta model, low-degree vertex, or dense minor");
  thm4->add_option("-r,--r", cfg.r)->required();
  thm4->add_option("--delta", cfg.delta)->required();
  thm4->add_option("-z,--z", cfg.z)->required();
  thm4->add_flag("--verify", cfg.verify);
  input(thm4);
  output(thm4);

  auto* thm5 = app.add_subcommand("thm5", "theta model, edge-protrusion, or dense minor");
  thm5->add_option("-r,--r", cfg.r)->required();
  thm5->add_option("-w,--w", cfg.w)->required();
  thm5->add_option("-z,--z", cfg.z)->required();
  thm5->add_flag("--verify", cfg.verify);
  input(thm5);
  output(thm5);

  auto* pack = app.add_subcommand("pack", "k vertex-disjoint theta_r-models");
  pack->add_option("-k,--k", cfg.k)->required();
  pack->add_option("-r,--r", cfg.r)->required();
  pack->add_option("--seed", cfg.seed);
  pack->add_flag("--verify", cfg.verify);
  input(pack);
  output(pack);

  auto* gen = app.add_subcommand("gen", "generate an edge list");
  gen->add_option("--model", cfg.model)->required();
  gen->add_option("-n,--n", cfg.n);
  gen->add_option("-d,--d", cfg.d, "degree for random-regular");
  gen->add_option("-m,--m", cfg.m, "edge count for random-multigraph");
  gen->add_option("-r,--r", cfg.r, "bundle size for theta");
  gen->add_option("--rows", cfg.rows);
  gen->add_option("--cols", cfg.cols);
  gen->add_option("--seed", cfg.seed);
  output(gen);

  auto* verify = app.add_subcommand("verify", "re-check a certificate document");
  verify->add_option("--certificate", cfg.certificate)->required();
  input(verify);
  output(verify);

  auto* decompose = app.add_subcommand("decompose", "distance-decomposition from an origin");
  decompose->add_option("--origin", cfg.origin);
  input(decompose);
  output(decompose);

  auto* partition = app.add_subcommand("partition", "d-grouped partition with frontiers and ports");
  partition->add_option("-d,--d", cfg.d)->required();
  input(partition);
  output(partition);

  auto* loose = app.add_subcommand("loose", "(alpha,beta)-loose connectivity check");
  loose->add_option("--alpha", cfg.alpha)->required();
  loose->add_option("--beta", cfg.beta)->required();
  input(loose);
  output(loose);

  auto* bound = app.add_subcommand("bound-lemma", "exact check of the k(r+1)-1 degree bound");
  bound->add_option("-r,--r", cfg.r)->required();
  bound->add_option("-k,--k", cfg.k)->required();
  output(bound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    error_record(err, "usage", e.what());
    return kExitUsage;
  }

  try {
    if (girth->parsed()) return cmd_girth(cfg, in, out);
    if (thm4->parsed()) return cmd_thm4(cfg, in, out);
    if (thm5->parsed()) return cmd_thm5(cfg, in, out);
    if (pack->parsed()) return cmd_pack(cfg, in, out);
    if (gen->parsed()) return cmd_gen(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, in, out);
    if (decompose->parsed()) return cmd_decompose(cfg, in, out);
    if (partition->parsed()) return cmd_partition(cfg, in, out);
    if (loose->parsed()) return cmd_loose(cfg, in, out);
    if (bound->parsed()) return cmd_bound_lemma(cfg, out);
  } catch (const ParseError& e) {
    error_record(err, "parse", e.what());
    return kExitIo;
  } catch (const IoError& e) {
    error_record(err, "io", e.what());
    return kExitIo;
  } catch (const ParameterError& e) {
    error_record(err, "parameter", e.what());
    return kExitUsage;
  } catch (const SizeGuardError& e) {
    error_record(err, "size_guard", e.what());
    return kExitUsage;
  } catch (const VerifyFailure& e) {
    error_record(err, "verification", e.what());
    return kExitVerify;
  } catch (const std::exception& e) {
    error_record(err, "failure", e.what());
    return kExitVerify;
  }
  error_record(err, "usage", "no subcommand given");
  return kExitUsage;
}

}  // namespace theta
