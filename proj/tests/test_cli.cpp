#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "theta/cli.hpp"
#include "theta/generators.hpp"
#include "theta/serialize.hpp"

using namespace theta;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "theta-miner");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("theta_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("girth command") {
  const auto t5 = temp_file("theta5.el", to_edge_list(theta_graph(5)));
  CHECK(run({"girth", "-r", "5", t5}).out == "5\n");
  CHECK(run({"girth", "-r", "2", "-"}, to_edge_list(cycle_graph(7))).out == "7\n");
  CHECK(run({"girth", "-r", "3", "-"}, to_edge_list(figure2_graph())).out == "infinity\n");
}

TEST_CASE("gen command") {
  CHECK(run({"gen", "--model", "theta", "--r", "5"}).out == to_edge_list(theta_graph(5)));
  CHECK(run({"gen", "--model", "cycle", "-n", "6"}).out == to_edge_list(cycle_graph(6)));
  const auto a = run({"gen", "--model", "random-regular", "-n", "50", "-d", "4", "--seed", "7"});
  const auto b = run({"gen", "--model", "random-regular", "-n", "50", "-d", "4", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(to_edge_list(parse_edge_list(a.out)) == a.out);
  CHECK(run({"gen", "--model", "random-regular", "-n", "5", "-d", "3", "--seed", "1"}).code == kExitUsage);
  CHECK(run({"gen", "--model", "random-regular", "-n", "10", "-d", "3"}).code == kExitUsage);
  CHECK(run({"gen", "--model", "hypercube", "-n", "3"}).code == kExitUsage);
}

TEST_CASE("theorem commands verify their certificates") {
  const auto reg = run({"gen", "--model", "random-regular", "-n", "50", "-d", "4", "--seed", "7"}).out;
  const auto t5 = run({"thm5", "-r", "2", "-w", "2", "-z", "8", "-", "--verify"}, reg);
  REQUIRE(t5.code == 0);
  const auto doc = Json::parse(t5.out);
  const auto kind = doc.at("kind").get<std::string>();
  CHECK((kind == "theta" || kind == "protrusion" || kind == "minor_model"));

  const auto k9 = run({"gen", "--model", "clique", "-n", "9"}).out;
  const auto pack = run({"pack", "-k", "2", "-r", "3", "-", "--verify"}, k9);
  REQUIRE(pack.code == 0);
  CHECK(Json::parse(pack.out).at("kind") == "packing");

  const auto t4 = run({"thm4", "-r", "2", "--delta", "6", "-z", "3", "-", "--verify"}, k9);
  CHECK(t4.code == 0);
}

TEST_CASE("verify command") {
  const auto k9 = to_edge_list(complete_graph(9));
  const auto graph = temp_file("k9.el", k9);
  const auto pack = run({"pack", "-k", "2", "-r", "3", graph});
  REQUIRE(pack.code == 0);
  const auto good = temp_file("good.json", pack.out);
  CHECK(run({"verify", "--certificate", good, graph}).code == 0);

  auto doc = Json::parse(pack.out);
  doc["models"][1] = doc["models"][0];
  const auto bad = temp_file("bad.json", doc.dump());
  const auto rejected = run({"verify", "--certificate", bad, graph});
  CHECK(rejected.code == kExitVerify);
  CHECK_FALSE(Json::parse(rejected.out).at("ok").get<bool>());

  const auto garbage = temp_file("garbage.json", "{not json");
  CHECK(run({"verify", "--certificate", garbage, graph}).code == kExitIo);
}

TEST_CASE("exit codes and error records") {
  const auto param = run({"thm4", "-r", "2", "--delta", "5", "-z", "4", "anything.el"});
  CHECK(param.code == kExitUsage);
  CHECK(Json::parse(param.err).at("error") == "parameter");

  const auto missing = run({"girth", "-r", "2", "/nonexistent/graph.el"});
  CHECK(missing.code == kExitIo);
  CHECK(Json::parse(missing.err).at("error") == "io");

  const auto malformed = run({"girth", "-r", "2", "-"}, "3\n0 1\n1 z\n");
  CHECK(malformed.code == kExitIo);
  CHECK(Json::parse(malformed.err).at("message").get<std::string>().find('3') != std::string::npos);

  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"girth", "-"}, "2\n0 1\n").code == kExitUsage);
  CHECK(run({"girth", "-r", "2", "-"}, to_edge_list(cycle_graph(30))).code == kExitUsage);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("inspection commands") {
  const auto fig2 = to_edge_list(figure2_graph());
  const auto dd = run({"decompose", "--origin", "5", "-"}, fig2);
  REQUIRE(dd.code == 0);
  CHECK(Json::parse(dd.out).at("nodes").size() == 6);

  const auto gp = run({"partition", "-d", "1", "-"}, to_edge_list(path_graph(9)));
  REQUIRE(gp.code == 0);
  CHECK(Json::parse(gp.out).at("regions").size() == 3);

  const auto loose = run({"loose", "--alpha", "1", "--beta", "2", "-"}, to_edge_list(path_graph(5)));
  REQUIRE(loose.code == 0);
  CHECK_FALSE(Json::parse(loose.out).at("loosely_connected").get<bool>());

  CHECK(run({"bound-lemma", "-r", "4", "-k", "10"}).out == "true\n");
}
