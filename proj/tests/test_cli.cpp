#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "coxart/cli.hpp"
#include "coxart/verify.hpp"

namespace {

struct TempGraph {
  std::filesystem::path path;

  explicit TempGraph(const char* text) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("coxart-test-" + std::to_string(counter++) + ".cox");
    std::ofstream out(path);
    out << text;
  }
  ~TempGraph() { std::filesystem::remove(path); }
};

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const TempGraph& graph, std::vector<std::string> args,
                  bool with_graph = true) {
  std::vector<std::string> full;
  if (with_graph) {
    full = {"--graph", graph.path.string()};
  }
  full.insert(full.end(), args.begin(), args.end());
  std::ostringstream out, err;
  int code = coxart::cli::run(full, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("plain subcommands") {
  TempGraph graph(coxart::verify::kTriangleGraphText);

  auto nset = run_cli(graph, {"nset", "a b c a c b"});
  CHECK(nset.code == 0);
  CHECK(nset.out == "{b, a b a}\n");

  auto retract = run_cli(graph, {"retract", "--x", "a,b", "c a c^-1"});
  CHECK(retract.code == 0);
  CHECK(retract.out == "a\n");

  auto canon = run_cli(graph, {"canon", "a b c a c b"});
  CHECK(canon.out == "b a\n");

  auto equal = run_cli(graph, {"equal", "a b a", "b a b"});
  CHECK(equal.out == "true\n");

  auto len = run_cli(graph, {"length", "a b c a c b"});
  CHECK(len.out == "2\n");

  auto reduce = run_cli(graph, {"reduce", "b b"});
  CHECK(reduce.out == "e\n");

  auto decomp = run_cli(graph, {"decompose", "a c", "--x", "a,b"});
  CHECK(decomp.out == "v: a\nw: c\n");

  auto ddecomp =
      run_cli(graph, {"decompose", "a c b", "--x", "a,b", "--y", "b,c"});
  CHECK(ddecomp.out == "w1: a\nw2: e\nw2p: c b\n");

  auto classify = run_cli(
      graph, {"classify", "--w", "c b a", "--pair", "b,c", "--x", "a,b"});
  CHECK(classify.out ==
        "full-dihedral: X1 = {a, b}; pairing: b->a, c->b; m = 3\n");

  auto conjred =
      run_cli(graph, {"conjreduce", "--x", "a,b", "--y", "b,c", "e"});
  CHECK(conjred.code == 0);
  CHECK(conjred.out == "beta: e\nY1: {b}\n");

  auto rseq = run_cli(graph, {"rseq", "c a c", "--x", "a,b"});
  CHECK(rseq.out ==
        "1: c = c | out\n"
        "2: c a c = a | in\n"
        "3: c a c a c = c | out\n"
        "kept: 2\n");

  // Flag-before-positional order works too.
  auto flipped = run_cli(graph, {"retract", "--x", "a,b", "c a c^-1"});
  CHECK(flipped.out == "a\n");

  auto help = run_cli(graph, {"--help"}, false);
  CHECK(help.code == 0);
}

TEST_CASE("json output is stable") {
  TempGraph graph(coxart::verify::kTriangleGraphText);

  auto canon = run_cli(graph, {"--json", "canon", "a b c a c b"});
  CHECK(canon.out == "{\"word\":\"b a\"}\n");

  auto nset = run_cli(graph, {"--json", "nset", "a b c a c b"});
  CHECK(nset.out == "{\"members\":[\"b\",\"a b a\"]}\n");

  auto rseq = run_cli(graph, {"--json", "rseq", "c a c", "--x", "a,b"});
  CHECK(rseq.out ==
        "{\"entries\":[{\"position\":1,\"word\":\"c\",\"element\":\"c\","
        "\"in_x\":false},{\"position\":2,\"word\":\"c a c\",\"element\":\"a\","
        "\"in_x\":true},{\"position\":3,\"word\":\"c a c a c\",\"element\":"
        "\"c\",\"in_x\":false}],\"kept\":[2]}\n");

  auto intersect = run_cli(
      graph, {"intersect", "--x", "a,b", "--y", "b,c", "--w", "c b a"});
  CHECK(intersect.out ==
        "{\"w1\":\"e\",\"X1\":[\"a\",\"b\"],\"Y1\":[\"b\",\"c\"],"
        "\"pairing\":{\"b\":\"a\",\"c\":\"b\"},\"core\":\"c b a\"}\n");

  auto trace =
      run_cli(graph, {"--json", "retract", "--x", "a,b", "--trace", "c a c^-1"});
  CHECK(trace.out ==
        "{\"output\":\"a\",\"trace\":[{\"position\":1,\"action\":\"skip\","
        "\"w\":\"c\"},{\"position\":2,\"action\":\"emit\",\"letter\":{\"v\":"
        "\"a\",\"s\":1},\"w\":\"c\"},{\"position\":3,\"action\":\"skip\","
        "\"w\":\"e\"}]}\n");

  // Identical across runs.
  auto again = run_cli(graph, {"--json", "rseq", "c a c", "--x", "a,b"});
  CHECK(again.out == rseq.out);
}

TEST_CASE("error handling") {
  TempGraph graph(coxart::verify::kTriangleGraphText);

  auto bad_word = run_cli(graph, {"canon", "a z"});
  CHECK(bad_word.code == 2);
  CHECK(bad_word.err.find("error[unknown-vertex]") != std::string::npos);

  auto no_graph = run_cli(graph, {"canon", "a"}, false);
  CHECK(no_graph.code == 2);

  TempGraph bad(
      "vertices: a b\n"
      "edge: a b 1\n");
  auto bad_graph = run_cli(bad, {"canon", "a"});
  CHECK(bad_graph.code == 2);
  CHECK(bad_graph.err.find("error[bad-label]") != std::string::npos);

  auto no_sub = run_cli(graph, {});
  CHECK(no_sub.code == 2);

  auto tiny_orbit = run_cli(graph, {"--max-orbit", "1", "canon", "a b a"});
  CHECK(tiny_orbit.code == 2);
  CHECK(tiny_orbit.err.find("error[orbit-cap-exceeded]") != std::string::npos);
}

TEST_CASE("single verify suite") {
  TempGraph graph(coxart::verify::kTriangleGraphText);
  auto result = run_cli(graph, {"verify", "--suite", "worked-example"});
  CHECK(result.code == 0);
  CHECK(result.out.find("ok   worked-example") != std::string::npos);
  CHECK(result.out.find("verify: PASS") != std::string::npos);

  auto unknown = run_cli(graph, {"verify", "--suite", "nope"});
  CHECK(unknown.code == 2);
}
