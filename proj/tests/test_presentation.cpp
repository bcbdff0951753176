#include <doctest.h>

#include <random>
#include <sstream>

#include "coxart/errors.hpp"
#include "coxart/presentation.hpp"
#include "test_util.hpp"

using namespace coxart;
using coxart::testing::triangle_graph;

TEST_CASE("parse the triangle graph") {
  CoxeterGraph g = triangle_graph();
  CHECK(g.rank() == 3);
  CHECK(g.vertex_names() == std::vector<std::string>{"a", "b", "c"});
  Vertex a = g.vertex("a"), b = g.vertex("b"), c = g.vertex("c");
  CHECK(g.label(a, b) == 3);
  CHECK(g.label(b, c) == 3);
  CHECK(g.label(a, c) == 2);
  CHECK(g.label(a, a) == 1);
}

TEST_CASE("single vertex graph") {
  CoxeterGraph g = CoxeterGraph::parse("vertices: a\n");
  CHECK(g.rank() == 1);
  CHECK(g.edges().empty());
}

TEST_CASE("no edge means label infinity") {
  CoxeterGraph g = CoxeterGraph::parse("vertices: a b\n");
  CHECK(g.label(0, 1) == kInfinity);
  CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(CoxeterGraph::parse("vertices: a b\nedge: a b 1\n"), Error);
  CHECK_THROWS_AS(CoxeterGraph::parse("vertices: a a\n"), Error);
  CHECK_THROWS_AS(CoxeterGraph::parse("vertices: a b\nedge: a z 3\n"), Error);
  CHECK_THROWS_AS(CoxeterGraph::parse("vertices: a b\nedge: a b x\n"), Error);
  CHECK_THROWS_AS(CoxeterGraph::parse("vertices: a b\nedge: a a 3\n"), Error);
  CHECK_THROWS_AS(CoxeterGraph::parse("edge: a b 3\n"), Error);
  CHECK_THROWS_AS(CoxeterGraph::parse("vertices: a b\nbogus line\n"), Error);
  CHECK_THROWS_AS(
      CoxeterGraph::parse("vertices: a b\nedge: a b 3\nedge: b a 3\n"), Error);

  try {
    CoxeterGraph::parse("vertices: a b\nedge: a b 1\n");
  } catch (const Error& e) {
    CHECK(e.code() == Error::Code::kBadLabel);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  CoxeterGraph g = CoxeterGraph::parse(
      "# a comment\n\nvertices: a b # trailing\nedge: a b 4\n");
  CHECK(g.rank() == 2);
  CHECK(g.label(0, 1) == 4);
}

TEST_CASE("serialize round-trips") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    std::size_t rank = 1 + rng() % 6;
    std::ostringstream os;
    os << "vertices:";
    for (std::size_t v = 0; v < rank; ++v) os << " v" << v;
    os << '\n';
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::size_t j = i + 1; j < rank; ++j) {
        if (rng() % 2) {
          os << "edge: v" << i << " v" << j << ' ' << (2 + rng() % 5) << '\n';
        }
      }
    }
    CoxeterGraph g = CoxeterGraph::parse(os.str());
    CoxeterGraph h = CoxeterGraph::parse(g.serialize());
    CHECK(g.serialize() == h.serialize());
    CHECK(g.vertex_names() == h.vertex_names());
    for (Vertex i = 0; i < rank; ++i) {
      for (Vertex j = 0; j < rank; ++j) {
        CHECK(g.label(i, j) == h.label(i, j));
        CHECK(g.label(i, j) == g.label(j, i));
      }
    }
  }
}

TEST_CASE("vertex subsets") {
  CoxeterGraph g = triangle_graph();
  VertexSubset x = VertexSubset::parse(g, "a,c");
  CHECK(x.size() == 2);
  CHECK(x.contains(g.vertex("a")));
  CHECK_FALSE(x.contains(g.vertex("b")));
  CHECK(VertexSubset::parse(g, "").empty());
  CHECK(VertexSubset::full(g).size() == 3);
  CHECK(x.intersect(VertexSubset::parse(g, "b,c")) ==
        VertexSubset::parse(g, "c"));
  CHECK(x.subset_of(VertexSubset::full(g)));
  CHECK_THROWS_AS(VertexSubset::parse(g, "a,z"), Error);
}

TEST_CASE("induced subgraph") {
  CoxeterGraph g = triangle_graph();
  CoxeterGraph sub = induced_subgraph(g, VertexSubset::parse(g, "a,c"));
  CHECK(sub.rank() == 2);
  CHECK(sub.vertex_names() == std::vector<std::string>{"a", "c"});
  CHECK(sub.label(0, 1) == 2);
}
