#include <doctest.h>

#include <random>

#include "coxart/errors.hpp"
#include "coxart/retraction.hpp"
#include "test_util.hpp"

using namespace coxart;
using coxart::testing::triangle_graph;
using coxart::testing::rand_artin;
using coxart::testing::rand_subset;

namespace {

struct Fixture {
  CoxeterGroup W{triangle_graph()};
  const CoxeterGraph& g = W.graph();
  VertexSubset ab = VertexSubset::parse(g, "a,b");

  ArtinWord aw(const char* text) const { return parse_artin_word(g, text); }
};

}  // namespace

TEST_CASE("the worked retraction") {
  Fixture f;
  RetractionTrace tr = retract_star_traced(f.W, f.aw("c a c^-1"), f.ab);
  CHECK(tr.output == f.aw("a"));
  REQUIRE(tr.steps.size() == 3);
  CHECK_FALSE(tr.steps[0].emitted);
  CHECK(tr.steps[1].emitted);
  CHECK(tr.steps[1].output == ArtinLetter{f.g.vertex("a"), 1});
  CHECK_FALSE(tr.steps[2].emitted);
  CHECK(tr.steps[0].w_after == f.W.element("c"));
  CHECK(tr.steps[1].w_after == f.W.element("c"));
  CHECK(tr.steps[2].w_after.is_identity());
}

TEST_CASE("words on Sigma_X are fixed") {
  Fixture f;
  ArtinWord w = f.aw("a b^-1 a b a^-1");
  CHECK(retract_star(f.W, w, f.ab) == w);
}

TEST_CASE("final reduced part is tracked") {
  Fixture f;
  RetractionTrace tr = retract_star_traced(f.W, f.aw("c a"), f.ab);
  CHECK(tr.output == f.aw("a"));
  CHECK(tr.steps.back().w_after == f.W.element("c"));
}

TEST_CASE("trace snapshots change exactly on skips") {
  Fixture f;
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 300; ++iter) {
    ArtinWord w = rand_artin(rng, 3, 10);
    VertexSubset X = rand_subset(rng, f.g);
    RetractionTrace tr = retract_star_traced(f.W, w, X);
    CoxElement prev = f.W.identity();
    for (const auto& step : tr.steps) {
      if (step.emitted) {
        CHECK(step.w_after == prev);
      } else {
        CHECK(step.w_after != prev);
      }
      prev = step.w_after;
    }
  }
}

TEST_CASE("retract_hat agrees with retract_star") {
  Fixture f;
  CHECK(retract_hat(f.W, f.aw("c a c^-1"), f.ab) == f.aw("a"));
  CHECK(retract_hat(f.W, ArtinWord{}, f.ab).empty());

  CoxeterGraph g = f.g;
  VertexSubset just_a = VertexSubset::parse(g, "a");
  CHECK(retract_hat(f.W, f.aw("a^-1"), just_a) == f.aw("a^-1"));

  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 300; ++iter) {
    ArtinWord w = rand_artin(rng, 3, 10);
    VertexSubset X = rand_subset(rng, f.g);
    CHECK(retract_hat(f.W, w, X) == retract_star(f.W, w, X));
    CHECK(retract_star_direct(f.W, w, X) == retract_star(f.W, w, X));
  }
}

TEST_CASE("theta split") {
  Fixture f;
  auto [p, r] = theta_split_check(f.W, f.aw("c a"), f.ab);
  CHECK(p == f.W.element("a"));
  CHECK(r == f.W.element("c"));

  // Colored input: both parts collapse.
  auto [p2, r2] = theta_split_check(f.W, f.aw("a b b^-1 a^-1"), f.ab);
  CHECK(p2.is_identity());
  CHECK(r2.is_identity());

  // Input on Sigma_X: the remainder is trivial.
  auto [p3, r3] = theta_split_check(f.W, f.aw("a b a"), f.ab);
  CHECK(p3 == f.W.element("a b a"));
  CHECK(r3.is_identity());
}
