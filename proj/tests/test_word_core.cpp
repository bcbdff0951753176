#include <doctest.h>

#include <algorithm>
#include <random>

#include "coxart/errors.hpp"
#include "coxart/word_core.hpp"
#include "test_util.hpp"

using namespace coxart;
using coxart::testing::triangle_graph;
using coxart::testing::rand_artin;

namespace {

ArtinWord aw(const CoxeterGraph& g, const char* text) {
  return parse_artin_word(g, text);
}

}  // namespace

TEST_CASE("theta_star erases signs") {
  CoxeterGraph g = triangle_graph();
  CHECK(theta_star(aw(g, "a c^-1")) == parse_simple_word(g, "a c"));
  CHECK(theta_star(aw(g, "e")).empty());
  CHECK(theta_star(aw(g, "c a c^-1")) == parse_simple_word(g, "c a c"));
}

TEST_CASE("free_reduce") {
  CoxeterGraph g = triangle_graph();
  CHECK(free_reduce(aw(g, "a a^-1")).empty());
  CHECK(free_reduce(aw(g, "c a a^-1 c")) == aw(g, "c c"));
  CHECK(free_reduce(aw(g, "b c^-1 c b^-1")).empty());
}

TEST_CASE("invert and reverse") {
  CoxeterGraph g = triangle_graph();
  CHECK(invert(aw(g, "a b^-1")) == aw(g, "b a^-1"));
  CHECK(reverse_word(parse_simple_word(g, "a b c")) ==
        parse_simple_word(g, "c b a"));
  CHECK(invert(ArtinWord{}).empty());
}

TEST_CASE("braid moves from the presentation") {
  CoxeterGraph g = triangle_graph();
  ArtinWord aba = aw(g, "a b a");
  auto moves = legal_moves(g, aba);
  bool found = false;
  for (const auto& m : moves) {
    if (m.kind == ElementaryMove::Kind::kBraid) {
      CHECK(apply_move(g, aba, m) == aw(g, "b a b"));
      found = true;
    }
  }
  CHECK(found);

  ArtinWord ac = aw(g, "a c");
  for (const auto& m : legal_moves(g, ac)) {
    if (m.kind == ElementaryMove::Kind::kBraid) {
      CHECK(apply_move(g, ac, m) == aw(g, "c a"));
    }
  }

  // Mixed signs and wrong patterns admit no braid move.
  for (const auto& m : legal_moves(g, aw(g, "a b^-1 a"))) {
    CHECK(m.kind != ElementaryMove::Kind::kBraid);
  }
  // All-negative sites rewrite with the same letter pattern.
  ArtinWord neg = aw(g, "a^-1 b^-1 a^-1");
  bool neg_found = false;
  for (const auto& m : legal_moves(g, neg)) {
    if (m.kind == ElementaryMove::Kind::kBraid) {
      CHECK(apply_move(g, neg, m) == aw(g, "b^-1 a^-1 b^-1"));
      neg_found = true;
    }
  }
  CHECK(neg_found);
}

TEST_CASE("empty word admits only insertions") {
  CoxeterGraph g = triangle_graph();
  auto moves = legal_moves(g, {});
  CHECK(!moves.empty());
  for (const auto& m : moves) {
    CHECK(m.kind == ElementaryMove::Kind::kFreeInsert);
  }
  auto [move, moved] = random_move(g, {}, std::uint64_t(42));
  CHECK(moved.size() == 2);
  CHECK(moved[0].vertex == moved[1].vertex);
  CHECK(moved[0].sign == -moved[1].sign);
}

TEST_CASE("random moves invert cleanly") {
  CoxeterGraph g = triangle_graph();
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 500; ++iter) {
    ArtinWord w = rand_artin(rng, g.rank(), 10);
    auto [move, moved] = random_move(g, w, rng);
    ElementaryMove back = inverse_move(move, w);
    CHECK(apply_move(g, moved, back) == w);
  }
}

TEST_CASE("braid moves preserve positivity and length") {
  CoxeterGraph g = triangle_graph();
  std::mt19937_64 rng(4);
  for (int iter = 0; iter < 500; ++iter) {
    ArtinWord w = rand_artin(rng, g.rank(), 10);
    for (auto& l : w) l.sign = 1;
    for (const auto& m : legal_moves(g, w)) {
      if (m.kind != ElementaryMove::Kind::kBraid) continue;
      ArtinWord after = apply_move(g, w, m);
      CHECK(after.size() == w.size());
      CHECK(std::all_of(after.begin(), after.end(),
                        [](const ArtinLetter& l) { return l.sign == 1; }));
    }
  }
}

TEST_CASE("theta and invert commute with reversal") {
  CoxeterGraph g = triangle_graph();
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 500; ++iter) {
    ArtinWord w = rand_artin(rng, g.rank(), 12);
    CHECK(theta_star(invert(w)) == reverse_word(theta_star(w)));
    ArtinWord once = free_reduce(w);
    CHECK(free_reduce(once) == once);
    CHECK((w.size() - once.size()) % 2 == 0);
  }
}

TEST_CASE("word parsing and formatting") {
  CoxeterGraph g = triangle_graph();
  CHECK(format_artin_word(g, aw(g, "a b^-1 c")) == "a b^-1 c");
  CHECK(format_word(g, Word{}) == "e");
  CHECK(parse_simple_word(g, "e").empty());
  CHECK(format_word(g, parse_simple_word(g, "a b a")) == "a b a");
  CHECK_THROWS_AS(parse_simple_word(g, "a z"), Error);
  CHECK_THROWS_AS(parse_artin_word(g, "a^2"), Error);
  CHECK_THROWS_AS(parse_simple_word(g, "a b^-1"), Error);

  // A vertex literally named e takes priority over the empty-word token.
  CoxeterGraph h = CoxeterGraph::parse("vertices: e f\n");
  CHECK(parse_simple_word(h, "e").size() == 1);
}
