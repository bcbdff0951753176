#include "coxart/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "coxart/artin_parabolic.hpp"
#include "coxart/cosets.hpp"
#include "coxart/coxeter.hpp"
#include "coxart/errors.hpp"
#include "coxart/oracle.hpp"
#include "coxart/presentation.hpp"
#include "coxart/reflections.hpp"
#include "coxart/retraction.hpp"
#include "coxart/word_core.hpp"

namespace coxart::verify {

const char* const kTriangleGraphText =
    "vertices: a b c\n"
    "edge: a b 3\n"
    "edge: b c 3\n"
    "edge: a c 2\n";

const char* const kDihedral5GraphText =
    "vertices: a b\n"
    "edge: a b 5\n";

const char* const kAffineGraphText =
    "vertices: a b c\n"
    "edge: a b 3\n"
    "edge: b c 3\n"
    "edge: a c 3\n";

namespace {

constexpr std::size_t kMaxMessages = 10;

struct Checker {
  SuiteOutcome outcome;

  explicit Checker(std::string name) { outcome.name = std::move(name); }

  template <typename MessageFn>
  void check(bool ok, MessageFn&& message) {
    ++outcome.cases;
    if (!ok) {
      ++outcome.failures;
      if (outcome.messages.size() < kMaxMessages) {
        outcome.messages.push_back(message());
      }
    }
  }

  void check(bool ok, const char* message) {
    check(ok, [&] { return std::string(message); });
  }
};

std::mt19937_64 suite_rng(std::uint64_t seed, std::uint64_t suite_index) {
  return std::mt19937_64(seed * 0x9E3779B97F4A7C15ULL + suite_index + 1);
}

Word random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_len) {
  std::size_t len = rng() % (max_len + 1);
  Word w;
  w.reserve(len);
  for (std::size_t k = 0; k < len; ++k) w.push_back(char(rng() % rank));
  return w;
}

ArtinWord random_artin_word(std::mt19937_64& rng, std::size_t rank,
                            std::size_t max_len) {
  std::size_t len = rng() % (max_len + 1);
  ArtinWord w;
  w.reserve(len);
  for (std::size_t k = 0; k < len; ++k) {
    w.push_back({Vertex(rng() % rank), std::int8_t(rng() % 2 ? 1 : -1)});
  }
  return w;
}

ArtinWord random_artin_word_over(std::mt19937_64& rng,
                                 const std::vector<Vertex>& letters,
                                 std::size_t max_len) {
  std::size_t len = rng() % (max_len + 1);
  ArtinWord w;
  if (letters.empty()) return w;
  for (std::size_t k = 0; k < len; ++k) {
    w.push_back({letters[rng() % letters.size()],
                 std::int8_t(rng() % 2 ? 1 : -1)});
  }
  return w;
}

VertexSubset random_subset(std::mt19937_64& rng, const CoxeterGraph& g) {
  VertexSubset s;
  std::uint64_t bits = rng();
  for (Vertex v = 0; v < g.rank(); ++v) {
    if ((bits >> v) & 1) s.add(v);
  }
  return s;
}

std::string describe_artin(const CoxeterGraph& g, const ArtinWord& w) {
  return format_artin_word(g, w);
}

// ---------------------------------------------------------------------------
// worked-example

void suite_worked_example(Checker& c, std::size_t orbit_cap) {
  CoxeterGroup W(CoxeterGraph::parse(kTriangleGraphText), {orbit_cap});
  const CoxeterGraph& g = W.graph();
  Word w = parse_simple_word(g, "a b c a c b");

  NSet n = n_set(W, w);
  c.check(n.members.size() == 2, "N(w) has two members");
  c.check(n.members.size() == 2 && n.members[0] == W.element("b") &&
              n.members[1] == W.element("a b a"),
          "N(w) = {b, a b a}");

  CoxElement canon = W.canonicalize(w);
  c.check(canon.length() == 2, "length of w is 2");
  c.check(canon == W.element("b a"), "canonical form is b a");

  ReflectionSequence seq = reflection_sequence(W, w);
  const char* expected_words[] = {"a",
                                  "a b a",
                                  "a b c b a",
                                  "a b c a c b a",
                                  "a b c a c a c b a",
                                  "a b c a c b c a c b a"};
  const char* expected_elements[] = {"a", "a b a", "a b c b a",
                                     "b", "a b c b a", "a"};
  c.check(seq.entries.size() == 6, "R(w) has six entries");
  for (std::size_t k = 0; k < 6 && k < seq.entries.size(); ++k) {
    c.check(seq.entries[k].word == parse_simple_word(g, expected_words[k]),
            [&] { return "word form " + std::to_string(k + 1); });
    c.check(seq.entries[k].element == W.element(expected_elements[k]),
            [&] { return "element form " + std::to_string(k + 1); });
  }
  c.check(seq.entries.size() == 6 &&
              seq.entries[4].element == seq.entries[2].element,
          "entries 5 and 3 are equal");
  c.check(seq.entries.size() == 6 && seq.entries[5].element == W.element("a"),
          "entry 6 equals a");
}

// ---------------------------------------------------------------------------
// oracle

void enumerate_words(std::size_t rank, std::size_t max_len,
                     std::vector<Word>* out) {
  out->push_back({});
  std::size_t first_of_prev = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out->size();
    for (std::size_t k = first_of_prev; k < end; ++k) {
      for (std::size_t v = 0; v < rank; ++v) {
        Word w = (*out)[k];
        w.push_back(char(v));
        out->push_back(std::move(w));
      }
    }
    first_of_prev = end;
  }
}

void oracle_on_graph(Checker& c, const char* graph_text, std::mt19937_64& rng,
                     std::size_t orbit_cap) {
  CoxeterGroup W(CoxeterGraph::parse(graph_text), {orbit_cap});
  auto model = oracle::perm_model(W.graph());
  c.check(model.has_value(), "oracle model exists");
  if (!model) return;
  std::size_t rank = W.graph().rank();

  std::vector<Word> words;
  enumerate_words(rank, 6, &words);
  std::vector<Word> canons(words.size());
  std::vector<oracle::Permutation> perms(words.size());
  for (std::size_t k = 0; k < words.size(); ++k) {
    canons[k] = W.canonicalize(words[k]).word;
    perms[k] = oracle::oracle_eval(*model, words[k]);
    c.check(canons[k].size() == oracle::oracle_length(*model, words[k]),
            [&] {
              return "length mismatch on " + format_word(W.graph(), words[k]);
            });
  }
  std::size_t mismatches = 0;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a; b < words.size(); ++b) {
      ++pairs;
      if ((canons[a] == canons[b]) != (perms[a] == perms[b])) ++mismatches;
    }
  }
  c.outcome.cases += pairs;
  c.outcome.failures += mismatches;
  if (mismatches && c.outcome.messages.size() < kMaxMessages) {
    c.outcome.messages.push_back("exhaustive pair equality mismatch");
  }

  for (std::size_t k = 0; k < 10'000; ++k) {
    Word u = random_word(rng, rank, 12);
    Word v = random_word(rng, rank, 12);
    bool impl_eq = W.canonicalize(u) == W.canonicalize(v);
    bool oracle_eq = oracle::oracle_equal(*model, u, v);
    c.check(impl_eq == oracle_eq, [&] {
      return "random pair equality mismatch: " + format_word(W.graph(), u) +
             " vs " + format_word(W.graph(), v);
    });
    c.check(W.canonicalize(u).length() == oracle::oracle_length(*model, u),
            [&] {
              return "random length mismatch: " + format_word(W.graph(), u);
            });
  }
}

void suite_oracle(Checker& c, std::uint64_t seed, std::size_t orbit_cap) {
  auto rng = suite_rng(seed, 2);
  oracle_on_graph(c, kTriangleGraphText, rng, orbit_cap);
  oracle_on_graph(c, kDihedral5GraphText, rng, orbit_cap);
}

// ---------------------------------------------------------------------------
// nset

// Coxeter-word rewriting steps: braid site swap, square insertion, square
// deletion. Used to produce pairs of words representing the same element.
Word random_relation_neighbour(const CoxeterGroup& W, const Word& w,
                               std::mt19937_64& rng) {
  struct Move {
    int kind;  // 0 delete, 1 braid, 2 insert
    std::size_t pos;
    Vertex vertex;
  };
  const CoxeterGraph& g = W.graph();
  std::vector<Move> moves;
  for (std::size_t q = 0; q + 1 < w.size(); ++q) {
    if (w[q] == w[q + 1]) moves.push_back({0, q, 0});
  }
  for (std::size_t q = 0; q + 1 < w.size(); ++q) {
    Vertex a = Vertex(w[q]);
    Vertex b = Vertex(w[q + 1]);
    if (a == b) continue;
    unsigned m = g.label(a, b);
    if (m == kInfinity || q + m > w.size()) continue;
    bool ok = true;
    for (unsigned t = 2; t < m; ++t) {
      if (Vertex(w[q + t]) != (t % 2 == 0 ? a : b)) {
        ok = false;
        break;
      }
    }
    if (ok) moves.push_back({1, q, 0});
  }
  for (std::size_t q = 0; q <= w.size(); ++q) {
    for (Vertex v = 0; v < g.rank(); ++v) moves.push_back({2, q, v});
  }
  Move m = moves[rng() % moves.size()];
  switch (m.kind) {
    case 0: {
      Word out = w.substr(0, m.pos);
      out += w.substr(m.pos + 2);
      return out;
    }
    case 1: {
      Word out = w;
      Vertex a = Vertex(w[m.pos]);
      Vertex b = Vertex(w[m.pos + 1]);
      unsigned mm = g.label(a, b);
      for (unsigned t = 0; t < mm; ++t) {
        out[m.pos + t] = char(t % 2 == 0 ? b : a);
      }
      return out;
    }
    default: {
      Word out = w.substr(0, m.pos);
      out += char(m.vertex);
      out += char(m.vertex);
      out += w.substr(m.pos);
      return out;
    }
  }
}

void suite_nset(Checker& c, std::uint64_t seed, std::size_t orbit_cap) {
  auto rng = suite_rng(seed, 3);
  CoxeterGroup W(CoxeterGraph::parse(kTriangleGraphText), {orbit_cap});
  std::size_t rank = W.graph().rank();

  for (std::size_t k = 0; k < 1000; ++k) {
    Word w = random_word(rng, rank, 10);
    Word wp = w;
    std::size_t steps = 1 + rng() % 6;
    for (std::size_t s = 0; s < steps; ++s) {
      wp = random_relation_neighbour(W, wp, rng);
    }
    c.check(W.equal(W.canonicalize(w), W.canonicalize(wp)),
            "relation moves must preserve the element");
    NSet a = n_set(W, w);
    NSet b = n_set(W, wp);
    c.check(a.members == b.members, [&] {
      return "N-set mismatch on " + format_word(W.graph(), w) + " vs " +
             format_word(W.graph(), wp);
    });
  }

  for (std::size_t k = 0; k < 1000; ++k) {
    Word w = random_word(rng, rank, 12);
    CoxElement canon = W.canonicalize(w);
    NSet n = n_set(W, w);
    c.check(n.members.size() == canon.length(), [&] {
      return "|N(w)| != length on " + format_word(W.graph(), w);
    });
    ReflectionSequence seq = reflection_sequence(W, w);
    std::set<CoxElement> distinct;
    for (const auto& e : seq.entries) distinct.insert(e.element);
    bool reduced = canon.length() == w.size();
    bool all_distinct = distinct.size() == seq.entries.size();
    c.check(reduced == all_distinct, [&] {
      return "reduced <=> distinct fails on " + format_word(W.graph(), w);
    });
  }
}

// ---------------------------------------------------------------------------
// retraction

struct GraphFixture {
  std::string name;
  const char* text;
  std::size_t max_len;
};

const GraphFixture kRetractionFixtures[] = {
    {"triangle", kTriangleGraphText, 12},
    {"dihedral5", kDihedral5GraphText, 12},
    {"affine3", kAffineGraphText, 12},
};

// Subgroup instances for the support-restriction check, one per subset mask.
class SubgraphPool {
 public:
  SubgraphPool(const CoxeterGraph& g, std::size_t orbit_cap)
      : graph_(g), orbit_cap_(orbit_cap) {}

  const CoxeterGroup& group_for(const VertexSubset& y) {
    auto key = y.members();
    auto it = pool_.find(key);
    if (it == pool_.end()) {
      it = pool_
               .emplace(key, std::make_unique<CoxeterGroup>(
                                 induced_subgraph(graph_, y),
                                 CoxeterOptions{orbit_cap_}))
               .first;
    }
    return *it->second;
  }

 private:
  const CoxeterGraph& graph_;
  std::size_t orbit_cap_;
  std::map<std::vector<Vertex>, std::unique_ptr<CoxeterGroup>> pool_;
};

bool word_on(const ArtinWord& w, const VertexSubset& X) {
  return std::all_of(w.begin(), w.end(),
                     [&](const ArtinLetter& l) { return X.contains(l.vertex); });
}

// Re-letters an Artin word on the subgraph spanned by Y into the parent
// graph's indices (or back, when `into_sub` is true).
ArtinWord map_letters(const ArtinWord& w, const std::vector<Vertex>& members,
                      bool into_sub) {
  ArtinWord out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (into_sub) {
      auto it = std::find(members.begin(), members.end(), l.vertex);
      out.push_back({Vertex(it - members.begin()), l.sign});
    } else {
      out.push_back({members[l.vertex], l.sign});
    }
  }
  return out;
}

void retraction_on_graph(Checker& c, const GraphFixture& fixture,
                         std::mt19937_64& rng, std::size_t orbit_cap) {
  CoxeterGroup W(CoxeterGraph::parse(fixture.text), {orbit_cap});
  const CoxeterGraph& g = W.graph();
  std::size_t rank = g.rank();
  SubgraphPool pool(g, orbit_cap);

  for (std::size_t iter = 0; iter < 1000; ++iter) {
    ArtinWord omega = random_artin_word(rng, rank, fixture.max_len);
    ArtinWord omega2 = random_artin_word(rng, rank, 6);
    VertexSubset X = random_subset(rng, g);
    VertexSubset Y = random_subset(rng, g);
    auto label = [&](const char* what) {
      return [&, what] {
        return std::string(fixture.name) + "/" + what + " on " +
               describe_artin(g, omega);
      };
    };

    // (i) length law with exact equality characterization.
    ArtinWord out = retract_star(W, omega, X);
    bool on_x = word_on(omega, X);
    c.check(out.size() <= omega.size(), label("i-length"));
    c.check((out.size() == omega.size()) == on_x, label("i-equality"));
    if (on_x) c.check(out == omega, label("i-identity"));

    // (ii) literal prefix under right extension.
    ArtinWord joined = omega;
    joined.insert(joined.end(), omega2.begin(), omega2.end());
    ArtinWord out_joined = retract_star(W, joined, X);
    c.check(out_joined.size() >= out.size() &&
                std::equal(out.begin(), out.end(), out_joined.begin()),
            label("ii-prefix"));

    // (vi) positivity preservation.
    ArtinWord positive = omega;
    for (auto& l : positive) l.sign = 1;
    ArtinWord out_pos = retract_star(W, positive, X);
    c.check(std::all_of(out_pos.begin(), out_pos.end(),
                        [](const ArtinLetter& l) { return l.sign == 1; }),
            label("vi-positivity"));

    // (vii) multiplicativity for a left factor on Sigma_X.
    ArtinWord on_x_word = random_artin_word_over(rng, X.members(), 6);
    ArtinWord prod = on_x_word;
    prod.insert(prod.end(), omega2.begin(), omega2.end());
    ArtinWord lhs = retract_star(W, prod, X);
    ArtinWord rhs = retract_star(W, on_x_word, X);
    ArtinWord rhs2 = retract_star(W, omega2, X);
    rhs.insert(rhs.end(), rhs2.begin(), rhs2.end());
    c.check(lhs == rhs, label("vii-multiplicative"));

    // (viii) multiplicativity for a colored left factor.
    ArtinWord colored = omega;
    ArtinWord fix = invert(kappa(W.canonicalize(theta_star(omega))).word);
    colored.insert(colored.end(), fix.begin(), fix.end());
    ArtinWord prod8 = colored;
    prod8.insert(prod8.end(), omega2.begin(), omega2.end());
    ArtinWord lhs8 = retract_star(W, prod8, X);
    ArtinWord rhs8 = retract_star(W, colored, X);
    ArtinWord rhs8b = retract_star(W, omega2, X);
    rhs8.insert(rhs8.end(), rhs8b.begin(), rhs8b.end());
    c.check(lhs8 == rhs8, label("viii-multiplicative"));

    // (ix) support restriction and subgraph consistency.
    ArtinWord on_y_word = random_artin_word_over(rng, Y.members(), 8);
    ArtinWord out_y = retract_star(W, on_y_word, X);
    c.check(word_on(out_y, X.intersect(Y)), label("ix-support"));
    {
      const CoxeterGroup& sub = pool.group_for(Y);
      auto members = Y.members();
      ArtinWord sub_input = map_letters(on_y_word, members, true);
      VertexSubset sub_x;
      for (std::size_t k = 0; k < members.size(); ++k) {
        if (X.contains(members[k])) sub_x.add(Vertex(k));
      }
      ArtinWord sub_out = retract_star(sub, sub_input, sub_x);
      c.check(map_letters(sub_out, members, false) == out_y,
              label("ix-subgraph"));
    }

    // (x) composition in both orders equals the intersection retraction.
    ArtinWord xy = retract_star(W, retract_star(W, omega, X), Y);
    ArtinWord yx = retract_star(W, retract_star(W, omega, Y), X);
    ArtinWord meet = retract_star(W, omega, X.intersect(Y));
    c.check(xy == meet, label("x-compose-xy"));
    c.check(yx == meet, label("x-compose-yx"));

    // (xi) nested composition.
    VertexSubset X_in_Y = X.intersect(Y);
    ArtinWord nested = retract_star(W, retract_star(W, omega, Y), X_in_Y);
    c.check(nested == retract_star(W, omega, X_in_Y), label("xi-nested"));

    // (iv) theta split.
    try {
      theta_split_check(W, omega, X);
      c.check(true, "iv");
    } catch (const Error&) {
      c.check(false, label("iv-theta-split"));
    }

    // pi-hat coincidence.
    c.check(retract_hat(W, omega, X) == out, label("hat-coincidence"));

    // Trace/mask consistency and the direct pipeline.
    RetractionTrace trace = retract_star_traced(W, omega, X);
    std::vector<std::size_t> emitted;
    for (const auto& step : trace.steps) {
      if (step.emitted) emitted.push_back(step.position);
    }
    ReflectionSequence mask = masked_sequence(W, theta_star(omega), X);
    c.check(emitted == kept_positions(mask), label("trace-mask"));
    c.check(retract_star_direct(W, omega, X) == out, label("direct-pipeline"));
  }
}

void suite_retraction(Checker& c, std::uint64_t seed, std::size_t orbit_cap) {
  auto rng = suite_rng(seed, 4);
  for (const auto& fixture : kRetractionFixtures) {
    retraction_on_graph(c, fixture, rng, orbit_cap);
  }
}

// ---------------------------------------------------------------------------
// one-move

bool one_move_apart(const CoxeterGraph& g, const ArtinWord& u,
                    const ArtinWord& v) {
  if (u == v) return true;
  const ArtinWord* longer = nullptr;
  const ArtinWord* shorter = nullptr;
  if (u.size() == v.size() + 2) {
    longer = &u;
    shorter = &v;
  } else if (v.size() == u.size() + 2) {
    longer = &v;
    shorter = &u;
  }
  if (longer) {
    for (const auto& m : legal_moves(g, *longer)) {
      if (m.kind == ElementaryMove::Kind::kFreeDelete &&
          apply_move(g, *longer, m) == *shorter) {
        return true;
      }
    }
    return false;
  }
  if (u.size() != v.size()) return false;
  for (const auto& m : legal_moves(g, u)) {
    if (m.kind == ElementaryMove::Kind::kBraid && apply_move(g, u, m) == v) {
      return true;
    }
  }
  return false;
}

void suite_one_move(Checker& c, std::uint64_t seed, std::size_t orbit_cap) {
  auto rng = suite_rng(seed, 5);
  for (const auto& fixture : kRetractionFixtures) {
    CoxeterGroup W(CoxeterGraph::parse(fixture.text), {orbit_cap});
    const CoxeterGraph& g = W.graph();
    for (std::size_t iter = 0; iter < 1000; ++iter) {
      ArtinWord omega = random_artin_word(rng, g.rank(), fixture.max_len);
      VertexSubset X = random_subset(rng, g);
      auto [move, moved] = random_move(g, omega, rng);
      ArtinWord a = retract_star(W, omega, X);
      ArtinWord b = retract_star(W, moved, X);
      c.check(one_move_apart(g, a, b), [&] {
        return std::string(fixture.name) + "/one-move on " +
               describe_artin(g, omega) + " -> " + describe_artin(g, moved);
      });
    }
  }
}

// ---------------------------------------------------------------------------
// coxint / certificates

std::vector<VertexSubset> all_subsets(const CoxeterGraph& g) {
  std::vector<VertexSubset> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << g.rank()); ++mask) {
    VertexSubset s;
    for (Vertex v = 0; v < g.rank(); ++v) {
      if ((mask >> v) & 1) s.add(v);
    }
    out.push_back(s);
  }
  return out;
}

std::set<CoxElement> brute_conjugated_intersection(
    const CoxeterGroup& W, const std::vector<CoxElement>& all,
    const CoxElement& w, const VertexSubset& X, const VertexSubset& Y) {
  std::set<CoxElement> out;
  CoxElement w_inv = W.inverse(w);
  for (const auto& e : all) {
    if (!W.in_parabolic(e, Y)) continue;
    CoxElement conj = W.multiply(W.multiply(w, e), w_inv);
    if (W.in_parabolic(conj, X)) out.insert(conj);
  }
  return out;
}

void suite_coxint(Checker& c, std::size_t orbit_cap) {
  CoxeterGroup W(CoxeterGraph::parse(kTriangleGraphText), {orbit_cap});
  auto all = oracle::enumerate_group(W, 100);
  auto subsets = all_subsets(W.graph());

  for (const auto& w : all) {
    for (const auto& X : subsets) {
      for (const auto& Y : subsets) {
        auto data = coxeter_parabolic_intersection(W, X, Y, w);
        auto brute = brute_conjugated_intersection(W, all, w, X, Y);
        std::set<CoxElement> produced;
        CoxElement w1_inv = W.inverse(data.w1);
        for (const auto& e : all) {
          if (!W.in_parabolic(e, data.x1)) continue;
          produced.insert(W.multiply(W.multiply(data.w1, e), w1_inv));
        }
        c.check(brute == produced, [&] {
          return "intersection mismatch at w=" +
                 format_word(W.graph(), w.word);
        });

        if (Y.size() == 2) {
          auto members = Y.members();
          Vertex i = members[0];
          Vertex j = members[1];
          try {
            auto cls = classify_dihedral(W, w, i, j, X);
            std::size_t size = brute.size();
            bool consistent = false;
            switch (cls.kind) {
              case DihedralClassification::Kind::kTrivial:
                consistent = size == 1;
                break;
              case DihedralClassification::Kind::kSingleReflection:
                consistent = size == 2 && brute.count(cls.reflection) == 1 &&
                             !cls.reflection.is_identity();
                break;
              case DihedralClassification::Kind::kFullDihedral:
                consistent = size == 2 * W.graph().label(i, j);
                break;
            }
            c.check(consistent, [&] {
              return "classification inconsistent at w=" +
                     format_word(W.graph(), w.word);
            });
          } catch (const Error&) {
            c.check(false, "classification raised");
          }
        }
      }
    }
  }
}

void suite_certificates(Checker& c, std::size_t orbit_cap) {
  CoxeterGroup W(CoxeterGraph::parse(kTriangleGraphText), {orbit_cap});
  auto all = oracle::enumerate_group(W, 100);
  auto subsets = all_subsets(W.graph());

  for (const auto& w : all) {
    for (const auto& X : subsets) {
      for (const auto& Y : subsets) {
        auto cert = intersect_parabolic_kappa(W, X, Y, w);
        auto data = coxeter_parabolic_intersection(W, X, Y, w);
        c.check(cert.x1 == data.x1 && cert.y1 == data.y1 &&
                    cert.pairing == data.pairing &&
                    cert.w1_lift.source == data.w1 && cert.core == data.w2,
                "certificate shadow equals the Coxeter data");
        // kappa respects the length-additive decomposition.
        std::size_t total = cert.w1_lift.word.size() +
                            kappa(cert.core).word.size() +
                            cert.y_tail_lift.word.size();
        c.check(total == w.length(), "kappa lengths add across the factors");
        for (const auto& [j, i] : cert.pairing) {
          try {
            Vertex got = generator_transport(W, cert, j);
            c.check(got == i, "transport returns the paired letter");
          } catch (const Error&) {
            c.check(false, [&] {
              return "transport failed at w=" + format_word(W.graph(), w.word) +
                     " j=" + W.graph().name(j);
            });
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// conjreduce

void suite_conjreduce(Checker& c, std::uint64_t seed, std::size_t orbit_cap) {
  auto rng = suite_rng(seed, 8);
  CoxeterGroup W(CoxeterGraph::parse(kTriangleGraphText), {orbit_cap});
  const CoxeterGraph& g = W.graph();
  for (std::size_t iter = 0; iter < 200; ++iter) {
    VertexSubset X = random_subset(rng, g);
    VertexSubset Y = random_subset(rng, g);
    ArtinWord omega = random_artin_word(rng, g.rank(), 12);
    auto r = conjecture_reduce(W, X, Y, omega);
    c.check(is_colored(W, r.beta), [&] {
      return "beta not colored for " + describe_artin(g, omega);
    });
    c.check(r.y1.subset_of(Y), "Y1 is a subset of Y");
    c.check(r.y_new == Y, "reduced instance keeps Y");
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"worked-example", "oracle",       "nset",        "retraction",
          "one-move",      "coxint",       "certificates", "conjreduce"};
}

std::vector<SuiteOutcome> run_verification(const VerifyOptions& options) {
  std::vector<SuiteOutcome> outcomes;
  auto want = [&](const char* name) {
    return options.suite == "all" || options.suite == name;
  };

  if (want("worked-example")) {
    Checker c("worked-example");
    suite_worked_example(c, options.orbit_cap);
    outcomes.push_back(std::move(c.outcome));
  }
  if (want("oracle")) {
    Checker c("oracle");
    suite_oracle(c, options.seed, options.orbit_cap);
    outcomes.push_back(std::move(c.outcome));
  }
  if (want("nset")) {
    Checker c("nset");
    suite_nset(c, options.seed, options.orbit_cap);
    outcomes.push_back(std::move(c.outcome));
  }
  if (want("retraction")) {
    Checker c("retraction");
    suite_retraction(c, options.seed, options.orbit_cap);
    outcomes.push_back(std::move(c.outcome));
  }
  if (want("one-move")) {
    Checker c("one-move");
    suite_one_move(c, options.seed, options.orbit_cap);
    outcomes.push_back(std::move(c.outcome));
  }
  if (want("coxint")) {
    Checker c("coxint");
    suite_coxint(c, options.orbit_cap);
    outcomes.push_back(std::move(c.outcome));
  }
  if (want("certificates")) {
    Checker c("certificates");
    suite_certificates(c, options.orbit_cap);
    outcomes.push_back(std::move(c.outcome));
  }
  if (want("conjreduce")) {
    Checker c("conjreduce");
    suite_conjreduce(c, options.seed, options.orbit_cap);
    outcomes.push_back(std::move(c.outcome));
  }
  return outcomes;
}

std::string render(const std::vector<SuiteOutcome>& outcomes) {
  std::ostringstream os;
  for (const auto& o : outcomes) {
    if (o.failures == 0) {
      os << "ok   " << o.name << " cases=" << o.cases << '\n';
    } else {
      os << "FAIL " << o.name << " cases=" << o.cases
         << " failures=" << o.failures << '\n';
      for (const auto& m : o.messages) {
        os << "     " << m << '\n';
      }
    }
  }
  os << (all_passed(outcomes) ? "verify: PASS" : "verify: FAIL") << '\n';
  return os.str();
}

bool all_passed(const std::vector<SuiteOutcome>& outcomes) {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const SuiteOutcome& o) { return o.failures == 0; });
}

}  // namespace coxart::verify
