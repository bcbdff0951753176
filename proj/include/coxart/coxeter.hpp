#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "coxart/presentation.hpp"
#include "coxart/word_core.hpp"

namespace coxart {

// An element of W_I, held as its canonical reduced word: the shortlex-least
// word (under the graph's vertex order) in the braid-move orbit of any
// reduced representative.
struct CoxElement {
  Word word;
  auto operator<=>(const CoxElement&) const = default;
  std::size_t length() const { return word.size(); }
  bool is_identity() const { return word.empty(); }
};

// Shortlex order on arbitrary words.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct CoxeterOptions {
  // Hard bound on the number of distinct words a braid-move orbit may reach.
  std::size_t orbit_cap = 1'000'000;
  // Bound on memoized canonicalize entries; inserts stop once reached.
  std::size_t cache_bound = 1 << 21;
};

// The word problem in W_I via Tits' orbit method: a word is non-reduced
// exactly when some word in its braid-move orbit contains an adjacent equal
// pair. Holds a memo cache for canonical forms; use one instance per thread.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(CoxeterGraph graph, CoxeterOptions options = {});

  const CoxeterGraph& graph() const { return graph_; }
  const CoxeterOptions& options() const { return options_; }

  // All words reachable from w by braid moves, shortlex-sorted. Throws
  // Error(kOrbitCapExceeded) past options().orbit_cap distinct words.
  std::vector<Word> braid_orbit(const Word& w) const;

  // Deterministic Tits reduction: repeatedly take the shortlex-least orbit
  // word containing an adjacent equal pair, delete its leftmost such pair,
  // and recurse; returns the fixpoint word.
  Word reduce(const Word& w) const;

  CoxElement canonicalize(const Word& w) const;

  CoxElement identity() const { return {}; }
  CoxElement generator(Vertex v) const { return CoxElement{Word(1, char(v))}; }
  // Parses and canonicalizes a simple word in CLI text form.
  CoxElement element(std::string_view text) const;

  CoxElement multiply(const CoxElement& x, const CoxElement& y) const;
  CoxElement multiply(const CoxElement& x, Vertex v) const;
  CoxElement multiply(Vertex v, const CoxElement& x) const;
  CoxElement inverse(const CoxElement& x) const;
  bool equal(const CoxElement& x, const CoxElement& y) const {
    return x.word == y.word;
  }
  std::size_t length(const CoxElement& x) const { return x.word.size(); }

  // u s_v u^{-1}, computed by wrapping one letter at a time so every
  // intermediate canonicalization stays within two letters of reduced.
  CoxElement conjugate_generator(const CoxElement& u, Vertex v) const;

  // Membership in the standard parabolic W_X: by convexity, an element lies
  // in W_X exactly when its canonical word is a word on X.
  bool in_parabolic(const CoxElement& x, const VertexSubset& X) const;

  std::optional<Vertex> simple_letter(const CoxElement& x) const {
    if (x.word.size() != 1) return std::nullopt;
    return Vertex(x.word[0]);
  }

  std::size_t cache_size() const { return cache_.size(); }

 private:
  // Breadth-first closure under braid moves; throws on cap overflow.
  std::unordered_set<Word> orbit_closure(const Word& w) const;
  // Appends every braid-move neighbour of w to out.
  void braid_neighbours(const Word& w, std::vector<Word>* out) const;
  void cache_insert(const Word& key, const Word& canonical) const;

  CoxeterGraph graph_;
  CoxeterOptions options_;
  mutable std::unordered_map<Word, Word> cache_;
};

}  // namespace coxart
