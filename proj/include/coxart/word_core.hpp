#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxart/presentation.hpp"

namespace coxart {

// A word on S_I. Each byte is a vertex index, so words hash and compare
// cheaply during orbit searches. Ordering of std::string is bytewise, which
// matches lexicographic order on vertex indices.
using Word = std::string;

inline Word reverse_word(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

// One signed letter sigma_v^{sign} of an Artin word.
struct ArtinLetter {
  Vertex vertex;
  std::int8_t sign;  // +1 or -1
  bool operator==(const ArtinLetter&) const = default;
};

using ArtinWord = std::vector<ArtinLetter>;

// Erases signs: sigma_i^{+-1} -> s_i.
Word theta_star(const ArtinWord& w);

// Deletes adjacent sigma_i^e sigma_i^{-e} pairs until none remain
// (stack-based, so leftmost cancellations happen first; the result is the
// free-group normal form of the letter sequence).
ArtinWord free_reduce(const ArtinWord& w);

ArtinWord invert(const ArtinWord& w);

// One rewriting step on an Artin word. Positions are 1-based.
struct ElementaryMove {
  enum class Kind { kFreeInsert, kFreeDelete, kBraid };
  Kind kind;
  std::size_t position;
  // kFreeInsert: the letter inserted (its formal inverse goes right after it).
  // kFreeDelete: the first letter of the cancelling pair removed.
  ArtinLetter letter{};
  // kBraid: the edge whose relation is applied at `position`.
  Vertex edge_i{}, edge_j{};

  bool operator==(const ElementaryMove&) const = default;
};

// All moves legal on w, in a fixed deterministic order: free deletions by
// position, braid sites by position, free insertions by (position, vertex,
// sign). Braid sites are maximal-sign-uniform alternating factors of m(i,j)
// letters, all +1 or all -1; mixed signs are not rewritten.
std::vector<ElementaryMove> legal_moves(const CoxeterGraph& g,
                                        const ArtinWord& w);

ArtinWord apply_move(const CoxeterGraph& g, const ArtinWord& w,
                     const ElementaryMove& m);

// The move that undoes `m` on apply_move(g, w, m). `before` is w itself.
ElementaryMove inverse_move(const ElementaryMove& m, const ArtinWord& before);

// Picks uniformly among legal_moves(g, w) and applies it.
std::pair<ElementaryMove, ArtinWord> random_move(const CoxeterGraph& g,
                                                 const ArtinWord& w,
                                                 std::mt19937_64& rng);
std::pair<ElementaryMove, ArtinWord> random_move(const CoxeterGraph& g,
                                                 const ArtinWord& w,
                                                 std::uint64_t seed);

// Text forms. Simple word: "a b a"; Artin word: "a b^-1 c"; "e" is the empty
// word (unless the graph declares a vertex named e, in which case the letter
// reading wins).
Word parse_simple_word(const CoxeterGraph& g, std::string_view text);
ArtinWord parse_artin_word(const CoxeterGraph& g, std::string_view text);
std::string format_word(const CoxeterGraph& g, const Word& w);
std::string format_artin_word(const CoxeterGraph& g, const ArtinWord& w);

}  // namespace coxart
