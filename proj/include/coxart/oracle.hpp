#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "coxart/coxeter.hpp"
#include "coxart/presentation.hpp"
#include "coxart/word_core.hpp"

namespace coxart::oracle {

// One-line form: images of 0..degree-1.
using Permutation = std::vector<unsigned>;

// Independent ground truth for finite-type graphs. Deliberately shares no
// algorithms with CoxeterGroup: multiplication is permutation composition,
// length is inversion counting (type A) or a Cayley-graph distance table
// (dihedral) built from permutations alone.
struct PermModel {
  enum class Kind { kTypeA, kDihedral };
  Kind kind;
  std::size_t degree;
  std::vector<Permutation> generators;  // indexed by Vertex
  // Dihedral only: distance from the identity, keyed by permutation.
  std::map<Permutation, std::size_t> distance;
};

// Type A chain (label-3 edges form a path covering all vertices and every
// other pair is labelled 2) -> adjacent transpositions on n+1 points.
// Single finite edge -> dihedral action on the m-gon's vertices (Klein
// four-group on 4 points when m = 2). Anything else -> nullopt.
std::optional<PermModel> perm_model(const CoxeterGraph& g);

Permutation oracle_eval(const PermModel& model, const Word& w);
bool oracle_equal(const PermModel& model, const Word& a, const Word& b);

// Type A: inversion count of the image permutation. Dihedral: looked up in
// the distance table. Throws Error(kModelUnavailable) otherwise.
std::size_t oracle_length(const PermModel& model, const Word& w);

// Breadth-first closure of W_I from the identity under right multiplication,
// using the group's own equality. Throws Error(kGroupTooLargeOrInfinite) past
// cap elements. Sorted by (length, word).
std::vector<CoxElement> enumerate_group(const CoxeterGroup& group,
                                        std::size_t cap);

}  // namespace coxart::oracle
