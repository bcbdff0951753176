#pragma once

#include <cstddef>
#include <vector>

#include "coxart/coxeter.hpp"
#include "coxart/presentation.hpp"
#include "coxart/word_core.hpp"

namespace coxart {

// Entry j of R(w): the palindromic word s_{i_1}..s_{i_j}..s_{i_1} built from
// the j-letter prefix of w, together with its canonical element form.
struct ReflectionEntry {
  std::size_t position;  // 1-based j
  Word word;             // length 2j-1
  CoxElement element;
  bool in_x = false;     // meaningful only when a mask was requested
};

struct ReflectionSequence {
  std::vector<ReflectionEntry> entries;
};

// Elements of odd multiplicity in the element sequence of R(w),
// shortlex-sorted.
struct NSet {
  std::vector<CoxElement> members;
};

ReflectionSequence reflection_sequence(const CoxeterGroup& W, const Word& w);

NSet n_set(const CoxeterGroup& W, const Word& w);

// R(w) with in_x flags: entry j is flagged when its element lies in W_X.
ReflectionSequence masked_sequence(const CoxeterGroup& W, const Word& w,
                                   const VertexSubset& X);

// The kept subsequence \hat{R}_X: positions of flagged entries, ascending.
std::vector<std::size_t> kept_positions(const ReflectionSequence& seq);

// Checks r_n(s_{i,j}..) = r_{m-n+1}(s_{j,i}..) as elements for n = 1..m,
// where both words are the m-letter alternating products. Throws
// Error(kNotAnEdge) unless {i,j} is an edge with finite label.
bool dihedral_palindrome_check(const CoxeterGroup& W, Vertex i, Vertex j);

// Checks that the element sequence of R(ww') is the element sequence of R(w)
// followed by w R(w') w^{-1} termwise.
bool concat_decomposition_check(const CoxeterGroup& W, const Word& w,
                                const Word& wp);

}  // namespace coxart
