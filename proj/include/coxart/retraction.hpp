#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "coxart/coxeter.hpp"
#include "coxart/presentation.hpp"
#include "coxart/word_core.hpp"

namespace coxart {

// One position of the incremental retraction: whether the letter was emitted
// and the (X,0)-reduced prefix part after consuming it.
struct RetractionStep {
  std::size_t position;  // 1-based
  bool emitted;
  ArtinLetter output{};  // valid when emitted
  CoxElement w_after;
};

struct RetractionTrace {
  std::vector<RetractionStep> steps;
  ArtinWord output;
};

// pi*_{I,X}: one left-to-right pass keeping w_cur, the (X,0)-reduced part of
// the theta-image prefix. A letter (i, e) is emitted as (q, e) when
// w_cur s_i w_cur^{-1} = s_q lies in S_X (a descent test), otherwise w_cur
// absorbs s_i.
RetractionTrace retract_star_traced(const CoxeterGroup& W, const ArtinWord& w,
                                    const VertexSubset& X);
ArtinWord retract_star(const CoxeterGroup& W, const ArtinWord& w,
                       const VertexSubset& X);

// Audit pipeline for the same map: materialize the masked reflection
// sequence of the theta-image, recover the letters t_n from the kept
// elements by the triangular products t_n = r_1 .. r_{n-1} r_n r_{n-1} .. r_1,
// and reattach the input signs. Must agree with retract_star everywhere.
ArtinWord retract_star_direct(const CoxeterGroup& W, const ArtinWord& w,
                              const VertexSubset& X);

// The two-branch definition: at position j with prefix decompositions
// v w = theta-prefix, uses w_{j-1} for sign +1 and w_j for sign -1, emitting
// when the conjugate is a letter of S_X. Coincides with retract_star.
ArtinWord retract_hat(const CoxeterGroup& W, const ArtinWord& w,
                      const VertexSubset& X);

// Returns (p, r) with p the Coxeter image of the retraction and
// r = p^{-1} theta(w); checks that r is (X,0)-reduced and that lengths add,
// throwing Error(kAssertionFailure) otherwise.
std::pair<CoxElement, CoxElement> theta_split_check(const CoxeterGroup& W,
                                                    const ArtinWord& w,
                                                    const VertexSubset& X);

}  // namespace coxart
