#pragma once

#include <map>

#include "coxart/cosets.hpp"
#include "coxart/coxeter.hpp"
#include "coxart/presentation.hpp"
#include "coxart/word_core.hpp"

namespace coxart {

// kappa_I(w): the all-positive Artin word over the canonical reduced word.
struct KappaLift {
  CoxElement source;
  ArtinWord word;
};

KappaLift kappa(const CoxElement& x);

// Data certifying kappa(w) A_Y kappa(w)^{-1} cap A_X =
// kappa(w1) A_{X1} kappa(w1)^{-1}, plus the mirror tail for
// kappa(w)^{-1} A_X kappa(w) cap A_Y = kappa(w2p)^{-1} A_{Y1} kappa(w2p).
struct ArtinIntersectionCertificate {
  VertexSubset x;
  VertexSubset y;
  KappaLift w1_lift;
  VertexSubset x1;
  VertexSubset y1;
  std::map<Vertex, Vertex> pairing;  // Y1 -> X1
  CoxElement core;                   // the (X,Y)-reduced w2
  KappaLift y_tail_lift;             // kappa(w2p)
};

// True when the theta-image represents the identity of W_I.
bool is_colored(const CoxeterGroup& W, const ArtinWord& w);

ArtinIntersectionCertificate intersect_parabolic_kappa(const CoxeterGroup& W,
                                                       const VertexSubset& X,
                                                       const VertexSubset& Y,
                                                       const CoxElement& w);

// Returns pairing(j) after checking the word-level transport certificate:
// retract_star(kappa(core) sigma_j kappa(core)^{-1}, X) is the single
// positive letter sigma_{pairing(j)}. Throws Error(kAssertionFailure) on
// mismatch and Error(kPreconditionViolated) when j is not in Y1.
Vertex generator_transport(const CoxeterGroup& W,
                           const ArtinIntersectionCertificate& cert, Vertex j);

// One application of the reduction that trades an arbitrary conjugator for a
// colored one: normalizes omega so its theta-image is (X,Y)-reduced, then
// returns beta = free_reduce(omega^{-1} pi*(omega kappa^{-1}) kappa) together
// with Y and the Y1 of the Coxeter intersection data. beta is always colored
// and Y1 is a subset of Y.
struct ConjectureReduction {
  VertexSubset y_new;  // equals Y; the reduced instance's "X"
  VertexSubset y1;     // the reduced instance's "Y"
  ArtinWord beta;
};

ConjectureReduction conjecture_reduce(const CoxeterGroup& W,
                                      const VertexSubset& X,
                                      const VertexSubset& Y,
                                      const ArtinWord& omega);

}  // namespace coxart
