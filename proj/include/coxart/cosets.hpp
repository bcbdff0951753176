#pragma once

#include <map>
#include <optional>

#include "coxart/coxeter.hpp"
#include "coxart/presentation.hpp"

namespace coxart {

// u = v * w with v in W_X and w (X,0)-reduced; lengths add.
struct CosetDecomposition {
  CoxElement v;
  CoxElement w;
};

// u = w1 * w2 * w2p with w1 in W_X, w2p in W_Y and w2 (X,Y)-reduced;
// lengths add across the three factors.
struct DoubleCosetDecomposition {
  CoxElement w1;
  CoxElement w2;
  CoxElement w2p;
};

// Certifies (w W_Y w^{-1}) cap W_X = w1 W_{X1} w1^{-1}, with the generator
// bijection s_j -> w2 s_j w2^{-1} = s_{pairing(j)} for j in Y1.
struct ParabolicIntersectionData {
  VertexSubset x1;
  VertexSubset y1;
  std::map<Vertex, Vertex> pairing;  // Y1 -> X1
  CoxElement w1;
  CoxElement w2;
};

enum class StripOrder { kAscending, kDescending };

bool is_left_reduced(const CoxeterGroup& W, const CoxElement& w,
                     const VertexSubset& X);
bool is_right_reduced(const CoxeterGroup& W, const CoxElement& w,
                      const VertexSubset& Y);

// Greedy descent stripping; the element-level result is unique regardless of
// order, so `order` only affects determinism of the walk.
CosetDecomposition left_decompose(const CoxeterGroup& W, const CoxElement& u,
                                  const VertexSubset& X,
                                  StripOrder order = StripOrder::kAscending);
// Mirror form: u = w * v with v in W_Y and w (0,Y)-reduced.
CosetDecomposition right_decompose(const CoxeterGroup& W, const CoxElement& u,
                                   const VertexSubset& Y,
                                   StripOrder order = StripOrder::kAscending);

DoubleCosetDecomposition double_decompose(const CoxeterGroup& W,
                                          const CoxElement& u,
                                          const VertexSubset& X,
                                          const VertexSubset& Y);

// Given w (X,0)-reduced: the q in X with w s_i w^{-1} = s_q, or nullopt.
// Decided by descent tests alone: w s_i w^{-1} lies in S_X exactly when
// w s_i is not (X,0)-reduced, and then the unique X-descent of w s_i is q.
// Throws Error(kPreconditionViolated) if w is not (X,0)-reduced.
std::optional<Vertex> conjugates_into_sx(const CoxeterGroup& W,
                                         const CoxElement& w, Vertex i,
                                         const VertexSubset& X);

ParabolicIntersectionData coxeter_parabolic_intersection(
    const CoxeterGroup& W, const VertexSubset& X, const VertexSubset& Y,
    const CoxElement& w);

// Same, reusing an existing double-coset decomposition of w.
ParabolicIntersectionData parabolic_intersection_from(
    const CoxeterGroup& W, const VertexSubset& X, const VertexSubset& Y,
    const DoubleCosetDecomposition& dd);

// The three shapes of (w W_{i,j} w^{-1}) cap W_X.
struct DihedralClassification {
  enum class Kind { kTrivial, kSingleReflection, kFullDihedral };
  Kind kind;
  CoxElement reflection;             // kSingleReflection only
  VertexSubset x1;                   // kFullDihedral only
  std::map<Vertex, Vertex> pairing;  // kFullDihedral only
};

DihedralClassification classify_dihedral(const CoxeterGroup& W,
                                         const CoxElement& w, Vertex i,
                                         Vertex j, const VertexSubset& X);

}  // namespace coxart
