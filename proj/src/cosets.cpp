#include "coxart/cosets.hpp"

#include <algorithm>

#include "coxart/errors.hpp"

namespace coxart {
namespace {

std::vector<Vertex> ordered_members(const VertexSubset& X, StripOrder order) {
  std::vector<Vertex> members = X.members();
  if (order == StripOrder::kDescending) {
    std::reverse(members.begin(), members.end());
  }
  return members;
}

std::optional<Vertex> left_descent_in(const CoxeterGroup& W,
                                      const CoxElement& w,
                                      const std::vector<Vertex>& members) {
  for (Vertex s : members) {
    if (W.multiply(s, w).length() < w.length()) return s;
  }
  return std::nullopt;
}

std::optional<Vertex> right_descent_in(const CoxeterGroup& W,
                                       const CoxElement& w,
                                       const std::vector<Vertex>& members) {
  for (Vertex s : members) {
    if (W.multiply(w, s).length() < w.length()) return s;
  }
  return std::nullopt;
}

}  // namespace

bool is_left_reduced(const CoxeterGroup& W, const CoxElement& w,
                     const VertexSubset& X) {
  return !left_descent_in(W, w, X.members()).has_value();
}

bool is_right_reduced(const CoxeterGroup& W, const CoxElement& w,
                      const VertexSubset& Y) {
  return !right_descent_in(W, w, Y.members()).has_value();
}

CosetDecomposition left_decompose(const CoxeterGroup& W, const CoxElement& u,
                                  const VertexSubset& X, StripOrder order) {
  auto members = ordered_members(X, order);
  Word v_letters;
  CoxElement w = u;
  while (auto s = left_descent_in(W, w, members)) {
    v_letters.push_back(char(*s));
    w = W.multiply(*s, w);
  }
  // Each strip lowers the length by exactly one, so v_letters is reduced.
  return {W.canonicalize(v_letters), w};
}

CosetDecomposition right_decompose(const CoxeterGroup& W, const CoxElement& u,
                                   const VertexSubset& Y, StripOrder order) {
  auto members = ordered_members(Y, order);
  Word v_letters;
  CoxElement w = u;
  while (auto s = right_descent_in(W, w, members)) {
    v_letters.insert(v_letters.begin(), char(*s));
    w = W.multiply(w, *s);
  }
  return {W.canonicalize(v_letters), w};
}

DoubleCosetDecomposition double_decompose(const CoxeterGroup& W,
                                          const CoxElement& u,
                                          const VertexSubset& X,
                                          const VertexSubset& Y) {
  auto x_members = X.members();
  auto y_members = Y.members();
  Word w1_letters;
  Word w2p_letters;
  CoxElement core = u;
  for (;;) {
    bool progressed = false;
    while (auto s = left_descent_in(W, core, x_members)) {
      w1_letters.push_back(char(*s));
      core = W.multiply(*s, core);
      progressed = true;
    }
    while (auto t = right_descent_in(W, core, y_members)) {
      w2p_letters.insert(w2p_letters.begin(), char(*t));
      core = W.multiply(core, *t);
      progressed = true;
    }
    if (!progressed) break;
  }
  return {W.canonicalize(w1_letters), core, W.canonicalize(w2p_letters)};
}

std::optional<Vertex> conjugates_into_sx(const CoxeterGroup& W,
                                         const CoxElement& w, Vertex i,
                                         const VertexSubset& X) {
  if (!is_left_reduced(W, w, X)) {
    throw Error(Error::Code::kPreconditionViolated,
                "conjugates_into_sx requires an (X,0)-reduced element");
  }
  CoxElement u = W.multiply(w, i);
  if (u.length() < w.length()) return std::nullopt;
  // Any s in X with l(s u) < l(u) satisfies s w = w s_i and hence s is the
  // conjugate; in particular it is unique.
  for (Vertex s : X.members()) {
    if (W.multiply(s, u).length() < u.length()) return s;
  }
  return std::nullopt;
}

ParabolicIntersectionData parabolic_intersection_from(
    const CoxeterGroup& W, const VertexSubset& X, const VertexSubset& Y,
    const DoubleCosetDecomposition& dd) {
  ParabolicIntersectionData data;
  data.w1 = dd.w1;
  data.w2 = dd.w2;
  // w2 is (X,Y)-reduced, so w2^{-1} is (Y,0)-reduced and the scan below is
  // the Y-side mirror of the membership test w2^{-1} s_i w2 in S_Y.
  CoxElement w2_inv = W.inverse(dd.w2);
  for (Vertex i : X.members()) {
    if (auto j = conjugates_into_sx(W, w2_inv, i, Y)) {
      data.x1.add(i);
      data.y1.add(*j);
      data.pairing[*j] = i;
    }
  }
  return data;
}

ParabolicIntersectionData coxeter_parabolic_intersection(
    const CoxeterGroup& W, const VertexSubset& X, const VertexSubset& Y,
    const CoxElement& w) {
  return parabolic_intersection_from(W, X, Y, double_decompose(W, w, X, Y));
}

DihedralClassification classify_dihedral(const CoxeterGroup& W,
                                         const CoxElement& w, Vertex i,
                                         Vertex j, const VertexSubset& X) {
  if (i == j) {
    throw Error(Error::Code::kPreconditionViolated,
                "classify_dihedral requires distinct vertices");
  }
  VertexSubset Y;
  Y.add(i);
  Y.add(j);
  ParabolicIntersectionData data = coxeter_parabolic_intersection(W, X, Y, w);
  DihedralClassification result;
  switch (data.y1.size()) {
    case 0:
      result.kind = DihedralClassification::Kind::kTrivial;
      break;
    case 1: {
      result.kind = DihedralClassification::Kind::kSingleReflection;
      Vertex paired = data.pairing.begin()->second;
      result.reflection = W.conjugate_generator(data.w1, paired);
      break;
    }
    case 2: {
      result.kind = DihedralClassification::Kind::kFullDihedral;
      result.x1 = data.x1;
      result.pairing = data.pairing;
      auto members = data.x1.members();
      if (W.graph().label(members[0], members[1]) != W.graph().label(i, j)) {
        throw Error(Error::Code::kAssertionFailure,
                    "full dihedral image has a different edge label");
      }
      break;
    }
    default:
      throw Error(Error::Code::kAssertionFailure,
                  "dihedral intersection with more than two generators");
  }
  return result;
}

}  // namespace coxart
