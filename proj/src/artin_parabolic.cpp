#include "coxart/artin_parabolic.hpp"

#include "coxart/errors.hpp"
#include "coxart/retraction.hpp"

namespace coxart {

KappaLift kappa(const CoxElement& x) {
  KappaLift lift;
  lift.source = x;
  lift.word.reserve(x.word.size());
  for (char c : x.word) lift.word.push_back({Vertex(c), 1});
  return lift;
}

bool is_colored(const CoxeterGroup& W, const ArtinWord& w) {
  return W.canonicalize(theta_star(w)).is_identity();
}

ArtinIntersectionCertificate intersect_parabolic_kappa(const CoxeterGroup& W,
                                                       const VertexSubset& X,
                                                       const VertexSubset& Y,
                                                       const CoxElement& w) {
  DoubleCosetDecomposition dd = double_decompose(W, w, X, Y);
  ParabolicIntersectionData data = parabolic_intersection_from(W, X, Y, dd);
  ArtinIntersectionCertificate cert;
  cert.x = X;
  cert.y = Y;
  cert.w1_lift = kappa(dd.w1);
  cert.x1 = data.x1;
  cert.y1 = data.y1;
  cert.pairing = data.pairing;
  cert.core = dd.w2;
  cert.y_tail_lift = kappa(dd.w2p);
  return cert;
}

Vertex generator_transport(const CoxeterGroup& W,
                           const ArtinIntersectionCertificate& cert,
                           Vertex j) {
  auto it = cert.pairing.find(j);
  if (it == cert.pairing.end() || !cert.y1.contains(j)) {
    throw Error(Error::Code::kPreconditionViolated,
                "generator_transport requires j in Y1");
  }
  Vertex i = it->second;
  ArtinWord conjugated = kappa(cert.core).word;
  conjugated.push_back({j, 1});
  ArtinWord tail = invert(kappa(cert.core).word);
  conjugated.insert(conjugated.end(), tail.begin(), tail.end());
  ArtinWord image = retract_star(W, conjugated, cert.x);
  if (image != ArtinWord{{i, 1}}) {
    throw Error(Error::Code::kAssertionFailure,
                "transported generator does not retract to the paired letter");
  }
  return i;
}

ConjectureReduction conjecture_reduce(const CoxeterGroup& W,
                                      const VertexSubset& X,
                                      const VertexSubset& Y,
                                      const ArtinWord& omega) {
  CoxElement w = W.canonicalize(theta_star(omega));
  DoubleCosetDecomposition dd = double_decompose(W, w, X, Y);

  // Strip kappa(w1)^{-1} on the left and kappa(w2p)^{-1} on the right so the
  // theta-image becomes the (X,Y)-reduced core.
  ArtinWord normalized = invert(kappa(dd.w1).word);
  normalized.insert(normalized.end(), omega.begin(), omega.end());
  ArtinWord right = invert(kappa(dd.w2p).word);
  normalized.insert(normalized.end(), right.begin(), right.end());

  ArtinWord omega2 = kappa(dd.w2).word;

  ArtinWord shifted = normalized;
  ArtinWord omega2_inv = invert(omega2);
  shifted.insert(shifted.end(), omega2_inv.begin(), omega2_inv.end());
  ArtinWord mid = retract_star(W, shifted, X);

  ArtinWord beta = invert(normalized);
  beta.insert(beta.end(), mid.begin(), mid.end());
  beta.insert(beta.end(), omega2.begin(), omega2.end());

  ConjectureReduction out;
  out.y_new = Y;
  out.y1 = parabolic_intersection_from(W, X, Y, dd).y1;
  out.beta = free_reduce(beta);
  return out;
}

}  // namespace coxart
