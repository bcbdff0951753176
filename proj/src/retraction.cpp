#include "coxart/retraction.hpp"

#include "coxart/cosets.hpp"
#include "coxart/errors.hpp"
#include "coxart/reflections.hpp"

namespace coxart {

RetractionTrace retract_star_traced(const CoxeterGroup& W, const ArtinWord& w,
                                    const VertexSubset& X) {
  RetractionTrace trace;
  trace.steps.reserve(w.size());
  CoxElement w_cur = W.identity();
  for (std::size_t k = 0; k < w.size(); ++k) {
    RetractionStep step;
    step.position = k + 1;
    if (auto q = conjugates_into_sx(W, w_cur, w[k].vertex, X)) {
      step.emitted = true;
      step.output = {*q, w[k].sign};
      trace.output.push_back(step.output);
    } else {
      step.emitted = false;
      w_cur = W.multiply(w_cur, w[k].vertex);
    }
    step.w_after = w_cur;
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

ArtinWord retract_star(const CoxeterGroup& W, const ArtinWord& w,
                       const VertexSubset& X) {
  return retract_star_traced(W, w, X).output;
}

ArtinWord retract_star_direct(const CoxeterGroup& W, const ArtinWord& w,
                              const VertexSubset& X) {
  ReflectionSequence seq = masked_sequence(W, theta_star(w), X);
  ArtinWord out;
  CoxElement prefix = W.identity();  // product of kept elements so far
  for (const auto& entry : seq.entries) {
    if (!entry.in_x) continue;
    CoxElement t = W.multiply(W.multiply(prefix, entry.element),
                              W.inverse(prefix));
    auto q = W.simple_letter(t);
    if (!q || !X.contains(*q)) {
      throw Error(Error::Code::kAssertionFailure,
                  "recovered retraction letter is not a generator of X");
    }
    out.push_back({*q, w[entry.position - 1].sign});
    prefix = W.multiply(prefix, entry.element);
  }
  return out;
}

ArtinWord retract_hat(const CoxeterGroup& W, const ArtinWord& w,
                      const VertexSubset& X) {
  ArtinWord out;
  CoxElement prefix = W.identity();
  CoxElement w_prev = W.identity();  // (X,0)-reduced part before this letter
  for (const auto& letter : w) {
    prefix = W.multiply(prefix, letter.vertex);
    CoxElement w_next = left_decompose(W, prefix, X).w;
    CoxElement t = letter.sign > 0
                       ? W.conjugate_generator(w_prev, letter.vertex)
                       : W.conjugate_generator(w_next, letter.vertex);
    if (auto q = W.simple_letter(t); q && X.contains(*q)) {
      out.push_back({*q, letter.sign});
    }
    w_prev = w_next;
  }
  return out;
}

std::pair<CoxElement, CoxElement> theta_split_check(const CoxeterGroup& W,
                                                    const ArtinWord& w,
                                                    const VertexSubset& X) {
  CoxElement p = W.canonicalize(theta_star(retract_star(W, w, X)));
  CoxElement full = W.canonicalize(theta_star(w));
  CoxElement r = W.multiply(W.inverse(p), full);
  if (!is_left_reduced(W, r, X)) {
    throw Error(Error::Code::kAssertionFailure,
                "retraction remainder is not (X,0)-reduced");
  }
  if (full.length() != p.length() + r.length()) {
    throw Error(Error::Code::kAssertionFailure,
                "retraction split lengths do not add");
  }
  return {p, r};
}

}  // namespace coxart
