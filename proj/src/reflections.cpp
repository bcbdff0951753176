#include "coxart/reflections.hpp"

#include <algorithm>
#include <map>

#include "coxart/errors.hpp"

namespace coxart {

ReflectionSequence reflection_sequence(const CoxeterGroup& W, const Word& w) {
  ReflectionSequence seq;
  seq.entries.reserve(w.size());
  CoxElement prefix = W.identity();
  for (std::size_t j = 0; j < w.size(); ++j) {
    ReflectionEntry entry;
    entry.position = j + 1;
    entry.word = w.substr(0, j + 1) + reverse_word(w.substr(0, j));
    entry.element = W.conjugate_generator(prefix, Vertex(w[j]));
    seq.entries.push_back(std::move(entry));
    prefix = W.multiply(prefix, Vertex(w[j]));
  }
  return seq;
}

NSet n_set(const CoxeterGroup& W, const Word& w) {
  std::map<CoxElement, std::size_t> multiplicity;
  for (const auto& entry : reflection_sequence(W, w).entries) {
    ++multiplicity[entry.element];
  }
  NSet out;
  for (const auto& [element, count] : multiplicity) {
    if (count % 2 == 1) out.members.push_back(element);
  }
  std::sort(out.members.begin(), out.members.end(),
            [](const CoxElement& a, const CoxElement& b) {
              return shortlex_less(a.word, b.word);
            });
  return out;
}

ReflectionSequence masked_sequence(const CoxeterGroup& W, const Word& w,
                                   const VertexSubset& X) {
  ReflectionSequence seq = reflection_sequence(W, w);
  for (auto& entry : seq.entries) {
    entry.in_x = W.in_parabolic(entry.element, X);
  }
  return seq;
}

std::vector<std::size_t> kept_positions(const ReflectionSequence& seq) {
  std::vector<std::size_t> out;
  for (const auto& entry : seq.entries) {
    if (entry.in_x) out.push_back(entry.position);
  }
  return out;
}

bool dihedral_palindrome_check(const CoxeterGroup& W, Vertex i, Vertex j) {
  if (!W.graph().has_edge(i, j)) {
    throw Error(Error::Code::kNotAnEdge,
                "no finite edge between the given vertices");
  }
  unsigned m = W.graph().label(i, j);
  Word sij, sji;
  for (unsigned t = 0; t < m; ++t) {
    sij.push_back(char(t % 2 == 0 ? i : j));
    sji.push_back(char(t % 2 == 0 ? j : i));
  }
  auto rij = reflection_sequence(W, sij);
  auto rji = reflection_sequence(W, sji);
  for (unsigned n = 1; n <= m; ++n) {
    if (rij.entries[n - 1].element != rji.entries[m - n].element) return false;
  }
  return true;
}

bool concat_decomposition_check(const CoxeterGroup& W, const Word& w,
                                const Word& wp) {
  auto lhs = reflection_sequence(W, w + wp);
  auto head = reflection_sequence(W, w);
  auto tail = reflection_sequence(W, wp);
  if (lhs.entries.size() != head.entries.size() + tail.entries.size()) {
    return false;
  }
  for (std::size_t k = 0; k < head.entries.size(); ++k) {
    if (lhs.entries[k].element != head.entries[k].element) return false;
  }
  CoxElement welt = W.canonicalize(w);
  CoxElement winv = W.inverse(welt);
  for (std::size_t k = 0; k < tail.entries.size(); ++k) {
    CoxElement conjugated =
        W.multiply(W.multiply(welt, tail.entries[k].element), winv);
    if (lhs.entries[head.entries.size() + k].element != conjugated) {
      return false;
    }
  }
  return true;
}

}  // namespace coxart
