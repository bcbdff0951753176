#include "coxart/coxeter.hpp"

#include <algorithm>
#include <deque>

#include "coxart/errors.hpp"

namespace coxart {
namespace {

bool has_adjacent_pair(const Word& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k] == w[k + 1]) return true;
  }
  return false;
}

Word delete_leftmost_pair(const Word& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k] == w[k + 1]) {
      Word out = w.substr(0, k);
      out += w.substr(k + 2);
      return out;
    }
  }
  return w;
}

}  // namespace

CoxeterGroup::CoxeterGroup(CoxeterGraph graph, CoxeterOptions options)
    : graph_(std::move(graph)), options_(options) {}

void CoxeterGroup::braid_neighbours(const Word& w,
                                    std::vector<Word>* out) const {
  for (std::size_t q = 0; q + 1 < w.size(); ++q) {
    Vertex a = Vertex(w[q]);
    Vertex b = Vertex(w[q + 1]);
    if (a == b) continue;
    unsigned m = graph_.label(a, b);
    if (m == kInfinity || q + m > w.size()) continue;
    bool alternating = true;
    for (unsigned t = 2; t < m; ++t) {
      if (Vertex(w[q + t]) != (t % 2 == 0 ? a : b)) {
        alternating = false;
        break;
      }
    }
    if (!alternating) continue;
    Word next = w;
    for (unsigned t = 0; t < m; ++t) {
      next[q + t] = char(t % 2 == 0 ? b : a);
    }
    out->push_back(std::move(next));
  }
}

std::unordered_set<Word> CoxeterGroup::orbit_closure(const Word& w) const {
  std::unordered_set<Word> seen{w};
  std::deque<Word> queue{w};
  std::vector<Word> neighbours;
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    neighbours.clear();
    braid_neighbours(cur, &neighbours);
    for (auto& n : neighbours) {
      if (seen.insert(n).second) {
        if (seen.size() > options_.orbit_cap) {
          throw Error(Error::Code::kOrbitCapExceeded,
                      "braid orbit exceeds cap of " +
                          std::to_string(options_.orbit_cap) + " words");
        }
        queue.push_back(std::move(n));
      }
    }
  }
  return seen;
}

std::vector<Word> CoxeterGroup::braid_orbit(const Word& w) const {
  auto closure = orbit_closure(w);
  std::vector<Word> out(closure.begin(), closure.end());
  std::sort(out.begin(), out.end());  // same length, so plain lex = shortlex
  return out;
}

Word CoxeterGroup::reduce(const Word& w) const {
  Word cur = w;
  for (;;) {
    auto orbit = orbit_closure(cur);
    const Word* best = nullptr;
    for (const Word& u : orbit) {
      if (has_adjacent_pair(u) && (!best || u < *best)) best = &u;
    }
    if (!best) return cur;
    cur = delete_leftmost_pair(*best);
  }
}

CoxElement CoxeterGroup::canonicalize(const Word& w) const {
  if (auto it = cache_.find(w); it != cache_.end()) {
    return CoxElement{it->second};
  }
  std::vector<Word> chain{w};
  Word cur = w;
  Word canonical;
  for (;;) {
    auto orbit = orbit_closure(cur);
    const Word* best = nullptr;
    for (const Word& u : orbit) {
      if (has_adjacent_pair(u) && (!best || u < *best)) best = &u;
    }
    if (!best) {
      // cur is reduced; its orbit is exactly its braid class of reduced
      // words, so the least member is the canonical form.
      canonical = *std::min_element(orbit.begin(), orbit.end());
      break;
    }
    cur = delete_leftmost_pair(*best);
    chain.push_back(cur);
  }
  for (const Word& step : chain) cache_insert(step, canonical);
  return CoxElement{canonical};
}

void CoxeterGroup::cache_insert(const Word& key, const Word& canonical) const {
  if (cache_.size() < options_.cache_bound) cache_.emplace(key, canonical);
}

CoxElement CoxeterGroup::element(std::string_view text) const {
  return canonicalize(parse_simple_word(graph_, text));
}

CoxElement CoxeterGroup::multiply(const CoxElement& x,
                                  const CoxElement& y) const {
  return canonicalize(x.word + y.word);
}

CoxElement CoxeterGroup::multiply(const CoxElement& x, Vertex v) const {
  return canonicalize(x.word + char(v));
}

CoxElement CoxeterGroup::multiply(Vertex v, const CoxElement& x) const {
  return canonicalize(char(v) + x.word);
}

CoxElement CoxeterGroup::inverse(const CoxElement& x) const {
  return canonicalize(reverse_word(x.word));
}

CoxElement CoxeterGroup::conjugate_generator(const CoxElement& u,
                                             Vertex v) const {
  Word cur(1, char(v));
  for (auto it = u.word.rbegin(); it != u.word.rend(); ++it) {
    Word wrapped;
    wrapped.reserve(cur.size() + 2);
    wrapped += *it;
    wrapped += cur;
    wrapped += *it;
    cur = canonicalize(wrapped).word;
  }
  return CoxElement{cur};
}

bool CoxeterGroup::in_parabolic(const CoxElement& x,
                                const VertexSubset& X) const {
  for (char c : x.word) {
    if (!X.contains(Vertex(c))) return false;
  }
  return true;
}

}  // namespace coxart
