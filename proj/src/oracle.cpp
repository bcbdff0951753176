#include "coxart/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "coxart/errors.hpp"

namespace coxart::oracle {
namespace {

Permutation identity_perm(std::size_t degree) {
  Permutation p(degree);
  for (std::size_t k = 0; k < degree; ++k) p[k] = unsigned(k);
  return p;
}

// compose(p, q) applies q first, then p.
Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) r[k] = p[q[k]];
  return r;
}

std::size_t perm_order(const Permutation& p) {
  Permutation cur = p;
  std::size_t order = 1;
  Permutation id = identity_perm(p.size());
  while (cur != id) {
    cur = compose(cur, p);
    ++order;
  }
  return order;
}

// The label-3 edges must form a simple path covering all vertices, and every
// non-consecutive pair must be labelled 2 (in this graph convention a
// commutation is an explicit edge).
std::optional<std::vector<Vertex>> chain_order(const CoxeterGraph& g) {
  std::size_t n = g.rank();
  if (n == 0) return std::nullopt;
  if (n == 1) return std::vector<Vertex>{0};
  std::vector<std::vector<Vertex>> adj3(n);
  for (auto [i, j] : g.edges()) {
    unsigned m = g.label(i, j);
    if (m == 3) {
      adj3[i].push_back(j);
      adj3[j].push_back(i);
    } else if (m != 2) {
      return std::nullopt;
    }
  }
  Vertex start = 255;
  for (Vertex v = 0; v < n; ++v) {
    if (adj3[v].size() > 2) return std::nullopt;
    if (adj3[v].size() == 1 && start == 255) start = v;
  }
  if (start == 255) return std::nullopt;
  std::vector<Vertex> path{start};
  Vertex prev = 255;
  Vertex cur = start;
  while (path.size() < n) {
    Vertex next = 255;
    for (Vertex cand : adj3[cur]) {
      if (cand != prev) next = cand;
    }
    if (next == 255) return std::nullopt;
    path.push_back(next);
    prev = cur;
    cur = next;
  }
  // Path found; verify non-consecutive pairs commute.
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[path[k]] = k;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = Vertex(i + 1); j < n; ++j) {
      std::size_t d = pos[i] < pos[j] ? pos[j] - pos[i] : pos[i] - pos[j];
      unsigned expect = d == 1 ? 3 : 2;
      if (g.label(i, j) != expect) return std::nullopt;
    }
  }
  return path;
}

void check_model(const CoxeterGraph& g, const PermModel& model) {
  for (Vertex v = 0; v < g.rank(); ++v) {
    if (perm_order(model.generators[v]) != 2) {
      throw Error(Error::Code::kAssertionFailure,
                  "oracle generator is not an involution");
    }
    for (Vertex u = Vertex(v + 1); u < g.rank(); ++u) {
      unsigned m = g.label(u, v);
      if (m == kInfinity) continue;
      if (perm_order(compose(model.generators[u], model.generators[v])) != m) {
        throw Error(Error::Code::kAssertionFailure,
                    "oracle product order does not match edge label");
      }
    }
  }
}

}  // namespace

std::optional<PermModel> perm_model(const CoxeterGraph& g) {
  if (auto path = chain_order(g)) {
    PermModel model;
    model.kind = PermModel::Kind::kTypeA;
    model.degree = g.rank() + 1;
    model.generators.assign(g.rank(), {});
    for (std::size_t k = 0; k < path->size(); ++k) {
      Permutation p = identity_perm(model.degree);
      std::swap(p[k], p[k + 1]);
      model.generators[(*path)[k]] = std::move(p);
    }
    check_model(g, model);
    return model;
  }

  if (g.rank() == 2) {
    auto edges = g.edges();
    if (edges.size() != 1) return std::nullopt;
    unsigned m = g.label(edges[0].first, edges[0].second);
    if (m == kInfinity) return std::nullopt;
    PermModel model;
    model.kind = PermModel::Kind::kDihedral;
    model.generators.assign(2, {});
    if (m == 2) {
      // The 2-gon action is not faithful; use two disjoint transpositions.
      model.degree = 4;
      model.generators[edges[0].first] = {1, 0, 2, 3};
      model.generators[edges[0].second] = {0, 1, 3, 2};
    } else {
      // Reflections of the m-gon: x -> -x and x -> 1-x (mod m).
      model.degree = m;
      Permutation r1(m), r2(m);
      for (unsigned x = 0; x < m; ++x) {
        r1[x] = (m - x) % m;
        r2[x] = (m + 1 - x) % m;
      }
      model.generators[edges[0].first] = std::move(r1);
      model.generators[edges[0].second] = std::move(r2);
    }
    check_model(g, model);
    // Distance table over the whole group (order 2m) by BFS.
    std::deque<Permutation> queue{identity_perm(model.degree)};
    model.distance[queue.front()] = 0;
    while (!queue.empty()) {
      Permutation cur = std::move(queue.front());
      queue.pop_front();
      std::size_t d = model.distance[cur];
      for (const auto& gen : model.generators) {
        Permutation next = compose(cur, gen);
        if (model.distance.emplace(next, d + 1).second) {
          queue.push_back(std::move(next));
        }
      }
    }
    return model;
  }

  return std::nullopt;
}

Permutation oracle_eval(const PermModel& model, const Word& w) {
  // Rightmost letter acts first.
  Permutation result = identity_perm(model.degree);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    result = compose(model.generators[Vertex(*it)], result);
  }
  return result;
}

bool oracle_equal(const PermModel& model, const Word& a, const Word& b) {
  return oracle_eval(model, a) == oracle_eval(model, b);
}

std::size_t oracle_length(const PermModel& model, const Word& w) {
  Permutation p = oracle_eval(model, w);
  switch (model.kind) {
    case PermModel::Kind::kTypeA: {
      std::size_t inv = 0;
      for (std::size_t a = 0; a < p.size(); ++a) {
        for (std::size_t b = a + 1; b < p.size(); ++b) {
          if (p[a] > p[b]) ++inv;
        }
      }
      return inv;
    }
    case PermModel::Kind::kDihedral: {
      auto it = model.distance.find(p);
      if (it == model.distance.end()) {
        throw Error(Error::Code::kModelUnavailable,
                    "permutation outside dihedral distance table");
      }
      return it->second;
    }
  }
  throw Error(Error::Code::kModelUnavailable, "no length for this model");
}

std::vector<CoxElement> enumerate_group(const CoxeterGroup& group,
                                        std::size_t cap) {
  std::set<CoxElement> seen{group.identity()};
  std::deque<CoxElement> queue{group.identity()};
  while (!queue.empty()) {
    CoxElement cur = std::move(queue.front());
    queue.pop_front();
    for (Vertex v = 0; v < group.graph().rank(); ++v) {
      CoxElement next = group.multiply(cur, v);
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw Error(Error::Code::kGroupTooLargeOrInfinite,
                      "group enumeration exceeds cap of " +
                          std::to_string(cap) + " elements");
        }
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<CoxElement> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const CoxElement& a, const CoxElement& b) {
    return shortlex_less(a.word, b.word);
  });
  return out;
}

}  // namespace coxart::oracle
