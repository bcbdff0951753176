#pragma once

#include <bitset>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxart/errors.hpp"

namespace coxart {

// Vertices are indices into the graph's declaration-order vertex list. That
// order is the total order used by shortlex canonical forms and every
// deterministic tie-break downstream.
using Vertex = std::uint8_t;

// Label value meaning "no edge, no relation" (m = infinity).
inline constexpr unsigned kInfinity = std::numeric_limits<unsigned>::max();

// A finite simplicial labelled graph: vertex list plus edge labels m >= 2.
// Immutable after construction; safe to share read-only across threads.
class CoxeterGraph {
 public:
  static constexpr std::size_t kMaxVertices = 255;

  // Parses the line-oriented graph format ('#' starts a comment):
  //   vertices: a b c
  //   edge: a b 3
  static CoxeterGraph parse(std::string_view text);

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(Vertex v) const { return names_.at(v); }

  Vertex vertex(std::string_view name) const;
  std::optional<Vertex> find_vertex(std::string_view name) const;

  // 1 if i == j, the edge label if {i,j} is an edge, kInfinity otherwise.
  unsigned label(Vertex i, Vertex j) const;
  bool has_edge(Vertex i, Vertex j) const {
    return i != j && label(i, j) != kInfinity;
  }

  // Edges as (i, j) with i < j, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  // Canonical form: parse(serialize()) reproduces the graph exactly.
  std::string serialize() const;

 private:
  CoxeterGraph() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<unsigned> labels_;  // rank x rank, row-major

  unsigned& label_ref(Vertex i, Vertex j) {
    return labels_[std::size_t(i) * names_.size() + j];
  }
};

// A subset of the graph's vertices.
class VertexSubset {
 public:
  VertexSubset() = default;

  static VertexSubset of(const CoxeterGraph& g,
                         std::initializer_list<std::string_view> names);
  // Comma-separated names, e.g. "a,b". Empty string means the empty subset.
  static VertexSubset parse(const CoxeterGraph& g, std::string_view csv);
  static VertexSubset full(const CoxeterGraph& g);

  void add(Vertex v) { bits_.set(v); }
  bool contains(Vertex v) const { return bits_.test(v); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  std::vector<Vertex> members() const;

  VertexSubset intersect(const VertexSubset& other) const {
    VertexSubset r;
    r.bits_ = bits_ & other.bits_;
    return r;
  }
  bool subset_of(const VertexSubset& other) const {
    return (bits_ & ~other.bits_).none();
  }

  bool operator==(const VertexSubset&) const = default;

 private:
  std::bitset<256> bits_;
};

// Full labelled subgraph spanned by the subset; vertices keep their relative
// declaration order.
CoxeterGraph induced_subgraph(const CoxeterGraph& g, const VertexSubset& x);

}  // namespace coxart
