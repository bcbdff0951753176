#include "coxart/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace coxart {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> tokenize(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != ' ' && s[pos] != '\t') ++pos;
    if (pos > start) out.push_back(s.substr(start, pos - start));
  }
  return out;
}

[[noreturn]] void syntax_error(std::size_t line, const std::string& what) {
  throw Error(Error::Code::kSyntax,
              "line " + std::to_string(line) + ": " + what);
}

void check_name(std::string_view name, std::size_t line) {
  if (name.empty()) syntax_error(line, "empty vertex name");
  for (char c : name) {
    if (c == '^' || c == '\'' || c == '#') {
      syntax_error(line, "vertex name contains forbidden character: " +
                             std::string(name));
    }
  }
}

}  // namespace

CoxeterGraph CoxeterGraph::parse(std::string_view text) {
  CoxeterGraph g;
  bool have_vertices = false;
  std::vector<std::pair<Vertex, Vertex>> seen_edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos
                                                 ? text.size() - pos
                                                 : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("vertices:")) {
      if (have_vertices) syntax_error(line_no, "second 'vertices:' line");
      have_vertices = true;
      for (std::string_view tok : tokenize(line.substr(9))) {
        check_name(tok, line_no);
        if (g.index_.count(std::string(tok))) {
          throw Error(Error::Code::kDuplicateVertex,
                      "line " + std::to_string(line_no) +
                          ": duplicate vertex: " + std::string(tok));
        }
        if (g.names_.size() >= kMaxVertices) {
          throw Error(Error::Code::kTooManyVertices,
                      "more than " + std::to_string(kMaxVertices) +
                          " vertices");
        }
        g.index_.emplace(std::string(tok), Vertex(g.names_.size()));
        g.names_.emplace_back(tok);
      }
      g.labels_.assign(g.names_.size() * g.names_.size(), kInfinity);
      continue;
    }

    if (line.starts_with("edge:")) {
      if (!have_vertices) syntax_error(line_no, "'edge:' before 'vertices:'");
      auto toks = tokenize(line.substr(5));
      if (toks.size() != 3) {
        syntax_error(line_no, "expected 'edge: <u> <v> <m>'");
      }
      auto lookup = [&](std::string_view name) -> Vertex {
        auto it = g.index_.find(std::string(name));
        if (it == g.index_.end()) {
          throw Error(Error::Code::kUnknownVertex,
                      "line " + std::to_string(line_no) +
                          ": unknown vertex: " + std::string(name));
        }
        return it->second;
      };
      Vertex u = lookup(toks[0]);
      Vertex v = lookup(toks[1]);
      if (u == v) syntax_error(line_no, "self-loop edge");
      long m = 0;
      auto [p, ec] = std::from_chars(toks[2].data(), toks[2].data() + toks[2].size(), m);
      if (ec != std::errc() || p != toks[2].data() + toks[2].size() || m < 2) {
        throw Error(Error::Code::kBadLabel,
                    "line " + std::to_string(line_no) +
                        ": edge label must be an integer >= 2, got: " +
                        std::string(toks[2]));
      }
      auto key = std::minmax(u, v);
      if (std::find(seen_edges.begin(), seen_edges.end(),
                    std::pair<Vertex, Vertex>(key.first, key.second)) !=
          seen_edges.end()) {
        syntax_error(line_no, "edge declared twice");
      }
      seen_edges.emplace_back(key.first, key.second);
      g.label_ref(u, v) = unsigned(m);
      g.label_ref(v, u) = unsigned(m);
      continue;
    }

    syntax_error(line_no, "unrecognized line: " + std::string(line));
  }

  if (!have_vertices) {
    throw Error(Error::Code::kSyntax, "missing 'vertices:' line");
  }
  return g;
}

Vertex CoxeterGraph::vertex(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) {
    throw Error(Error::Code::kUnknownVertex,
                "unknown vertex: " + std::string(name));
  }
  return *v;
}

std::optional<Vertex> CoxeterGraph::find_vertex(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

unsigned CoxeterGraph::label(Vertex i, Vertex j) const {
  if (i >= rank() || j >= rank()) {
    throw Error(Error::Code::kUnknownVertex, "vertex index out of range");
  }
  if (i == j) return 1;
  return labels_[std::size_t(i) * rank() + j];
}

std::vector<std::pair<Vertex, Vertex>> CoxeterGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex i = 0; i < rank(); ++i) {
    for (Vertex j = Vertex(i + 1); j < rank(); ++j) {
      if (has_edge(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::string CoxeterGraph::serialize() const {
  std::ostringstream os;
  os << "vertices:";
  for (const auto& n : names_) os << ' ' << n;
  os << '\n';
  for (auto [i, j] : edges()) {
    os << "edge: " << names_[i] << ' ' << names_[j] << ' ' << label(i, j)
       << '\n';
  }
  return os.str();
}

VertexSubset VertexSubset::of(const CoxeterGraph& g,
                              std::initializer_list<std::string_view> names) {
  VertexSubset s;
  for (auto n : names) s.add(g.vertex(n));
  return s;
}

VertexSubset VertexSubset::parse(const CoxeterGraph& g, std::string_view csv) {
  VertexSubset s;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string_view tok = trim(csv.substr(
        pos, comma == std::string_view::npos ? csv.size() - pos : comma - pos));
    if (!tok.empty()) s.add(g.vertex(tok));
    pos = comma == std::string_view::npos ? csv.size() : comma + 1;
  }
  return s;
}

VertexSubset VertexSubset::full(const CoxeterGraph& g) {
  VertexSubset s;
  for (Vertex v = 0; v < g.rank(); ++v) s.add(v);
  return s;
}

std::vector<Vertex> VertexSubset::members() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < bits_.size(); ++v) {
    if (bits_.test(v)) out.push_back(Vertex(v));
  }
  return out;
}

CoxeterGraph induced_subgraph(const CoxeterGraph& g, const VertexSubset& x) {
  std::ostringstream os;
  os << "vertices:";
  auto members = x.members();
  for (Vertex v : members) os << ' ' << g.name(v);
  os << '\n';
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (g.has_edge(members[a], members[b])) {
        os << "edge: " << g.name(members[a]) << ' ' << g.name(members[b])
           << ' ' << g.label(members[a], members[b]) << '\n';
      }
    }
  }
  return CoxeterGraph::parse(os.str());
}

}  // namespace coxart
