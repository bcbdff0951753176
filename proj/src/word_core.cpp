#include "coxart/word_core.hpp"

#include <algorithm>
#include <sstream>

#include "coxart/errors.hpp"

namespace coxart {

Word theta_star(const ArtinWord& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& l : w) out.push_back(char(l.vertex));
  return out;
}

ArtinWord free_reduce(const ArtinWord& w) {
  ArtinWord stack;
  stack.reserve(w.size());
  for (const auto& l : w) {
    if (!stack.empty() && stack.back().vertex == l.vertex &&
        stack.back().sign == -l.sign) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return stack;
}

ArtinWord invert(const ArtinWord& w) {
  ArtinWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back({it->vertex, std::int8_t(-it->sign)});
  }
  return out;
}

namespace {

// A braid site at 0-based position q: m(i,j) letters alternating between two
// distinct vertices, all carrying the same sign.
bool braid_site_at(const CoxeterGraph& g, const ArtinWord& w, std::size_t q,
                   Vertex* out_i, Vertex* out_j) {
  if (q + 1 >= w.size()) return false;
  Vertex a = w[q].vertex;
  Vertex b = w[q + 1].vertex;
  if (a == b) return false;
  unsigned m = g.label(a, b);
  if (m == kInfinity || q + m > w.size()) return false;
  std::int8_t sign = w[q].sign;
  for (unsigned t = 0; t < m; ++t) {
    const ArtinLetter& l = w[q + t];
    if (l.sign != sign) return false;
    if (l.vertex != (t % 2 == 0 ? a : b)) return false;
  }
  *out_i = std::min(a, b);
  *out_j = std::max(a, b);
  return true;
}

}  // namespace

std::vector<ElementaryMove> legal_moves(const CoxeterGraph& g,
                                        const ArtinWord& w) {
  std::vector<ElementaryMove> moves;
  for (std::size_t q = 0; q + 1 < w.size(); ++q) {
    if (w[q].vertex == w[q + 1].vertex && w[q].sign == -w[q + 1].sign) {
      moves.push_back({ElementaryMove::Kind::kFreeDelete, q + 1, w[q]});
    }
  }
  for (std::size_t q = 0; q + 1 < w.size(); ++q) {
    Vertex i, j;
    if (braid_site_at(g, w, q, &i, &j)) {
      moves.push_back({ElementaryMove::Kind::kBraid, q + 1, {}, i, j});
    }
  }
  for (std::size_t q = 0; q <= w.size(); ++q) {
    for (Vertex v = 0; v < g.rank(); ++v) {
      for (std::int8_t s : {std::int8_t(1), std::int8_t(-1)}) {
        moves.push_back(
            {ElementaryMove::Kind::kFreeInsert, q + 1, ArtinLetter{v, s}});
      }
    }
  }
  return moves;
}

ArtinWord apply_move(const CoxeterGraph& g, const ArtinWord& w,
                     const ElementaryMove& m) {
  std::size_t q = m.position - 1;
  switch (m.kind) {
    case ElementaryMove::Kind::kFreeInsert: {
      if (q > w.size()) {
        throw Error(Error::Code::kPreconditionViolated,
                    "insert position out of range");
      }
      ArtinWord out(w.begin(), w.begin() + q);
      out.push_back(m.letter);
      out.push_back({m.letter.vertex, std::int8_t(-m.letter.sign)});
      out.insert(out.end(), w.begin() + q, w.end());
      return out;
    }
    case ElementaryMove::Kind::kFreeDelete: {
      if (q + 1 >= w.size() || w[q].vertex != w[q + 1].vertex ||
          w[q].sign != -w[q + 1].sign) {
        throw Error(Error::Code::kPreconditionViolated,
                    "no cancelling pair at position");
      }
      ArtinWord out(w.begin(), w.begin() + q);
      out.insert(out.end(), w.begin() + q + 2, w.end());
      return out;
    }
    case ElementaryMove::Kind::kBraid: {
      Vertex i, j;
      if (!braid_site_at(g, w, q, &i, &j) ||
          std::minmax(m.edge_i, m.edge_j) != std::minmax(i, j)) {
        throw Error(Error::Code::kPreconditionViolated,
                    "no braid site at position");
      }
      unsigned mm = g.label(i, j);
      ArtinWord out = w;
      Vertex a = w[q].vertex;
      Vertex b = w[q + 1].vertex;
      for (unsigned t = 0; t < mm; ++t) {
        out[q + t].vertex = (t % 2 == 0 ? b : a);
      }
      return out;
    }
  }
  throw Error(Error::Code::kPreconditionViolated, "bad move kind");
}

ElementaryMove inverse_move(const ElementaryMove& m, const ArtinWord& before) {
  switch (m.kind) {
    case ElementaryMove::Kind::kFreeInsert:
      return {ElementaryMove::Kind::kFreeDelete, m.position, m.letter};
    case ElementaryMove::Kind::kFreeDelete:
      return {ElementaryMove::Kind::kFreeInsert, m.position,
              before[m.position - 1]};
    case ElementaryMove::Kind::kBraid:
      return m;
  }
  throw Error(Error::Code::kPreconditionViolated, "bad move kind");
}

std::pair<ElementaryMove, ArtinWord> random_move(const CoxeterGraph& g,
                                                 const ArtinWord& w,
                                                 std::mt19937_64& rng) {
  auto moves = legal_moves(g, w);
  // rng() % n instead of uniform_int_distribution: identical streams on every
  // platform, and the bias is irrelevant at these sizes.
  const ElementaryMove& m = moves[rng() % moves.size()];
  return {m, apply_move(g, w, m)};
}

std::pair<ElementaryMove, ArtinWord> random_move(const CoxeterGraph& g,
                                                 const ArtinWord& w,
                                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_move(g, w, rng);
}

Word parse_simple_word(const CoxeterGraph& g, std::string_view text) {
  Word out;
  std::istringstream is{std::string(text)};
  std::string tok;
  std::vector<std::string> toks;
  while (is >> tok) toks.push_back(tok);
  if (toks.size() == 1 && toks[0] == "e" && !g.find_vertex("e")) return out;
  for (const auto& t : toks) {
    if (t.find('^') != std::string::npos) {
      throw Error(Error::Code::kBadWord,
                  "signed letter in a simple word: " + t);
    }
    out.push_back(char(g.vertex(t)));
  }
  return out;
}

ArtinWord parse_artin_word(const CoxeterGraph& g, std::string_view text) {
  ArtinWord out;
  std::istringstream is{std::string(text)};
  std::string tok;
  std::vector<std::string> toks;
  while (is >> tok) toks.push_back(tok);
  if (toks.size() == 1 && toks[0] == "e" && !g.find_vertex("e")) return out;
  for (const auto& t : toks) {
    std::size_t caret = t.find('^');
    std::string name = t.substr(0, caret);
    std::int8_t sign = 1;
    if (caret != std::string::npos) {
      std::string exp = t.substr(caret + 1);
      if (exp == "-1") {
        sign = -1;
      } else if (exp == "1" || exp == "+1") {
        sign = 1;
      } else {
        throw Error(Error::Code::kBadWord, "bad exponent in token: " + t);
      }
    }
    out.push_back({g.vertex(name), sign});
  }
  return out;
}

std::string format_word(const CoxeterGraph& g, const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += g.name(Vertex(w[k]));
  }
  return out;
}

std::string format_artin_word(const CoxeterGraph& g, const ArtinWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += g.name(w[k].vertex);
    if (w[k].sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace coxart
