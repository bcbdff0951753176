#include "coxart/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxart/artin_parabolic.hpp"
#include "coxart/cosets.hpp"
#include "coxart/coxeter.hpp"
#include "coxart/errors.hpp"
#include "coxart/oracle.hpp"
#include "coxart/presentation.hpp"
#include "coxart/reflections.hpp"
#include "coxart/retraction.hpp"
#include "coxart/verify.hpp"
#include "coxart/word_core.hpp"

namespace coxart::cli {
namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Error::Code::kSyntax, "cannot read graph file: " + path);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string subset_text(const CoxeterGraph& g, const VertexSubset& s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s.members()) {
    if (!first) out += ", ";
    out += g.name(v);
    first = false;
  }
  out += "}";
  return out;
}

json subset_json(const CoxeterGraph& g, const VertexSubset& s) {
  json arr = json::array();
  for (Vertex v : s.members()) arr.push_back(g.name(v));
  return arr;
}

json pairing_json(const CoxeterGraph& g, const std::map<Vertex, Vertex>& p) {
  json obj = json::object();
  for (const auto& [j, i] : p) obj[g.name(j)] = g.name(i);
  return obj;
}

json trace_json(const CoxeterGraph& g, const RetractionTrace& trace) {
  json arr = json::array();
  for (const auto& step : trace.steps) {
    json s;
    s["position"] = step.position;
    s["action"] = step.emitted ? "emit" : "skip";
    if (step.emitted) {
      s["letter"] = {{"v", g.name(step.output.vertex)},
                     {"s", int(step.output.sign)}};
    }
    s["w"] = format_word(g, step.w_after.word);
    arr.push_back(std::move(s));
  }
  return arr;
}

struct Context {
  CoxeterGraph graph;
  CoxeterGroup group;
  bool json_output;
};

int dispatch(const std::string& name, Context& ctx,
             const std::vector<std::string>& words, const std::string& x_list,
             const std::string& y_list, bool have_y, const std::string& w_text,
             const std::string& pair_text, bool trace, std::ostream& out) {
  const CoxeterGraph& g = ctx.graph;
  CoxeterGroup& W = ctx.group;

  if (name == "reduce") {
    Word r = W.reduce(parse_simple_word(g, words[0]));
    if (ctx.json_output) {
      out << json{{"word", format_word(g, r)}}.dump() << '\n';
    } else {
      out << format_word(g, r) << '\n';
    }
    return 0;
  }
  if (name == "canon") {
    CoxElement e = W.element(words[0]);
    if (ctx.json_output) {
      out << json{{"word", format_word(g, e.word)}}.dump() << '\n';
    } else {
      out << format_word(g, e.word) << '\n';
    }
    return 0;
  }
  if (name == "equal") {
    bool eq = W.equal(W.element(words[0]), W.element(words[1]));
    if (ctx.json_output) {
      out << json{{"equal", eq}}.dump() << '\n';
    } else {
      out << (eq ? "true" : "false") << '\n';
    }
    return 0;
  }
  if (name == "length") {
    std::size_t len = W.element(words[0]).length();
    if (ctx.json_output) {
      out << json{{"length", len}}.dump() << '\n';
    } else {
      out << len << '\n';
    }
    return 0;
  }
  if (name == "nset") {
    NSet n = n_set(W, parse_simple_word(g, words[0]));
    if (ctx.json_output) {
      json arr = json::array();
      for (const auto& m : n.members) arr.push_back(format_word(g, m.word));
      out << json{{"members", arr}}.dump() << '\n';
    } else {
      out << '{';
      for (std::size_t k = 0; k < n.members.size(); ++k) {
        if (k) out << ", ";
        out << format_word(g, n.members[k].word);
      }
      out << "}\n";
    }
    return 0;
  }
  if (name == "rseq") {
    Word w = parse_simple_word(g, words[0]);
    bool masked = !x_list.empty();
    ReflectionSequence seq =
        masked ? masked_sequence(W, w, VertexSubset::parse(g, x_list))
               : reflection_sequence(W, w);
    if (ctx.json_output) {
      json arr = json::array();
      for (const auto& e : seq.entries) {
        json entry;
        entry["position"] = e.position;
        entry["word"] = format_word(g, e.word);
        entry["element"] = format_word(g, e.element.word);
        if (masked) entry["in_x"] = e.in_x;
        arr.push_back(std::move(entry));
      }
      json obj;
      obj["entries"] = std::move(arr);
      if (masked) obj["kept"] = kept_positions(seq);
      out << obj.dump() << '\n';
    } else {
      for (const auto& e : seq.entries) {
        out << e.position << ": " << format_word(g, e.word) << " = "
            << format_word(g, e.element.word);
        if (masked) out << (e.in_x ? " | in" : " | out");
        out << '\n';
      }
      if (masked) {
        out << "kept:";
        for (std::size_t p : kept_positions(seq)) out << ' ' << p;
        out << '\n';
      }
    }
    return 0;
  }
  if (name == "decompose") {
    CoxElement u = W.element(words[0]);
    VertexSubset X = VertexSubset::parse(g, x_list);
    if (!have_y) {
      CosetDecomposition d = left_decompose(W, u, X);
      if (ctx.json_output) {
        out << json{{"v", format_word(g, d.v.word)},
                    {"w", format_word(g, d.w.word)}}
                   .dump()
            << '\n';
      } else {
        out << "v: " << format_word(g, d.v.word) << '\n'
            << "w: " << format_word(g, d.w.word) << '\n';
      }
    } else {
      VertexSubset Y = VertexSubset::parse(g, y_list);
      DoubleCosetDecomposition d = double_decompose(W, u, X, Y);
      if (ctx.json_output) {
        out << json{{"w1", format_word(g, d.w1.word)},
                    {"w2", format_word(g, d.w2.word)},
                    {"w2p", format_word(g, d.w2p.word)}}
                   .dump()
            << '\n';
      } else {
        out << "w1: " << format_word(g, d.w1.word) << '\n'
            << "w2: " << format_word(g, d.w2.word) << '\n'
            << "w2p: " << format_word(g, d.w2p.word) << '\n';
      }
    }
    return 0;
  }
  if (name == "retract") {
    ArtinWord omega = parse_artin_word(g, words[0]);
    VertexSubset X = VertexSubset::parse(g, x_list);
    RetractionTrace tr = retract_star_traced(W, omega, X);
    if (ctx.json_output) {
      json obj;
      obj["output"] = format_artin_word(g, tr.output);
      if (trace) obj["trace"] = trace_json(g, tr);
      out << obj.dump() << '\n';
    } else {
      out << format_artin_word(g, tr.output) << '\n';
      if (trace) out << trace_json(g, tr).dump() << '\n';
    }
    return 0;
  }
  if (name == "classify") {
    std::size_t comma = pair_text.find(',');
    if (comma == std::string::npos) {
      throw Error(Error::Code::kBadWord,
                  "--pair expects two comma-separated vertices");
    }
    Vertex i = g.vertex(pair_text.substr(0, comma));
    Vertex j = g.vertex(pair_text.substr(comma + 1));
    CoxElement w = W.element(w_text);
    VertexSubset X = VertexSubset::parse(g, x_list);
    DihedralClassification cls = classify_dihedral(W, w, i, j, X);
    switch (cls.kind) {
      case DihedralClassification::Kind::kTrivial:
        if (ctx.json_output) {
          out << json{{"kind", "trivial"}}.dump() << '\n';
        } else {
          out << "trivial\n";
        }
        break;
      case DihedralClassification::Kind::kSingleReflection:
        if (ctx.json_output) {
          out << json{{"kind", "single-reflection"},
                      {"reflection", format_word(g, cls.reflection.word)}}
                     .dump()
              << '\n';
        } else {
          out << "single-reflection: " << format_word(g, cls.reflection.word)
              << '\n';
        }
        break;
      case DihedralClassification::Kind::kFullDihedral: {
        auto members = cls.x1.members();
        unsigned m = g.label(members[0], members[1]);
        if (ctx.json_output) {
          out << json{{"kind", "full-dihedral"},
                      {"X1", subset_json(g, cls.x1)},
                      {"pairing", pairing_json(g, cls.pairing)},
                      {"m", m}}
                     .dump()
              << '\n';
        } else {
          out << "full-dihedral: X1 = " << subset_text(g, cls.x1)
              << "; pairing:";
          bool first = true;
          for (const auto& [jj, ii] : cls.pairing) {
            out << (first ? " " : ", ") << g.name(jj) << "->" << g.name(ii);
            first = false;
          }
          out << "; m = " << m << '\n';
        }
        break;
      }
    }
    return 0;
  }
  if (name == "intersect") {
    VertexSubset X = VertexSubset::parse(g, x_list);
    VertexSubset Y = VertexSubset::parse(g, y_list);
    CoxElement w = W.element(w_text);
    ArtinIntersectionCertificate cert = intersect_parabolic_kappa(W, X, Y, w);
    json obj;
    obj["w1"] = format_word(g, cert.w1_lift.source.word);
    obj["X1"] = subset_json(g, cert.x1);
    obj["Y1"] = subset_json(g, cert.y1);
    obj["pairing"] = pairing_json(g, cert.pairing);
    obj["core"] = format_word(g, cert.core.word);
    out << obj.dump() << '\n';
    return 0;
  }
  if (name == "conjreduce") {
    VertexSubset X = VertexSubset::parse(g, x_list);
    VertexSubset Y = VertexSubset::parse(g, y_list);
    ArtinWord omega = parse_artin_word(g, words[0]);
    ConjectureReduction r = conjecture_reduce(W, X, Y, omega);
    if (ctx.json_output) {
      out << json{{"beta", format_artin_word(g, r.beta)},
                  {"Y1", subset_json(g, r.y1)}}
                 .dump()
          << '\n';
    } else {
      out << "beta: " << format_artin_word(g, r.beta) << '\n'
          << "Y1: " << subset_text(g, r.y1) << '\n';
    }
    return 0;
  }
  throw Error(Error::Code::kSyntax, "unknown subcommand: " + name);
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coxeter and Artin-Tits word machinery"};
  app.require_subcommand(1);

  std::string graph_path;
  bool json_output = false;
  std::uint64_t seed = 0;
  std::size_t max_orbit = 1'000'000;
  app.add_option("--graph", graph_path, "graph file");
  app.add_flag("--json", json_output, "JSON output");
  app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--max-orbit", max_orbit, "braid orbit cap");

  struct Sub {
    CLI::App* cmd = nullptr;
    std::vector<std::string> words;
    std::string x_list, y_list, w_text, pair_text, suite = "all";
    bool trace = false;
  };
  std::map<std::string, Sub> subs;

  auto add_sub = [&](const std::string& name, const char* desc,
                     int positional_words) -> Sub& {
    Sub& sub = subs[name];
    sub.cmd = app.add_subcommand(name, desc);
    if (positional_words == 1) {
      sub.cmd->add_option("word", sub.words, "word")->expected(1);
    } else if (positional_words == 2) {
      sub.cmd->add_option("words", sub.words, "two words")->expected(2);
    }
    return sub;
  };

  add_sub("reduce", "Tits-reduce a word", 1);
  add_sub("canon", "canonical form of a word", 1);
  add_sub("equal", "compare two words in W", 2);
  add_sub("length", "Coxeter length of a word's element", 1);
  add_sub("nset", "N-set of a word", 1);
  {
    Sub& s = add_sub("rseq", "reflection sequence of a word", 1);
    s.cmd->add_option("--x", s.x_list, "mask subset");
  }
  {
    Sub& s = add_sub("decompose", "coset decomposition", 1);
    s.cmd->add_option("--x", s.x_list, "left subset")->required();
    s.cmd->add_option("--y", s.y_list, "right subset");
  }
  {
    Sub& s = add_sub("retract", "retraction of an Artin word", 1);
    s.cmd->add_option("--x", s.x_list, "target subset")->required();
    s.cmd->add_flag("--trace", s.trace, "emit the per-position trace");
  }
  {
    Sub& s = add_sub("classify", "classify a conjugated dihedral", 0);
    s.cmd->add_option("--w", s.w_text, "conjugator word")->required();
    s.cmd->add_option("--pair", s.pair_text, "i,j")->required();
    s.cmd->add_option("--x", s.x_list, "ambient subset")->required();
  }
  {
    Sub& s = add_sub("intersect", "parabolic intersection certificate", 0);
    s.cmd->add_option("--x", s.x_list, "X")->required();
    s.cmd->add_option("--y", s.y_list, "Y")->required();
    s.cmd->add_option("--w", s.w_text, "conjugator word")->required();
  }
  {
    Sub& s = add_sub("conjreduce", "conjecture reduction step", 1);
    s.cmd->add_option("--x", s.x_list, "X")->required();
    s.cmd->add_option("--y", s.y_list, "Y")->required();
  }
  {
    Sub& s = add_sub("verify", "run the property suites", 0);
    s.cmd->add_option("--suite", s.suite, "suite name or 'all'");
    s.cmd->add_option("--seed", seed, "seed for randomized suites");
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    CLI::App* picked = app.get_subcommands().at(0);
    const std::string name = picked->get_name();
    Sub& sub = subs[name];

    if (name == "verify") {
      verify::VerifyOptions options;
      options.seed = seed;
      options.orbit_cap = max_orbit;
      options.suite = sub.suite;
      if (options.suite != "all") {
        auto names = verify::suite_names();
        if (std::find(names.begin(), names.end(), options.suite) ==
            names.end()) {
          throw Error(Error::Code::kSyntax,
                      "unknown suite: " + options.suite);
        }
      }
      if (!graph_path.empty()) {
        CoxeterGraph::parse(read_file(graph_path));  // validate only
      }
      auto outcomes = verify::run_verification(options);
      out << verify::render(outcomes);
      return verify::all_passed(outcomes) ? 0 : 1;
    }

    if (graph_path.empty()) {
      throw Error(Error::Code::kSyntax, "--graph is required");
    }
    CoxeterGraph graph = CoxeterGraph::parse(read_file(graph_path));
    Context ctx{graph, CoxeterGroup(graph, CoxeterOptions{max_orbit}),
                json_output};
    const CLI::Option* y_opt = sub.cmd->get_option_no_throw("--y");
    bool have_y = y_opt && y_opt->count() > 0;
    return dispatch(name, ctx, sub.words, sub.x_list, sub.y_list, have_y,
                    sub.w_text, sub.pair_text, sub.trace, out);
  } catch (const Error& e) {
    err << "error[" << e.code_name() << "]: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace coxart::cli
