// Copyright 2026 The sixthgroup Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "sixth/aut_extension.h"
#include "sixth/coding.h"
#include "sixth/errors.h"
#include "sixth/graph.h"
#include "sixth/graphrel.h"
#include "sixth/presentation.h"
#include "sixth/rado.h"
#include "sixth/williams.h"

namespace sixth::cli {
namespace {

struct Config {
  Code max_code = 500;
  std::optional<std::size_t> conj_bound;
  std::size_t dehn_budget = kDefaultDehnBudget;
  std::size_t max_n = 8;
  std::size_t hom_length = 3;
  bool oracle = false;
  bool literal = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string format_map(const std::vector<std::size_t>& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(i) + "->" + std::to_string(f[i]);
  }
  return out.empty() ? "(empty)" : out;
}

Graph load_graph(const std::string& path, const Config& cfg) {
  Graph g = read_graph_file(path);
  if (g.size() > cfg.max_n) {
    throw UsageError(path + " has " + std::to_string(g.size()) +
                     " vertices; --max-n is " + std::to_string(cfg.max_n));
  }
  return g;
}

// Lines `<i> <word>` giving the image of v_i.
GeneratorMap read_generator_map(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::optional<Word>> images(n);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    std::size_t i = 0;
    try {
      std::size_t used = 0;
      i = std::stoul(head, &used);
      if (used != head.size()) throw std::invalid_argument(head);
    } catch (const std::exception&) {
      throw ParseError("expected '<i> <word>'", lineno);
    }
    if (i >= n) throw ParseError("generator index out of range", lineno);
    if (images[i]) throw ParseError("duplicate generator", lineno);
    std::string rest;
    std::getline(ls, rest);
    try {
      images[i] = parse_word(rest);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  std::vector<Word> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!images[i]) {
      throw ParseError("no image for generator " + std::to_string(i), lineno);
    }
    out.push_back(*images[i]);
  }
  return GeneratorMap(std::move(out));
}

int cmd_relators(const std::string& path, const Config& cfg, std::ostream& out) {
  const Graph t = load_graph(path, cfg);
  const Presentation p = williams_presentation(t, cfg.dehn_budget);
  for (const Word& s : p.seeds()) out << "seed: " << format_word(s) << "\n";
  out << "seeds: " << p.seeds().size() << "\n";
  out << "symmetrized_size: " << p.relators().size() << "\n";
  return kOk;
}

int cmd_check_c16(const std::string& path, const Config& cfg,
                  std::ostream& out) {
  const Graph t = load_graph(path, cfg);
  const Presentation p = williams_presentation(t, cfg.dehn_budget);
  const bool ok = check_c16(p.relators());
  out << "c16: " << yes_no(ok) << "\n";
  out << "max_piece_length: " << max_piece_length(p.relators()) << "\n";
  std::size_t min_len = 0;
  for (const Word& r : p.relators().relators()) {
    if (min_len == 0 || r.size() < min_len) min_len = r.size();
  }
  out << "min_relator_length: " << min_len << "\n";
  return ok ? kOk : kNegative;
}

int cmd_wp(const std::string& path, const std::string& text, const Config& cfg,
           std::ostream& out) {
  const Graph t = load_graph(path, cfg);
  const Presentation p = williams_presentation(t, cfg.dehn_budget);
  const Word w = parse_word(text);
  if (w.alphabet_bound() > t.size()) {
    throw UsageError("word uses a generator outside the graph");
  }
  const Word d = dehn_reduce(p, w);
  out << "result: " << (d.empty() ? "identity" : "nontrivial") << "\n";
  out << "normal_form: " << format_word(d) << "\n";
  return d.empty() ? kOk : kNegative;
}

int cmd_order(const std::string& path, const std::string& text,
              const Config& cfg, std::ostream& out) {
  const Graph t = load_graph(path, cfg);
  const Presentation p = williams_presentation(t, cfg.dehn_budget);
  const Word w = parse_word(text);
  if (w.alphabet_bound() > t.size()) {
    throw UsageError("word uses a generator outside the graph");
  }
  out << "order: " << format_order(order(p, w)) << "\n";
  return kOk;
}

int cmd_code(const std::string& path, const Config& cfg, std::ostream& out) {
  const Graph t = load_graph(path, cfg);
  CodingTable table(t, cfg.dehn_budget);
  table.extend_to_code(cfg.max_code);
  for (const auto& [code, word] : table.entries()) {
    if (code <= cfg.max_code) out << code << ": " << format_word(word) << "\n";
  }
  out << "exhausted: " << yes_no(table.exhausted()) << "\n";
  return kOk;
}

int cmd_star_table(const std::string& path, const Config& cfg,
                   std::ostream& out) {
  const Graph t = load_graph(path, cfg);
  CodingTable table(t, cfg.dehn_budget);
  table.extend_to_code(cfg.max_code);
  std::vector<Code> codes;
  for (const auto& pr : table.entries()) {
    if (pr.first <= cfg.max_code) codes.push_back(pr.first);
  }
  out << "n,m,star\n";
  for (const Code n : codes) {
    for (const Code m : codes) {
      out << n << "," << m << "," << table.star(n, m) << "\n";
    }
  }
  return kOk;
}

int cmd_aut_extend(const std::string& graph_path, const std::string& map_path,
                   const Config& cfg, std::ostream& out, std::ostream& err) {
  const Graph t = load_graph(graph_path, cfg);
  const PartialMap s = read_partial_map_file(map_path);
  CodingTable table(t, cfg.dehn_budget);
  std::size_t bound = 0;
  if (cfg.conj_bound) {
    bound = *cfg.conj_bound;
  } else {
    try {
      bound = default_extension_bound(table, s);
    } catch (const std::out_of_range&) {
      bound = 0;
    }
  }
  const auto mode =
      cfg.literal ? ExtensionMode::kLiteral : ExtensionMode::kVerified;
  AutExtensionChecker checker(table, bound, mode);
  const ExtensionResult res = checker.check(s);
  out << "nonempty: " << yes_no(res.nonempty) << "\n";
  out << "bound: " << res.bound << "\n";
  if (res.witness) {
    const ExtensionWitness& w = *res.witness;
    std::string r;
    for (const auto& [i, ri] : w.r) {
      if (!r.empty()) r += ' ';
      r += std::to_string(i) + "->" + std::to_string(ri);
    }
    out << "r: " << (r.empty() ? "(empty)" : r) << "\n";
    out << "rho: " << format_map(w.rho) << "\n";
    out << "k: " << w.k << "\n";
    out << "k_inverse: " << w.k_inverse << "\n";
    out << "l: " << w.l << "\n";
    out << "t: " << format_word(w.t) << "\n";
  }
  out << "at_bound: " << yes_no(res.at_bound) << "\n";
  out << "bound_exhausted: " << yes_no(res.bound_exhausted) << "\n";
  out << "reason: " << res.reason << "\n";
  if (cfg.oracle) {
    CanonicalAutOracle oracle(table, bound);
    const bool o = oracle.extends(s);
    out << "oracle: " << yes_no(o) << "\n";
    if (o != res.nonempty) {
      err << "error: checker and oracle disagree\n";
      return kDisagreement;
    }
  }
  return res.nonempty ? kOk : kNegative;
}

int cmd_embed_graph(const std::string& tp, const std::string& sp,
                    const Config& cfg, std::ostream& out) {
  const Graph t = load_graph(tp, cfg);
  const Graph s = load_graph(sp, cfg);
  const auto f = induced_embeds(t, s);
  out << "embeds: " << yes_no(f.has_value()) << "\n";
  if (f) out << "map: " << format_map(*f) << "\n";
  return f ? kOk : kNegative;
}

int cmd_graph_iso(const std::string& tp, const std::string& sp,
                  const Config& cfg, std::ostream& out) {
  const Graph t = load_graph(tp, cfg);
  const Graph s = load_graph(sp, cfg);
  const auto f = graph_iso(t, s);
  out << "isomorphic: " << yes_no(f.has_value()) << "\n";
  if (f) out << "map: " << format_map(*f) << "\n";
  const auto g = iso_search(t, s);
  out << "group_isomorphic: " << yes_no(g.has_value()) << "\n";
  if (g) {
    out << "group_map: " << format_map(g->rho) << "\n";
    out << "epsilon: " << g->epsilon << "\n";
  }
  return f ? kOk : kNegative;
}

int cmd_hom_check(const std::string& tp, const std::string& sp,
                  const std::string& mp, const Config& cfg, std::ostream& out) {
  const Graph t = load_graph(tp, cfg);
  const Graph s = load_graph(sp, cfg);
  const GeneratorMap gm = read_generator_map(mp, t.size());
  for (const Word& w : gm.images()) {
    if (w.alphabet_bound() > s.size()) {
      throw UsageError("image uses a generator outside S");
    }
  }
  const Presentation pt = williams_presentation(t, cfg.dehn_budget);
  const Presentation ps = williams_presentation(s, cfg.dehn_budget);
  const bool hom = is_homomorphism(pt, ps, gm);
  out << "homomorphism: " << yes_no(hom) << "\n";
  if (!hom) return kNegative;
  const bool inj = check_injective_up_to(pt, ps, gm, cfg.hom_length);
  out << "injective_up_to_" << cfg.hom_length << ": " << yes_no(inj) << "\n";
  return inj ? kOk : kNegative;
}

RadoVertex parse_vertex(const std::string& text) {
  RadoVertex v = 0;
  std::size_t used = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text[0] == '-') {
    throw UsageError("bad vertex '" + text + "'");
  }
  if (v < 2) throw UsageError("random graph vertices are >= 2");
  return v;
}

int cmd_rado_adj(const std::string& a, const std::string& b, std::ostream& out) {
  const RadoVertex m = parse_vertex(a);
  const RadoVertex n = parse_vertex(b);
  if (m == n) throw UsageError("vertices must differ");
  const bool adj = rado_adjacent(m, n);
  out << "adjacency: " << (adj ? "adjacent" : "non-adjacent") << "\n";
  return adj ? kOk : kNegative;
}

int cmd_rado_embed(const std::string& path, const Config& cfg,
                   std::ostream& out) {
  const Graph t = load_graph(path, cfg);
  const auto image = embed_graph(t);
  for (std::size_t v = 0; v < image.size(); ++v) {
    out << v << " " << image[v] << "\n";
  }
  return kOk;
}

int cmd_rigid(const std::string& path, const Config& cfg, std::ostream& out) {
  const Graph t = load_graph(path, cfg);
  const bool rigid = is_rigid(t);
  out << "rigid: " << yes_no(rigid) << "\n";
  out << "automorphisms: " << automorphisms(t).size() << "\n";
  return rigid ? kOk : kNegative;
}

int cmd_tree(const std::string& path, const Config& cfg, std::ostream& out) {
  const Graph t = load_graph(path, cfg);
  const bool tree = is_combinatorial_tree(t);
  out << "tree: " << yes_no(tree) << "\n";
  return tree ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Sixth groups from graphs: word problem, coding and the random graph",
               "sixth"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--max-code", cfg.max_code, "coding enumeration bound")
      ->check(CLI::PositiveNumber);
  app.add_option("--conj-bound", cfg.conj_bound, "conjugator length bound");
  app.add_option("--dehn-budget", cfg.dehn_budget, "Dehn step budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-n", cfg.max_n, "largest accepted graph")
      ->check(CLI::PositiveNumber);

  std::string a;
  std::string b;
  std::string c;
  std::function<int()> action;
  auto sub = [&](const char* name, const char* help) {
    return app.add_subcommand(name, help)->fallthrough();
  };

  auto* relators = sub("relators", "print seed relators and symmetrized size");
  relators->add_option("graph", a)->required();
  relators->callback([&] { action = [&] { return cmd_relators(a, cfg, out); }; });

  auto* c16 = sub("check-c16", "check the C'(1/6) condition");
  c16->add_option("graph", a)->required();
  c16->callback([&] { action = [&] { return cmd_check_c16(a, cfg, out); }; });

  auto* wp = sub("wp", "Dehn-reduce a word");
  wp->add_option("graph", a)->required();
  wp->add_option("word", b)->required();
  wp->callback([&] { action = [&] { return cmd_wp(a, b, cfg, out); }; });

  auto* ord = sub("order", "element order");
  ord->add_option("graph", a)->required();
  ord->add_option("word", b)->required();
  ord->callback([&] { action = [&] { return cmd_order(a, b, cfg, out); }; });

  auto* code = sub("code", "dump the coding table up to --max-code");
  code->add_option("graph", a)->required();
  code->callback([&] { action = [&] { return cmd_code(a, cfg, out); }; });

  auto* star = sub("star-table", "CSV of n * m over registered codes");
  star->add_option("graph", a)->required();
  star->callback([&] { action = [&] { return cmd_star_table(a, cfg, out); }; });

  auto* aut = sub("aut-extend", "does an automorphism extend the partial map");
  aut->add_option("graph", a)->required();
  aut->add_option("partialmap", b)->required();
  aut->add_flag("--oracle", cfg.oracle, "cross-check with the canonical oracle");
  aut->add_flag("--literal", cfg.literal,
                "skip verifying the built automorphism on dom(s)");
  aut->callback(
      [&] { action = [&] { return cmd_aut_extend(a, b, cfg, out, err); }; });

  auto* emb = sub("embed-graph", "induced embedding of T into S");
  emb->add_option("T", a)->required();
  emb->add_option("S", b)->required();
  emb->callback([&] { action = [&] { return cmd_embed_graph(a, b, cfg, out); }; });

  auto* iso = sub("graph-iso", "graph and group isomorphism");
  iso->add_option("T", a)->required();
  iso->add_option("S", b)->required();
  iso->callback([&] { action = [&] { return cmd_graph_iso(a, b, cfg, out); }; });

  auto* hom = sub("hom-check", "check a generator map G_T -> G_S");
  hom->add_option("T", a)->required();
  hom->add_option("S", b)->required();
  hom->add_option("mapfile", c)->required();
  hom->add_option("--length", cfg.hom_length, "injectivity ball radius");
  hom->callback(
      [&] { action = [&] { return cmd_hom_check(a, b, c, cfg, out); }; });

  auto* adj = sub("rado-adj", "adjacency in the random graph");
  adj->add_option("m", a)->required();
  adj->add_option("n", b)->required();
  adj->callback([&] { action = [&] { return cmd_rado_adj(a, b, out); }; });

  auto* remb = sub("rado-embed", "greedy embedding into the random graph");
  remb->add_option("graph", a)->required();
  remb->callback([&] { action = [&] { return cmd_rado_embed(a, cfg, out); }; });

  auto* rigid = sub("rigid", "no nontrivial automorphism");
  rigid->add_option("graph", a)->required();
  rigid->callback([&] { action = [&] { return cmd_rigid(a, cfg, out); }; });

  auto* tree = sub("tree", "connected and acyclic");
  tree->add_option("graph", a)->required();
  tree->callback([&] { action = [&] { return cmd_tree(a, cfg, out); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace sixth::cli
