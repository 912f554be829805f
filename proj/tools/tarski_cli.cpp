#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tarski/decomposition.hpp"
#include "tarski/forests.hpp"
#include "tarski/gs.hpp"
#include "tarski/io.hpp"
#include "tarski/subgroup.hpp"
#include "tarski/transfer.hpp"
#include "tarski/wreath.hpp"

using namespace tarski;
using io::Json;

namespace {

struct Options {
  std::string builtin = "pingpong";
  std::string input, out, emit_dot;
  std::string mode;
  std::string group, gens, variant = "c";
  std::string graph, demand = "interior";
  std::string images, relators, exponents;
  std::string tau = "0.13";
  int radius = -1;
  long trials = -1;
  std::uint64_t seed = 1;
  int index = 2;
  int d = -1, p = 2, trunc = 0, count = 20, cap = 16;
  int forced = -1, a = 0, b = 1, n = 2;
  int i = 0, j = 0;
  std::uint64_t modulus = 65537;
  bool optimize = false;
};

struct Outcome {
  Json report;
  bool ok = true;  // false: a computed infeasibility or failed check
  std::string dot;
};

int or_default(int value, int fallback) { return value >= 0 ? value : fallback; }

std::string or_default(const std::string& value, const std::string& fallback) {
  return value.empty() ? fallback : value;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split(text)) {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("not an integer: " + s);
    out.push_back(v);
  }
  return out;
}

Decomposition load_decomposition(const Options& o) {
  if (!o.input.empty()) return io::decomposition_from_json(io::read_file(o.input));
  if (o.builtin == "pingpong") return pingpong_f2();
  if (o.builtin == "pingpong-double") return double_up(pingpong_f2(), pingpong_f2());
  if (o.builtin == "pingpong-f3") return pingpong(Alphabet::numbered(3));
  throw std::invalid_argument("unknown builtin decomposition: " + o.builtin);
}

Json decomposition_summary(const Decomposition& d) {
  Json j;
  j["k"] = d.k();
  j["alphabet"] = io::to_json(d.alphabet);
  Json sets = Json::array();
  for (const auto& s : d.translating_sets) sets.push_back(io::word_list(s, d.alphabet));
  j["translating_sets"] = sets;
  j["tarski_size"] = d.tarski_size();
  return j;
}

/// Calls f(group, generators, alphabet) for "free:N" or "abelian:N"; generators are words over the
/// alphabet, mapped to Z^N for the abelian case.
template <class F>
Outcome with_group(const std::string& descriptor, const std::string& gens, F&& f) {
  auto colon = descriptor.find(':');
  std::string kind = descriptor.substr(0, colon);
  int rank = colon == std::string::npos ? 2 : std::stoi(descriptor.substr(colon + 1));
  if (rank < 1) throw std::invalid_argument("group rank must be >= 1");
  if (kind == "free") {
    FreeGroup g(rank);
    std::vector<Word> S;
    for (const auto& s : split(gens)) S.push_back(g.parse(s));
    if (S.empty()) S = g.generators();
    return f(g, S, g.alphabet());
  }
  if (kind == "abelian") {
    FreeAbelianGroup g(rank);
    Alphabet names = Alphabet::numbered(rank, "e");
    std::vector<AbelianVector> S;
    for (const auto& s : split(gens)) S.push_back(abelian_image(parse_word(s, names), rank));
    if (S.empty()) S = g.generators();
    return f(g, S, names);
  }
  throw std::invalid_argument("group must be free:N or abelian:N, got " + descriptor);
}

template <class Group>
Json element_list(const Group& g, const std::vector<typename Group::element_type>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(g.to_string(x));
  return out;
}

template <class Group>
Json element_sets(const Group& g, const std::vector<std::vector<typename Group::element_type>>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(element_list(g, s));
  return out;
}

Json ball_summary(const ColoredDigraph& g, int radius, int interior_radius) {
  return {{"radius", radius},
          {"interior_radius", interior_radius},
          {"vertex_count", g.vertex_count()},
          {"interior_count", g.interior_vertices().size()},
          {"edge_count", g.edges().size()}};
}

Outcome cmd_verify(const Options& o) {
  auto d = load_decomposition(o);
  std::string mode = o.mode.empty() ? (d.mode == PieceMode::Symbolic ? "exact" : "ball") : o.mode;
  Outcome out;
  VerificationReport r;
  if (mode == "exact") {
    r = verify_exact(d);
    if (!o.emit_dot.empty())
      for (int i = 0; i < d.k(); ++i)
        for (std::size_t j = 0; j < d.pieces[i].size(); ++j) out.dot += d.symbolic_piece(i, j).to_dot(d.alphabet);
  } else if (mode == "ball") {
    int radius = or_default(o.radius, 6);
    r = verify_ball(d, radius);
    if (!o.emit_dot.empty()) {
      auto db = decomposition_ball(d, radius);
      out.dot = db.ball.graph.to_dot(db.chosen.edges);
    }
  } else {
    throw std::invalid_argument("mode must be exact or ball");
  }
  out.report["decomposition"] = decomposition_summary(d);
  out.report["mode"] = mode;
  out.report["report"] = io::to_json(r, d.alphabet);
  out.ok = r.all_ok();
  return out;
}

Outcome cmd_transfer(const Options& o) {
  auto d = load_decomposition(o);
  std::vector<int> images = int_list(o.images);
  if (images.empty()) images.assign(d.rank(), 1);
  if (static_cast<int>(images.size()) != d.rank()) throw std::invalid_argument("need one image per generator");
  auto transversal = CosetTransversal::schreier(SubgroupGraph::cyclic_kernel(d.rank(), o.index, images));
  auto result = transfer_finite_index(d, transversal);
  long index = static_cast<long>(*transversal.index());
  long t = d.tarski_size();
  long rhs = index * (t - 2) + 2;
  Outcome out;
  out.report["decomposition"] = decomposition_summary(d);
  out.report["kernel"] = {{"n", o.index}, {"images", images}};
  out.report["transfer"] = io::to_json(result, d.alphabet);
  std::ostringstream text;
  text << "sum |S'_i| = " << result.size_bound << " <= [G:H](T - 2) + 2 = " << index << " * (" << t << " - 2) + 2 = "
       << rhs;
  out.report["inequality"] = {{"lhs", result.size_bound}, {"rhs", rhs}, {"holds", result.size_bound <= rhs},
                              {"text", text.str()}};
  std::cerr << text.str() << "\n";
  out.ok = result.size_bound <= rhs;
  int radius = or_default(o.radius, 5);
  if (radius > 0) {
    auto cert = certify_transfer(result, radius);
    out.report["certificate"] = io::to_json(cert);
    out.ok = out.ok && cert.matching.feasible;
  }
  if (!o.emit_dot.empty()) out.dot = transversal.graph()->to_dot(d.alphabet);
  return out;
}

Outcome cmd_variety_transfer(const Options& o) {
  auto d = load_decomposition(o);
  auto vt = transfer_abelian_variety(d, o.cap);
  FreeAbelianGroup z(d.rank());
  Outcome out;
  out.report["decomposition"] = decomposition_summary(d);
  out.report["U"] = element_list(z, vt.U);
  out.report["cube"] = {{"M", vt.cube.M}, {"cube_size", vt.cube.cube_size}, {"product_size", vt.cube.product_size}};
  out.report["transfer"] = io::to_json(vt.result, vt.four_colors.alphabet);
  out.report["a_priori_bound"] = vt.a_priori_bound;
  out.report["a_priori_formula"] = vt.a_priori_formula;
  out.ok = vt.result.size_bound <= vt.a_priori_bound;
  return out;
}

Outcome cmd_quotient_transfer(const Options& o) {
  auto d = load_decomposition(o);
  return with_group(or_default(o.group, "abelian:2"), o.images, [&](const auto& q, const auto& images, const auto&) {
    if (static_cast<int>(images.size()) < d.rank()) throw std::invalid_argument("need one image per generator");
    auto r = transfer_quotient(d.translating_sets, q, images, or_default(o.radius, 3));
    Outcome out;
    out.report["decomposition"] = decomposition_summary(d);
    out.report["group"] = or_default(o.group, "abelian:2");
    out.report["images"] = element_list(q, images);
    out.report["image_sets"] = element_sets(q, r.sets);
    out.report["image_size"] = r.image_size;
    out.report["original_size"] = r.original_size;
    out.report["ball"] = ball_summary(r.ball.graph, r.ball.radius, r.ball.interior_radius);
    out.report["matching"] = io::to_json(r.matching);
    out.ok = r.matching.feasible;
    if (!o.emit_dot.empty()) out.dot = r.ball.graph.to_dot(r.matching.subgraph.edges);
    return out;
  });
}

Outcome cmd_match(const Options& o) {
  if (o.graph.empty()) throw std::invalid_argument("--graph is required");
  auto g = io::graph_from_json(io::read_file(o.graph));
  std::vector<int> demand;
  if (o.demand == "interior")
    demand = g.interior_vertices();
  else if (o.demand == "all")
    demand = g.all_vertices();
  else
    throw std::invalid_argument("demand must be interior or all");
  auto m = find_even_k_subgraph(g, demand);
  Outcome out;
  out.report["graph"] = ball_summary(g, -1, -1);
  out.report["graph"].erase("radius");
  out.report["graph"].erase("interior_radius");
  out.report["demand"] = demand;
  out.report["matching"] = io::to_json(m);
  out.report["revalidated"] = io::revalidate(g, m, demand);
  out.ok = m.feasible;
  if (!o.emit_dot.empty()) out.dot = g.to_dot(m.subgraph.edges);
  return out;
}

Outcome cmd_normalize(const Options& o) {
  auto d = load_decomposition(o);
  int radius = or_default(o.radius, 6);
  auto db = decomposition_ball(d, radius);
  const auto& g = db.ball.graph;
  auto result = normalize(g, db.chosen);
  auto again = normalize(g, result.chosen);
  bool idempotent = again.chosen.edges == result.chosen.edges && again.paths.empty();
  auto strong = decomposition_from_subgraph(db.ball, result.chosen, d.translating_sets, d.alphabet);
  auto report = verify_ball(strong, radius);
  Outcome out;
  Json paths = Json::array();
  for (const auto& path : result.paths) {
    Json vs = Json::array();
    for (int v : path.vertices) vs.push_back(g.name(v));
    paths.push_back({{"start", g.name(path.start)}, {"vertices", vs}, {"truncated", path.truncated}});
  }
  out.report["decomposition"] = decomposition_summary(d);
  out.report["ball"] = ball_summary(g, db.ball.radius, db.ball.interior_radius);
  out.report["paths"] = paths;
  out.report["idempotent"] = idempotent;
  out.report["even"] = is_even_subgraph(g, result.chosen, g.interior_vertices());
  out.report["report"] = io::to_json(report, d.alphabet);
  out.report["normalized"] = io::to_json(strong);
  out.ok = idempotent && report.all_ok() && report.pieces_cover_interior;
  if (!o.emit_dot.empty()) out.dot = g.to_dot(result.chosen.edges);
  return out;
}

Json group_header(const Options& o, const BallGraph& g) {
  return {{"group", or_default(o.group, "free:2")},
          {"generators", g.generator_names},
          {"radius", g.radius},
          {"vertex_count", g.vertex_count()},
          {"edge_count", g.edges.size()},
          {"interior_count", g.interior_vertices().size()}};
}

Outcome cmd_forest_sim(const Options& o) {
  return with_group(or_default(o.group, "free:2"), o.gens, [&](const auto& group, const auto& S, const auto&) {
    auto g = build_ball(group, S, or_default(o.radius, 6));
    long trials = o.trials >= 0 ? o.trials : 500;
    auto stats = sample_msf(g, trials, o.seed, o.forced);
    Outcome out;
    out.report["ball"] = group_header(o, g);
    out.report["forced_label"] = o.forced;
    out.report["stats"] = io::to_json(stats);
    out.ok = stats.all_acyclic;
    if (!o.emit_dot.empty()) out.dot = g.to_dot(minimal_spanning_forest(g, o.seed, 0, o.forced));
    return out;
  });
}

Outcome cmd_forest_check(const Options& o) {
  return with_group(or_default(o.group, "free:2"), o.gens, [&](const auto& group, const auto& S, const auto&) {
    auto g = build_ball(group, S, or_default(o.radius, 6));
    if (o.a < 0 || o.a >= g.generator_count) throw std::invalid_argument("--a is not a generator index");
    long trials = o.trials >= 0 ? o.trials : 200;
    std::mt19937_64 rng(o.seed);
    auto interior = g.interior_vertices();
    if (interior.empty()) throw std::invalid_argument("radius too small to have interior vertices");
    auto subset = [&] {
      std::set<int> s;
      int size = static_cast<int>(rng() % 13);
      for (int t = 0; t < size; ++t) s.insert(interior[rng() % interior.size()]);
      return s;
    };
    long violations = 0;
    Json first = nullptr;
    for (long trial = 0; trial < trials; ++trial) {
      auto forest = minimal_spanning_forest(g, o.seed, static_cast<std::uint64_t>(trial), o.a);
      if (trial % 3 == 0) {
        Forest thinned;
        for (int e : forest)
          if (rng() % 2) thinned.push_back(e);
        forest = thinned;
      }
      auto A = subset();
      std::set<int> in(forest.begin(), forest.end()), B;
      for (int v : subset())
        if (in.count(g.edge_at[v][2 * o.a]) && in.count(g.edge_at[v][2 * o.a + 1])) B.insert(v);
      auto r = forest_counting_checks(g, forest, A, B, o.a);
      if (!r.all_ok()) {
        ++violations;
        if (first.is_null())
          first = {{"trial", trial}, {"A", std::vector<int>(A.begin(), A.end())},
                   {"B", std::vector<int>(B.begin(), B.end())}, {"forest", forest}, {"report", io::to_json(r)}};
      }
    }
    Outcome out;
    out.report["ball"] = group_header(o, g);
    out.report["trials"] = trials;
    out.report["seed"] = o.seed;
    out.report["violations"] = violations;
    out.report["first_violation"] = first;
    out.ok = violations == 0;
    return out;
  });
}

Outcome cmd_theta(const Options& o) {
  return with_group(or_default(o.group, "free:2"), o.gens, [&](const auto& group, const auto& S, const auto&) {
    auto g = build_ball(group, S, or_default(o.radius, 5));
    long trials = o.trials >= 0 ? o.trials : 100;
    long acyclic = 0, edges = 0;
    int domain = 0;
    for (long trial = 0; trial < trials; ++trial) {
      auto forest = minimal_spanning_forest(g, o.seed, static_cast<std::uint64_t>(trial), o.a);
      auto t = theta_transform(g, forest, o.a, o.b, o.n);
      acyclic += t.acyclic;
      edges += static_cast<long>(t.edges.size());
      domain = t.domain_radius;
    }
    Outcome out;
    out.report["ball"] = group_header(o, g);
    out.report["n"] = o.n;
    out.report["a"] = o.a;
    out.report["b"] = o.b;
    out.report["domain_radius"] = domain;
    out.report["trials"] = trials;
    out.report["seed"] = o.seed;
    out.report["acyclic"] = acyclic;
    out.report["edge_total"] = edges;
    out.ok = acyclic == trials;
    if (!o.emit_dot.empty() && trials > 0) {
      auto t = theta_transform(g, minimal_spanning_forest(g, o.seed, 0, o.a), o.a, o.b, o.n);
      std::ostringstream dot;
      dot << "graph theta {\n";
      for (int v = 0; v < g.vertex_count(); ++v) dot << "  " << v << " [label=\"" << g.names[v] << "\"];\n";
      for (const auto& e : t.edges) dot << "  " << e.u << " -- " << e.v << " [label=\"" << e.label << "\"];\n";
      dot << "}\n";
      out.dot = dot.str();
    }
    return out;
  });
}

Outcome cmd_tarski56(const Options& o) {
  return with_group(or_default(o.group, "free:3"), o.gens, [&](const auto& group, const auto& S, const auto&) {
    auto variant = parse_variant(o.variant);
    auto r = decomposition_from_degree(group, S, or_default(o.radius, 4), variant, o.a);
    Outcome out;
    out.report["group"] = or_default(o.group, "free:3");
    out.report["generators"] = element_list(group, S);
    out.report["variant"] = o.variant;
    out.report["sets"] = element_sets(group, r.sets);
    out.report["total_size"] = r.total_size;
    out.report["ball"] = ball_summary(r.ball.graph, r.ball.radius, r.ball.interior_radius);
    out.report["matching"] = io::to_json(r.matching);
    out.ok = r.matching.feasible;
    if (!o.emit_dot.empty()) out.dot = r.ball.graph.to_dot(r.matching.subgraph.edges);
    return out;
  });
}

/// Relators as words: from a presentation file (expanded powers) or the d-generator example.
std::vector<Word> gs_relators(const Options& o, int& generators, int& p) {
  if (!o.input.empty()) {
    auto pres = io::presentation_from_json(io::read_file(o.input));
    generators = pres.alphabet.rank();
    p = pres.p;
    std::vector<Word> out;
    for (const auto& r : pres.relators) {
      long long e = 1;
      for (int t = 0; t < r.n; ++t) e *= p;
      if (static_cast<long long>(r.base.size()) * e > (1LL << 22)) throw std::invalid_argument("relator too long to expand");
      out.push_back(r.base.pow(e));
    }
    return out;
  }
  generators = or_default(o.d, 9);
  return gs_example_relators(generators, p);
}

Outcome cmd_gs_check(const Options& o) {
  int generators = 0, p = o.p;
  auto relators = gs_relators(o, generators, p);
  int D = o.trunc > 0 ? o.trunc : default_truncation(p);
  auto tau = parse_rational(o.tau);
  auto r = gs_check(generators, relators, p, tau, D);
  Outcome out;
  out.report["generators"] = generators;
  out.report["p"] = p;
  out.report["relator_count"] = relators.size();
  out.report["gs"] = io::to_json(r, tau);
  if (o.optimize) {
    auto best = gs_optimize(generators, r.degrees, D);
    out.report["optimum"] = {{"tau", best.tau}, {"value", best.value}};
  }
  out.ok = r.holds;
  return out;
}

Outcome cmd_p_def(const Options& o) {
  Outcome out;
  if (!o.input.empty()) {
    auto pres = io::presentation_from_json(io::read_file(o.input));
    Rational sum = 0;
    Json es = Json::array();
    for (const auto& r : pres.relators) {
      int e = p_parts(r.base, pres.p).e + r.n;
      es.push_back(e);
      Rational term = 1;
      for (int t = 0; t < e; ++t) term /= pres.p;
      sum += term;
    }
    Rational def = Rational(pres.alphabet.rank() - 1) - sum;
    out.report = {{"generators", pres.alphabet.rank()}, {"p", pres.p}, {"e", es},
                  {"deficiency", io::to_string(def)}, {"deficiency_value", def.convert_to<double>()}};
    return out;
  }
  int generators = or_default(o.d, 2);
  Alphabet alphabet = Alphabet::numbered(generators);
  std::vector<Word> relators;
  for (const auto& s : split(o.relators)) relators.push_back(parse_word(s, alphabet));
  Json es = Json::array();
  for (const auto& r : relators) es.push_back(p_parts(r, o.p).e);
  auto def = p_deficiency(generators, relators, o.p);
  out.report = {{"generators", generators}, {"p", o.p}, {"relators", io::word_list(relators, alphabet)}, {"e", es},
                {"deficiency", io::to_string(def)}, {"deficiency_value", def.convert_to<double>()}};
  return out;
}

Json ptp_json(const PtpReport& r) {
  return {{"sum", io::to_string(r.sum)},
          {"bound", io::to_string(r.bound)},
          {"bound_value", r.bound.convert_to<double>()},
          {"three_generators_half", r.three_generators_half},
          {"conclusions", r.conclusions}};
}

Outcome cmd_ptp_bound(const Options& o) {
  int generators = or_default(o.d, 3), p = o.p;
  std::vector<int> exponents;
  if (!o.input.empty()) {
    auto pres = io::presentation_from_json(io::read_file(o.input));
    generators = pres.alphabet.rank();
    p = pres.p;
    for (const auto& r : pres.relators) exponents.push_back(r.n);
  } else if (!o.exponents.empty()) {
    exponents = int_list(o.exponents);
  } else {
    for (int t = 1; t <= o.count; ++t) exponents.push_back(t + 1);
  }
  Outcome out;
  out.report = ptp_json(ptp_bound(generators, p, exponents));
  out.report["generators"] = generators;
  out.report["p"] = p;
  out.report["exponents"] = exponents;
  return out;
}

Outcome cmd_gen_presentation(const Options& o) {
  EnumerationMode mode;
  if (o.mode.empty() || o.mode == "full")
    mode = EnumerationMode::Full;
  else if (o.mode == "derived")
    mode = EnumerationMode::Derived;
  else
    throw std::invalid_argument("mode must be full or derived");
  auto pres = burnside_like_presentation(or_default(o.d, 3), o.p, o.count, mode);
  std::vector<int> exponents;
  for (const auto& r : pres.relators) exponents.push_back(r.n);
  Outcome out;
  out.report = io::to_json(pres);
  out.report["ptp"] = ptp_json(ptp_bound(pres.alphabet.rank(), pres.p, exponents));
  return out;
}

Outcome cmd_wreath_check(const Options& o) {
  int d = or_default(o.d, 2);
  FreeGroup base(d);
  Json pairs = Json::array();
  bool all = true;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      if (i == j || (o.i && o.i != i) || (o.j && o.j != j)) continue;
      bool holds = neumann_embed_check(base, d, i, j, o.modulus);
      all = all && holds;
      pairs.push_back({{"i", i}, {"j", j}, {"holds", holds}});
    }
  if (pairs.empty()) throw std::invalid_argument("no generator pair selected");
  Outcome out;
  out.report = {{"d", d}, {"n", o.modulus}, {"pairs", pairs}, {"holds", all}};
  out.ok = all;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Paradoxical decompositions, transfers, forest experiments and Golod-Shafarevich checks"};
  app.require_subcommand(1);
  Options o;

  auto source = [&](CLI::App* c) {
    c->add_option("--builtin", o.builtin, "pingpong, pingpong-double or pingpong-f3")->capture_default_str();
    c->add_option("--input", o.input, "decomposition JSON file");
  };
  auto group = [&](CLI::App* c, const std::string& fallback) {
    c->add_option("--group", o.group, "free:N or abelian:N, default " + fallback);
    c->add_option("--gens", o.gens, "comma-separated generator words");
  };
  auto random = [&](CLI::App* c) {
    c->add_option("--trials", o.trials);
    c->add_option("--seed", o.seed)->capture_default_str();
  };

  std::vector<std::pair<CLI::App*, Outcome (*)(const Options&)>> commands;
  auto add = [&](const std::string& name, const std::string& help, Outcome (*run)(const Options&)) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("--out", o.out, "write the JSON report here instead of stdout");
    c->add_option("--emit-dot", o.emit_dot, "write a DOT file");
    commands.emplace_back(c, run);
    return c;
  };

  auto* verify = add("verify", "verify a decomposition exactly or on a ball", cmd_verify);
  source(verify);
  verify->add_option("--mode", o.mode, "exact or ball");
  verify->add_option("--radius", o.radius);

  auto* transfer = add("transfer", "transfer to the kernel of F -> Z/n", cmd_transfer);
  source(transfer);
  transfer->add_option("--index", o.index, "n")->capture_default_str();
  transfer->add_option("--images", o.images, "comma-separated images of the generators in Z/n");
  transfer->add_option("--radius", o.radius, "certification radius, 0 to skip");

  auto* variety = add("variety-transfer", "transfer to the kernel of F -> Z^d", cmd_variety_transfer);
  source(variety);
  variety->add_option("--cap", o.cap)->capture_default_str();

  auto* quotient = add("quotient-transfer", "push the translating sets to a quotient", cmd_quotient_transfer);
  source(quotient);
  quotient->add_option("--group", o.group, "codomain, free:N or abelian:N");
  quotient->add_option("--images", o.images, "comma-separated images of the generators");
  quotient->add_option("--radius", o.radius);

  auto* match = add("match", "find an evenly colored k-subgraph or a Hall certificate", cmd_match);
  match->add_option("--graph", o.graph)->required();
  match->add_option("--demand", o.demand, "interior or all")->capture_default_str();

  auto* norm = add("normalize", "loop surgery on the ball decomposition", cmd_normalize);
  source(norm);
  norm->add_option("--radius", o.radius);

  auto* sim = add("forest-sim", "sample minimal spanning forests", cmd_forest_sim);
  group(sim, "free:2");
  random(sim);
  sim->add_option("--radius", o.radius);
  sim->add_option("--forced", o.forced, "generator index whose edges are kept");

  auto* check = add("forest-check", "counting inequalities on sampled forests", cmd_forest_check);
  group(check, "free:2");
  random(check);
  check->add_option("--radius", o.radius);
  check->add_option("--a", o.a)->capture_default_str();

  auto* theta = add("theta", "theta transform of sampled forests", cmd_theta);
  group(theta, "free:2");
  random(theta);
  theta->add_option("--radius", o.radius);
  theta->add_option("--a", o.a)->capture_default_str();
  theta->add_option("--b", o.b)->capture_default_str();
  theta->add_option("--n", o.n)->capture_default_str();

  auto* t56 = add("tarski56", "decompositions from forest degree", cmd_tarski56);
  group(t56, "free:3");
  t56->add_option("--variant", o.variant, "c, d, g or h")->capture_default_str();
  t56->add_option("--radius", o.radius);
  t56->add_option("--a", o.a)->capture_default_str();

  auto* gs = add("gs-check", "Golod-Shafarevich value", cmd_gs_check);
  gs->add_option("--input", o.input, "presentation JSON file");
  gs->add_option("--d", o.d);
  gs->add_option("--p", o.p)->capture_default_str();
  gs->add_option("--tau", o.tau)->capture_default_str();
  gs->add_option("--trunc", o.trunc, "truncation degree, default max(8, p + 1)");
  gs->add_flag("--optimize", o.optimize);

  auto* pdef = add("p-def", "p-deficiency", cmd_p_def);
  pdef->add_option("--input", o.input, "presentation JSON file");
  pdef->add_option("--d", o.d);
  pdef->add_option("--p", o.p)->capture_default_str();
  pdef->add_option("--relators", o.relators, "comma-separated words in x1..xd");

  auto* ptp = add("ptp-bound", "Betti number bound for power presentations", cmd_ptp_bound);
  ptp->add_option("--input", o.input, "presentation JSON file");
  ptp->add_option("--d", o.d);
  ptp->add_option("--p", o.p)->capture_default_str();
  ptp->add_option("--exponents", o.exponents, "comma-separated n_i");
  ptp->add_option("--count", o.count, "use n_i = i + 1 for i = 1..count")->capture_default_str();

  auto* gen = add("gen-presentation", "power presentation from shortlex words", cmd_gen_presentation);
  gen->add_option("--d", o.d);
  gen->add_option("--p", o.p)->capture_default_str();
  gen->add_option("--count", o.count)->capture_default_str();
  gen->add_option("--mode", o.mode, "full or derived");

  auto* wreath = add("wreath-check", "commutator identity in F wr C_n", cmd_wreath_check);
  wreath->add_option("--d", o.d);
  wreath->add_option("--n", o.modulus)->capture_default_str();
  wreath->add_option("--i", o.i);
  wreath->add_option("--j", o.j);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (auto& [c, run] : commands) {
    if (!c->parsed()) continue;
    try {
      Outcome result = run(o);
      Json report = result.report;
      report["command"] = c->get_name();
      report["ok"] = result.ok;
      if (o.out.empty())
        std::cout << io::dump(report);
      else
        io::write_file(o.out, io::dump(report));
      if (!o.emit_dot.empty()) io::write_file(o.emit_dot, result.dot);
      return result.ok ? 0 : 1;
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    } catch (const std::out_of_range& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "internal error: " << e.what() << "\n";
      return 3;
    }
  }
  return 2;
}
