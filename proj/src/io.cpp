#include "tarski/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tarski::io {

namespace {

std::string mode_name(PieceMode m) { return m == PieceMode::Symbolic ? "symbolic" : "ball"; }

PieceMode parse_mode(const std::string& s) {
  if (s == "symbolic" || s == "exact") return PieceMode::Symbolic;
  if (s == "ball") return PieceMode::Ball;
  throw std::invalid_argument("unknown piece mode: " + s);
}

std::string letter_name(Letter l, const Alphabet& alphabet) { return tarski::to_string(Word{l}, alphabet); }

Json vertex_sets(const std::vector<std::set<int>>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(Json(std::vector<int>(s.begin(), s.end())));
  return out;
}

Json bool_list(const std::vector<bool>& v) {
  Json out = Json::array();
  for (bool b : v) out.push_back(b);
  return out;
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

Json to_json(const Alphabet& alphabet) { return alphabet.names(); }

Alphabet alphabet_from_json(const Json& j) {
  if (j.is_number_integer()) return Alphabet::numbered(j.get<int>());
  return Alphabet(j.get<std::vector<std::string>>());
}

Json word_list(const std::vector<Word>& words, const Alphabet& alphabet) {
  Json out = Json::array();
  for (const auto& w : words) out.push_back(tarski::to_string(w, alphabet));
  return out;
}

std::vector<Word> word_list_from_json(const Json& j, const Alphabet& alphabet) {
  std::vector<Word> out;
  for (const auto& w : j) out.push_back(parse_word(w.get<std::string>(), alphabet));
  return out;
}

Json to_json(const RegSet& set, const Alphabet& alphabet) {
  Json j;
  j["states"] = set.state_count();
  j["initial"] = 0;
  Json accepting = Json::array(), transitions = Json::array();
  for (int q = 0; q < set.state_count(); ++q) {
    if (set.accepting(q)) accepting.push_back(q);
    for (int li = 0; li < 2 * set.rank(); ++li) {
      int t = set.target(q, li);
      if (t >= 0) transitions.push_back({{"from", q}, {"letter", letter_name(letter_from_index(li), alphabet)}, {"to", t}});
    }
  }
  j["accepting"] = accepting;
  j["transitions"] = transitions;
  return j;
}

RegSet regset_from_json(const Json& j, const Alphabet& alphabet) {
  const int n = j.at("states").get<int>();
  const int initial = j.value("initial", 0);
  if (n < 0 || (n > 0 && (initial < 0 || initial >= n))) throw std::invalid_argument("bad automaton state count");
  // swap the initial state into position 0
  auto renumber = [&](int q) { return q == initial ? 0 : q == 0 ? initial : q; };
  RegSet::Dfa dfa;
  dfa.transitions.assign(n, std::vector<int>(2 * alphabet.rank(), -1));
  dfa.accepting.assign(n, false);
  for (const auto& q : j.at("accepting")) {
    int s = q.get<int>();
    if (s < 0 || s >= n) throw std::invalid_argument("accepting state out of range");
    dfa.accepting[renumber(s)] = true;
  }
  for (const auto& t : j.at("transitions")) {
    int from = t.at("from").get<int>(), to = t.at("to").get<int>();
    if (from < 0 || from >= n || to < 0 || to >= n) throw std::invalid_argument("transition state out of range");
    Word l = parse_word(t.at("letter").get<std::string>(), alphabet);
    if (l.size() != 1) throw std::invalid_argument("transition label must be one letter");
    dfa.transitions[renumber(from)][letter_index(l.letters()[0])] = renumber(to);
  }
  if (n == 0) return RegSet::empty(alphabet.rank());
  return RegSet::from_dfa(alphabet.rank(), dfa);
}

Json to_json(const Decomposition& d) {
  Json j;
  j["k"] = d.k();
  j["alphabet"] = to_json(d.alphabet);
  j["mode"] = mode_name(d.mode);
  Json sets = Json::array(), pieces = Json::array();
  for (const auto& s : d.translating_sets) sets.push_back(word_list(s, d.alphabet));
  for (const auto& family : d.pieces) {
    Json f = Json::array();
    for (const auto& piece : family) {
      if (const auto* r = std::get_if<RegSet>(&piece))
        f.push_back(to_json(*r, d.alphabet));
      else {
        const auto& words = std::get<std::set<Word>>(piece);
        f.push_back(word_list(std::vector<Word>(words.begin(), words.end()), d.alphabet));
      }
    }
    pieces.push_back(f);
  }
  j["translating_sets"] = sets;
  j["pieces"] = pieces;
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition d;
  d.alphabet = alphabet_from_json(j.at("alphabet"));
  d.mode = parse_mode(j.value("mode", "symbolic"));
  for (const auto& s : j.at("translating_sets")) d.translating_sets.push_back(word_list_from_json(s, d.alphabet));
  for (const auto& family : j.at("pieces")) {
    std::vector<Piece> f;
    for (const auto& piece : family) {
      if (piece.is_object()) {
        f.emplace_back(regset_from_json(piece, d.alphabet));
      } else {
        auto words = word_list_from_json(piece, d.alphabet);
        f.emplace_back(std::set<Word>(words.begin(), words.end()));
      }
    }
    d.pieces.push_back(std::move(f));
  }
  if (j.contains("k") && j.at("k").get<int>() != d.k()) throw std::invalid_argument("k disagrees with translating_sets");
  d.validate();
  return d;
}

Json to_json(const VerificationReport& r, const Alphabet& alphabet) {
  Json j;
  j["all_ok"] = r.all_ok();
  j["disjoint"] = r.disjoint_ok;
  j["cover"] = bool_list(r.cover_ok);
  j["strong"] = bool_list(r.strong_ok);
  j["counterexamples"] = word_list(r.counterexamples, alphabet);
  if (r.checked_radius >= 0) {
    j["radius"] = r.checked_radius;
    j["interior_radius"] = r.interior_radius;
    j["pieces_cover_interior"] = r.pieces_cover_interior;
  }
  return j;
}

Json to_json(const ColoredDigraph& g) {
  Json j;
  j["k"] = g.k();
  Json vertices = Json::array(), edges = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.name(v));
  for (const auto& e : g.edges())
    edges.push_back({{"tail", e.tail}, {"head", e.head}, {"color", e.color}, {"label", e.label}});
  j["vertices"] = vertices;
  j["interior"] = g.interior_vertices();
  j["edges"] = edges;
  return j;
}

ColoredDigraph graph_from_json(const Json& j) {
  int k = j.value("k", 0);
  if (k == 0)
    for (const auto& e : j.at("edges")) k = std::max(k, e.at("color").get<int>());
  if (k < 1) throw std::invalid_argument("graph needs k >= 1");
  ColoredDigraph g(k);
  const auto& vs = j.at("vertices");
  if (vs.is_number_integer()) {
    for (int v = 0; v < vs.get<int>(); ++v) g.add_vertex(std::to_string(v));
  } else {
    for (const auto& v : vs) g.add_vertex(v.is_string() ? v.get<std::string>() : v.dump());
  }
  for (const auto& v : j.value("interior", Json::array())) {
    int id = v.get<int>();
    if (id < 0 || id >= g.vertex_count()) throw std::invalid_argument("interior vertex out of range");
    g.set_interior(id, true);
  }
  for (const auto& e : j.at("edges")) {
    int tail = e.at("tail").get<int>(), head = e.at("head").get<int>();
    if (tail < 0 || tail >= g.vertex_count() || head < 0 || head >= g.vertex_count())
      throw std::invalid_argument("edge endpoint out of range");
    g.add_edge(tail, head, e.at("color").get<int>(), e.value("label", ""));
  }
  return g;
}

Json to_json(const MatchingResult& m) {
  Json j;
  j["feasible"] = m.feasible;
  j["margin"] = m.margin;
  j["subgraph"] = m.subgraph.edges;
  j["certificate"] = vertex_sets(m.certificate.sets);
  return j;
}

MatchingResult matching_from_json(const Json& j) {
  MatchingResult m;
  m.feasible = j.at("feasible").get<bool>();
  m.margin = j.value("margin", 0L);
  m.subgraph.edges = j.value("subgraph", std::vector<int>{});
  for (const auto& s : j.value("certificate", Json::array())) {
    auto v = s.get<std::vector<int>>();
    m.certificate.sets.emplace_back(v.begin(), v.end());
  }
  return m;
}

bool revalidate(const ColoredDigraph& g, const MatchingResult& m, const std::vector<int>& demand) {
  for (int e : m.subgraph.edges)
    if (e < 0 || e >= static_cast<int>(g.edges().size())) return false;
  if (m.feasible) return is_even_subgraph(g, m.subgraph, demand);
  if (static_cast<int>(m.certificate.sets.size()) != g.k()) return false;
  std::set<int> allowed(demand.begin(), demand.end());
  for (const auto& s : m.certificate.sets)
    for (int v : s)
      if (!allowed.count(v)) return false;
  return hall_check(g, m.certificate.sets) < 0;
}

Json to_json(const TransferResult& r, const Alphabet& alphabet) {
  Json j;
  j["k"] = r.k();
  if (auto index = r.transversal.index()) {
    j["index"] = *index;
    j["transversal"] = word_list(r.transversal.representatives(), alphabet);
  } else {
    j["index"] = nullptr;
  }
  Json original = Json::array(), phi = Json::array(), sp = Json::array(), sizes = Json::array();
  for (const auto& s : r.original_sets) original.push_back(word_list(s, alphabet));
  for (const auto& s : r.phi) phi.push_back(word_list(s, alphabet));
  for (const auto& s : r.s_prime) {
    sp.push_back(word_list(s, alphabet));
    sizes.push_back(s.size());
  }
  j["original_sets"] = original;
  j["F"] = word_list(r.F, alphabet);
  j["phi"] = phi;
  j["phi_union"] = word_list(r.phi_union, alphabet);
  j["s_prime"] = sp;
  j["s_prime_sizes"] = sizes;
  j["case"] = r.transfer_case == TransferCase::KColors ? "k-colors" : "two-colors";
  j["total_size"] = r.total_size();
  j["size_bound"] = r.size_bound;
  return j;
}

Json to_json(const TransferCertificate& c) {
  Json j;
  j["radius"] = c.radius;
  j["interior_radius"] = c.interior_radius;
  j["vertex_count"] = c.vertex_count;
  j["interior_count"] = c.interior_count;
  j["matching"] = to_json(c.matching);
  return j;
}

Json to_json(const ForestStats& s) {
  Json j;
  j["samples"] = s.samples;
  j["seed"] = s.seed;
  j["degree_sum"] = s.degree_sum;
  j["mean_degree"] = s.mean_degree();
  j["all_acyclic"] = s.all_acyclic;
  Json hist = Json::object();
  for (const auto& [d, c] : s.center_degrees) hist[std::to_string(d)] = c;
  j["center_degrees"] = hist;
  return j;
}

Json to_json(const CountingReport& r) {
  auto check = [](const InequalityCheck& c) { return Json{{"lhs", c.lhs}, {"rhs", c.rhs}, {"ok", c.ok}}; };
  Json j;
  j["degree_sum"] = r.degree_sum;
  j["a"] = check(r.a);
  j["b"] = check(r.b);
  if (r.with_a) {
    j["e"] = check(r.e);
    j["f"] = check(r.f);
  }
  j["all_ok"] = r.all_ok();
  return j;
}

std::string to_string(const Rational& q) {
  std::ostringstream out;
  out << numerator(q);
  if (denominator(q) != 1) out << "/" << denominator(q);
  return out.str();
}

Json to_json(const Degree& d) { return d.to_string(); }

Json to_json(const GsReport& r, const Rational& tau) {
  Json j;
  j["tau"] = to_string(tau);
  j["D"] = r.D;
  j["value"] = r.value;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["truncation_error_bound"] = r.error_bound;
  j["exact"] = r.exact ? Json(to_string(*r.exact)) : Json(nullptr);
  j["holds"] = r.holds;
  j["undetermined"] = r.undetermined;
  Json degrees = Json::array();
  for (const auto& d : r.degrees) degrees.push_back(to_json(d));
  j["degrees"] = degrees;
  return j;
}

Json to_json(const Presentation& p) {
  Json j;
  j["alphabet"] = to_json(p.alphabet);
  j["p"] = p.p;
  std::vector<Word> bases;
  std::vector<int> exponents;
  for (const auto& r : p.relators) {
    bases.push_back(r.base);
    exponents.push_back(r.n);
  }
  j["relators"] = word_list(bases, p.alphabet);
  j["exponents"] = exponents;
  return j;
}

Presentation presentation_from_json(const Json& j) {
  Presentation p;
  p.alphabet = alphabet_from_json(j.at("alphabet"));
  p.p = j.at("p").get<int>();
  auto bases = word_list_from_json(j.at("relators"), p.alphabet);
  auto exponents = j.value("exponents", std::vector<int>(bases.size(), 0));
  if (exponents.size() != bases.size()) throw std::invalid_argument("relators and exponents differ in length");
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (exponents[i] < 0) throw std::invalid_argument("negative exponent");
    p.relators.push_back({bases[i], exponents[i]});
  }
  return p;
}

}  // namespace tarski::io
