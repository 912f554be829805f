#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "tarski/decomposition.hpp"
#include "tarski/forests.hpp"
#include "tarski/gs.hpp"
#include "tarski/matching.hpp"
#include "tarski/regset.hpp"
#include "tarski/transfer.hpp"

namespace tarski::io {

using Json = nlohmann::json;

/// Pretty-printed with sorted keys and a trailing newline.
std::string dump(const Json& j);
Json read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

Json to_json(const Alphabet& alphabet);
Alphabet alphabet_from_json(const Json& j);

Json word_list(const std::vector<Word>& words, const Alphabet& alphabet);
std::vector<Word> word_list_from_json(const Json& j, const Alphabet& alphabet);

/// {states, initial, accepting, transitions: [{from, letter, to}]}
Json to_json(const RegSet& set, const Alphabet& alphabet);
RegSet regset_from_json(const Json& j, const Alphabet& alphabet);

/// {k, alphabet, translating_sets, pieces, mode}; a piece is an automaton object or a word list.
Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

Json to_json(const VerificationReport& r, const Alphabet& alphabet);

/// {k, vertices, interior, edges: [{tail, head, color, label}]}
Json to_json(const ColoredDigraph& g);
ColoredDigraph graph_from_json(const Json& j);

/// {feasible, margin, subgraph: [edge ids], certificate: [[vertex ids] per color]}
Json to_json(const MatchingResult& m);
MatchingResult matching_from_json(const Json& j);
/// A stored result re-checked against its graph: the subgraph is even on `demand`, or the
/// certificate lies in `demand` and violates the Hall inequality.
bool revalidate(const ColoredDigraph& g, const MatchingResult& m, const std::vector<int>& demand);

Json to_json(const TransferResult& r, const Alphabet& alphabet);
Json to_json(const TransferCertificate& c);

Json to_json(const ForestStats& s);
Json to_json(const CountingReport& r);

std::string to_string(const Rational& q);
Json to_json(const Degree& d);
Json to_json(const GsReport& r, const Rational& tau);

/// {alphabet, relators, p, exponents}: relator i is relators[i]^(p^exponents[i]).
Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

}  // namespace tarski::io
