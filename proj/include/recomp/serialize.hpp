#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "recomp/oracle.hpp"

namespace recomp {

using Json = nlohmann::json;

Json to_json(const Rat& q);
Rat rat_from_json(const Json& j);

// Ascending "p/q" strings, no trailing zeros.
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j);

struct SequenceFile {
  RecurrenceSeq seq;
  std::optional<Rat> reference_bound;
};

// Schema {"v":1, "name"?, "coeffs":[...], "roots":[[...],...], "reference_bound"?}.
// Throws ParseError for schema violations; validation is left to the caller.
SequenceFile sequence_from_json(const Json& j);
SequenceFile load_sequence_file(const std::string& path);
Json to_json(const SequenceFile& f);

Json to_json(const SeqProfile& p);
Json to_json(const RootPower& r, long m);
Json to_json(const BoundReport& b);
Json to_json(const TermIndex& t);
Json to_json(const CandidateGamma& g);
Json to_json(const CandidateSet& c);

// Monomials as exponent maps keyed by unknown name.
Json to_json(const SymPoly& p, const std::vector<std::string>& names);
SymPoly sympoly_from_json(const Json& j, const std::vector<std::string>& names);

Json to_json(const VarietySystem& s);
VarietySystem variety_from_json(const Json& j);

Json to_json(const DecompPair& d);
Json to_json(const CyclicAmbiguity& a);
Json to_json(const VerifyReport& r);

}  // namespace recomp
