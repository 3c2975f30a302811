#include "recomp/serialize.hpp"

#include <fstream>
#include <sstream>

#include "recomp/error.hpp"

namespace recomp {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Json to_json(const Base& b) {
  Json j{{"base", format_rat(b.value)}, {"mult", b.mult}};
  if (b.root != 1) j["root"] = b.root;
  return j;
}

Base base_from_json(const Json& j) {
  Base b;
  b.value = rat_from_json(field(j, "base"));
  b.mult = field(j, "mult").get<long>();
  b.root = j.contains("root") ? j.at("root").get<unsigned>() : 1U;
  return b;
}

Json bases_to_json(const std::vector<Base>& bases) {
  Json arr = Json::array();
  for (const Base& b : bases) arr.push_back(to_json(b));
  return arr;
}

std::vector<Base> bases_from_json(const Json& j) {
  std::vector<Base> out;
  for (const auto& b : j) out.push_back(base_from_json(b));
  return out;
}

TermIndex term_from_json(const Json& j) {
  return TermIndex{field(j, "s").get<long>(), field(j, "h").get<std::vector<long>>()};
}

CandidateGamma gamma_from_json(const Json& j) {
  CandidateGamma g;
  g.index = term_from_json(j);
  for (const auto& t : field(j, "merged")) g.merged.push_back(term_from_json(t));
  g.constant = Constant::parse(field(j, "constant").get<std::string>());
  g.monic_part = ratfunc_from_json(field(j, "monic_part"));
  g.beta1_power = field(j, "beta1_power").get<long>();
  return g;
}

ExpTerm term_from_json(const Json& j, const std::vector<std::string>& names) {
  return ExpTerm{sympoly_from_json(field(j, "coeff"), names), bases_from_json(field(j, "bases")),
                 ratfunc_from_json(field(j, "profile"))};
}

}  // namespace

Json to_json(const Rat& q) { return format_rat(q); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw ParseError("expected a rational string, got " + j.dump());
}

Json to_json(const Poly& p) {
  Json arr = Json::array();
  for (const Rat& c : p.coeffs()) arr.push_back(format_rat(c));
  return arr;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of coefficient strings");
  std::vector<Rat> c;
  for (const auto& e : j) c.push_back(rat_from_json(e));
  if (!c.empty() && sgn(c.back()) == 0) throw ParseError("polynomial has a trailing zero coefficient");
  return Poly(std::move(c));
}

Json to_json(const RatFunc& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

RatFunc ratfunc_from_json(const Json& j) {
  return RatFunc(poly_from_json(field(j, "num")), poly_from_json(field(j, "den")));
}

// ---------------------------------------------------------------------------

SequenceFile sequence_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("sequence file must be a JSON object");
  const Json& v = field(j, "v");
  if (!v.is_number_integer() || v.get<long>() != 1) throw ParseError("unsupported schema version " + v.dump());
  SequenceFile f;
  if (j.contains("name")) f.seq.name = j.at("name").get<std::string>();
  const Json& coeffs = field(j, "coeffs");
  const Json& roots = field(j, "roots");
  if (!coeffs.is_array() || !roots.is_array()) throw ParseError("'coeffs' and 'roots' must be arrays");
  for (const auto& c : coeffs) f.seq.coeffs.push_back(rat_from_json(c));
  for (const auto& r : roots) f.seq.roots.push_back(poly_from_json(r));
  if (j.contains("reference_bound")) f.reference_bound = rat_from_json(j.at("reference_bound"));
  return f;
}

SequenceFile load_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
  try {
    return sequence_from_json(j);
  } catch (const Json::exception& e) {
    throw ParseError("bad sequence file '" + path + "': " + e.what());
  }
}

Json to_json(const SequenceFile& f) {
  Json j{{"v", 1}, {"coeffs", Json::array()}, {"roots", Json::array()}};
  if (!f.seq.name.empty()) j["name"] = f.seq.name;
  for (const Rat& c : f.seq.coeffs) j["coeffs"].push_back(to_json(c));
  for (const Poly& r : f.seq.roots) j["roots"].push_back(to_json(r));
  if (f.reference_bound) j["reference_bound"] = to_json(*f.reference_bound);
  return j;
}

Json to_json(const SeqProfile& p) {
  Json j{{"order", p.order}, {"deg_a0", p.deg_a0}, {"degrees", p.degrees}};
  j["leading"] = Json::array();
  j["monic"] = Json::array();
  for (const Rat& b : p.leading) j["leading"].push_back(to_json(b));
  for (const Poly& b : p.monic) j["monic"].push_back(to_json(b));
  return j;
}

Json to_json(const RootPower& r, long m) {
  return Json{{"m", m}, {"m0", r.m0}, {"psi", {{"constant", r.constant.str()}, {"monic", to_json(r.monic)}}}};
}

Json to_json(const BoundReport& b) {
  Json j{{"m", b.m},
         {"m0", b.m0},
         {"j_max", b.j_max},
         {"j_star", b.j_star},
         {"L", b.L},
         {"C1", to_json(b.C1)},
         {"C1_m0", to_json(b.C1_m0)},
         {"Cprime", to_json(b.Cprime)},
         {"C", to_json(b.C)}};
  j["reference"] = b.reference ? to_json(*b.reference) : Json(nullptr);
  return j;
}

Json to_json(const TermIndex& t) { return Json{{"s", t.s}, {"h", t.h}}; }

Json to_json(const CandidateGamma& g) {
  Json j = to_json(g.index);
  j["merged"] = Json::array();
  for (const auto& t : g.merged) j["merged"].push_back(to_json(t));
  j["constant"] = g.constant.str();
  j["monic_part"] = to_json(g.monic_part);
  j["beta1_power"] = g.beta1_power;
  return j;
}

Json to_json(const CandidateSet& c) {
  Json j{{"m0", c.m0}, {"raw_count", c.raw_count}, {"gammas", Json::array()}};
  for (const auto& g : c.gammas) j["gammas"].push_back(to_json(g));
  return j;
}

Json to_json(const SymPoly& p, const std::vector<std::string>& names) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exps = Json::object();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) exps[names.at(i)] = e[i];
    arr.push_back(Json{{"coeff", format_rat(c)}, {"exps", exps}});
  }
  return arr;
}

SymPoly sympoly_from_json(const Json& j, const std::vector<std::string>& names) {
  SymPoly p(names.size());
  for (const auto& term : j) {
    Exponents e(names.size(), 0);
    for (const auto& [name, power] : field(term, "exps").items()) {
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) throw ParseError("unknown variable '" + name + "'");
      e[static_cast<std::size_t>(it - names.begin())] = power.get<unsigned>();
    }
    p.add_term(e, rat_from_json(field(term, "coeff")));
  }
  return p;
}

Json to_json(const VarietySystem& s) {
  Json j{{"m", s.m}, {"m0", s.m0}, {"unknowns", s.unknowns}, {"matching", s.matching}};
  j["outer"] = s.outer ? to_json(*s.outer) : Json(nullptr);
  j["gammas"] = Json::array();
  for (const auto& g : s.gammas) j["gammas"].push_back(to_json(g));
  j["profiles"] = Json::array();
  for (const auto& p : s.profiles) j["profiles"].push_back(to_json(p));
  j["equations"] = Json::array();
  for (const auto& eq : s.equations) {
    Json e{{"profile", to_json(eq.profile)},
           {"lhs", {{"coeff", format_rat(eq.lhs_coeff)}, {"bases", bases_to_json(eq.lhs_bases)}}}};
    e["root"] = eq.root ? Json(*eq.root) : Json(nullptr);
    e["rhs"] = Json::array();
    for (const auto& t : eq.rhs)
      e["rhs"].push_back(
          Json{{"coeff", to_json(t.coeff, s.unknowns)}, {"bases", bases_to_json(t.bases)}, {"profile", to_json(t.profile)}});
    j["equations"].push_back(std::move(e));
  }
  return j;
}

VarietySystem variety_from_json(const Json& j) {
  try {
    VarietySystem s;
    s.m = field(j, "m").get<long>();
    s.m0 = field(j, "m0").get<long>();
    s.unknowns = field(j, "unknowns").get<std::vector<std::string>>();
    s.matching = field(j, "matching").get<std::vector<std::size_t>>();
    if (!field(j, "outer").is_null()) s.outer = poly_from_json(j.at("outer"));
    for (const auto& g : field(j, "gammas")) s.gammas.push_back(gamma_from_json(g));
    for (const auto& p : field(j, "profiles")) s.profiles.push_back(ratfunc_from_json(p));
    for (const auto& e : field(j, "equations")) {
      VarietyEquation eq;
      if (!field(e, "root").is_null()) eq.root = e.at("root").get<std::size_t>();
      eq.profile = ratfunc_from_json(field(e, "profile"));
      const Json& lhs = field(e, "lhs");
      eq.lhs_coeff = rat_from_json(field(lhs, "coeff"));
      eq.lhs_bases = bases_from_json(field(lhs, "bases"));
      for (const auto& t : field(e, "rhs")) eq.rhs.push_back(term_from_json(t, s.unknowns));
      s.equations.push_back(std::move(eq));
    }
    return s;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad variety document: ") + e.what());
  }
}

Json to_json(const DecompPair& d) { return Json{{"g", to_json(d.g)}, {"h", to_json(d.h)}}; }

Json to_json(const CyclicAmbiguity& a) {
  return Json{{"k", a.k}, {"rational_units", a.rational_units}, {"complex_units", a.complex_units}};
}

Json to_json(const VerifyReport& r) {
  Json j{{"n", r.n},
         {"m", r.m},
         {"m0", r.m0},
         {"within_bound", r.within_bound},
         {"structural_miss", r.structural_miss},
         {"decompositions", Json::array()}};
  j["ell"] = r.ell ? Json(*r.ell) : Json(nullptr);
  for (const auto& d : r.decompositions) {
    Json e{{"pair", to_json(d.pair)},
           {"depressed", to_json(d.depressed)},
           {"ambiguity", to_json(d.ambiguity)},
           {"status", to_string(d.status)},
           {"support", d.support},
           {"unique", d.unique}};
    e["coefficients"] = Json::array();
    for (const auto& c : d.coefficients) e["coefficients"].push_back(c.str());
    e["variety_check"] = d.variety_check ? Json(*d.variety_check) : Json(nullptr);
    j["decompositions"].push_back(std::move(e));
  }
  return j;
}

}  // namespace recomp
