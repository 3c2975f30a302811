#include "recomp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "recomp/error.hpp"
#include "recomp/serialize.hpp"

namespace recomp::cli {

namespace {

struct Options {
  std::string command;
  std::string input;
  std::optional<long> m, n, jmax;
  long j = 1;
  std::string n_range;
  std::string outer;
  bool pruned = false;
  bool text = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

long require(const std::optional<long>& v, const char* flag, const std::string& command) {
  if (!v) throw UsageError(command + " needs " + flag);
  return *v;
}

long resolve_jmax(const Options& o) {
  if (o.jmax) return *o.jmax;
  if (const char* env = std::getenv("RECOMP_JMAX")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) throw UsageError("RECOMP_JMAX must be a positive integer");
    return v;
  }
  return kDefaultJMax;
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const long v = std::stol(text);
      return {v, v};
    }
    return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--n-range expects A..B, got '" + text + "'");
  }
}

std::string gamma_text(const CandidateGamma& g) {
  std::string h;
  for (long v : g.index.h) h += (h.empty() ? "" : ",") + std::to_string(v);
  return "s=" + std::to_string(g.index.s) + " h=(" + h + ")  " + g.constant.str() + " * " + g.monic_part.str();
}

void print_text(const Options& o, const Json& j, std::ostream& out) {
  const std::string& c = o.command;
  if (c == "gn") {
    out << poly_from_json(j["gn"]).str() << "\n";
  } else if (c == "m0") {
    out << "m0 = " << j["m0"].get<long>() << "\npsi = " << j["psi"]["constant"].get<std::string>() << " * ("
        << poly_from_json(j["psi"]["monic"]).str() << ")\n";
  } else if (c == "bound") {
    for (const char* k : {"j_star", "L", "C1", "C1_m0", "Cprime", "C", "reference"})
      out << k << " = " << (j[k].is_string() ? j[k].get<std::string>() : j[k].dump()) << "\n";
  } else if (c == "variety") {
    const VarietySystem sys = variety_from_json(j);
    for (const auto& eq : sys.equations) {
      std::string rhs;
      for (const auto& t : eq.rhs) {
        std::string b;
        for (const auto& base : t.bases)
          b += " * " + format_rat(base.value) + "^(" + std::to_string(base.mult) + "*ell" +
               (base.root == 1 ? "" : "/" + std::to_string(base.root)) + ")";
        rhs += (rhs.empty() ? "" : " + ") + ("(" + t.coeff.str(sys.unknowns) + ")" + b);
      }
      std::string lhs = format_rat(eq.lhs_coeff);
      for (const auto& base : eq.lhs_bases)
        lhs += " * " + format_rat(base.value) + "^(" + std::to_string(base.mult) + "*ell)";
      out << "[" << eq.profile.str() << "]  " << lhs << " = " << rhs << "\n";
    }
  } else if (c == "decompose") {
    for (const auto& d : j["decompositions"])
      out << "g = " << poly_from_json(d["g"]).str() << "\nh = " << poly_from_json(d["h"]).str() << "\n";
    if (j["decompositions"].empty()) out << "no decomposition\n";
  } else if (c == "verify") {
    for (const auto& r : j["reports"]) {
      out << "n=" << r["n"].get<long>() << " decompositions=" << r["decompositions"].size();
      for (const auto& d : r["decompositions"]) {
        out << " [" << d["status"].get<std::string>();
        for (const auto& cf : d["coefficients"]) out << " " << cf.get<std::string>();
        out << "]";
      }
      out << (r["structural_miss"].get<bool>() ? " STRUCTURAL MISS" : "") << "\n";
    }
  } else {
    out << j.dump(2) << "\n";
  }
}

int execute(const Options& o, std::ostream& out) {
  const SequenceFile file = load_sequence_file(o.input);
  const RecurrenceSeq& seq = file.seq;
  const SeqProfile profile = validate(seq);
  const std::string& c = o.command;
  Json j;
  int code = kExitOk;

  if (c == "info") {
    j = to_json(profile);
    j["name"] = seq.name;
  } else if (c == "gn") {
    const long n = require(o.n, "--n", c);
    if (n < 0) throw UsageError("--n must be nonnegative");
    const Poly g = eval_gn(seq, static_cast<unsigned long>(n));
    j = Json{{"n", n}, {"gn", to_json(g)}, {"degree", g.degree()}};
  } else if (c == "m0") {
    const long m = require(o.m, "--m", c);
    j = to_json(compute_m0(seq, m), m);
  } else if (c == "bound") {
    j = to_json(bound_C(seq, require(o.m, "--m", c), resolve_jmax(o), file.reference_bound));
  } else if (c == "candidates") {
    const long m = require(o.m, "--m", c);
    const auto view = o.pruned ? CandidateView::Pruned : CandidateView::Full;
    j = to_json(candidate_gammas(seq, m, o.j, view));
    j["m"] = m;
    j["J"] = o.j;
    j["view"] = o.pruned ? "pruned" : "full";
    if (o.text) {
      for (const auto& g : candidate_gammas(seq, m, o.j, view).gammas) out << gamma_text(g) << "\n";
      return kExitOk;
    }
  } else if (c == "variety") {
    const long m = require(o.m, "--m", c);
    std::optional<Poly> outer;
    if (!o.outer.empty()) {
      try {
        outer = poly_from_json(Json::parse(o.outer));
      } catch (const Json::exception& e) {
        throw UsageError(std::string("--outer expects a JSON coefficient array: ") + e.what());
      }
    }
    j = to_json(build_variety(seq, m, o.j, o.pruned ? CandidateView::Pruned : CandidateView::Full, outer));
  } else if (c == "decompose") {
    const long m = require(o.m, "--m", c);
    const long n = require(o.n, "--n", c);
    if (n < 0) throw UsageError("--n must be nonnegative");
    j = Json{{"n", n}, {"m", m}, {"decompositions", Json::array()}};
    for (const auto& d : oracle_decompose(eval_gn(seq, static_cast<unsigned long>(n)), m)) {
      Json e = to_json(d);
      e["ambiguity"] = to_json(cyclic_ambiguity(d.g));
      j["decompositions"].push_back(std::move(e));
    }
  } else if (c == "verify") {
    const long m = require(o.m, "--m", c);
    long from = 0, to = 0;
    if (!o.n_range.empty())
      std::tie(from, to) = parse_range(o.n_range);
    else
      from = to = require(o.n, "--n-range or --n", c);
    if (from < 1 || to < from) throw UsageError("verify needs 1 <= A <= B");
    const VerifyContext ctx(seq, m, o.j, resolve_jmax(o));
    j = Json{{"m", m}, {"J", o.j}, {"bound", to_json(ctx.bound())}, {"reports", Json::array()}};
    for (const auto& r : verify_range(ctx, from, to)) {
      if (r.structural_miss) code = kExitStructuralMiss;
      j["reports"].push_back(to_json(r));
    }
  }

  if (o.text)
    print_text(o, j, out);
  else
    out << j.dump(2) << "\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact composite-polynomial analysis of linear recurrence sequences", "recomp"};
  Options o;
  app.add_option("command", o.command, "info | gn | m0 | bound | candidates | variety | decompose | verify")
      ->required()
      ->check(CLI::IsMember({"info", "gn", "m0", "bound", "candidates", "variety", "decompose", "verify"}));
  app.add_option("--input", o.input, "sequence file (JSON)")->required();
  app.add_option("--m", o.m, "outer degree m >= 2");
  app.add_option("--n", o.n, "sequence index");
  app.add_option("--j", o.j, "term-order parameter J")->capture_default_str();
  app.add_option("--jmax", o.jmax, "J scan limit for the bound (default RECOMP_JMAX or 64)");
  app.add_option("--n-range", o.n_range, "index range A..B for verify");
  app.add_option("--outer", o.outer, "fixed outer polynomial as a JSON coefficient array (variety)");
  app.add_flag("--pruned", o.pruned, "polynomial candidates only, one per monic profile");
  auto* json_flag = app.add_flag("--json", "JSON output (default)");
  app.add_flag("--text", o.text, "human-readable output")->excludes(json_flag);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "recomp: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  if (o.m && *o.m < 2) {
    err << "recomp: --m must be at least 2\n";
    return kExitUsage;
  }
  if (o.j < 1) {
    err << "recomp: --j must be positive\n";
    return kExitUsage;
  }

  try {
    return execute(o, out);
  } catch (const ParseError& e) {
    err << "recomp: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ValidationError& e) {
    err << "recomp: invalid sequence: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    err << "recomp: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace recomp::cli
