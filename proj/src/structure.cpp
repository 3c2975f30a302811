#include "recomp/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "recomp/error.hpp"

namespace recomp {

namespace {

Int floor_rat(const Rat& q) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Int factorial(unsigned long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

// Canonical base list for K^ell.
std::vector<Base> bases_of(const Constant& k) {
  std::vector<Base> out;
  if (k.rational_part() != 1) out.push_back(Base{k.rational_part(), 1, 1});
  if (!k.is_rational()) out.push_back(Base{Rat(k.radical().radicand), 1, k.radical().index});
  return out;
}

Constant base_value(const std::vector<Base>& bases, long ell) {
  Constant out(1);
  for (const Base& b : bases) out *= Constant::root(rat_pow(b.value, b.mult * ell), b.root);
  return out;
}

std::string bases_key(const std::vector<Base>& bases) {
  std::string key;
  for (const Base& b : bases) key += format_rat(b.value) + "^" + std::to_string(b.mult) + "/" + std::to_string(b.root) + ";";
  return key;
}

}  // namespace

// ---- bound -----------------------------------------------------------------

BoundReport bound_C(const RecurrenceSeq& seq, long m, long j_max, std::optional<Rat> reference) {
  if (m < 2) throw PreconditionError("bound needs m >= 2");
  if (j_max < 1) throw PreconditionError("J scan limit must be positive");
  const SeqProfile profile = validate(seq);
  const RootPower rp = compute_m0(seq, m);
  BoundReport rep;
  rep.m = m;
  rep.m0 = rp.m0;
  rep.j_max = j_max;
  rep.reference = std::move(reference);
  const Rat tail(profile.deg_a0 + 2);
  for (long J = 1; J <= j_max; ++J) {
    const Int L = floor_rat(lbound(profile, m, J));
    Rat c1 = Rat(m) * Rat(L) * Rat(L + 1) * tail / J;
    if (J == 1 || c1 < rep.C1) {
      rep.C1 = c1;
      rep.j_star = J;
      rep.L = L.get_si();
    }
  }
  rep.C1_m0 = rep.C1 * rp.m0 / m;
  const Int L(rep.L);
  Int geometric = 0;
  for (long i = 0; i <= m; ++i) geometric += int_pow(L, static_cast<unsigned long>(i));
  const Int inner = geometric + static_cast<long>(profile.order) - 2;
  rep.Cprime = Rat(inner * inner * profile.deg_a0) / 2;
  rep.C = std::max(rep.C1, rep.Cprime);
  return rep;
}

// ---- candidates ------------------------------------------------------------

CandidateSet candidate_gammas(const RecurrenceSeq& seq, long m, long J, CandidateView view) {
  if (J < 1) throw PreconditionError("J must be positive");
  const SeqProfile profile = validate(seq);
  const RootPower rp = compute_m0(seq, m);
  const std::size_t d = profile.order;
  Rat top(profile.deg_a0, m);
  top.canonicalize();
  top += J;
  const long bmax = floor_rat(top).get_si();

  std::vector<TermIndex> tuples;
  std::vector<long> h(d - 1, 0);
  while (true) {
    for (long s : {1L, 0L}) tuples.push_back(TermIndex{s, h});
    std::size_t j = 0;
    while (j < h.size() && h[j] == bmax) h[j++] = 0;
    if (j == h.size()) break;
    ++h[j];
  }
  std::stable_sort(tuples.begin(), tuples.end(), [](const TermIndex& a, const TermIndex& b) {
    const long sa = std::accumulate(a.h.begin(), a.h.end(), 0L);
    const long sb = std::accumulate(b.h.begin(), b.h.end(), 0L);
    if (sa != sb) return sa < sb;
    if (a.s != b.s) return a.s > b.s;
    return a.h < b.h;
  });

  CandidateSet out;
  out.m0 = rp.m0;
  out.raw_count = static_cast<long>(tuples.size());
  for (const TermIndex& t : tuples) {
    const long hsum = std::accumulate(t.h.begin(), t.h.end(), 0L);
    Constant k = rp.constant.pow(t.s) * Constant(rat_pow(profile.leading[0], -rp.m0 * hsum));
    Poly num = t.s == 1 ? rp.monic : Poly(1);
    for (std::size_t j = 0; j + 1 < d; ++j) {
      if (t.h[j] == 0) continue;
      k *= Constant(rat_pow(profile.leading[j + 1], rp.m0 * t.h[j]));
      num *= profile.monic[j + 1].pow(static_cast<unsigned long>(rp.m0 * t.h[j]));
    }
    const Poly den = profile.monic[0].pow(static_cast<unsigned long>(rp.m0 * hsum));
    CandidateGamma g{t, {}, k, RatFunc(num, den), rp.m0 * hsum};
    if (view == CandidateView::Pruned && !g.monic_part.is_polynomial()) continue;
    auto same = std::find_if(out.gammas.begin(), out.gammas.end(), [&](const CandidateGamma& o) {
      if (view == CandidateView::Pruned) return o.monic_part == g.monic_part;
      return o.monic_part == g.monic_part && o.constant == g.constant;
    });
    if (same != out.gammas.end())
      same->merged.push_back(t);
    else
      out.gammas.push_back(std::move(g));
  }
  return out;
}

// ---- expansion -------------------------------------------------------------

std::vector<std::string> unknown_names(std::size_t l, long m, bool fixed_outer) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= l; ++i) names.push_back("c" + std::to_string(i));
  if (!fixed_outer)
    for (long k = 0; k <= m; ++k) names.push_back("g" + std::to_string(k));
  return names;
}

namespace {

struct Expander {
  const std::vector<CandidateGamma>& gammas;
  long m;
  const std::optional<Poly>& outer;
  std::size_t nvars;
  std::vector<std::vector<RatFunc>> profile_powers;
  std::vector<std::vector<Constant>> constant_powers;
  std::vector<ExpTerm> terms;
  std::map<std::string, std::size_t> index;

  void run() {
    const std::size_t l = gammas.size();
    for (const auto& g : gammas) {
      std::vector<RatFunc> pp{RatFunc(Poly(1))};
      std::vector<Constant> cp{Constant(1)};
      for (long e = 1; e <= m; ++e) {
        pp.push_back(pp.back() * g.monic_part);
        cp.push_back(cp.back() * g.constant);
      }
      profile_powers.push_back(std::move(pp));
      constant_powers.push_back(std::move(cp));
    }
    std::vector<unsigned> k(l, 0);
    for (long r = m; r >= 0; --r) {
      SymPoly g_coeff(nvars);
      if (outer) {
        g_coeff = SymPoly::constant(nvars, outer->coeff(static_cast<std::size_t>(r)));
      } else {
        g_coeff = SymPoly::variable(nvars, l + static_cast<std::size_t>(m - r));
      }
      if (g_coeff.is_zero()) continue;
      recurse(0, static_cast<unsigned>(r), static_cast<unsigned>(r), k, g_coeff, RatFunc(Poly(1)), Constant(1));
    }
  }

  void recurse(std::size_t i, unsigned rem, unsigned r, std::vector<unsigned>& k, const SymPoly& g_coeff,
               const RatFunc& profile, const Constant& constant) {
    const std::size_t l = gammas.size();
    if (i + 1 == l || rem == 0) {
      if (i < l) k[i] = rem;
      for (std::size_t j = i + 1; j < l; ++j) k[j] = 0;
      const RatFunc prof = i < l ? profile * profile_powers[i][rem] : profile;
      const Constant cst = i < l ? constant * constant_powers[i][rem] : constant;
      emit(k, r, g_coeff, prof, cst);
      return;
    }
    for (unsigned v = rem + 1; v-- > 0;) {
      k[i] = v;
      recurse(i + 1, rem - v, r, k, g_coeff, profile * profile_powers[i][v], constant * constant_powers[i][v]);
    }
  }

  void emit(const std::vector<unsigned>& k, unsigned r, const SymPoly& g_coeff, const RatFunc& profile,
            const Constant& constant) {
    Int multinomial = factorial(r);
    SymPoly mono(nvars);
    Exponents e(nvars, 0);
    for (std::size_t i = 0; i < k.size(); ++i) {
      multinomial /= factorial(k[i]);
      e[i] = k[i];
    }
    mono.add_term(e, Rat(multinomial));
    SymPoly coeff = mono * g_coeff;
    auto bases = bases_of(constant);
    const std::string key = profile.str() + "|" + bases_key(bases);
    auto [it, inserted] = index.try_emplace(key, terms.size());
    if (inserted)
      terms.push_back(ExpTerm{std::move(coeff), std::move(bases), profile});
    else
      terms[it->second].coeff += coeff;
  }
};

}  // namespace

std::vector<ExpTerm> expand_g_of_H(const std::vector<CandidateGamma>& gammas, long m,
                                   const std::optional<Poly>& outer) {
  if (gammas.empty()) throw PreconditionError("expansion needs at least one candidate");
  if (m < 1) throw PreconditionError("outer degree must be positive");
  if (outer && outer->degree() != m) throw PreconditionError("fixed outer polynomial must have degree m");
  const std::size_t nvars = gammas.size() + (outer ? 0 : static_cast<std::size_t>(m) + 1);
  Expander ex{gammas, m, outer, nvars, {}, {}, {}, {}};
  ex.run();
  std::vector<ExpTerm> out;
  for (auto& t : ex.terms)
    if (!t.coeff.is_zero()) out.push_back(std::move(t));
  return out;
}

// ---- variety ---------------------------------------------------------------

VarietySystem build_variety(const RecurrenceSeq& seq, long m, std::vector<CandidateGamma> gammas,
                            const std::optional<Poly>& outer) {
  const SeqProfile profile = validate(seq);
  const RootPower rp = compute_m0(seq, m);
  VarietySystem sys;
  sys.m = m;
  sys.m0 = rp.m0;
  sys.outer = outer;
  sys.unknowns = unknown_names(gammas.size(), m, outer.has_value());
  auto terms = expand_g_of_H(gammas, m, outer);
  sys.gammas = std::move(gammas);

  std::vector<std::vector<std::size_t>> by_profile;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    auto it = std::find(sys.profiles.begin(), sys.profiles.end(), terms[t].profile);
    if (it == sys.profiles.end()) {
      sys.profiles.push_back(terms[t].profile);
      by_profile.push_back({t});
    } else {
      by_profile[static_cast<std::size_t>(it - sys.profiles.begin())].push_back(t);
    }
  }

  std::vector<bool> used(sys.profiles.size(), false);
  for (std::size_t i = 0; i < profile.order; ++i) {
    const RatFunc target(profile.monic[i].pow(static_cast<unsigned long>(rp.m0)));
    auto it = std::find(sys.profiles.begin(), sys.profiles.end(), target);
    if (it == sys.profiles.end()) throw NoMatchingError(i + 1);
    const auto p = static_cast<std::size_t>(it - sys.profiles.begin());
    sys.matching.push_back(p);
    used[p] = true;
    VarietyEquation eq;
    eq.root = i + 1;
    eq.profile = target;
    eq.lhs_coeff = seq.coeffs[i];
    if (rat_pow(profile.leading[i], rp.m0) != 1) eq.lhs_bases.push_back(Base{profile.leading[i], rp.m0, 1});
    for (std::size_t t : by_profile[p]) eq.rhs.push_back(terms[t]);
    sys.equations.push_back(std::move(eq));
  }
  for (std::size_t p = 0; p < sys.profiles.size(); ++p) {
    if (used[p]) continue;
    VarietyEquation eq;
    eq.profile = sys.profiles[p];
    eq.lhs_coeff = 0;
    for (std::size_t t : by_profile[p]) eq.rhs.push_back(terms[t]);
    sys.equations.push_back(std::move(eq));
  }
  return sys;
}

VarietySystem build_variety(const RecurrenceSeq& seq, long m, long J, CandidateView view,
                            const std::optional<Poly>& outer) {
  return build_variety(seq, m, candidate_gammas(seq, m, J, view).gammas, outer);
}

bool check_point(const VarietySystem& system, const std::vector<Constant>& point, long ell) {
  if (point.size() != system.unknowns.size()) throw PreconditionError("point length does not match the unknowns");
  for (const auto& eq : system.equations) {
    ConstantSum lhs(Constant(eq.lhs_coeff) * base_value(eq.lhs_bases, ell));
    ConstantSum rhs;
    for (const auto& term : eq.rhs) {
      ConstantSum v = term.coeff.evaluate(point);
      v *= base_value(term.bases, ell);
      rhs += v;
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::vector<SymPoly> specialize_variety(const VarietySystem& system, long ell) {
  if (ell < 1) throw PreconditionError("specialization needs ell >= 1");
  const std::size_t nvars = system.unknowns.size();
  std::vector<SymPoly> out;
  for (const auto& eq : system.equations) {
    SymPoly p(nvars);
    for (const auto& term : eq.rhs) {
      const Constant b = base_value(term.bases, ell);
      if (!b.is_rational()) throw PreconditionError("specialized base " + b.str() + " is irrational");
      p += term.coeff * b.to_rat();
    }
    const Constant lhs = Constant(eq.lhs_coeff) * base_value(eq.lhs_bases, ell);
    p -= SymPoly::constant(nvars, lhs.to_rat());
    out.push_back(p.primitive());
  }
  return out;
}

// ---- special cases ---------------------------------------------------------

std::optional<ShapePrediction> predict_small_alpha_shape(const RecurrenceSeq& seq, long m, long n) {
  const SeqProfile profile = validate(seq);
  if (profile.degrees[0] > m) return std::nullopt;
  Rat e(n, m);
  e.canonicalize();
  return ShapePrediction{e, {Poly(1), seq.roots[0]}};
}

std::optional<CommonBase> common_base_reduction(const RecurrenceSeq& seq) {
  const SeqProfile profile = validate(seq);
  long g = 0;
  for (long deg : profile.degrees) g = std::gcd(g, deg);
  const long d1 = profile.degrees[0];
  for (long e = 1; e <= g; ++e) {
    if (g % e != 0) continue;
    const auto k = static_cast<unsigned>(d1 / e);
    auto root = exact_root(seq.roots[0], k);
    if (!root) continue;
    std::vector<Poly> choices{*root};
    if (k % 2 == 0) choices.push_back(-*root);
    for (const Poly& beta : choices) {
      std::vector<Rat> f;
      bool ok = true;
      for (std::size_t i = 0; i < seq.roots.size() && ok; ++i) {
        const long mi = profile.degrees[i] / e;
        ok = beta.pow(static_cast<unsigned long>(mi)) == seq.roots[i];
        if (ok) {
          if (f.size() <= static_cast<std::size_t>(mi)) f.resize(static_cast<std::size_t>(mi) + 1, Rat(0));
          f[static_cast<std::size_t>(mi)] += seq.coeffs[i];
        }
      }
      if (ok) return CommonBase{beta, Poly(std::move(f))};
    }
  }
  return std::nullopt;
}

std::optional<DecompPair> mth_power_test(const RecurrenceSeq& seq, long m, long n) {
  validate(seq);
  if (m < 1 || n < 0) throw PreconditionError("m must be positive and n nonnegative");
  const Poly gn = eval_gn(seq, static_cast<unsigned long>(n));
  if (gn.degree() < 1 || gn.degree() % m != 0) return std::nullopt;
  auto root = exact_root(gn.monic(), static_cast<unsigned>(m));
  if (!root) return std::nullopt;
  const Rat shift = root->constant_term();
  Poly g = Poly(std::vector<Rat>{shift, 1}).pow(static_cast<unsigned long>(m)) * gn.lc();
  return DecompPair{std::move(g), *root - Poly(shift)};
}

}  // namespace recomp
