#include "recomp/oracle.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <thread>

#include "recomp/error.hpp"

namespace recomp {

std::vector<DecompPair> oracle_decompose(const Poly& f, long m) {
  if (m < 2 || f.degree() < 2 || f.degree() % m != 0) return {};
  const long r = f.degree() / m;
  // Coefficients y^-r .. y^0 of (f / lc f)^(1/m) in y = 1/x.
  const RatSeries root = root_at_infinity(f.monic(), m, r + 1);
  std::vector<Rat> hc(static_cast<std::size_t>(r) + 1, Rat(0));
  for (long i = 1; i <= r; ++i) hc[static_cast<std::size_t>(i)] = root.coeff(-i);
  const Poly h(std::move(hc));
  std::vector<Rat> gc;
  for (const Poly& digit : h_adic_expand(f, h)) {
    if (!digit.is_constant()) return {};
    gc.push_back(digit.constant_term());
  }
  return {DecompPair{Poly(std::move(gc)), h}};
}

CyclicAmbiguity cyclic_ambiguity(const Poly& g) {
  const Poly gd = depress_outer(g, Poly::x()).first;
  CyclicAmbiguity out;
  long k = 0;
  for (long i = 1; i <= gd.degree(); ++i)
    if (sgn(gd.coeff(static_cast<std::size_t>(i))) != 0) k = std::gcd(k, i);
  out.k = std::max(1L, k);
  out.rational_units = out.k % 2 == 0 ? 2 : 1;
  out.complex_units = out.k - out.rational_units;
  return out;
}

const char* to_string(FitStatus s) noexcept {
  switch (s) {
    case FitStatus::Fitted: return "fitted";
    case FitStatus::OutsideSpan: return "outside_span";
    case FitStatus::IndexMismatch: return "index_mismatch";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------

VerifyContext::VerifyContext(RecurrenceSeq seq, long m, long J, long j_max)
    : seq_(std::move(seq)), m_(m), J_(J) {
  bound_ = bound_C(seq_, m_, j_max);
  candidates_ = candidate_gammas(seq_, m_, J_, CandidateView::Full);
  for (std::size_t i = 0; i < candidates_.gammas.size(); ++i) {
    const auto& p = candidates_.gammas[i].monic_part;
    const bool seen = std::any_of(reps_.begin(), reps_.end(),
                                  [&](std::size_t j) { return candidates_.gammas[j].monic_part == p; });
    if (!seen) reps_.push_back(i);
  }
}

namespace {

struct Solution {
  std::vector<Rat> x;
  bool unique = false;
};

// Least-effort exact solve of the augmented system; free variables set to 0.
std::optional<Solution> solve(std::vector<std::vector<Rat>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rat inv = Rat(1) / a[r][c];
    for (std::size_t k = c; k <= cols; ++k) a[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const Rat f = a[i][c];
      for (std::size_t k = c; k <= cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (sgn(a[i][cols]) != 0) return std::nullopt;
  Solution s;
  s.x.assign(cols, Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) s.x[pivots[i]] = a[i][cols];
  s.unique = pivots.size() == cols;
  return s;
}

struct ProfileFit {
  std::vector<Rat> coeffs;  // per column
  bool unique = false;
};

// Coefficients w with target = sum_j w_j columns_j^ell, or nullopt.
std::optional<ProfileFit> fit_profiles(const std::vector<RatFunc>& columns, const Poly& target, long ell) {
  const std::size_t cols = columns.size();
  // Degree bound for the identity cleared by (lcm of denominators)^ell.
  Poly den_lcm(1);
  long top = target.degree();
  for (const auto& c : columns) {
    den_lcm = exact_div(den_lcm * c.den(), gcd(den_lcm, c.den()));
    top = std::max(top, (c.num().degree() - c.den().degree()) * ell);
  }
  const long full_points = top + den_lcm.degree() * ell + 1;

  auto sampled = [&](long points) -> std::optional<ProfileFit> {
    std::vector<std::vector<Rat>> rows;
    for (long step = 0; static_cast<long>(rows.size()) < points; ++step) {
      const Rat t((step % 2 == 0) ? step / 2 : -(step + 1) / 2);
      std::vector<Rat> row;
      bool pole = false;
      for (const auto& c : columns) {
        const Rat den = c.den()(t);
        if (sgn(den) == 0) {
          pole = true;
          break;
        }
        row.push_back(rat_pow(c.num()(t) / den, ell));
      }
      if (pole) continue;
      row.push_back(target(t));
      rows.push_back(std::move(row));
    }
    auto sol = solve(std::move(rows), cols);
    if (!sol) return std::nullopt;
    return ProfileFit{std::move(sol->x), sol->unique};
  };

  auto verified = [&](const ProfileFit& fit) {
    RatFunc sum;
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(fit.coeffs[j]) != 0) sum = sum + RatFunc(Poly(fit.coeffs[j])) * columns[j].pow(ell);
    return sum == RatFunc(target);
  };

  const long sample_points = static_cast<long>(cols) + 4;
  auto quick = sampled(sample_points);
  if (!quick) return std::nullopt;
  // A unique sampled solution that verifies is the unique identity solution.
  if (quick->unique && verified(*quick)) return quick;
  // Enough points to pin the cleared identity: sampled and exact solutions coincide.
  auto full = sampled(std::max(full_points, sample_points));
  if (!full || !verified(*full)) return std::nullopt;
  return full;
}

}  // namespace

VerifyReport verify_structure(const VerifyContext& ctx, long n) {
  if (n < 1) throw PreconditionError("n must be positive");
  VerifyReport rep;
  rep.n = n;
  rep.m = ctx.m();
  rep.m0 = ctx.candidates().m0;
  rep.within_bound = Rat(n) <= ctx.bound().C;
  if (n % rep.m0 == 0) rep.ell = n / rep.m0;

  const Poly gn = eval_gn(ctx.seq(), static_cast<unsigned long>(n));
  const auto& gammas = ctx.candidates().gammas;
  for (const DecompPair& pair : oracle_decompose(gn, ctx.m())) {
    DecompositionCheck chk;
    chk.pair = pair;
    auto [gd, hd] = depress_outer(pair.g, pair.h);
    chk.depressed = DecompPair{gd, hd};
    chk.ambiguity = cyclic_ambiguity(pair.g);
    if (!rep.ell) {
      chk.status = FitStatus::IndexMismatch;
      rep.decompositions.push_back(std::move(chk));
      continue;
    }
    const long ell = *rep.ell;
    std::vector<RatFunc> columns;
    for (std::size_t i : ctx.representatives()) columns.push_back(gammas[i].monic_part);
    auto fit = fit_profiles(columns, hd, ell);
    if (!fit) {
      chk.status = FitStatus::OutsideSpan;
      rep.decompositions.push_back(std::move(chk));
      continue;
    }
    chk.status = FitStatus::Fitted;
    chk.unique = fit->unique;
    std::vector<CandidateGamma> support;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (sgn(fit->coeffs[j]) == 0) continue;
      const std::size_t idx = ctx.representatives()[j];
      chk.support.push_back(idx);
      chk.coefficients.push_back(Constant(fit->coeffs[j]) / gammas[idx].constant.pow(ell));
      support.push_back(gammas[idx]);
    }
    try {
      const VarietySystem sys = build_variety(ctx.seq(), ctx.m(), support);
      std::vector<Constant> point = chk.coefficients;
      for (long k = 0; k <= ctx.m(); ++k) point.emplace_back(gd.coeff(static_cast<std::size_t>(ctx.m() - k)));
      chk.variety_check = check_point(sys, point, ell);
    } catch (const NoMatchingError&) {
      chk.variety_check.reset();
    }
    rep.decompositions.push_back(std::move(chk));
  }
  rep.structural_miss = !rep.within_bound &&
                        std::any_of(rep.decompositions.begin(), rep.decompositions.end(),
                                    [](const DecompositionCheck& c) { return c.status != FitStatus::Fitted; });
  return rep;
}

VerifyReport verify_structure(const RecurrenceSeq& seq, long m, long n, long J) {
  return verify_structure(VerifyContext(seq, m, J), n);
}

std::vector<VerifyReport> verify_range(const VerifyContext& ctx, long from, long to) {
  std::vector<VerifyReport> out;
  if (to < from) return out;
  const long workers = std::max(1L, static_cast<long>(std::thread::hardware_concurrency()));
  for (long base = from; base <= to; base += workers) {
    std::vector<std::future<VerifyReport>> batch;
    for (long n = base; n <= to && n < base + workers; ++n)
      batch.push_back(std::async(std::launch::async, [&ctx, n] { return verify_structure(ctx, n); }));
    for (auto& f : batch) out.push_back(f.get());
  }
  return out;
}

}  // namespace recomp
