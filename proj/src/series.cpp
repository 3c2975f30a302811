#include "recomp/series.hpp"

namespace recomp {

namespace {

std::vector<Rat> mul_trunc(const std::vector<Rat>& a, const std::vector<Rat>& b, std::size_t n) {
  std::vector<Rat> out(n, Rat(0));
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Coefficients 0..n-1 of sum_i gh_i tau^(m-i) W^i.
std::vector<Rat> inverse_equation(const std::vector<Rat>& gh, const std::vector<Rat>& w, std::size_t n) {
  const std::size_t m = gh.size() - 1;
  std::vector<Rat> total(n, Rat(0));
  std::vector<Rat> power{Rat(1)};
  for (std::size_t i = 0; i <= m; ++i) {
    if (i > 0) power = mul_trunc(power, w, n);
    const std::size_t shift = m - i;
    for (std::size_t k = 0; k + shift < n && k < power.size(); ++k) total[k + shift] += gh[i] * power[k];
  }
  return total;
}

void enumerate_h(const std::vector<long>& weights, std::size_t j, long m, long budget, std::vector<long>& h,
                 long s, std::vector<TermIndex>& out) {
  if (j == weights.size()) {
    out.push_back(TermIndex{s, h});
    return;
  }
  for (long v = 0; m * v * weights[j] < budget; ++v) {
    h[j] = v;
    enumerate_h(weights, j + 1, m, budget - m * v * weights[j], h, s, out);
  }
  h[j] = 0;
}

}  // namespace

PuiseuxSeries puiseux_inverse(const Poly& g, long order) {
  const long m = g.degree();
  if (m < 1) throw PreconditionError("Puiseux inverse needs a nonconstant polynomial");
  if (order < -1) throw PreconditionError("truncation order must be at least -1");
  const Rat lc = g.lc();
  const Constant c = Constant::root(lc, static_cast<unsigned>(m));
  std::vector<Rat> gh(static_cast<std::size_t>(m) + 1);
  for (long i = 0; i <= m; ++i) gh[static_cast<std::size_t>(i)] = g.coeff(static_cast<std::size_t>(i)) / lc;

  // z = tau^(-1) W(tau) with tau = t * lc^(1/m); W has rational coefficients and W_0 = 1.
  const auto n = static_cast<std::size_t>(order + 2);
  std::vector<Rat> w{Rat(1)};
  for (std::size_t j = 1; j < n; ++j) {
    w.emplace_back(0);
    const auto residual = inverse_equation(gh, w, j + 1);
    w[j] = -residual[j] / m;
  }

  std::vector<Constant> u;
  u.reserve(n);
  for (std::size_t j = 0; j < n; ++j) u.push_back(Constant(w[j]) * c.pow(static_cast<long>(j) - 1));
  return PuiseuxSeries{m, ConstSeries(-1, std::move(u), order + 1)};
}

ConstSeries evaluate(const Poly& g, const PuiseuxSeries& z) {
  ConstSeries acc(0, {}, ConstSeries::kExact);
  const auto& c = g.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z.series + ConstSeries::constant(Constant(*it));
  return acc;
}

RatSeries root_at_infinity(const Poly& f, long m, long terms) {
  const long deg = f.degree();
  if (deg < 0 || m < 1 || deg % m != 0) throw PreconditionError("root at infinity needs m | deg f");
  const Constant c = Constant::root(f.lc(), static_cast<unsigned>(m));
  if (!c.is_rational()) throw PreconditionError("leading coefficient has no rational root");
  std::vector<Rat> a(static_cast<std::size_t>(deg) + 1);
  for (long j = 0; j <= deg; ++j) a[static_cast<std::size_t>(j)] = f.coeff(static_cast<std::size_t>(deg - j)) / f.lc();
  auto b = power_series_pow(a, Rat(1, m), static_cast<std::size_t>(terms));
  for (auto& q : b) q *= c.to_rat();
  const long start = -deg / m;
  return RatSeries(start, std::move(b), start + terms);
}

RatSeries substitute(const PuiseuxSeries& z, const Poly& f, long terms) {
  const RatSeries root = root_at_infinity(f, z.branch, terms);
  const RatSeries inv = root.inverse();
  const long r = f.degree() / z.branch;
  const long last = z.series.precision() - 1;
  RatSeries sum = RatSeries(0, {}, RatSeries::kExact);
  RatSeries power = RatSeries::constant(Rat(1));
  for (long k = -1; k <= last; ++k) {
    const Rat u = z.series.coeff(k).to_rat();
    if (k == -1)
      sum = sum + u * root;
    else {
      if (k > 0) power = power * inv;
      sum = sum + u * power;
    }
  }
  return sum.truncated((last + 1) * r);
}

RatSeries laurent_of(const Poly& f) {
  std::vector<Rat> c(f.coeffs().rbegin(), f.coeffs().rend());
  return RatSeries(-f.degree(), std::move(c), RatSeries::kExact);
}

long term_order(const SeqProfile& profile, long m, long n, const TermIndex& t) {
  const long d1 = profile.degrees.at(0);
  long bracket = -t.s * d1;
  for (std::size_t j = 0; j < t.h.size(); ++j) bracket += m * t.h[j] * (d1 - profile.degrees.at(j + 1));
  return n * bracket;
}

TermCatalogue enumerate_terms(const SeqProfile& profile, long m, long J) {
  if (J < 1 || m < 1) throw PreconditionError("J and m must be positive");
  const long d1 = profile.degrees.at(0);
  std::vector<long> weights;
  for (std::size_t j = 1; j < profile.degrees.size(); ++j) weights.push_back(d1 - profile.degrees[j]);
  TermCatalogue cat;
  std::vector<long> h(weights.size(), 0);
  for (long s = 1; -s * d1 < J * m; --s) enumerate_h(weights, 0, m, J * m + s * d1, h, s, cat.terms);
  cat.count = static_cast<long>(cat.terms.size());
  return cat;
}

Rat lbound(const SeqProfile& profile, long m, long J) {
  if (profile.deg_a0 <= 0) throw PreconditionError("lbound needs deg A_0 >= 1");
  const long d = static_cast<long>(profile.order);
  Rat base(profile.deg_a0, m);
  base.canonicalize();
  base += J;
  Rat tail(m * d, profile.deg_a0);
  tail.canonicalize();
  return rat_pow(base, d - 1) + rat_pow(Rat(J), d) * tail;
}

}  // namespace recomp
