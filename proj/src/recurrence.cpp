#include "recomp/recurrence.hpp"

#include <numeric>

#include "recomp/error.hpp"

namespace recomp {

namespace {

[[noreturn]] void fail(ValidationKind kind, std::vector<std::size_t> idx, const std::string& what) {
  throw ValidationError(kind, std::move(idx), std::string(to_string(kind)) + ": " + what);
}

bool proportional(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return false;
  return a * b.lc() == b * a.lc();
}

}  // namespace

SeqProfile validate(const RecurrenceSeq& seq) {
  const std::size_t d = seq.roots.size();
  if (d < 2) fail(ValidationKind::OrderTooSmall, {}, "order " + std::to_string(d) + " is below 2");
  if (seq.coeffs.size() != d)
    fail(ValidationKind::LengthMismatch, {},
         std::to_string(seq.coeffs.size()) + " coefficients for " + std::to_string(d) + " roots");
  for (std::size_t i = 0; i < d; ++i)
    if (sgn(seq.coeffs[i]) == 0) fail(ValidationKind::ZeroCoefficient, {i + 1}, "a_" + std::to_string(i + 1) + " = 0");
  for (std::size_t i = 0; i < d; ++i)
    if (seq.roots[i].is_zero()) fail(ValidationKind::ZeroRoot, {i + 1}, "alpha_" + std::to_string(i + 1) + " = 0");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (proportional(seq.roots[i], seq.roots[j]))
        fail(ValidationKind::DegeneratePair, {i + 1, j + 1},
             "alpha_" + std::to_string(i + 1) + "/alpha_" + std::to_string(j + 1) + " is constant");
  for (std::size_t i = 1; i < d; ++i)
    if (seq.roots[i].degree() >= seq.roots[0].degree())
      fail(ValidationKind::DominantRootViolation, {1, i + 1},
           "deg alpha_1 must exceed deg alpha_" + std::to_string(i + 1));

  SeqProfile p;
  p.order = d;
  for (const Poly& r : seq.roots) {
    p.degrees.push_back(r.degree());
    p.deg_a0 += r.degree();
    p.leading.push_back(r.lc());
    p.monic.push_back(r.monic());
  }
  return p;
}

Poly eval_gn(const RecurrenceSeq& seq, unsigned long n) {
  Poly out;
  for (std::size_t i = 0; i < seq.roots.size(); ++i) out += seq.roots[i].pow(n) * seq.coeffs[i];
  return out;
}

std::vector<Poly> char_poly_coeffs(const RecurrenceSeq& seq) {
  const std::size_t d = seq.roots.size();
  // e[k] = k-th elementary symmetric polynomial of the roots.
  std::vector<Poly> e(d + 1);
  e[0] = Poly(1);
  for (const Poly& r : seq.roots)
    for (std::size_t k = d; k >= 1; --k) e[k] += e[k - 1] * r;
  // prod (T - alpha_i) = sum_k (-1)^k e_k T^(d-k), so A_j = -(-1)^(d-j) e_(d-j).
  std::vector<Poly> a(d);
  for (std::size_t j = 0; j < d; ++j) a[j] = ((d - j) % 2 == 0) ? -e[d - j] : e[d - j];
  return a;
}

RootPower compute_m0(const RecurrenceSeq& seq, long m) {
  if (m < 1) throw PreconditionError("m must be positive");
  const Poly& alpha1 = seq.roots.at(0);
  const auto parts = squarefree_decompose(alpha1);
  long d = m;
  for (const auto& [factor, mult] : parts) d = std::gcd(d, long(mult));
  RootPower out;
  out.m0 = m / d;
  out.constant = Constant::root(alpha1.lc(), static_cast<unsigned>(d));
  out.monic = Poly(1);
  for (const auto& [factor, mult] : parts) out.monic *= factor.pow(mult / static_cast<unsigned long>(d));
  return out;
}

}  // namespace recomp
