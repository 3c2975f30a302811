#include <doctest.h>

#include "recomp/error.hpp"
#include "recomp/recurrence.hpp"
#include "support/oracles.hpp"

using namespace recomp;

namespace {

const Poly X = Poly::x();

RecurrenceSeq cube_family() {
  return {{Rat(1), Rat(3), Rat(3), Rat(1)}, {X.pow(3), Rat(2) * X.pow(2), Rat(4) * X, Poly(8)}, "cube family"};
}

ValidationKind kind_of(const RecurrenceSeq& s) {
  try {
    validate(s);
  } catch (const ValidationError& e) {
    return e.kind();
  }
  FAIL("expected a validation error");
  return ValidationKind::OrderTooSmall;
}

// Random sequence with a strictly dominant first root; may still be degenerate.
RecurrenceSeq random_seq(testing::Rng& rng) {
  RecurrenceSeq s;
  const long d = rng.uniform(2, 4);
  const long top = rng.uniform(2, 4);
  s.roots.push_back(rng.poly(top, 4));
  for (long i = 1; i < d; ++i) s.roots.push_back(rng.poly(rng.uniform(0, top - 1), 4));
  for (long i = 0; i < d; ++i) s.coeffs.push_back(rng.nonzero_rat(4, 2));
  return s;
}

}  // namespace

TEST_CASE("validate the cube family") {
  const SeqProfile p = validate(cube_family());
  CHECK(p.order == 4);
  CHECK(p.deg_a0 == 6);
  CHECK(p.degrees == std::vector<long>{3, 2, 1, 0});
  CHECK(p.leading == std::vector<Rat>{Rat(1), Rat(2), Rat(4), Rat(8)});
  CHECK(p.monic == std::vector<Poly>{X.pow(3), X.pow(2), X, Poly(1)});
}

TEST_CASE("validation diagnostics") {
  RecurrenceSeq degen{{Rat(1), Rat(1)}, {X, Rat(2) * X}, ""};
  CHECK(kind_of(degen) == ValidationKind::DegeneratePair);
  try {
    validate(degen);
  } catch (const ValidationError& e) {
    CHECK(e.indices() == std::vector<std::size_t>{1, 2});
  }
  CHECK(kind_of({{Rat(1), Rat(1)}, {X.pow(2), X.pow(3)}, ""}) == ValidationKind::DominantRootViolation);
  CHECK(kind_of({{Rat(1), Rat(1)}, {X.pow(2), X.pow(2) + 1}, ""}) == ValidationKind::DominantRootViolation);
  CHECK(kind_of({{Rat(1)}, {X}, ""}) == ValidationKind::OrderTooSmall);
  CHECK(kind_of({{Rat(1), Rat(0)}, {X, Poly(1)}, ""}) == ValidationKind::ZeroCoefficient);
  CHECK(kind_of({{Rat(1)}, {X, Poly(1)}, ""}) == ValidationKind::LengthMismatch);
  CHECK(kind_of({{Rat(1), Rat(1)}, {X, Poly()}, ""}) == ValidationKind::ZeroRoot);
  CHECK(std::string(to_string(ValidationKind::DegeneratePair)) == "DegeneratePair");
}

TEST_CASE("eval_gn examples") {
  const auto s = cube_family();
  CHECK(eval_gn(s, 2) == X.pow(6) + Rat(12) * X.pow(4) + Rat(48) * X.pow(2) + 64);
  CHECK(eval_gn(s, 5) == (X.pow(5) + 32).pow(3));
  CHECK(eval_gn(s, 0) == Poly(8));
  RecurrenceSeq t{{Rat(2), Rat(-1, 2)}, {X + 1, Poly(3)}, ""};
  CHECK(eval_gn(t, 0) == Poly(Rat(3, 2)));
}

TEST_CASE("characteristic polynomial examples") {
  const auto a = char_poly_coeffs({{Rat(1), Rat(1)}, {X, Poly(1)}, ""});
  CHECK(a[1] == X + 1);
  CHECK(a[0] == -X);
  const auto b = char_poly_coeffs({{Rat(1), Rat(1)}, {X, -X}, ""});
  CHECK(b[1].is_zero());
  CHECK(b[0] == X.pow(2));
  CHECK(char_poly_coeffs(cube_family())[0].degree() == 6);
}

TEST_CASE("compute_m0 examples") {
  const RootPower r = compute_m0(cube_family(), 3);
  CHECK(r.m0 == 1);
  CHECK(r.constant == Constant(1));
  CHECK(r.monic == X);
  CHECK(compute_m0({{Rat(1), Rat(1)}, {X, Poly(1)}, ""}, 2).m0 == 2);
  const RootPower q = compute_m0({{Rat(1), Rat(1)}, {X.pow(2) * (X - 1).pow(2), Poly(1)}, ""}, 2);
  CHECK(q.m0 == 1);
  CHECK(q.monic == X * (X - 1));
  // 2 x^4 with m = 4: m0 = 1 and the constant is 2^(1/4)
  const RootPower w = compute_m0({{Rat(1), Rat(1)}, {Rat(2) * X.pow(4), Poly(1)}, ""}, 4);
  CHECK(w.m0 == 1);
  CHECK(w.constant == Constant::root(Rat(2), 4));
  CHECK(w.constant.pow(4) * Constant(1) == Constant(2));
  CHECK_THROWS_AS(compute_m0({{Rat(1), Rat(1)}, {Rat(-1) * X.pow(2), Poly(1)}, ""}, 2), PreconditionError);
}

TEST_CASE("property: eval_gn satisfies its recurrence and has the dominant degree") {
  testing::Rng rng(31);
  int tested = 0;
  while (tested < 25) {
    const RecurrenceSeq s = random_seq(rng);
    try {
      validate(s);
    } catch (const ValidationError&) {
      continue;
    }
    ++tested;
    const auto A = char_poly_coeffs(s);
    const std::size_t d = s.order();
    std::vector<Poly> G;
    for (unsigned long n = 0; n <= 20 + d; ++n) G.push_back(eval_gn(s, n));
    for (std::size_t n = 0; n + d < G.size(); ++n) {
      Poly rhs;
      for (std::size_t j = 0; j < d; ++j) rhs += A[j] * G[n + j];
      CHECK(G[n + d] == rhs);
    }
    for (std::size_t n = 1; n < G.size(); ++n)
      CHECK(G[n].degree() == static_cast<long>(n) * s.roots[0].degree());
  }
}

TEST_CASE("property: compute_m0 is minimal and its power recovers alpha_1") {
  testing::Rng rng(32);
  for (int i = 0; i < 40; ++i) {
    // alpha_1 = c * prod of powers of distinct linear factors
    Poly a(Rat(rng.uniform(1, 5)));
    const long t = rng.uniform(1, 3);
    for (long k = 0; k < t; ++k) a = a * (X - Rat(k * 3 + 1)).pow(static_cast<unsigned long>(rng.uniform(1, 6)));
    const RecurrenceSeq s{{Rat(1), Rat(1)}, {a, Poly(1)}, ""};
    for (long m = 2; m <= 6; ++m) {
      const RootPower r = compute_m0(s, m);
      CHECK(m % r.m0 == 0);
      // brute: smallest m' with every multiplicity * m' divisible by m
      long brute = 1;
      for (; brute <= m; ++brute) {
        bool ok = true;
        for (const auto& [f, e] : squarefree_decompose(a)) ok = ok && (static_cast<long>(e) * brute) % m == 0;
        if (ok) break;
      }
      CHECK(r.m0 == brute);
      // (constant * monic)^(m/m0) == alpha_1
      const long k = m / r.m0;
      const Constant ck = r.constant.pow(k);
      REQUIRE(ck.is_rational());
      CHECK(r.monic.pow(static_cast<unsigned long>(k)) * ck.to_rat() == a);
    }
  }
}
