#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "kleinian/sympoly.hpp"

using namespace kleinian;

namespace {
std::mt19937_64 rng(555);

BivarPoly random_poly(int max_deg = 3, int max_coeff = 9) {
  std::uniform_int_distribution<int> deg(0, max_deg), coeff(-max_coeff, max_coeff);
  BivarPoly p;
  for (int t = 0; t < 4; ++t)
    p += BivarPoly(deg(rng), deg(rng), BigInt(coeff(rng)));
  return p;
}

Cplx random_complex() {
  std::uniform_real_distribution<double> re(-1.5, 1.5);
  return {re(rng), re(rng)};
}

const BivarPoly G = BivarPoly::gamma();
const BivarPoly B = BivarPoly::beta();
BivarPoly C(long long v) { return BivarPoly::constant(v); }
} // namespace

TEST(PolyArith, Basics) {
  EXPECT_TRUE((G - G).is_zero());
  EXPECT_EQ((G - B) * (G - B), G * G - BigInt(2) * G * B + B * B);
  EXPECT_EQ((B + C(4)) * G, G * B + BigInt(4) * G);
  EXPECT_EQ(-(G - B), B - G);
}

TEST(PolyArith, RingLaws) {
  for (int k = 0; k < 40; ++k) {
    BivarPoly p = random_poly(), q = random_poly(), r = random_poly();
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_TRUE((p - p).is_zero());
  }
}

TEST(PolyEval, Cases) {
  BivarPoly p = G * (B + C(4));
  EXPECT_NEAR(std::abs(p.eval(1.0, 0.0) - 4.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(BivarPoly::zero().eval(random_complex(), random_complex())), 0.0, 0.0);

  // gamma (gamma - beta - 1)^2 at the (2,3,7) catalog values
  BivarPoly q = G * (G - B - C(1)) * (G - B - C(1));
  double g237 = 0.80193774;
  Cplx got = q.eval(g237, -3.0);
  EXPECT_NEAR(got.real(), g237 * (g237 + 2.0) * (g237 + 2.0), 1e-9);
}

TEST(PolyEval, Homomorphism) {
  for (int k = 0; k < 40; ++k) {
    BivarPoly p = random_poly(), q = random_poly();
    Cplx g = random_complex(), b = random_complex();
    Cplx lhs = (p * q).eval(g, b);
    Cplx rhs = p.eval(g, b) * q.eval(g, b);
    EXPECT_LE(std::abs(lhs - rhs), 1e-9 * std::max(1.0, std::abs(rhs)));
  }
}

TEST(PolySubstituteBeta, Cases) {
  BivarPoly repl = G - B - C(4);
  EXPECT_EQ((B * (B + C(4))).substitute_beta(repl), repl * (G - B));
  EXPECT_EQ(B.substitute_beta(B), B);
  BivarPoly lhs = ((B + C(3)) * (B + C(3))).substitute_beta(repl);
  EXPECT_EQ(lhs, (G - B - C(1)) * (G - B - C(1)));
}

TEST(PolySubstituteBeta, CommutesWithEval) {
  for (int k = 0; k < 40; ++k) {
    BivarPoly p = random_poly(), r = random_poly(2, 3);
    Cplx g = random_complex(), b = random_complex();
    Cplx lhs = p.substitute_beta(r).eval(g, b);
    Cplx rhs = p.eval(g, r.eval(g, b));
    EXPECT_LE(std::abs(lhs - rhs), 1e-9 * std::max(1.0, std::abs(rhs)));
  }
}

TEST(GenSequencePoly, PrintedForms) {
  EXPECT_EQ(gen_sequence_poly(SubgroupFamily::PowerOfF, 4),
            G * (B + C(4)) * (B + C(2)) * (B + C(2)));
  BivarPoly q = G * G + C(4) * G + C(2);
  EXPECT_EQ(gen_sequence_poly(SubgroupFamily::CommutatorPower, 4),
            G * (G - B) * (G + C(2)) * (G + C(2)) * q * q);
  for (auto family :
       {SubgroupFamily::PowerOfF, SubgroupFamily::ConjugatePower,
        SubgroupFamily::ProductPower, SubgroupFamily::CommutatorPower})
    EXPECT_TRUE(gen_sequence_poly(family, 0).is_zero());
}

TEST(GenSequencePoly, DegreeCap) {
  EXPECT_NO_THROW(gen_sequence_poly(SubgroupFamily::PowerOfF, 32));
  EXPECT_THROW(gen_sequence_poly(SubgroupFamily::PowerOfF, 33), DegreeCap);
}

TEST(GenSequencePoly, ExactRatioLaw) {
  // gamma_n * beta = beta_n * gamma as an exact polynomial identity
  for (std::uint32_t n = 0; n <= 16; ++n)
    EXPECT_EQ(poly_a_seq(B, G, n) * B, poly_a_seq(B, B, n) * G) << "n=" << n;
}

TEST(GenSequencePoly, ExactChebyshevEquivalence) {
  // 2 T_n(1 + beta/2) - 2 = a_seq(beta, beta, n) exactly: S_{n+1} = (2+beta) S_n - S_{n-1}
  BivarPoly s_prev = C(2), s_cur = B + C(2);
  for (std::uint32_t n = 1; n <= 32; ++n) {
    EXPECT_EQ(s_cur - C(2), poly_a_seq(B, B, n)) << "n=" << n;
    BivarPoly s_next = (B + C(2)) * s_cur - s_prev;
    s_prev = s_cur;
    s_cur = s_next;
  }
}

TEST(GenSequencePoly, MatchesNumericRecursions) {
  for (std::uint32_t n : {1u, 3u, 7u, 12u}) {
    BivarPoly p = gen_sequence_poly(SubgroupFamily::ProductPower, n);
    for (int k = 0; k < 10; ++k) {
      Cplx g = random_complex(), b = random_complex();
      Cplx direct = a_seq(g - b - 4.0, g, n);
      EXPECT_LE(std::abs(p.eval(g, b) - direct), 1e-9 * std::max(1.0, std::abs(direct)));
    }
  }
}

TEST(VerifyPrintedIdentities, AllPass) {
  auto checks = verify_printed_identities();
  EXPECT_EQ(checks.size(), 31u); // 9 Chebyshev + 6 powers + 11 tilde + 5 commutator
  for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.identity;
  EXPECT_TRUE(all_identities_pass(checks));
}

TEST(VerifyPrintedIdentities, NegativeControl) {
  auto checks = verify_printed_identities(/*inject_fault=*/true);
  EXPECT_FALSE(all_identities_pass(checks));
  bool t4_failed = false;
  for (const auto& c : checks)
    if (c.identity == "T_4" && !c.pass) t4_failed = true;
  EXPECT_TRUE(t4_failed);
}

TEST(PolyString, Readable) {
  EXPECT_EQ(BivarPoly::zero().str(), "0");
  EXPECT_EQ((G * B + C(4) * G).str(), "4*g + g*b");
}
