#include <gtest/gtest.h>

#include <random>

#include "kleinian/mobius.hpp"

using namespace kleinian;

namespace {

Matrix2 parabolic_upper() { return {1.0, 1.0, 0.0, 1.0}; }
Matrix2 parabolic_lower() { return {1.0, 0.0, 1.0, 1.0}; }

std::mt19937_64 rng(12345);

Cplx random_complex(double lo = 0.2, double hi = 2.0) {
  std::uniform_real_distribution<double> mod(lo, hi), arg(-3.14159, 3.14159);
  return std::polar(mod(rng), arg(rng));
}

// Random unimodular matrix via normalize_det of a generic one.
Matrix2 random_unimodular() {
  while (true) {
    Matrix2 m{random_complex(), random_complex(), random_complex(), random_complex()};
    if (std::abs(m.det()) > 0.1) return normalize_det(m);
  }
}

} // namespace

TEST(MatMul, IdentityCases) {
  Matrix2 id = Matrix2::identity();
  EXPECT_TRUE(approx_mat(mat_mul(id, id), id, 1e-15));

  Matrix2 prod = mat_mul(parabolic_upper(), parabolic_lower());
  EXPECT_TRUE(approx_mat(prod, {2.0, 1.0, 1.0, 1.0}, 1e-15));

  Matrix2 f{2.0, 0.0, 0.0, 0.5};
  EXPECT_TRUE(approx_mat(mat_mul(f, f), {4.0, 0.0, 0.0, 0.25}, 1e-15));
}

TEST(MatMul, PreservesDeterminant) {
  for (int k = 0; k < 50; ++k) {
    Matrix2 x = random_unimodular(), y = random_unimodular();
    EXPECT_NEAR(std::abs(mat_mul(x, y).det() - 1.0), 0.0, 1e-9);
  }
}

TEST(MatInverse, Basic) {
  EXPECT_TRUE(approx_mat(mat_inverse(Matrix2::identity()), Matrix2::identity(), 1e-15));
  EXPECT_TRUE(approx_mat(mat_inverse(parabolic_upper()), {1.0, -1.0, 0.0, 1.0}, 1e-15));
  EXPECT_TRUE(approx_mat(mat_inverse({2.0, 0.0, 0.0, 0.5}), {0.5, 0.0, 0.0, 2.0}, 1e-15));
}

TEST(MatInverse, RoundTrip) {
  for (int k = 0; k < 50; ++k) {
    Matrix2 x = random_unimodular();
    EXPECT_TRUE(approx_mat(mat_mul(x, mat_inverse(x)), Matrix2::identity(), 1e-9));
  }
}

TEST(MatInverse, RejectsNonUnimodular) {
  EXPECT_THROW(mat_inverse({2.0, 0.0, 0.0, 2.0}), NonUnimodular);
}

TEST(Commutator, Cases) {
  Matrix2 g = random_unimodular();
  EXPECT_TRUE(approx_mat(commutator(Matrix2::identity(), g), Matrix2::identity(), 1e-9));
  EXPECT_TRUE(approx_mat(commutator(g, g), Matrix2::identity(), 1e-9));

  Matrix2 k = commutator(parabolic_upper(), parabolic_lower());
  EXPECT_TRUE(approx_mat(k, {3.0, -1.0, 1.0, 0.0}, 1e-12));
  EXPECT_NEAR(std::abs(k.trace() - 3.0), 0.0, 1e-12);
}

TEST(MatPower, Cases) {
  EXPECT_TRUE(approx_mat(mat_power(random_unimodular(), 0), Matrix2::identity(), 1e-15));
  for (std::uint32_t n : {1u, 2u, 5u, 11u}) {
    Matrix2 p = mat_power(parabolic_upper(), n);
    EXPECT_TRUE(approx_mat(p, {1.0, static_cast<double>(n), 0.0, 1.0}, 1e-12));
  }
  EXPECT_TRUE(approx_mat(mat_power({2.0, 0.0, 0.0, 0.5}, 3), {8.0, 0.0, 0.0, 0.125}, 1e-12));
}

TEST(MatPower, AdditionLaw) {
  for (int k = 0; k < 20; ++k) {
    Matrix2 x = random_unimodular();
    std::uniform_int_distribution<int> pick(0, 16);
    std::uint32_t m = pick(rng), n = pick(rng);
    Matrix2 lhs = mat_power(x, m + n);
    Matrix2 rhs = mat_mul(mat_power(x, m), mat_power(x, n));
    EXPECT_TRUE(approx_mat(lhs, rhs, 1e-8 * std::max(1.0, std::abs(lhs.a))));
  }
}

TEST(Classify, Cases) {
  EXPECT_EQ(classify(parabolic_upper()), ElementClass::Parabolic);
  // tr = 1, beta = -3: elliptic
  Matrix2 ell = normalize_det({1.0, -1.0, 1.0, 0.0});
  EXPECT_NEAR(std::abs(ell.trace() * ell.trace() - 4.0 - Cplx(-3.0)), 0.0, 1e-12);
  EXPECT_EQ(classify(ell), ElementClass::Elliptic);
  // tr = 3, beta = 5: loxodromic
  Matrix2 lox{2.0, 1.0, 1.0, 1.0};
  EXPECT_EQ(classify(lox), ElementClass::Loxodromic);
  EXPECT_EQ(classify(Matrix2::identity()), ElementClass::Identity);
  EXPECT_EQ(classify(mat_neg(Matrix2::identity())), ElementClass::Identity);
  // beta = -4 boundary is elliptic (order two)
  Matrix2 order2{0.0, -1.0, 1.0, 0.0};
  EXPECT_EQ(classify(order2), ElementClass::Elliptic);
}

TEST(Classify, PslSignAndConjugationInvariance) {
  for (int k = 0; k < 30; ++k) {
    Matrix2 x = random_unimodular(), h = random_unimodular();
    Matrix2 conj = mat_mul(mat_mul(h, x), mat_inverse(h));
    EXPECT_EQ(classify(x), classify(mat_neg(x)));
    EXPECT_EQ(classify(x), classify(conj));
  }
}

TEST(NormalizeDet, Cases) {
  Matrix2 n1 = normalize_det({2.0, 0.0, 0.0, 2.0});
  EXPECT_TRUE(approx_mat(n1, Matrix2::identity(), 1e-12) ||
              approx_mat(n1, mat_neg(Matrix2::identity()), 1e-12));
  Matrix2 u = random_unimodular();
  EXPECT_TRUE(approx_mat(normalize_det(u), u, 1e-12) ||
              approx_mat(normalize_det(u), mat_neg(u), 1e-12));
  EXPECT_TRUE(approx_mat(normalize_det({4.0, 0.0, 0.0, 1.0}), {2.0, 0.0, 0.0, 0.5}, 1e-12));
  EXPECT_THROW(normalize_det({1.0, 1.0, 1.0, 1.0}), SingularMatrix);
}

TEST(Traces, BetaAndCommutatorTraceArePslInvariant) {
  for (int k = 0; k < 30; ++k) {
    Matrix2 f = random_unimodular(), g = random_unimodular(), h = random_unimodular();
    EXPECT_NEAR(std::abs(mat_neg(f).beta() - f.beta()), 0.0, 1e-10);
    Matrix2 fc = mat_mul(mat_mul(h, f), mat_inverse(h));
    Matrix2 gc = mat_mul(mat_mul(h, g), mat_inverse(h));
    EXPECT_NEAR(std::abs(commutator(fc, gc).trace() - commutator(f, g).trace()), 0.0,
                1e-8);
  }
}
