#pragma once

#include <cstdint>

#include "kleinian/core.hpp"

namespace kleinian {

enum class ElementClass { Identity, Parabolic, Elliptic, Loxodromic };

inline const char* to_string(ElementClass c) {
  switch (c) {
    case ElementClass::Identity: return "identity";
    case ElementClass::Parabolic: return "parabolic";
    case ElementClass::Elliptic: return "elliptic";
    case ElementClass::Loxodromic: return "loxodromic";
  }
  return "?";
}

// Unimodular 2x2 complex matrix, row-major. Represents a Moebius transformation;
// everything trace-derived here is invariant under M -> -M (the PSL sign ambiguity).
struct Matrix2 {
  Cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};

  static Matrix2 identity() { return {}; }

  Cplx det() const { return a * d - b * c; }
  Cplx trace() const { return a + d; }

  // beta(x) = tr^2 - 4, sign-invariant.
  Cplx beta() const {
    Cplx t = trace();
    return t * t - 4.0;
  }

  bool operator==(const Matrix2&) const = default;
};

inline Matrix2 mat_mul(const Matrix2& x, const Matrix2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline Matrix2 mat_neg(const Matrix2& x) { return {-x.a, -x.b, -x.c, -x.d}; }

// Adjugate, which is the inverse of a unimodular matrix. Unchecked: products of
// large-entry unimodular matrices make the floating-point determinant test
// unreliable (ad and bc cancel), while the adjugate stays exact.
inline Matrix2 mat_adjugate(const Matrix2& x) { return {x.d, -x.b, -x.c, x.a}; }

inline Matrix2 mat_inverse(const Matrix2& x) {
  if (std::abs(x.det() - 1.0) > tol::det_pre)
    throw NonUnimodular("mat_inverse: |det - 1| exceeds 1e-9");
  return mat_adjugate(x);
}

// x^n by binary exponentiation; x^0 = I. No diagonalization, so parabolic
// fixed-point degeneracy never enters.
inline Matrix2 mat_power(Matrix2 x, std::uint32_t n) {
  Matrix2 r = Matrix2::identity();
  while (n > 0) {
    if (n & 1u) r = mat_mul(r, x);
    x = mat_mul(x, x);
    n >>= 1u;
  }
  return r;
}

// [f,g] = f g f^-1 g^-1, inputs assumed unimodular.
inline Matrix2 commutator(const Matrix2& f, const Matrix2& g) {
  return mat_mul(mat_mul(f, g), mat_mul(mat_adjugate(f), mat_adjugate(g)));
}

// Divide by a principal square root of the determinant. Result unimodular up to sign.
inline Matrix2 normalize_det(const Matrix2& x) {
  Cplx det = x.det();
  if (std::abs(det) < tol::singular)
    throw SingularMatrix("normalize_det: determinant is numerically zero");
  Cplx s = std::sqrt(det);
  return {x.a / s, x.b / s, x.c / s, x.d / s};
}

inline bool approx_mat(const Matrix2& x, const Matrix2& y, double eps) {
  return approx(x.a, y.a, eps) && approx(x.b, y.b, eps) &&
         approx(x.c, y.c, eps) && approx(x.d, y.d, eps);
}

inline bool is_identity_up_to_sign(const Matrix2& x, double eps = tol::classify) {
  return approx_mat(x, Matrix2::identity(), eps) ||
         approx_mat(x, mat_neg(Matrix2::identity()), eps);
}

// Parabolic: beta = 0, x != +-I. Elliptic: beta real in [-4, 0). Loxodromic: the rest.
inline ElementClass classify(const Matrix2& x) {
  if (is_identity_up_to_sign(x)) return ElementClass::Identity;
  Cplx beta = x.beta();
  if (std::abs(beta) <= tol::classify) return ElementClass::Parabolic;
  if (std::abs(beta.imag()) <= tol::classify && beta.real() >= -4.0 - tol::classify &&
      beta.real() < 0.0)
    return ElementClass::Elliptic;
  return ElementClass::Loxodromic;
}

} // namespace kleinian
