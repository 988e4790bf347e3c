#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace kleinian {

using Cplx = std::complex<double>;

// Comparison tolerances. The algebra is exact; the numeric layer declares its slack.
namespace tol {
inline constexpr double det = 1e-10;        // unimodularity after normalize_det
inline constexpr double det_pre = 1e-9;     // unimodularity preconditions
inline constexpr double singular = 1e-14;   // below this a determinant counts as zero
inline constexpr double classify = 1e-9;    // element classification
inline constexpr double parabolic = 1e-10;  // beta ~ 0 branch in the power formulas
inline constexpr double ineq = 1e-12;       // inequality satisfaction margin
inline constexpr double degenerate = 1e-12; // gamma ~ 0 characters
inline constexpr double order2 = 1e-9;      // beta ~ -4 detection
inline constexpr double sharp = 1e-9;       // sharpness (equality) detection
} // namespace tol

struct NonUnimodular : std::runtime_error {
  explicit NonUnimodular(const std::string& what) : std::runtime_error(what) {}
};
struct SingularMatrix : std::runtime_error {
  explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};
struct DegreeCap : std::runtime_error {
  explicit DegreeCap(const std::string& what) : std::runtime_error(what) {}
};
struct NotOrderTwo : std::runtime_error {
  explicit NotOrderTwo(const std::string& what) : std::runtime_error(what) {}
};
struct InapplicableFamily : std::runtime_error {
  explicit InapplicableFamily(const std::string& what) : std::runtime_error(what) {}
};
struct EllipticCollapse : std::runtime_error {
  explicit EllipticCollapse(const std::string& what) : std::runtime_error(what) {}
};
struct DegenerateCharacter : std::runtime_error {
  explicit DegenerateCharacter(const std::string& what) : std::runtime_error(what) {}
};
struct ParabolicFG : std::runtime_error {
  explicit ParabolicFG(const std::string& what) : std::runtime_error(what) {}
};
struct NotParabolicFG : std::runtime_error {
  explicit NotParabolicFG(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_finite(Cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline bool approx(Cplx a, Cplx b, double eps) { return std::abs(a - b) <= eps; }

// |a-b| <= eps * max(1, |b|): relative with an absolute floor near zero.
inline bool close_rel(Cplx a, Cplx b, double eps) {
  return std::abs(a - b) <= eps * std::max(1.0, std::abs(b));
}

inline double rel_err(Cplx got, Cplx want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

} // namespace kleinian
