#pragma once

#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "kleinian/core.hpp"
#include "kleinian/mobius.hpp"

namespace kleinian {

// The principal character (gamma(f,g), beta(f), beta(g)). Determines <f,g> up to
// conjugacy whenever gamma != 0; gamma = 0 means f and g share a fixed point, which
// is impossible in a Kleinian group, so such characters are tagged degenerate
// rather than rejected (the identity group is (0,0,0)).
struct PrincipalCharacter {
  Cplx gamma{0.0};
  Cplx beta_f{0.0};
  Cplx beta_g{0.0};

  bool degenerate() const { return std::abs(gamma) < tol::degenerate; }

  bool operator==(const PrincipalCharacter&) const = default;
};

// Translation lengths, holonomies, and the complex distance delta + i*theta between
// the axes of f and g. tau = 0 with theta != 0 is an elliptic; tau > 0 a loxodromic.
struct GeometricData {
  double tau_f = 0.0, theta_f = 0.0;
  double tau_g = 0.0, theta_g = 0.0;
  double delta = 0.0, theta = 0.0;
};

inline PrincipalCharacter character_from_matrices(const Matrix2& f, const Matrix2& g) {
  return {commutator(f, g).trace() - 2.0, f.beta(), g.beta()};
}

/// Fricke identity in character form:
/// gamma = beta(f) + beta(g) + beta(fg) - tr f * tr g * tr fg + 8.
inline Cplx fricke_gamma(Cplx tr_f, Cplx tr_g, Cplx tr_fg) {
  Cplx bf = tr_f * tr_f - 4.0, bg = tr_g * tr_g - 4.0, bfg = tr_fg * tr_fg - 4.0;
  return bf + bg + bfg - tr_f * tr_g * tr_fg + 8.0;
}

/// beta(fg) = gamma - beta - 4 when g is elliptic of order two (tr g = 0).
inline Cplx beta_fg_order2(const PrincipalCharacter& ch) {
  if (std::abs(ch.beta_g + 4.0) > tol::order2)
    throw NotOrderTwo("beta_fg_order2: beta(g) != -4");
  return ch.gamma - ch.beta_f - 4.0;
}

// One small-order case of the lemma that trades g for an involution: when f has
// order p <= 6 the resulting <f, phi> may be one of the listed elementary groups.
struct SmallOrderException {
  int order = 0;
  double beta_value = 0.0;  // the elliptic beta that signals this order
  std::string groups;      // which elementary groups can occur
};

inline const std::vector<SmallOrderException>& small_order_exceptions() {
  static const std::vector<SmallOrderException> table = [] {
    const double s5 = std::sqrt(5.0);
    return std::vector<SmallOrderException>{
        {2, -4.0, "Klein 4-group"},
        {3, -3.0, "A4 or S4"},
        {4, -2.0, "S4"},
        {5, -(5.0 - s5) / 2.0, "A5"},
        {5, -(5.0 + s5) / 2.0, "A5"},
        {6, -1.0, "(2,3,6) Euclidean triangle group"},
    };
  }();
  return table;
}

// The exceptions applicable to a given beta(f), empty when f cannot have order <= 6.
inline std::vector<SmallOrderException> matching_small_order_exceptions(Cplx beta_f) {
  std::vector<SmallOrderException> out;
  for (const auto& e : small_order_exceptions())
    if (approx(beta_f, Cplx(e.beta_value, 0.0), tol::order2)) out.push_back(e);
  return out;
}

struct OrderTwoShadow {
  PrincipalCharacter primary;   // (gamma, beta, -4)
  PrincipalCharacter secondary; // (beta - gamma, beta, -4)
  std::vector<SmallOrderException> exceptions;
};

/// The order-two reduction: any inequality for (gamma, beta, beta~) must hold for
/// (gamma, beta, -4) and (beta - gamma, beta, -4), up to the small-order exceptions.
inline OrderTwoShadow order2_shadow(const PrincipalCharacter& ch) {
  return {{ch.gamma, ch.beta_f, -4.0},
          {ch.beta_f - ch.gamma, ch.beta_f, -4.0},
          matching_small_order_exceptions(ch.beta_f)};
}

/// For beta(g) = -4: (gamma, beta, -4) is Kleinian iff (gamma, gamma-beta-4, -4)
/// and (beta-gamma, -gamma-4, -4) are. The first map is an involution on (gamma, beta).
inline std::pair<PrincipalCharacter, PrincipalCharacter> character_involutions(
    const PrincipalCharacter& ch) {
  if (std::abs(ch.beta_g + 4.0) > tol::order2)
    throw NotOrderTwo("character_involutions: beta(g) != -4");
  return {{ch.gamma, ch.gamma - ch.beta_f - 4.0, -4.0},
          {ch.beta_f - ch.gamma, -ch.gamma - 4.0, -4.0}};
}

inline Cplx beta_from_complex_length(Cplx tau_plus_itheta) {
  Cplx s = std::sinh(tau_plus_itheta / 2.0);
  return 4.0 * s * s;
}

/// beta = 4 sinh^2((tau + i theta)/2) for each generator,
/// gamma = (beta_f beta_g / 4) sinh^2(delta + i theta).
inline PrincipalCharacter geometric_to_params(const GeometricData& geo) {
  Cplx bf = beta_from_complex_length({geo.tau_f, geo.theta_f});
  Cplx bg = beta_from_complex_length({geo.tau_g, geo.theta_g});
  Cplx s = std::sinh(Cplx(geo.delta, geo.theta));
  return {bf * bg / 4.0 * (s * s), bf, bg};
}

/// Inverse of beta = 4 sinh^2((tau + i theta)/2): tau + i theta = 2 asinh(sqrt(beta)/2),
/// normalized so Re >= 0 and Im in (-pi, pi].
inline Cplx params_to_geometric(Cplx beta) {
  Cplx w = std::asinh(std::sqrt(beta) / 2.0) * 2.0;
  if (w.real() < 0.0 || (w.real() == 0.0 && w.imag() < 0.0)) w = -w;
  double im = w.imag();
  while (im > std::numbers::pi) im -= 2.0 * std::numbers::pi;
  while (im <= -std::numbers::pi) im += 2.0 * std::numbers::pi;
  return {w.real(), im};
}

} // namespace kleinian
