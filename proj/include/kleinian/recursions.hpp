#pragma once

#include <cstdint>
#include <numbers>
#include <string>

#include "kleinian/characters.hpp"
#include "kleinian/chebyshev.hpp"
#include "kleinian/core.hpp"

namespace kleinian {

// The word families whose principal characters are expressible in (gamma, beta).
enum class SubgroupFamily {
  PowerOfF,        // <f^n, g>
  ConjugatePower,  // <f^n, g f^n g^-1>
  ProductPower,    // <(gf)^n, f>, needs beta(g) = -4
  CommutatorPower, // <[g,f]^n, f>
};

inline const char* to_string(SubgroupFamily f) {
  switch (f) {
    case SubgroupFamily::PowerOfF: return "PowerOfF";
    case SubgroupFamily::ConjugatePower: return "ConjugatePower";
    case SubgroupFamily::ProductPower: return "ProductPower";
    case SubgroupFamily::CommutatorPower: return "CommutatorPower";
  }
  return "?";
}

/// a_{n+1} = (2+u) a_n - a_{n-1} + 2v, a_0 = 0, a_1 = v.
/// Every trace sequence here is an instance of this one recursion.
inline Cplx a_seq(Cplx u, Cplx v, std::uint32_t n) {
  if (n == 0) return 0.0;
  Cplx prev = 0.0, cur = v;
  for (std::uint32_t k = 1; k < n; ++k) {
    Cplx next = (2.0 + u) * cur - prev + 2.0 * v;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// beta(f^n) = 2 T_n(1 + beta/2) - 2; computed by the integer-step recursion,
/// which is the same as a_seq(beta, beta, n).
inline Cplx beta_power(Cplx beta, std::uint32_t n) { return a_seq(beta, beta, n); }

/// gamma(f^n, g) = beta(f^n)/beta * gamma, with the parabolic limit n^2 gamma
/// at beta = 0 (powers of a parabolic stay parabolic, the ratio tends to n^2).
inline Cplx gamma_power(Cplx gamma, Cplx beta, std::uint32_t n) {
  if (std::abs(beta) <= tol::parabolic) return static_cast<double>(n) * static_cast<double>(n) * gamma;
  return gamma * beta_power(beta, n) / beta;
}

/// alpha_n = gamma(f^n, g) - beta(f^n); satisfies the same three-term recursion.
inline Cplx alpha_n(Cplx gamma, Cplx beta, std::uint32_t n) {
  return gamma_power(gamma, beta, n) - beta_power(beta, n);
}

/// lambda_n = gamma_n (gamma_n - beta_n), by the closed form
/// lambda_1/(4^n beta^2) [ -2^{n+1} + (2+beta-sqrt(beta)sqrt(4+beta))^n
///                                  + (2+beta+sqrt(beta)sqrt(4+beta))^n ]^2
/// away from beta = 0, else by the defining product. The two square-root branch
/// choices swap the summands, so the value is branch-independent.
inline Cplx lambda_n(Cplx gamma, Cplx beta, std::uint32_t n) {
  if (std::abs(beta) <= tol::parabolic)
    return gamma_power(gamma, beta, n) * (gamma_power(gamma, beta, n) - beta_power(beta, n));
  Cplx root = std::sqrt(beta) * std::sqrt(4.0 + beta);
  Cplx bracket = -std::pow(Cplx(2.0), static_cast<double>(n) + 1.0) +
                 std::pow(2.0 + beta - root, static_cast<double>(n)) +
                 std::pow(2.0 + beta + root, static_cast<double>(n));
  Cplx lambda1 = gamma * (gamma - beta);
  return lambda1 / (std::pow(4.0, static_cast<double>(n)) * beta * beta) * bracket * bracket;
}

/// Closed form of alpha_n. The recursion seed forces the factor (gamma - beta):
/// alpha_n = (gamma - beta) beta_n / beta.
inline Cplx alpha_n_closed(Cplx gamma, Cplx beta, std::uint32_t n) {
  Cplx root = std::sqrt(beta) * std::sqrt(4.0 + beta);
  Cplx bracket = std::pow(Cplx(2.0), static_cast<double>(n) + 1.0) -
                 std::pow(2.0 + beta - root, static_cast<double>(n)) -
                 std::pow(2.0 + beta + root, static_cast<double>(n));
  return -std::pow(2.0, -static_cast<double>(n)) * bracket * (gamma - beta) / beta;
}

/// Closed form of gamma_n = gamma beta_n / beta.
inline Cplx gamma_n_closed(Cplx gamma, Cplx beta, std::uint32_t n) {
  Cplx root = std::sqrt(beta) * std::sqrt(4.0 + beta);
  Cplx bracket = std::pow(Cplx(2.0), static_cast<double>(n) + 1.0) -
                 std::pow(2.0 + beta - root, static_cast<double>(n)) -
                 std::pow(2.0 + beta + root, static_cast<double>(n));
  return -std::pow(2.0, -static_cast<double>(n)) * gamma * bracket / beta;
}

/// gamma((gf)^n, f) via the tilde recursion: a_seq with coefficient offset
/// u = gamma - beta - 4 = beta(fg) (so 2+u = gamma - beta - 2) and seed gamma.
/// Valid in the beta(g) = -4 context where beta(fg) is determined.
inline Cplx gamma_fg_power(Cplx gamma, Cplx beta, std::uint32_t n) {
  return a_seq(gamma - beta - 4.0, gamma, n);
}

/// beta((fg)^n) = beta_power(beta(fg), n) with beta(fg) = gamma - beta - 4.
inline Cplx beta_fg_power(Cplx gamma, Cplx beta, std::uint32_t n) {
  return beta_power(gamma - beta - 4.0, n);
}

/// gamma(f, [g,f]^n): seeds gamma_1 = gamma(gamma - beta), coefficient
/// 2 + beta([g,f]) with beta([g,f]) = gamma(gamma + 4).
inline Cplx gamma_commutator_power(Cplx gamma, Cplx beta, std::uint32_t n) {
  return a_seq(gamma * (gamma + 4.0), gamma * (gamma - beta), n);
}

// True when base_beta = -4 sin^2(p pi / n) for some p in 1..n-1, i.e. the n-th
// power of an elliptic with that beta is the identity.
inline bool elliptic_power_is_identity(Cplx base_beta, std::uint32_t n,
                                       double eps = tol::order2) {
  for (std::uint32_t p = 1; p < n; ++p) {
    double s = std::sin(static_cast<double>(p) * std::numbers::pi / static_cast<double>(n));
    if (approx(base_beta, Cplx(-4.0 * s * s, 0.0), eps)) return true;
  }
  return false;
}

/// Principal character of the requested subgroup family at power n.
/// Throws InapplicableFamily when the family's closed forms do not apply to the
/// character, EllipticCollapse when the powered element is the identity.
inline PrincipalCharacter subgroup_character(const PrincipalCharacter& ch,
                                             SubgroupFamily family, std::uint32_t n) {
  if (n == 0) throw InapplicableFamily("subgroup_character: n must be positive");
  if (ch.degenerate())
    throw DegenerateCharacter("subgroup_character: gamma = 0 character");

  const Cplx g = ch.gamma, b = ch.beta_f;
  auto collapse_check = [n](Cplx base_beta, const char* word) {
    if (std::abs(beta_power(base_beta, n)) <= tol::order2 &&
        elliptic_power_is_identity(base_beta, n))
      throw EllipticCollapse(std::string("subgroup_character: ") + word +
                             "^n is the identity");
  };

  switch (family) {
    case SubgroupFamily::PowerOfF:
      collapse_check(b, "f");
      return {gamma_power(g, b, n), beta_power(b, n), ch.beta_g};
    case SubgroupFamily::ConjugatePower:
      collapse_check(b, "f");
      return {lambda_n(g, b, n), beta_power(b, n), beta_power(b, n)};
    case SubgroupFamily::ProductPower:
      if (std::abs(ch.beta_g + 4.0) > tol::order2)
        throw InapplicableFamily("subgroup_character: ProductPower needs beta(g) = -4");
      collapse_check(g - b - 4.0, "fg");
      return {gamma_fg_power(g, b, n), beta_fg_power(g, b, n), b};
    case SubgroupFamily::CommutatorPower:
      collapse_check(g * (g + 4.0), "[g,f]");
      return {gamma_commutator_power(g, b, n), beta_power(g * (g + 4.0), n), b};
  }
  throw InapplicableFamily("subgroup_character: unknown family");
}

} // namespace kleinian
