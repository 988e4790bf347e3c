#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "kleinian/characters.hpp"
#include "kleinian/core.hpp"
#include "kleinian/mobius.hpp"
#include "kleinian/recursions.hpp"

namespace kleinian {

// A concrete matrix pair realizing a character, with the recomputation residual.
struct Realization {
  Matrix2 f, g;
  PrincipalCharacter source;
  double residual = 0.0;
};

enum class Letter { F, G, FInv, GInv };

using Word = std::vector<Letter>;

/// Normal form: f upper triangular, g lower triangular,
///   f = [[s, 1], [0, 1/s]]   with s + 1/s a square root of beta + 4,
///   g = [[a, 0], [c, 1/a]]   with a + 1/a a square root of beta~ + 4,
/// and c a root of c^2 + p c - gamma = 0 where p = (s - 1/s)(a - 1/a).
/// (Expanding tr[f,g] - 2 for these matrices gives exactly c^2 + p c.)
/// The root of larger modulus is taken, which keeps the construction stable
/// near p^2 = -4 gamma. Both roots give conjugate realizations.
inline Realization realize(const PrincipalCharacter& ch) {
  if (std::abs(ch.gamma) <= tol::degenerate)
    throw DegenerateCharacter("realize: gamma = 0 has no irreducible realization");

  auto half_trace_param = [](Cplx beta) {
    // s with s + 1/s = sqrt(beta + 4); beta = 0 gives s = 1.
    return (std::sqrt(beta + 4.0) + std::sqrt(beta)) / 2.0;
  };
  const Cplx s = half_trace_param(ch.beta_f);
  const Cplx a = half_trace_param(ch.beta_g);
  const Cplx p = (s - 1.0 / s) * (a - 1.0 / a);

  const Cplx disc = std::sqrt(p * p + 4.0 * ch.gamma);
  const Cplx c1 = (-p + disc) / 2.0, c2 = (-p - disc) / 2.0;
  const Cplx c = std::abs(c1) >= std::abs(c2) ? c1 : c2;

  Realization r;
  r.f = {s, 1.0, 0.0, 1.0 / s};
  r.g = {a, 0.0, c, 1.0 / a};
  r.source = ch;
  PrincipalCharacter back = character_from_matrices(r.f, r.g);
  r.residual = std::max({std::abs(back.gamma - ch.gamma), std::abs(back.beta_f - ch.beta_f),
                         std::abs(back.beta_g - ch.beta_g)});
  return r;
}

/// Left-to-right product of the letter matrices. No free reduction; cancellation
/// happens numerically in the multiplication.
inline Matrix2 word_eval(const Realization& r, const Word& w) {
  const Matrix2 fi = mat_inverse(r.f), gi = mat_inverse(r.g);
  Matrix2 acc = Matrix2::identity();
  for (Letter l : w) {
    switch (l) {
      case Letter::F: acc = mat_mul(acc, r.f); break;
      case Letter::G: acc = mat_mul(acc, r.g); break;
      case Letter::FInv: acc = mat_mul(acc, fi); break;
      case Letter::GInv: acc = mat_mul(acc, gi); break;
    }
  }
  return acc;
}

inline Word repeat(const Word& w, std::uint32_t n) {
  Word out;
  out.reserve(w.size() * n);
  for (std::uint32_t k = 0; k < n; ++k) out.insert(out.end(), w.begin(), w.end());
  return out;
}

/// Realizes the character, builds the family's word pair, computes its character
/// by direct matrix multiplication, and returns the max relative deviation from
/// the recursion predictions (gamma and both beta slots).
/// ProductPower is checked in the beta(g) = -4 context it requires.
inline double check_identity(const PrincipalCharacter& ch, SubgroupFamily family,
                             std::uint32_t n) {
  PrincipalCharacter base = ch;
  if (family == SubgroupFamily::ProductPower) base.beta_g = -4.0;
  const Realization r = realize(base);

  Matrix2 left, right;
  switch (family) {
    case SubgroupFamily::PowerOfF:
      left = mat_power(r.f, n);
      right = r.g;
      break;
    case SubgroupFamily::ConjugatePower: {
      left = mat_power(r.f, n);
      right = mat_mul(mat_mul(r.g, left), mat_inverse(r.g));
      break;
    }
    case SubgroupFamily::ProductPower:
      left = mat_power(mat_mul(r.g, r.f), n);
      right = r.f;
      break;
    case SubgroupFamily::CommutatorPower: {
      left = r.f;
      right = mat_power(commutator(r.g, r.f), n);
      break;
    }
  }

  const PrincipalCharacter direct = character_from_matrices(left, right);
  const Cplx g = base.gamma, b = base.beta_f;
  PrincipalCharacter predicted;
  switch (family) {
    case SubgroupFamily::PowerOfF:
      predicted = {gamma_power(g, b, n), beta_power(b, n), base.beta_g};
      break;
    case SubgroupFamily::ConjugatePower:
      predicted = {lambda_n(g, b, n), beta_power(b, n), beta_power(b, n)};
      break;
    case SubgroupFamily::ProductPower:
      predicted = {gamma_fg_power(g, b, n), beta_fg_power(g, b, n), b};
      break;
    case SubgroupFamily::CommutatorPower:
      predicted = {gamma_commutator_power(g, b, n), b, beta_power(g * (g + 4.0), n)};
      break;
  }
  return std::max({rel_err(direct.gamma, predicted.gamma),
                   rel_err(direct.beta_f, predicted.beta_f),
                   rel_err(direct.beta_g, predicted.beta_g)});
}

} // namespace kleinian
