#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kleinian/chebyshev.hpp"
#include "kleinian/core.hpp"
#include "kleinian/recursions.hpp"

namespace kleinian {

inline constexpr std::uint32_t kSeqDegreeCap = 32;

// Exact bivariate polynomial in (gamma, beta) over arbitrary-precision integers.
// Canonical form: no zero coefficients stored; equality is structural.
class BivarPoly {
 public:
  // (i, j) -> coefficient of gamma^i beta^j
  using Terms = std::map<std::pair<int, int>, BigInt>;

  BivarPoly() = default;
  explicit BivarPoly(BigInt constant) {
    if (constant != 0) terms_[{0, 0}] = std::move(constant);
  }
  BivarPoly(int i, int j, BigInt coeff) {
    if (coeff != 0) terms_[{i, j}] = std::move(coeff);
  }

  static BivarPoly zero() { return BivarPoly(); }
  static BivarPoly constant(long long c) { return BivarPoly(BigInt(c)); }
  static BivarPoly gamma() { return BivarPoly(1, 0, 1); }
  static BivarPoly beta() { return BivarPoly(0, 1, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const BivarPoly&) const = default;

  BivarPoly& operator+=(const BivarPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BivarPoly& operator-=(const BivarPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator-(const BivarPoly& a) {
    BivarPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
    return r;
  }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return r;
  }
  friend BivarPoly operator*(const BigInt& k, const BivarPoly& a) {
    BivarPoly r;
    if (k == 0) return r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = k * c;
    return r;
  }
  friend BivarPoly operator*(const BivarPoly& a, const BigInt& k) { return k * a; }

  BivarPoly pow(std::uint32_t e) const {
    BivarPoly r = constant(1);
    for (std::uint32_t k = 0; k < e; ++k) r = r * (*this);
    return r;
  }

  /// Horner evaluation (inner loop in beta, outer in gamma).
  Cplx eval(Cplx gamma, Cplx beta) const {
    // group coefficients by gamma power
    std::map<int, std::map<int, const BigInt*>> by_gamma;
    for (const auto& [e, c] : terms_) by_gamma[e.first][e.second] = &c;
    Cplx total = 0.0;
    Cplx gpow = 1.0;
    int gprev = 0;
    for (const auto& [gi, row] : by_gamma) {
      for (; gprev < gi; ++gprev) gpow *= gamma;
      int bmax = row.rbegin()->first;
      Cplx acc = 0.0;
      for (int j = bmax; j >= 0; --j) {
        acc *= beta;
        auto it = row.find(j);
        if (it != row.end()) acc += static_cast<double>(*it->second);
      }
      total += gpow * acc;
    }
    return total;
  }

  /// Exact substitution beta -> replacement, expanded to canonical form.
  BivarPoly substitute_beta(const BivarPoly& replacement) const {
    BivarPoly result;
    std::vector<BivarPoly> powers{constant(1)}; // replacement^j cache
    for (const auto& [e, c] : terms_) {
      while (static_cast<int>(powers.size()) <= e.second)
        powers.push_back(powers.back() * replacement);
      result += BivarPoly(e.first, 0, c) * powers[e.second];
    }
    return result;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += c >= 0 ? " + " : " - ";
      else if (c < 0) out += "-";
      BigInt ac = c < 0 ? BigInt(-c) : c;
      std::string monom;
      if (e.first > 0) monom += e.first == 1 ? "g" : "g^" + std::to_string(e.first);
      if (e.second > 0) {
        if (!monom.empty()) monom += "*";
        monom += e.second == 1 ? "b" : "b^" + std::to_string(e.second);
      }
      if (monom.empty()) out += ac.str();
      else if (ac == 1) out += monom;
      else out += ac.str() + "*" + monom;
    }
    return out;
  }

 private:
  void add_term(std::pair<int, int> e, const BigInt& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

// a_{k+1} = (2+u) a_k - a_{k-1} + 2v in the polynomial ring; exact.
inline BivarPoly poly_a_seq(const BivarPoly& u, const BivarPoly& v, std::uint32_t n) {
  if (n > kSeqDegreeCap) throw DegreeCap("poly_a_seq: cap is n <= 32");
  if (n == 0) return BivarPoly::zero();
  BivarPoly two_v = BigInt(2) * v;
  BivarPoly coeff = BivarPoly::constant(2) + u;
  BivarPoly prev = BivarPoly::zero(), cur = v;
  for (std::uint32_t k = 1; k < n; ++k) {
    BivarPoly next = coeff * cur - prev + two_v;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Exact generator for the gamma-sequence of each subgroup family.
inline BivarPoly gen_sequence_poly(SubgroupFamily family, std::uint32_t n) {
  const BivarPoly g = BivarPoly::gamma(), b = BivarPoly::beta();
  switch (family) {
    case SubgroupFamily::PowerOfF:
      return poly_a_seq(b, g, n);
    case SubgroupFamily::ConjugatePower: {
      // lambda_n = gamma_n (gamma_n - beta_n)
      BivarPoly gn = poly_a_seq(b, g, n), bn = poly_a_seq(b, b, n);
      return gn * (gn - bn);
    }
    case SubgroupFamily::ProductPower:
      return poly_a_seq(g - b - BivarPoly::constant(4), g, n);
    case SubgroupFamily::CommutatorPower:
      return poly_a_seq(g * (g + BivarPoly::constant(4)),
                        g * (g - b), n);
  }
  throw InapplicableFamily("gen_sequence_poly: unknown family");
}

struct IdentityCheck {
  std::string identity;
  bool pass = false;
};

// Every factorization the source prints, transcribed factored and expanded here,
// asserted exactly equal to the regenerated recursion polynomials.
// `inject_fault` perturbs one coefficient; it exists so the failure path is testable.
inline std::vector<IdentityCheck> verify_printed_identities(bool inject_fault = false) {
  std::vector<IdentityCheck> out;
  const BivarPoly g = BivarPoly::gamma(), b = BivarPoly::beta();
  auto C = [](long long v) { return BivarPoly::constant(v); };

  // Chebyshev table, T_0 .. T_8 (coefficients by ascending power of z).
  const std::vector<std::vector<long long>> cheb_table = {
      {1},
      {0, 1},
      {-1, 0, 2},
      {0, -3, 0, 4},
      {1, 0, -8, 0, 8},
      {0, 5, 0, -20, 0, 16},
      {-1, 0, 18, 0, -48, 0, 32},
      {0, -7, 0, 56, 0, -112, 0, 64},
      {1, 0, -32, 0, 160, 0, -256, 0, 128},
  };
  for (std::uint32_t n = 0; n <= 8; ++n) {
    ChebCoeffs got = cheb_coeffs(n);
    bool ok = got.coeffs.size() == cheb_table[n].size();
    if (ok)
      for (std::size_t k = 0; k < got.coeffs.size(); ++k)
        ok = ok && got.coeffs[k] == BigInt(cheb_table[n][k] +
                                           ((inject_fault && n == 4 && k == 0) ? 1 : 0));
    out.push_back({"T_" + std::to_string(n), ok});
  }

  // gamma(f^n, g), n = 1..6.
  const std::vector<BivarPoly> pow_list = {
      g,
      g * (b + C(4)),
      g * (b + C(3)).pow(2),
      g * (b + C(4)) * (b + C(2)).pow(2),
      g * (b * b + C(5) * b + C(5)).pow(2),
      g * (b + C(4)) * (b + C(3)).pow(2) * (b + C(1)).pow(2),
  };
  for (std::uint32_t n = 1; n <= 6; ++n)
    out.push_back({"gamma(f^" + std::to_string(n) + ",g)",
                   pow_list[n - 1] == gen_sequence_poly(SubgroupFamily::PowerOfF, n)});

  // The printed gamma_n list, n = 0..10; it satisfies the tilde recursion with
  // coefficient offset u = gamma - beta - 4, i.e. the <(gf)^n, f> family.
  const BivarPoly x = g - b;
  const std::vector<BivarPoly> tilde_list = {
      BivarPoly::zero(),
      g,
      g * x,
      g * (x - C(1)).pow(2),
      g * x * (x - C(2)).pow(2),
      g * (C(1) + C(3) * b + b * b - C(3) * g - C(2) * b * g + g * g).pow(2),
      g * x * (x - C(1)).pow(2) * (x - C(3)).pow(2),
      g * (C(-1) - C(6) * b - C(5) * b * b - b.pow(3) + C(6) * g + C(10) * b * g +
           C(3) * b * b * g - C(5) * g * g - C(3) * b * g * g + g.pow(3))
              .pow(2),
      g * x * (x - C(2)).pow(2) *
          (C(2) + C(4) * b + b * b - C(4) * g - C(2) * b * g + g * g).pow(2),
      g * (x - C(1)).pow(2) *
          (C(-1) - C(9) * b - C(6) * b * b - b.pow(3) + C(9) * g + C(12) * b * g +
           C(3) * b * b * g - C(6) * g * g - C(3) * b * g * g + g.pow(3))
              .pow(2),
      g * x * (C(5) + C(5) * b + b * b - C(5) * g - C(2) * b * g + g * g).pow(2) *
          (C(1) + C(3) * b + b * b - C(3) * g - C(2) * b * g + g * g).pow(2),
  };
  for (std::uint32_t n = 0; n <= 10; ++n)
    out.push_back({"gamma_" + std::to_string(n) + "_tilde",
                   tilde_list[n] == gen_sequence_poly(SubgroupFamily::ProductPower, n)});

  // gamma(f, [g,f]^n), n = 1..5.
  const std::vector<BivarPoly> comm_list = {
      g * x,
      g * x * (g + C(2)).pow(2),
      g * x * (g + C(1)).pow(2) * (g + C(3)).pow(2),
      g * x * (g + C(2)).pow(2) * (g * g + C(4) * g + C(2)).pow(2),
      g * x * (g * g + C(3) * g + C(1)).pow(2) * (g * g + C(5) * g + C(5)).pow(2),
  };
  for (std::uint32_t n = 1; n <= 5; ++n)
    out.push_back(
        {"gamma(f,[g,f]^" + std::to_string(n) + ")",
         comm_list[n - 1] == gen_sequence_poly(SubgroupFamily::CommutatorPower, n)});

  return out;
}

inline bool all_identities_pass(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

} // namespace kleinian
