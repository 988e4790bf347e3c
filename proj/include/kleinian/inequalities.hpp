#pragma once

#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "kleinian/characters.hpp"
#include "kleinian/chebyshev.hpp"
#include "kleinian/core.hpp"
#include "kleinian/recursions.hpp"

namespace kleinian {

enum class Applicability { Unconditional, RequiresOrder2G, RequiresFNotOrder2, ExtremalOnly };

inline const char* to_string(Applicability a) {
  switch (a) {
    case Applicability::Unconditional: return "unconditional";
    case Applicability::RequiresOrder2G: return "requires_order2_g";
    case Applicability::RequiresFNotOrder2: return "requires_f_not_order2";
    case Applicability::ExtremalOnly: return "extremal_only";
  }
  return "?";
}

// How an exception descriptor affects verdict aggregation:
//  VerifiedCollapse / VerifiedOrderTwo — the condition holds arithmetically at this
//    character, the theorem's hypothesis fails, a failed report asserts nothing;
//  SmallOrderAssumption — depends on the unknown order of f, failure stays
//    conditional unless user assumptions rule the exception out.
enum class ExceptionKind { VerifiedCollapse, VerifiedOrderTwo, SmallOrderAssumption };

struct ExceptionNote {
  std::string text;
  ExceptionKind kind = ExceptionKind::SmallOrderAssumption;
  int f_order = 0; // the order named by a SmallOrderAssumption note, 0 otherwise
};

struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double bound = 0.0;
  bool satisfied = false;
  double margin = 0.0; // lhs - bound
  std::vector<ExceptionNote> exceptions;
  Applicability applicability = Applicability::Unconditional;

  bool sharp() const { return std::abs(margin) <= tol::sharp; }
};

inline InequalityReport make_report(std::string name, double lhs, double bound,
                                    Applicability app) {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.bound = bound;
  r.margin = lhs - bound;
  r.satisfied = r.margin >= -tol::ineq;
  r.applicability = app;
  return r;
}

/// Jorgensen's inequality |gamma| + |beta| >= 1.
inline InequalityReport jorgensen(const PrincipalCharacter& ch) {
  return make_report("jorgensen", std::abs(ch.gamma) + std::abs(ch.beta_f), 1.0,
                     Applicability::Unconditional);
}

inline ExceptionNote f_order2_note() {
  return {"f elliptic of order 2 (beta = -4)", ExceptionKind::VerifiedOrderTwo, 2};
}

/// |gamma - beta - 4| + |gamma| >= 1 and |gamma + 4| + |beta - gamma| >= 1,
/// valid when f is not of order two. Sharp in the (2,3,7) triangle group.
inline std::pair<InequalityReport, InequalityReport> lem15_pair(
    const PrincipalCharacter& ch) {
  const Cplx g = ch.gamma, b = ch.beta_f;
  auto r1 = make_report("lem15_1", std::abs(g - b - 4.0) + std::abs(g), 1.0,
                        Applicability::RequiresFNotOrder2);
  auto r2 = make_report("lem15_2", std::abs(g + 4.0) + std::abs(b - g), 1.0,
                        Applicability::RequiresFNotOrder2);
  if (approx(b, Cplx(-4.0, 0.0), tol::order2)) {
    r1.exceptions.push_back(f_order2_note());
    r2.exceptions.push_back(f_order2_note());
  }
  if (ch.degenerate()) {
    ExceptionNote note{"gamma = 0: degenerate character", ExceptionKind::VerifiedCollapse, 0};
    r1.exceptions.push_back(note);
    r2.exceptions.push_back(note);
  }
  return {r1, r2};
}

inline std::optional<ExceptionNote> collapse_note(Cplx base_beta, Cplx base_beta_n,
                                                  std::uint32_t n, const char* word) {
  if (std::abs(base_beta_n) <= tol::order2 && elliptic_power_is_identity(base_beta, n))
    return ExceptionNote{std::string(word) + "^" + std::to_string(n) +
                             " = identity: beta(" + word + ") = -4 sin^2(p pi/" +
                             std::to_string(n) + ")",
                         ExceptionKind::VerifiedCollapse, 0};
  return std::nullopt;
}

/// |a_n^{beta,gamma}| + |a_n^{beta,beta}| >= 1 unless f^n is the identity
/// (Jorgensen applied to <f^n, g>; n = 1 is Jorgensen itself).
inline InequalityReport an_family(const PrincipalCharacter& ch, std::uint32_t n) {
  const Cplx ag = a_seq(ch.beta_f, ch.gamma, n), ab = a_seq(ch.beta_f, ch.beta_f, n);
  auto r = make_report("an_" + std::to_string(n), std::abs(ag) + std::abs(ab), 1.0,
                       Applicability::RequiresOrder2G);
  if (auto note = collapse_note(ch.beta_f, ab, n, "f")) r.exceptions.push_back(*note);
  return r;
}

/// The two lem15-shaped left sides on the a_n sequences, same collapse clause,
/// plus the order-two clause on f^n that lem15 itself carries.
inline std::pair<InequalityReport, InequalityReport> an_lem15_family(
    const PrincipalCharacter& ch, std::uint32_t n) {
  const Cplx ag = a_seq(ch.beta_f, ch.gamma, n), ab = a_seq(ch.beta_f, ch.beta_f, n);
  auto r1 = make_report("an_lem15_" + std::to_string(n) + "_1",
                        std::abs(ag - ab - 4.0) + std::abs(ag), 1.0,
                        Applicability::RequiresOrder2G);
  auto r2 = make_report("an_lem15_" + std::to_string(n) + "_2",
                        std::abs(ag + 4.0) + std::abs(ag - ab), 1.0,
                        Applicability::RequiresOrder2G);
  std::vector<ExceptionNote> notes;
  if (auto note = collapse_note(ch.beta_f, ab, n, "f")) notes.push_back(*note);
  if (approx(ab, Cplx(-4.0, 0.0), tol::order2))
    notes.push_back({"f^" + std::to_string(n) + " elliptic of order 2 (beta_n = -4)",
                     ExceptionKind::VerifiedOrderTwo, 0});
  r1.exceptions = notes;
  r2.exceptions = notes;
  return {r1, r2};
}

/// |a_n^{gamma-beta-4,gamma}| + |a_n^{gamma-beta-4,gamma-beta-2}| >= 1, the
/// <(fg)^n, g> family; coefficient offset follows the tilde recursion,
/// seeds follow the printed display. Vacuous when (fg)^n is the identity.
inline InequalityReport fg_family(const PrincipalCharacter& ch, std::uint32_t n) {
  const Cplx u = ch.gamma - ch.beta_f - 4.0;
  const Cplx s1 = a_seq(u, ch.gamma, n), s2 = a_seq(u, ch.gamma - ch.beta_f - 2.0, n);
  auto r = make_report("fg_" + std::to_string(n), std::abs(s1) + std::abs(s2), 1.0,
                       Applicability::RequiresOrder2G);
  if (auto note = collapse_note(u, a_seq(u, u, n), n, "fg")) r.exceptions.push_back(*note);
  return r;
}

inline double gamma_f2_bound_value() { return 2.0 - 2.0 * std::cos(std::numbers::pi / 7.0); }

/// |gamma(f^2, g)| = |gamma (beta + 4)| >= 2 - 2 cos(pi/7) = 0.198..., f not of order 2.
inline InequalityReport gamma_f2_bound(const PrincipalCharacter& ch) {
  auto r = make_report("gamma_f2", std::abs(ch.gamma * (ch.beta_f + 4.0)),
                       gamma_f2_bound_value(), Applicability::RequiresFNotOrder2);
  if (approx(ch.beta_f, Cplx(-4.0, 0.0), tol::order2))
    r.exceptions.push_back({"beta(f) = -4", ExceptionKind::VerifiedOrderTwo, 2});
  return r;
}

/// Extremality diagnostic |gamma - beta - 4| <= 2 |T_k(1/2 (gamma - beta - 2)) - 1|.
/// The statement uses k = n+1, the proof concludes with k = n; both are reported.
/// A failure only rules out a minimizer, never discreteness; the battery ignores it.
inline std::pair<InequalityReport, InequalityReport> cheb_min_bound(
    const PrincipalCharacter& ch, std::uint32_t n) {
  const Cplx g = ch.gamma, b = ch.beta_f;
  if (std::abs(g - b - 4.0) <= tol::ineq)
    throw ParabolicFG("cheb_min_bound: fg parabolic (gamma = beta + 4)");
  const Cplx z = (g - b - 2.0) / 2.0;
  const double small = std::abs(g - b - 4.0);
  auto rep = [&](std::uint32_t k, const char* suffix) {
    double big = 2.0 * std::abs(cheb_recursive(k, z) - 1.0);
    return make_report("cheb_min_" + std::to_string(n) + suffix, big, small,
                       Applicability::ExtremalOnly);
  };
  return {rep(n + 1, "_Tn1"), rep(n, "_Tn")};
}

/// Shimizu-Leutbecher case: fg parabolic (gamma = beta + 4) forces |gamma| >= 1.
inline InequalityReport parabolic_case(const PrincipalCharacter& ch) {
  if (std::abs(ch.gamma - ch.beta_f - 4.0) > tol::order2)
    throw NotParabolicFG("parabolic_case: gamma != beta + 4");
  return make_report("parabolic_fg", std::abs(ch.gamma), 1.0,
                     Applicability::RequiresOrder2G);
}

/// The shifted bounds |gamma| + |beta - beta_0| >= r for
/// beta_0 in {-1, -2, -(3+sqrt5)/2, -(3-sqrt5)/2, -2-sqrt2} (plus the squared
/// variant at beta_0 = -1), stated for (gamma, beta, -4) characters.
inline std::vector<InequalityReport> beta_shift_bounds(const PrincipalCharacter& ch) {
  const double s5 = std::sqrt(5.0), s2 = std::sqrt(2.0);
  const double ag = std::abs(ch.gamma);
  const Cplx b = ch.beta_f;
  std::vector<InequalityReport> out;
  out.push_back(make_report("beta_plus_1_sq", ag + std::norm(b + 1.0), 1.0,
                            Applicability::RequiresOrder2G));
  out.push_back(make_report("beta_plus_1", ag + std::abs(b + 1.0), 1.0,
                            Applicability::RequiresOrder2G));
  out.push_back(make_report("beta_plus_2", ag + std::abs(b + 2.0), (s5 - 1.0) / 2.0,
                            Applicability::RequiresOrder2G));
  out.push_back(make_report("golden_plus", ag + std::abs(b + (3.0 + s5) / 2.0),
                            (3.0 - s5) / 2.0, Applicability::RequiresOrder2G));
  out.push_back(make_report("golden_minus", ag + std::abs(b + (3.0 - s5) / 2.0),
                            (3.0 - s5) / 2.0, Applicability::RequiresOrder2G));
  out.push_back(make_report("beta_plus_2_sqrt2", ag + std::abs(b + 2.0 + s2), 0.117875,
                            Applicability::RequiresOrder2G));
  return out;
}

/// Smallest positive root of an increasing function on [lo, hi] by bisection.
inline double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                          double eps = 1e-9) {
  double flo = f(lo);
  while (hi - lo > eps) {
    double mid = (lo + hi) / 2.0;
    if ((f(mid) < 0.0) == (flo < 0.0)) lo = mid;
    else hi = mid;
  }
  return (lo + hi) / 2.0;
}

/// Root of y^2 (y + sqrt2)^2 (y + 2 sqrt2)^2 (y + 2 + sqrt2) = 1 on [0,1];
/// the 0.117875 threshold of the beta_plus_2_sqrt2 bound.
inline double solve_threshold_sqrt2() {
  const double s2 = std::sqrt(2.0);
  return bisect_root(
      [s2](double y) {
        return y * y * (y + s2) * (y + s2) * (y + 2.0 * s2) * (y + 2.0 * s2) *
                   (y + 2.0 + s2) -
               1.0;
      },
      0.0, 1.0);
}

/// Root of x^2 (x + 2) = 1: the (sqrt5 - 1)/2 threshold of beta_plus_2.
inline double solve_threshold_beta2() {
  return bisect_root([](double x) { return x * x * (x + 2.0) - 1.0; }, 0.0, 1.0);
}

/// Root of s^2 + sqrt5 s = 1: the (3 - sqrt5)/2 threshold of the golden bounds.
inline double solve_threshold_golden() {
  const double s5 = std::sqrt(5.0);
  return bisect_root([s5](double s) { return s * s + s5 * s - 1.0; }, 0.0, 1.0);
}

enum class Verdict { PassesAll, ViolatesUnconditional, ViolatesConditional, Degenerate };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::PassesAll: return "PassesAll";
    case Verdict::ViolatesUnconditional: return "ViolatesUnconditional";
    case Verdict::ViolatesConditional: return "ViolatesConditional";
    case Verdict::Degenerate: return "Degenerate";
  }
  return "?";
}

// User-asserted facts that can rule lem11 small-order exceptions out.
struct Assumptions {
  std::optional<int> f_order;       // f is elliptic of exactly this order
  bool f_not_small_elliptic = false; // f is not elliptic of order 2..6
  bool g_order2 = false;            // g has order two (beta_g = -4 intended)
};

struct BatteryResult {
  Verdict verdict = Verdict::PassesAll;
  std::vector<InequalityReport> reports;

  // Name of the first violated, non-vacuous report in battery order; empty if none.
  std::string first_violated;
  // 1-based index of that report, 0 if none.
  std::size_t first_violated_index = 0;
};

inline constexpr std::uint32_t kDefaultBatteryDepth = 8;

namespace detail {
inline bool note_ruled_out(const ExceptionNote& note, const Assumptions& as) {
  if (note.kind != ExceptionKind::SmallOrderAssumption) return false;
  if (as.f_not_small_elliptic) return true;
  return as.f_order && *as.f_order != note.f_order;
}
} // namespace detail

/// The full battery of necessary conditions at (gamma, beta), reduced to the
/// (gamma, beta, -4) shadow first. A failed report is vacuous if a verified
/// exception holds, conditional if only small-order exceptions remain (and the
/// assumptions do not rule them all out), unconditional otherwise.
inline BatteryResult battery(const PrincipalCharacter& ch,
                             const Assumptions& assumptions = {},
                             std::uint32_t depth = kDefaultBatteryDepth) {
  BatteryResult result;
  if (ch.degenerate()) {
    result.verdict = Verdict::Degenerate;
    return result;
  }

  const bool reduced = std::abs(ch.beta_g + 4.0) > tol::order2 && !assumptions.g_order2;
  const auto shadow_notes = [&]() -> std::vector<ExceptionNote> {
    std::vector<ExceptionNote> notes;
    if (!reduced) return notes;
    for (const auto& e : matching_small_order_exceptions(ch.beta_f))
      notes.push_back({"f may have order " + std::to_string(e.order) + ": <f,phi> " +
                           e.groups,
                       ExceptionKind::SmallOrderAssumption, e.order});
    return notes;
  }();
  auto with_shadow = [&](InequalityReport r) {
    r.exceptions.insert(r.exceptions.end(), shadow_notes.begin(), shadow_notes.end());
    result.reports.push_back(std::move(r));
  };

  result.reports.push_back(jorgensen(ch));
  auto [l1, l2] = lem15_pair(ch);
  result.reports.push_back(std::move(l1));
  result.reports.push_back(std::move(l2));
  result.reports.push_back(gamma_f2_bound(ch));
  for (auto& r : beta_shift_bounds(ch)) with_shadow(std::move(r));
  if (std::abs(ch.gamma - ch.beta_f - 4.0) <= tol::order2)
    with_shadow(parabolic_case(ch));
  for (std::uint32_t n = 1; n <= depth; ++n) with_shadow(an_family(ch, n));
  for (std::uint32_t n = 1; n <= depth; ++n) {
    auto [a1, a2] = an_lem15_family(ch, n);
    with_shadow(std::move(a1));
    with_shadow(std::move(a2));
  }
  for (std::uint32_t n = 1; n <= depth; ++n) with_shadow(fg_family(ch, n));

  bool any_unconditional = false, any_conditional = false;
  std::size_t idx = 0;
  for (const auto& r : result.reports) {
    ++idx;
    if (r.satisfied) continue;
    bool vacuous = false, assumption_live = false;
    for (const auto& note : r.exceptions) {
      if (note.kind != ExceptionKind::SmallOrderAssumption) vacuous = true;
      else if (!detail::note_ruled_out(note, assumptions)) assumption_live = true;
    }
    if (vacuous) continue;
    if (result.first_violated.empty()) {
      result.first_violated = r.name;
      result.first_violated_index = idx;
    }
    if (assumption_live) any_conditional = true;
    else any_unconditional = true;
  }
  result.verdict = any_unconditional ? Verdict::ViolatesUnconditional
                 : any_conditional   ? Verdict::ViolatesConditional
                                     : Verdict::PassesAll;
  return result;
}

} // namespace kleinian
