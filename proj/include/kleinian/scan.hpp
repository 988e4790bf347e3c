#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "kleinian/core.hpp"
#include "kleinian/inequalities.hpp"

namespace kleinian {

// A rectangular slice of the gamma plane at fixed beta (beta_g = -4 throughout).
struct ScanSpec {
  Cplx beta{0.0};
  Cplx gamma_min{0.0};
  Cplx gamma_max{0.0};
  std::uint32_t nx = 2, ny = 2;
  std::uint32_t depth = kDefaultBatteryDepth;

  bool valid() const {
    return nx >= 2 && ny >= 2 && gamma_min.real() != gamma_max.real() &&
           gamma_min.imag() != gamma_max.imag();
  }
};

namespace detail {
inline std::string format_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

inline int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::PassesAll: return 0;
    case Verdict::ViolatesUnconditional: return 2;
    case Verdict::ViolatesConditional: return 3;
    case Verdict::Degenerate: return 4;
  }
  return 0;
}

// Row-partitioned parallel map; results merged in row order so the output is
// byte-identical regardless of worker count.
template <typename RowFn>
inline void parallel_rows(std::uint32_t ny, unsigned workers, RowFn&& fn) {
  if (workers <= 1) {
    for (std::uint32_t y = 0; y < ny; ++y) fn(y);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::uint32_t y = w; y < ny; y += workers) fn(y);
    });
  for (auto& t : pool) t.join();
}
} // namespace detail

struct ScanCell {
  int verdict_code = 0;
  std::string first_violated;
  std::size_t first_index = 0; // 1-based in battery order, 0 = none
};

inline std::vector<ScanCell> scan_grid(const ScanSpec& spec, unsigned workers = 1) {
  std::vector<ScanCell> cells(static_cast<std::size_t>(spec.nx) * spec.ny);
  const double dx = (spec.gamma_max.real() - spec.gamma_min.real()) / (spec.nx - 1);
  const double dy = (spec.gamma_max.imag() - spec.gamma_min.imag()) / (spec.ny - 1);
  detail::parallel_rows(spec.ny, workers, [&](std::uint32_t y) {
    for (std::uint32_t x = 0; x < spec.nx; ++x) {
      Cplx gamma{spec.gamma_min.real() + dx * x, spec.gamma_min.imag() + dy * y};
      BatteryResult b = battery({gamma, spec.beta, -4.0}, {}, spec.depth);
      ScanCell& cell = cells[static_cast<std::size_t>(y) * spec.nx + x];
      cell.verdict_code = detail::verdict_code(b.verdict);
      cell.first_violated = b.first_violated;
      cell.first_index = b.first_violated_index;
    }
  });
  return cells;
}

/// CSV per RFC 4180 (CRLF line endings, header row):
/// re_gamma,im_gamma,verdict_code,first_violated_name
inline std::string scan_csv(const ScanSpec& spec, unsigned workers = 1) {
  const auto cells = scan_grid(spec, workers);
  const double dx = (spec.gamma_max.real() - spec.gamma_min.real()) / (spec.nx - 1);
  const double dy = (spec.gamma_max.imag() - spec.gamma_min.imag()) / (spec.ny - 1);
  std::string out = "re_gamma,im_gamma,verdict_code,first_violated_name\r\n";
  for (std::uint32_t y = 0; y < spec.ny; ++y)
    for (std::uint32_t x = 0; x < spec.nx; ++x) {
      const ScanCell& cell = cells[static_cast<std::size_t>(y) * spec.nx + x];
      out += detail::format_double(spec.gamma_min.real() + dx * x);
      out += ',';
      out += detail::format_double(spec.gamma_min.imag() + dy * y);
      out += ',';
      out += std::to_string(cell.verdict_code);
      out += ',';
      out += cell.first_violated;
      out += "\r\n";
    }
  return out;
}

/// Binary PGM, header "P5 <nx> <ny> 255". Pixel: 0 = no violation, otherwise the
/// 1-based index of the first violated inequality in battery order (capped at 254);
/// 255 marks a degenerate (gamma = 0) grid point.
inline std::string scan_pgm(const ScanSpec& spec, unsigned workers = 1) {
  const auto cells = scan_grid(spec, workers);
  std::string out = "P5\n" + std::to_string(spec.nx) + " " + std::to_string(spec.ny) +
                    "\n255\n";
  out.reserve(out.size() + cells.size());
  for (const auto& cell : cells) {
    unsigned char pixel;
    if (cell.verdict_code == 4) pixel = 255;
    else if (cell.first_index == 0) pixel = 0;
    else pixel = static_cast<unsigned char>(std::min<std::size_t>(cell.first_index, 254));
    out += static_cast<char>(pixel);
  }
  return out;
}

} // namespace kleinian
