#pragma once

#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>

#include "kleinian/core.hpp"

namespace kleinian {

// Complex literal grammar: decimals only, optional real part, optional imaginary
// part suffixed "i". Examples: "-3", "0.5+0.8660254i", "2i", "-i", "1-2e-3i".
// A unicode minus sign is accepted and treated as '-'.
inline std::optional<Cplx> parse_complex(std::string_view input) {
  std::string s;
  s.reserve(input.size());
  for (std::size_t k = 0; k < input.size(); ++k) {
    // U+2212 minus sign is e2 88 92 in UTF-8
    if (k + 2 < input.size() && static_cast<unsigned char>(input[k]) == 0xe2 &&
        static_cast<unsigned char>(input[k + 1]) == 0x88 &&
        static_cast<unsigned char>(input[k + 2]) == 0x92) {
      s += '-';
      k += 2;
    } else if (!std::isspace(static_cast<unsigned char>(input[k]))) {
      s += input[k];
    }
  }
  if (s.empty()) return std::nullopt;

  // split into one or two signed terms
  struct Term { double value; bool imaginary; };
  Term terms[2];
  int nterms = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (nterms == 2) return std::nullopt;
    std::size_t start = pos;
    if (s[pos] == '+' || s[pos] == '-') ++pos;
    std::size_t digits_begin = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'))
      ++pos;
    // exponent
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
      std::size_t epos = pos + 1;
      if (epos < s.size() && (s[epos] == '+' || s[epos] == '-')) ++epos;
      if (epos < s.size() && std::isdigit(static_cast<unsigned char>(s[epos]))) {
        ++pos;
        if (s[pos] == '+' || s[pos] == '-') ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      }
    }
    bool imaginary = false;
    if (pos < s.size() && s[pos] == 'i') {
      imaginary = true;
      ++pos;
    }
    std::string_view number(s.data() + start, pos - start - (imaginary ? 1 : 0));
    double value;
    if (digits_begin == pos - (imaginary ? 1 : 0)) {
      // bare "i", "+i", "-i"
      if (!imaginary) return std::nullopt;
      value = (start < digits_begin && s[start] == '-') ? -1.0 : 1.0;
    } else {
      const char* first = number.data();
      const char* last = number.data() + number.size();
      if (*first == '+') ++first; // from_chars rejects a leading '+'
      auto [end, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || end != last) return std::nullopt;
    }
    terms[nterms++] = {value, imaginary};
  }
  if (nterms == 0) return std::nullopt;
  if (nterms == 2 && terms[0].imaginary == terms[1].imaginary) return std::nullopt;

  Cplx out{0.0, 0.0};
  for (int k = 0; k < nterms; ++k) {
    if (terms[k].imaginary) out.imag(terms[k].value);
    else out.real(terms[k].value);
  }
  if (!is_finite(out)) return std::nullopt;
  return out;
}

} // namespace kleinian
