#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "circalg/error.hpp"

namespace circalg {

// Exact rationals. mpq_class keeps values canonical: positive denominator,
// reduced, zero stored as 0/1.
using Rational = mpq_class;

// Accepts "p", "p/q" with an optional sign on p. Surrounding blanks are ignored.
inline Rational parse_rational(std::string_view text) {
  auto is_blank = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_blank(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_blank(text.back())) text.remove_suffix(1);

  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };

  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!digits(den)) throw ParseError("bad rational denominator: '" + std::string(text) + "'");
  }
  std::string_view unsigned_num = num;
  if (!unsigned_num.empty() && (unsigned_num.front() == '-' || unsigned_num.front() == '+')) {
    unsigned_num.remove_prefix(1);
  }
  if (!digits(unsigned_num)) throw ParseError("bad rational: '" + std::string(text) + "'");

  mpz_class p(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class q(1);
  if (!den.empty()) {
    q = mpz_class(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// "p/q", or "p" when q = 1.
inline std::string to_string(Rational r) {
  r.canonicalize();
  return r.get_str(10);
}

}  // namespace circalg
