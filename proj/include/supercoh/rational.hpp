#ifndef SUPERCOH_RATIONAL_HPP
#define SUPERCOH_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace supercoh {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (q > 0) into a canonical rational.
/// Returns nullopt on anything else, including whitespace and "+".
inline std::optional<Rational> parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  if (!digits(num)) return std::nullopt;
  if (slash != std::string_view::npos) {
    std::string_view den = body.substr(slash + 1);
    if (!digits(den)) return std::nullopt;
    if (den.find_first_not_of('0') == std::string_view::npos) return std::nullopt;
  }
  Rational value;
  if (value.set_str(std::string(text), 10) != 0) return std::nullopt;
  value.canonicalize();
  return value;
}

/// p/q reduced to lowest terms with a positive denominator; q != 0.
inline Rational ratio(long p, long q) {
  if (q == 0) throw std::domain_error("ratio: zero denominator");
  Rational value(p, q);
  value.canonicalize();
  return value;
}

/// Canonical "p" or "p/q" form. Round-trips through parse_rational.
inline std::string to_string(const Rational& value) { return value.get_str(); }

} // namespace supercoh

#endif
