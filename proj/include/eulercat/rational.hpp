#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace eulercat {

// Exact arithmetic substrate. Every characteristic computed by this library
// is a Rational; no floating point appears anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// cpp_rational keeps values in lowest terms with a positive denominator.
inline Rational make_rational(Int num, Int den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rational(std::move(num)) / Rational(std::move(den));
}

// Canonical form: "p/q" in lowest terms, "p" alone when q = 1.
inline std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

inline std::optional<Rational> rational_from_string(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      if (!is_int(text)) return std::nullopt;
      return Rational(Int(std::string(text)));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    Int d{std::string(den)};
    if (d == 0) return std::nullopt;
    return make_rational(Int(std::string(num)), std::move(d));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace eulercat
