#include "netperturb/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace netperturb {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad(const std::string& s) {
  throw std::invalid_argument("malformed cost literal \"" + s + "\"");
}

// cpp_int's string constructor treats a leading zero as a base prefix, so
// feed it the digits with that zero run stripped.
BigInt digits_value(const std::string& s) {
  size_t i = s.find_first_not_of('0');
  if (i == std::string::npos) return BigInt(0);
  return BigInt(s.substr(i));
}

}  // namespace

Rational parse_decimal(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(s);
    BigInt d = digits_value(den);
    if (d == 0) bad(s);
    return Rational(digits_value(num), d);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    if (!all_digits(s)) bad(s);
    return Rational(digits_value(s));
  }
  std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
  if (!all_digits(whole) || !all_digits(frac)) bad(s);
  BigInt scale = 1;
  for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
  return Rational(digits_value(whole) * scale + digits_value(frac), scale);
}

std::string format_rational(const Rational& r) {
  BigInt num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  // Terminating decimal iff den = 2^a * 5^b.
  BigInt d = den;
  int a = 0, b = 0;
  while (d % 2 == 0) { d /= 2; ++a; }
  while (d % 5 == 0) { d /= 5; ++b; }
  if (d != 1) return num.str() + "/" + den.str();
  int k = a > b ? a : b;
  BigInt scale = 1;
  for (int i = 0; i < k; ++i) scale *= 10;
  BigInt scaled = num * (scale / den);
  std::string digits = scaled.str();
  if (static_cast<int>(digits.size()) <= k)
    digits.insert(0, k + 1 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - k) + "." +
                    digits.substr(digits.size() - k);
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return out;
}

}  // namespace netperturb
