#include "g2c/scalar.hpp"

#include <atomic>
#include <cctype>
#include <cstdio>
#include <cstdlib>

namespace g2c {
namespace {

double initial_tolerance() {
  if (const char* env = std::getenv("G2C_TOLERANCE")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0 && std::isfinite(v)) return v;
  }
  return 1e-9;
}

std::atomic<double>& tolerance_slot() {
  static std::atomic<double> tau{initial_tolerance()};
  return tau;
}

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

double tolerance() { return tolerance_slot().load(); }

void set_tolerance(double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw ValidationError("tolerance must be positive and finite");
  tolerance_slot().store(tau);
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw ValidationError("malformed rational '" + std::string(text) + "' (expected \"p/q\" or \"p\")");

  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ValidationError("malformed rational '" + std::string(text) + "': zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(double x) {
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace g2c
