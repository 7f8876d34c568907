#include "linarr/rational.hpp"

#include <cctype>

#include "linarr/error.hpp"

namespace linarr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::duplicate_line: return "duplicate-line";
    case ErrorKind::not_bipencil: return "not-bipencil";
    case ErrorKind::unknown_reference: return "unknown-reference";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::non_isolated: return "non-isolated-singularity";
    case ErrorKind::inconclusive: return "inconclusive";
    case ErrorKind::missing_datum: return "missing-datum";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) ||
      (!den.empty() && (den.front() == '-' || den.front() == '+'))) {
    throw Error(ErrorKind::parse, "malformed rational '" + std::string(text) + "'");
  }
  const Integer denominator = to_integer(den);
  if (denominator == 0) {
    throw Error(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(to_integer(num), denominator);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational frac(const Rational& value) {
  Integer floor_value;
  mpz_fdiv_q(floor_value.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  Rational r = value - Rational(floor_value);
  r.canonicalize();
  return r;
}

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  return mpz_probab_prime_p(Integer(std::to_string(value)).get_mpz_t(), 30) != 0;
}

}  // namespace linarr
