#include "linarr/cyclo.hpp"

#include <string>

#include "linarr/error.hpp"

namespace linarr {

IntPoly poly_multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

IntPoly poly_divide_exact(const IntPoly& dividend, const IntPoly& divisor) {
  if (divisor.empty() || divisor.back() != 1) {
    throw Error(ErrorKind::internal, "poly_divide_exact needs a monic divisor");
  }
  if (dividend.size() < divisor.size()) throw Error(ErrorKind::internal, "inexact division");
  IntPoly rem = dividend;
  IntPoly quotient(dividend.size() - divisor.size() + 1, Integer(0));
  for (std::size_t i = quotient.size(); i-- > 0;) {
    const Integer c = rem[i + divisor.size() - 1];
    quotient[i] = c;
    for (std::size_t j = 0; j < divisor.size(); ++j) rem[i + j] -= c * divisor[j];
  }
  for (const auto& c : rem) {
    if (c != 0) throw Error(ErrorKind::internal, "inexact division");
  }
  return quotient;
}

IntPoly cyclotomic_polynomial(unsigned k) {
  if (k == 0) throw Error(ErrorKind::invalid_argument, "cyclotomic index must be >= 1");
  // t^k - 1 divided by Phi_j for every proper divisor j.
  IntPoly p(k + 1, Integer(0));
  p[0] = -1;
  p[k] = 1;
  for (unsigned j = 1; j < k; ++j) {
    if (k % j == 0) p = poly_divide_exact(p, cyclotomic_polynomial(j));
  }
  return p;
}

IntPoly CycloPoly::expand() const {
  IntPoly out{Integer(1)};
  const IntPoly linear{Integer(-1), Integer(1)};
  for (unsigned i = 0; i < trivial_exponent; ++i) out = poly_multiply(out, linear);
  for (const auto& [k, e] : cyclotomic) {
    const IntPoly phi = cyclotomic_polynomial(k);
    for (unsigned i = 0; i < e; ++i) out = poly_multiply(out, phi);
  }
  return out;
}

std::string CycloPoly::factored_string() const {
  std::string out;
  if (trivial_exponent > 0) {
    out = "(t-1)";
    if (trivial_exponent > 1) out += "^" + std::to_string(trivial_exponent);
  }
  for (const auto& [k, e] : cyclotomic) {
    if (!out.empty()) out += "*";
    out += "Phi_" + std::to_string(k) + "(t)";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

CycloPoly generic_alexander_shape(unsigned d, unsigned r, const std::map<unsigned, unsigned>& e) {
  if (r < 1) throw Error(ErrorKind::invalid_argument, "r must be >= 1");
  if (d < 1) throw Error(ErrorKind::invalid_argument, "d must be >= 1");
  CycloPoly poly;
  poly.d = d;
  poly.trivial_exponent = r - 1;
  for (const auto& [k, exponent] : e) {
    if (k <= 1 || d % k != 0) {
      throw Error(ErrorKind::invalid_argument,
                  "cyclotomic index " + std::to_string(k) + " does not divide " + std::to_string(d));
    }
    if (exponent > 0) poly.cyclotomic[k] = exponent;
  }
  return poly;
}

std::string to_string(const IntPoly& p) {
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    const bool negative = p[i] < 0;
    const Integer magnitude = abs(p[i]);
    if (negative) out += "-";
    else if (!out.empty()) out += "+";
    if (i == 0 || magnitude != 1) {
      out += magnitude.get_str();
      if (i > 0) out += "*";
    }
    if (i > 0) out += i == 1 ? "t" : "t^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace linarr
