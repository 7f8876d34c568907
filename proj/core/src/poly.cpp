#include "linarr/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "linarr/error.hpp"

namespace linarr {

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly::Poly(std::vector<std::string> variables) : variables_(std::move(variables)) {}

Poly Poly::constant(std::vector<std::string> variables, const Rational& c) {
  Poly p(std::move(variables));
  p.add_term(Exponents(p.variable_count(), 0), c);
  return p;
}

Poly Poly::variable(std::vector<std::string> variables, std::size_t index) {
  Poly p(std::move(variables));
  Exponents e(p.variable_count(), 0);
  e.at(index) = 1;
  p.add_term(e, Rational(1));
  return p;
}

Poly Poly::monomial(std::vector<std::string> variables, Exponents e, const Rational& c) {
  Poly p(std::move(variables));
  if (e.size() != p.variable_count()) {
    throw Error(ErrorKind::invalid_argument, "exponent vector does not match variables");
  }
  p.add_term(e, c);
  return p;
}

std::optional<std::size_t> Poly::variable_index(std::string_view name) const {
  const auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::require_same_ring(const Poly& other) const {
  if (variables_ != other.variables_) {
    throw Error(ErrorKind::invalid_argument, "polynomials over different variable sets");
  }
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  require_same_ring(other);
  Poly product(variables_);
  Exponents e(variables_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      product.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(variables_, Rational(1));
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly Poly::shifted(const Exponents& shift) const {
  Poly p(variables_);
  Exponents e(variables_.size());
  for (const auto& [ea, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + shift[i];
    p.terms_.emplace_hint(p.terms_.end(), e, c);
  }
  return p;
}

Poly Poly::derivative(std::size_t variable) const {
  if (variable >= variables_.size()) {
    throw Error(ErrorKind::invalid_argument, "derivative with respect to an unknown variable");
  }
  Poly d(variables_);
  for (const auto& [e, c] : terms_) {
    if (e[variable] == 0) continue;
    Exponents lowered = e;
    --lowered[variable];
    d.add_term(lowered, c * e[variable]);
  }
  return d;
}

std::optional<unsigned> Poly::weighted_degree(std::span<const unsigned> weights) const {
  if (terms_.empty()) return std::nullopt;
  if (!weights.empty() && weights.size() != variables_.size()) {
    throw Error(ErrorKind::invalid_argument, "weight vector does not match variables");
  }
  std::optional<unsigned> degree;
  for (const auto& [e, c] : terms_) {
    unsigned d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * (weights.empty() ? 1u : weights[i]);
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != variables_.size()) {
    throw Error(ErrorKind::invalid_argument, "evaluation point has wrong dimension");
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (negative) out += "-";
    else if (!out.empty()) out += "+";
    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += variables_[i];
      if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
    }
    if (monomial.empty()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += monomial;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::vector<std::string> variables)
      : text_(text), variables_(std::move(variables)) {}

  Poly parse() {
    skip_space();
    if (pos_ == text_.size()) throw Error(ErrorKind::parse, "empty polynomial");
    Poly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::parse, what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expression() {
    Poly p = term();
    while (true) {
      if (accept('+')) p += term();
      else if (accept('-')) p -= term();
      else return p;
    }
  }

  Poly term() {
    Poly p = unary();
    while (true) {
      if (accept('*')) {
        p *= unary();
      } else if (accept('/')) {
        const Poly divisor = unary();
        if (!divisor.is_constant() || divisor.is_zero()) fail("division by a non-constant or zero");
        p *= Rational(1) / divisor.terms().begin()->second;
      } else {
        return p;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("malformed exponent");
    return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
  }

  Poly primary() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly::constant(variables_, Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      const auto it = std::find(variables_.begin(), variables_.end(), name);
      if (it == variables_.end()) {
        throw Error(ErrorKind::parse, "unknown variable '" + name + "'");
      }
      return Poly::variable(variables_, static_cast<std::size_t>(it - variables_.begin()));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::vector<std::string> variables_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::vector<std::string> variables) {
  return PolyParser(text, std::move(variables)).parse();
}

std::vector<Poly> jacobian_generators(const Poly& f) {
  if (f.is_constant()) throw Error(ErrorKind::invalid_argument, "constant polynomial");
  std::vector<Poly> out;
  out.reserve(f.variable_count());
  for (std::size_t i = 0; i < f.variable_count(); ++i) out.push_back(f.derivative(i));
  return out;
}

}  // namespace linarr
