#pragma once

// Exact Laurent polynomials in the two loop parameters a and b.

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "planar/error.hpp"

namespace planar {

/// Exponent pair (i, j) of the monomial a^i b^j.
struct Exponent {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Finite sum of c * a^i * b^j with rational c. Zero coefficients are never
/// stored, so structural equality is mathematical equality.
class ParamScalar {
 public:
  using Terms = std::map<Exponent, mpq_class>;

  ParamScalar() = default;
  ParamScalar(long value) { add_term({0, 0}, mpq_class(value)); }
  explicit ParamScalar(const mpq_class& value) { add_term({0, 0}, value); }

  static ParamScalar monomial(const mpq_class& c, int i, int j) {
    ParamScalar s;
    s.add_term({i, j}, c);
    return s;
  }
  static ParamScalar monomial(int i, int j) { return monomial(mpq_class(1), i, j); }
  static ParamScalar a() { return monomial(1, 0); }
  static ParamScalar b() { return monomial(0, 1); }
  /// (ab)^k; the Temperley-Lieb loop value is the monomial ab.
  static ParamScalar delta_power(int k) { return monomial(k, k); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_monomial() const { return terms_.size() == 1; }

  /// Coefficient of a^i b^j (zero if absent).
  mpq_class coefficient(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? mpq_class(0) : it->second;
  }

  ParamScalar& operator+=(const ParamScalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  ParamScalar& operator-=(const ParamScalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  ParamScalar& operator*=(const ParamScalar& o) {
    *this = *this * o;
    return *this;
  }

  friend ParamScalar operator+(ParamScalar x, const ParamScalar& y) { return x += y; }
  friend ParamScalar operator-(ParamScalar x, const ParamScalar& y) { return x -= y; }
  friend ParamScalar operator-(const ParamScalar& x) {
    ParamScalar r;
    for (const auto& [e, c] : x.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend ParamScalar operator*(const ParamScalar& x, const ParamScalar& y) {
    ParamScalar r;
    for (const auto& [ex, cx] : x.terms_)
      for (const auto& [ey, cy] : y.terms_) r.add_term({ex.a + ey.a, ex.b + ey.b}, cx * cy);
    return r;
  }

  /// Multiply by c * a^i * b^j without building a temporary scalar.
  ParamScalar scaled(const mpq_class& c, int i, int j) const {
    ParamScalar r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(Exponent{e.a + i, e.b + j}, v * c);
    return r;
  }

  friend bool operator==(const ParamScalar& x, const ParamScalar& y) { return x.terms_ == y.terms_; }

  /// Inverse of a monomial; any other scalar is not a unit of the Laurent ring.
  ParamScalar inverse() const {
    if (!is_monomial()) throw DomainError("only monomials are invertible: " + to_string());
    const auto& [e, c] = *terms_.begin();
    return monomial(mpq_class(1) / c, -e.a, -e.b);
  }

  ParamScalar pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    ParamScalar result(1L), base = *this;
    while (k > 0) {
      if (k & 1) result *= base;
      base *= base;
      k >>= 1;
    }
    return result;
  }

  /// Evaluates at a = a_val, b = b_val. Terms are accumulated in exponent order.
  double eval(double a_val, double b_val) const {
    if (!(a_val > 0.0) || !(b_val > 0.0))
      throw DomainError("evaluation point must have a > 0 and b > 0");
    double sum = 0.0;
    for (const auto& [e, c] : terms_) sum += c.get_d() * std::pow(a_val, e.a) * std::pow(b_val, e.b);
    return sum;
  }

  /// Text form: terms "c*a^i*b^j" joined by " + " / " - ", lexicographic in (i, j).
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      mpq_class mag = abs(c);
      if (first) {
        if (c < 0) out << '-';
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      out << mag.get_str() << "*a^" << e.a << "*b^" << e.b;
      first = false;
    }
    return out.str();
  }

  static ParamScalar parse(std::string_view text);

 private:
  void add_term(Exponent e, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const ParamScalar& s) { return os << s.to_string(); }

namespace detail {

// Grammar (whitespace ignored):
//   sum    := ['+'|'-'] product (('+'|'-') product)*
//   product:= factor ('*' factor)*
//   factor := rational | ('a'|'b') ['^' int] | '(' sum ')'
class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) src_.push_back(ch);
  }

  ParamScalar parse() {
    if (src_.empty()) fail("empty scalar");
    ParamScalar s = sum();
    if (pos_ != src_.size()) fail("unexpected character");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse scalar '" + src_ + "' at offset " + std::to_string(pos_) + ": " + what);
  }
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  ParamScalar sum() {
    ParamScalar total;
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = src_[pos_++] == '-';
    ParamScalar term = product();
    total += negate ? -term : term;
    while (peek() == '+' || peek() == '-') {
      negate = src_[pos_++] == '-';
      term = product();
      total += negate ? -term : term;
    }
    return total;
  }

  ParamScalar product() {
    ParamScalar p = factor();
    while (peek() == '*') {
      ++pos_;
      p *= factor();
    }
    return p;
  }

  ParamScalar factor() {
    char ch = peek();
    if (ch == '(') {
      ++pos_;
      ParamScalar inner = sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (ch == 'a' || ch == 'b') {
      ++pos_;
      int exponent = 1;
      if (peek() == '^') {
        ++pos_;
        exponent = integer();
      }
      return ch == 'a' ? ParamScalar::monomial(exponent, 0) : ParamScalar::monomial(0, exponent);
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return ParamScalar(rational());
    fail("expected factor");
  }

  int integer() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) fail("expected integer exponent");
    return std::stoi(src_.substr(start, pos_ - start));
  }

  mpq_class rational() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      std::size_t den = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == den) fail("expected denominator");
    }
    mpq_class q(src_.substr(start, pos_ - start), 10);
    if (q.get_den() == 0) fail("zero denominator");
    q.canonicalize();
    return q;
  }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ParamScalar ParamScalar::parse(std::string_view text) { return detail::ScalarParser(text).parse(); }

}  // namespace planar
