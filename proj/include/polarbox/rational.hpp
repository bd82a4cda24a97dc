#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polarbox {

/// Exact arbitrary-precision rational number.
///
/// Invariant: always stored in lowest terms with a positive denominator.
/// All arithmetic is exact; there is no rounding anywhere in the library.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long v) : q_(v) {}
  Rational(int v) : q_(static_cast<long>(v)) {}

  Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
  }

  Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
  }

  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p", "p/q", with an optional leading sign on either part.
  /// Throws std::invalid_argument on anything else (including "p/0").
  static Rational from_string(std::string_view s);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& mpq() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.q_))); }

  /// "p" when integral, "p/q" otherwise.
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class q_;
};

inline Rational Rational::from_string(std::string_view s) {
  auto is_int_token = [](std::string_view t) {
    if (!t.empty() && (t.front() == '+' || t.front() == '-')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view numpart = s, denpart;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    numpart = s.substr(0, slash);
    denpart = s.substr(slash + 1);
    if (!is_int_token(denpart))
      throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
  }
  if (!is_int_token(numpart))
    throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
  if (numpart.front() == '+') numpart.remove_prefix(1);  // GMP rejects a leading '+'
  if (!denpart.empty() && denpart.front() == '+') denpart.remove_prefix(1);
  mpz_class num(std::string(numpart), 10);
  mpz_class den = denpart.empty() ? mpz_class(1) : mpz_class(std::string(denpart), 10);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(s) + "'");
  return Rational(num, den);
}

inline std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace polarbox
