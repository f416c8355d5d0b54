#include "nobeling/scalar.hpp"

#include <stdexcept>
#include <utility>

#include "nobeling/errors.hpp"

namespace nobeling {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw ParseError("not an integer literal: '" + std::string(s) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

Scalar::Scalar(long long v) {
  // mpq_class has no long long constructor on every platform.
  q_ = mpq_class(mpz_class(std::to_string(v), 10));
}

Scalar::Scalar(long num, long den) : Scalar(mpz_class(num), mpz_class(den)) {}

Scalar::Scalar(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0) throw std::domain_error("zero denominator");
  q_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar(parse_integer(text));
  const std::string_view den = text.substr(slash + 1);
  if (!den.empty() && (den[0] == '-' || den[0] == '+')) {
    throw ParseError("sign belongs on the numerator: '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Scalar(parse_integer(text.substr(0, slash)), d);
}

Scalar Scalar::pow2(long exponent) {
  mpz_class p = 1;
  const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e);
  return exponent >= 0 ? Scalar(p) : Scalar(mpz_class(1), p);
}

Scalar Scalar::abs() const {
  Scalar r;
  r.q_ = ::abs(q_);
  return r;
}

mpz_class Scalar::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string Scalar::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Scalar::to_decimal(unsigned digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class scaled;
  const mpz_class num = ::abs(q_.get_num()) * scale;
  mpz_tdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), q_.get_den_mpz_t());
  std::string body = scaled.get_str();
  if (digits > 0) {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  return (sign() < 0 ? "-" : "") + body;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  q_ += o.q_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  q_ -= o.q_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  q_ *= o.q_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.q_ = -q_;
  return r;
}

Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

mpz_class height(const Scalar& s) {
  const mpz_class n = ::abs(s.numerator());
  const mpz_class d = s.denominator();
  return n > d ? n : d;
}

}  // namespace nobeling
