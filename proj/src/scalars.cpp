#include "bdforge/scalars.hpp"

#include <cctype>
#include <stdexcept>

#include "bdforge/errors.hpp"

namespace bdforge {

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  std::string text(s);
  if (text[0] == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text), mpz_class(1));
  const mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
  return Rational(std::move(r));
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Rational result(1);
  Rational base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const { return value_.get_str(10); }

bool is_square_in_Q(const Rational& x) {
  if (x.sign() < 0) return false;
  if (x.is_zero()) return true;
  const mpz_class num = x.numerator();
  const mpz_class den = x.denominator();
  return mpz_perfect_square_p(num.get_mpz_t()) != 0 && mpz_perfect_square_p(den.get_mpz_t()) != 0;
}

bool is_squarefree(long d) {
  if (d == 0) return false;
  unsigned long n = d < 0 ? static_cast<unsigned long>(-(d + 1)) + 1UL : static_cast<unsigned long>(d);
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    while (n % p == 0) n /= p;
  }
  return true;
}

QuadExt::QuadExt(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d == 1 || !is_squarefree(d)) {
    throw InvalidArgument("quadratic extension needs a squarefree non-square d, got " + std::to_string(d));
  }
}

long QuadExt::merge_field(const QuadExt& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  throw InvalidArgument("mixing Q(sqrt " + std::to_string(d_) + ") with Q(sqrt " + std::to_string(o.d_) + ")");
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  d_ = merge_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  d_ = merge_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  const long d = merge_field(o);
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ *= o.a_;
  } else {
    Rational a = a_ * o.a_ + Rational(d) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
  }
  d_ = d;
  return *this;
}

QuadExt QuadExt::conjugate() const {
  QuadExt r = *this;
  r.b_ = -r.b_;
  return r;
}

Rational QuadExt::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  const Rational n = norm().inverse();
  QuadExt r = conjugate();
  r.a_ *= n;
  r.b_ *= n;
  return r;
}

std::string QuadExt::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string out = a_.to_string();
  out += b_.sign() < 0 ? "-" : "+";
  out += b_.abs().to_string();
  out += "*sqrt(" + std::to_string(d_) + ")";
  return out;
}

QuadExt QuadExt::parse(std::string_view text) {
  const auto root = text.find("sqrt(");
  if (root == std::string_view::npos) return QuadExt(Rational::parse(text));
  if (text.back() != ')') throw ParseError("malformed quadratic scalar '" + std::string(text) + "'");
  const std::string_view d_text = text.substr(root + 5, text.size() - root - 6);
  const mpz_class d = parse_integer(d_text);
  if (!d.fits_slong_p()) throw ParseError("discriminant out of range");
  // "a+b*sqrt(d)", with a and "b*" optional
  std::string_view head = text.substr(0, root);
  const bool explicit_b = !head.empty() && head.back() == '*';
  if (explicit_b) head.remove_suffix(1);
  std::size_t split = 0;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
      split = i;
      break;
    }
  }
  Rational a = split ? Rational::parse(head.substr(0, split)) : Rational(0);
  std::string_view b_text = head.substr(split);
  bool negative = false;
  if (!b_text.empty() && (b_text[0] == '+' || b_text[0] == '-')) {
    negative = b_text[0] == '-';
    b_text.remove_prefix(1);
  }
  if (explicit_b == b_text.empty()) throw ParseError("malformed quadratic scalar '" + std::string(text) + "'");
  Rational b = explicit_b ? Rational::parse(b_text) : Rational(1);
  if (negative) b = -b;
  return QuadExt(std::move(a), std::move(b), d.get_si());
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return x.b_.is_zero() || x.d_ == y.d_;
}

QuadExt quad_conjugate(const QuadExt& x) { return x.conjugate(); }

}  // namespace bdforge
