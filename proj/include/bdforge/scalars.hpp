#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bdforge {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit by design of scalar towers
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  /// Parses "p" or "p/q" (optional leading sign, no whitespace).
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Throws std::domain_error on zero.
  Rational inverse() const;
  Rational pow(int exponent) const;
  Rational abs() const;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

private:
  mpq_class value_;
};

/// True iff x = q^2 for some rational q (zero counts as a square).
bool is_square_in_Q(const Rational& x);

/// True iff d is nonzero and not divisible by the square of any prime.
bool is_squarefree(long d);

/// Element a + b*sqrt(d) of the quadratic field Q(sqrt d).
///
/// d must be squarefree and different from 0 and 1. A value built from a
/// plain Rational carries no field yet (field() == 0); it adopts the field of
/// the first quadratic value it is combined with. Mixing two different
/// nonzero fields throws InvalidArgument.
class QuadExt {
public:
  QuadExt() = default;
  QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT: rational embedding
  QuadExt(long a) : a_(a) {}                 // NOLINT
  QuadExt(Rational a, Rational b, long d);

  /// sqrt(d) itself.
  static QuadExt sqrt(long d) { return QuadExt(Rational(0), Rational(1), d); }

  /// Parses "p/q", "p/q+r/s*sqrt(d)" or "p/q-r/s*sqrt(d)".
  static QuadExt parse(std::string_view text);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long field() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  /// The nontrivial Galois automorphism: a + b sqrt d -> a - b sqrt d.
  QuadExt conjugate() const;
  /// a^2 - d b^2.
  Rational norm() const;
  QuadExt inverse() const;

  std::string to_string() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend QuadExt operator-(const QuadExt& x) {
    QuadExt r = x;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
  }

  friend bool operator==(const QuadExt& x, const QuadExt& y);

  friend std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.to_string(); }

private:
  long merge_field(const QuadExt& o) const;

  Rational a_;
  Rational b_;
  long d_ = 0;
};

QuadExt quad_conjugate(const QuadExt& x);

// Uniform helpers used by the templated containers.
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }
inline Rational conj(const Rational& x) { return x; }
inline QuadExt conj(const QuadExt& x) { return x.conjugate(); }
inline std::string to_string(const Rational& x) { return x.to_string(); }
inline std::string to_string(const QuadExt& x) { return x.to_string(); }

template <class S>
S parse_scalar(std::string_view text);
template <>
inline Rational parse_scalar<Rational>(std::string_view text) { return Rational::parse(text); }
template <>
inline QuadExt parse_scalar<QuadExt>(std::string_view text) { return QuadExt::parse(text); }

}  // namespace bdforge
