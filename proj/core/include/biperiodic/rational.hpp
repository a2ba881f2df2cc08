#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace biperiodic {

/// Arbitrary-precision exact rational in canonical form.
///
/// The denominator is always positive and coprime to the numerator, and
/// zero is stored as 0/1, so two equal values are also structurally equal.
/// Multiplications and divisions are tallied by MultiplicationCounter.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  /// Throws DomainError when `den` is zero.
  Rational(std::int64_t num, std::int64_t den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& value);

  /// Accepts "p", "-p", "p/q" with decimal digits only. Throws ParseError.
  static Rational parse(std::string_view text);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "num/den", or just "num" when the denominator is one.
  std::string str() const { return value_.get_str(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_;
};

/// x^e for any signed exponent; x^0 == 1. Throws DomainError for 0^(e<0).
Rational rat_pow(const Rational& x, std::int64_t e);

/// Per-thread tally of Rational multiplications and divisions.
///
/// A Scope captures the count accrued on its own thread while it is alive,
/// so concurrent evaluations on different threads never mix counts.
class MultiplicationCounter {
 public:
  class Scope {
   public:
    Scope();
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;
    ~Scope() = default;

    std::uint64_t count() const;

   private:
    std::uint64_t start_;
  };

  static std::uint64_t total();
  static void record(std::uint64_t n = 1);
};

}  // namespace biperiodic
