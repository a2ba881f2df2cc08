#include "biperiodic/rational.hpp"

#include <ostream>

#include "biperiodic/errors.hpp"

namespace biperiodic {
namespace {

thread_local std::uint64_t t_multiplications = 0;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_.get_num() = num;
  value_.get_den() = den;
  value_.canonicalize();
}

Rational::Rational(const mpz_class& value) : value_(value) {}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num_part = body;
  std::string_view den_part = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_part = body.substr(0, slash);
    den_part = body.substr(slash + 1);
  }
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw ParseError("not an exact rational literal: '" + std::string(text) +
                     "' (expected p or p/q)");
  }
  mpz_class num(std::string(num_part), 10);
  mpz_class den(std::string(den_part), 10);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  MultiplicationCounter::record();
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  MultiplicationCounter::record();
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rat_pow(const Rational& x, std::int64_t e) {
  if (e == 0) return Rational(1);
  if (x.is_zero()) {
    if (e < 0) throw DomainError("zero raised to a negative power");
    return Rational(0);
  }
  const unsigned long magnitude =
      e < 0 ? 0 - static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  mpz_class num;
  mpz_class den;
  // Powers of coprime integers stay coprime, so no gcd pass is needed.
  mpz_pow_ui(num.get_mpz_t(), x.numerator().get_mpz_t(), magnitude);
  mpz_pow_ui(den.get_mpz_t(), x.denominator().get_mpz_t(), magnitude);
  MultiplicationCounter::record();
  if (e < 0) std::swap(num, den);
  return Rational(num, den);
}

MultiplicationCounter::Scope::Scope() : start_(t_multiplications) {}

std::uint64_t MultiplicationCounter::Scope::count() const {
  return t_multiplications - start_;
}

std::uint64_t MultiplicationCounter::total() { return t_multiplications; }

void MultiplicationCounter::record(std::uint64_t n) { t_multiplications += n; }

}  // namespace biperiodic
