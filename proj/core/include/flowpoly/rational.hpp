#pragma once

// Exact arithmetic primitives: arbitrary-precision integers and rationals.
//
// `Int` is GMP's mpz_class. `Rational` wraps mpq_class so that the value is
// always in lowest terms with a positive denominator, no matter how it was
// constructed. All arithmetic is exact; there is no floating point anywhere
// in this library.

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace flowpoly {

using Int = mpz_class;

/// Thrown for domain errors (empty polytopes, malformed input, ...).
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}            // NOLINT: implicit by design
  Rational(long n) : q_(n) {}           // NOLINT
  Rational(const Int& n) : q_(n) {}     // NOLINT
  Rational(const Int& num, const Int& den) : q_(num, den) {
    if (den == 0) throw domain_error("Rational: zero denominator");
    q_.canonicalize();
  }

  const Int num() const { return q_.get_num(); }
  const Int den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Largest integer <= *this.
  Int floor() const {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }
  /// Smallest integer >= *this.
  Int ceil() const {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.q_ == 0) throw domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  /// "p/q" in lowest terms, or just "p" for integers.
  std::string str() const;
  /// Parses "p", "-p", or "p/q"; throws domain_error on malformed input.
  static Rational parse(const std::string& s);

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;  // invariant: canonical (lowest terms, positive denominator)
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

}  // namespace flowpoly
