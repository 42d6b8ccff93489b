#pragma once

// Exact integers, rationals and integer polynomials in s = v^2.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qtorb {

using Int = mpz_class;
using Rat = mpq_class;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds num/den in lowest terms with a positive denominator.
Rat make_rat(const Int& num, const Int& den);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rat& r);
std::string to_string(const Int& i);

/// Parses "p", "-p", "p/q". Throws Error on malformed text or q = 0.
Rat parse_rat(std::string_view text);
Int parse_int(std::string_view text);

bool is_integral(const Rat& r);
Int floor(const Rat& r);
/// r - floor(r), always in [0, 1).
Rat frac(const Rat& r);

/// C(n, k); zero when k < 0 or k > n.
Int binom(long n, long k);

/// Univariate polynomial with integer coefficients, coeffs()[i] multiplies s^i.
/// Never stores trailing zeros; the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Int> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Int& c);
  static Poly monomial(const Int& c, std::size_t degree);

  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Int coeff(std::size_t i) const;
  Int eval(const Int& s) const;

  Poly& operator+=(const Poly& q);
  Poly& operator-=(const Poly& q);
  Poly& operator*=(const Poly& q);

  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p);
  friend bool operator==(const Poly& p, const Poly& q) = default;

  /// Human form in s, e.g. "1 + 2s + s^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

Poly pow(const Poly& p, unsigned k);

}  // namespace qtorb
