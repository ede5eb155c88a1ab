#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kirwan/rational.hpp"

namespace kirwan {

// Dense univariate polynomial in the equivariant generator X. Coefficient k
// multiplies X^k; trailing zeros are trimmed so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(const Rational& c, std::size_t power);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t k) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend bool operator==(const Poly&, const Poly&) = default;

  std::string str() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Poly poly_mul(const Poly& p, const Poly& q);

/// Coefficient of X^{-1} in the Laurent expansion of p(X) / (epsilon X^n).
Rational residue_at_zero(const Poly& p, const Rational& epsilon, std::size_t n);

/// Coefficients of X^{-n}, ..., X^{-1} in p(X) / (epsilon X^n). All zero
/// exactly when the quotient is a polynomial.
std::vector<Rational> laurent_negative_part(const Poly& p, const Rational& epsilon,
                                            std::size_t n);

}  // namespace kirwan
