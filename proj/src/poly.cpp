#include "kirwan/poly.hpp"

#include <algorithm>
#include <sstream>

#include "kirwan/error.hpp"

namespace kirwan {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return Poly(std::move(coeffs));
}

Rational Poly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

std::string Poly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational mag = c.sign() < 0 ? -c : c;
    if (k == 0 || mag != Rational(1)) os << mag.str();
    if (k > 0) os << "X";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

Poly poly_mul(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<Rational> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return Poly(std::move(out));
}

Rational residue_at_zero(const Poly& p, const Rational& epsilon, std::size_t n) {
  if (epsilon.is_zero()) throw Error(ErrorKind::ZeroEuler, "Euler class scalar is zero");
  if (n == 0) return Rational();
  return p.coeff(n - 1) / epsilon;
}

std::vector<Rational> laurent_negative_part(const Poly& p, const Rational& epsilon,
                                            std::size_t n) {
  if (epsilon.is_zero()) throw Error(ErrorKind::ZeroEuler, "Euler class scalar is zero");
  std::vector<Rational> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = p.coeff(k) / epsilon;
  return out;
}

}  // namespace kirwan
