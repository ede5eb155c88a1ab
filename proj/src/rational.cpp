#include "kirwan/rational.hpp"

#include <cctype>
#include <ostream>

#include "kirwan/error.hpp"

namespace kirwan {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) {
    throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroEuler: return "ZeroEuler";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SingularDiagonal: return "SingularDiagonal";
    case ErrorKind::NotTriangular: return "NotTriangular";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Schema: return "SchemaError";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::NotRegularValue: return "NotRegularValue";
    case ErrorKind::UnknownFixedPoint: return "UnknownFixedPoint";
    case ErrorKind::OddDegree: return "OddDegree";
    case ErrorKind::Spec: return "SpecError";
    case ErrorKind::MissingAlphaPlus: return "MissingAlphaPlus";
    case ErrorKind::NotInImage: return "NotInImage";
    case ErrorKind::NotInKernel: return "NotInKernel";
    case ErrorKind::InternalContradiction: return "InternalContradiction";
  }
  return "Unknown";
}

}  // namespace kirwan
