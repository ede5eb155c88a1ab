#include "kirwan/generators.hpp"

#include <cstdlib>
#include <string>

#include "kirwan/error.hpp"

namespace kirwan {

namespace {

Rational q(std::int64_t v) { return Rational(static_cast<long>(v)); }

std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

ManifoldData gen_cpn(const std::vector<std::int64_t>& lambda) {
  if (lambda.size() < 2) throw Error(ErrorKind::Spec, "CP^n needs at least two weights");
  for (std::size_t i = 1; i < lambda.size(); ++i)
    if (lambda[i] <= lambda[i - 1])
      throw Error(ErrorKind::Spec, "lambda must be strictly increasing");

  const std::size_t count = lambda.size();
  std::vector<FixedPoint> points;
  for (std::size_t i = 0; i < count; ++i) {
    FixedPoint fp{"p" + std::to_string(i), q(lambda[i]), {}};
    for (std::size_t j = 0; j < count; ++j)
      if (j != i) fp.weights.push_back(lambda[j] - lambda[i]);
    points.push_back(std::move(fp));
  }
  RestrictionTable minus(count, count);
  RestrictionTable plus(count, count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t k = 0; k < count; ++k) {
      Rational lo(1);
      for (std::size_t j = 0; j < i; ++j) lo *= q(lambda[j] - lambda[k]);
      Rational hi(1);
      for (std::size_t j = i + 1; j < count; ++j) hi *= q(lambda[j] - lambda[k]);
      minus.at(i, k) = lo;
      plus.at(i, k) = hi;
    }
  }
  return ManifoldData::create("CP" + std::to_string(count - 1) + "(" + join(lambda) + ")", 1,
                              std::move(points), std::move(minus), std::move(plus));
}

ManifoldData gen_sphere_product(const std::vector<std::int64_t>& w) {
  if (w.empty()) throw Error(ErrorKind::Spec, "sphere product needs at least one factor");
  for (auto x : w)
    if (x == 0) throw Error(ErrorKind::Spec, "sphere rotation weights must be nonzero");
  if (w.size() > 20) throw Error(ErrorKind::Spec, "too many sphere factors");

  const std::size_t k = w.size();
  const std::size_t count = std::size_t{1} << k;
  auto top = [](std::size_t mask, std::size_t i) { return ((mask >> i) & 1U) != 0; };

  std::vector<FixedPoint> points;
  for (std::size_t s = 0; s < count; ++s) {
    FixedPoint fp{"s", Rational(), {}};
    for (std::size_t i = 0; i < k; ++i) {
      const std::int64_t a = std::llabs(w[i]);
      fp.name += top(s, i) ? '+' : '-';
      fp.moment += top(s, i) ? q(a) : q(-a);
      fp.weights.push_back(top(s, i) ? -a : a);
    }
    points.push_back(std::move(fp));
  }
  RestrictionTable minus(count, count);
  RestrictionTable plus(count, count);
  for (std::size_t s = 0; s < count; ++s) {
    for (std::size_t t = 0; t < count; ++t) {
      Rational y(1);
      Rational z(1);
      for (std::size_t i = 0; i < k; ++i) {
        const std::int64_t a = std::llabs(w[i]);
        if (top(s, i)) y *= top(t, i) ? q(-a) : Rational();
        else z *= top(t, i) ? Rational() : q(a);
      }
      minus.at(s, t) = y;
      plus.at(s, t) = z;
    }
  }
  return ManifoldData::create("S2^" + std::to_string(k) + "(" + join(w) + ")", 1, std::move(points),
                              std::move(minus), std::move(plus));
}

}  // namespace kirwan
