#include "kirwan/moment_data.hpp"

#include <algorithm>
#include <numeric>

#include "kirwan/error.hpp"

namespace kirwan {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::Validation, what); }

}  // namespace

ManifoldData ManifoldData::create(std::string name, int orientation_direction,
                                  std::vector<FixedPoint> points, RestrictionTable alpha_minus,
                                  std::optional<RestrictionTable> alpha_plus) {
  if (points.empty()) invalid("manifold has no fixed points");
  if (orientation_direction != 1 && orientation_direction != -1)
    invalid("orientation_direction must be 1 or -1");
  const std::size_t n = points.front().weights.size();
  for (const auto& fp : points) {
    if (fp.weights.empty()) invalid("weights must be nonempty at '" + fp.name + "'");
    if (fp.weights.size() != n) invalid("weight count differs at '" + fp.name + "'");
    for (auto w : fp.weights)
      if (w == 0) invalid("weights must be nonzero at '" + fp.name + "'");
  }
  const std::size_t count = points.size();
  if (alpha_minus.rows() != count || alpha_minus.cols() != count)
    invalid("alpha_minus table has wrong shape");
  if (alpha_plus && (alpha_plus->rows() != count || alpha_plus->cols() != count))
    invalid("alpha_plus table has wrong shape");

  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].moment != points[b].moment) return points[a].moment < points[b].moment;
    return points[a].name < points[b].name;
  });

  ManifoldData m;
  m.name_ = std::move(name);
  m.n_ = n;
  m.orientation_ = orientation_direction;
  m.alpha_minus_ = RestrictionTable(count, count);
  if (alpha_plus) m.alpha_plus_ = RestrictionTable(count, count);
  for (std::size_t i = 0; i < count; ++i) {
    m.points_.push_back(points[order[i]]);
    for (std::size_t k = 0; k < count; ++k) {
      m.alpha_minus_.at(i, k) = alpha_minus.at(order[i], order[k]);
      if (alpha_plus) m.alpha_plus_->at(i, k) = alpha_plus->at(order[i], order[k]);
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (!m.by_name_.emplace(m.points_[i].name, i).second)
      invalid("duplicate fixed point name '" + m.points_[i].name + "'");
  }
  return m;
}

std::optional<std::size_t> ManifoldData::find(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::size_t ManifoldData::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::UnknownFixedPoint, "unknown fixed point '" + std::string(name) + "'");
}

std::vector<std::size_t> ManifoldData::points_with_index_at_most(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (morse_index(points_[i]) <= d) out.push_back(i);
  return out;
}

ManifoldData ManifoldData::with_tables(RestrictionTable alpha_minus,
                                       std::optional<RestrictionTable> alpha_plus) const {
  return create(name_, orientation_, points_, std::move(alpha_minus), std::move(alpha_plus));
}

int morse_index(const FixedPoint& fp) {
  return 2 * static_cast<int>(std::count_if(fp.weights.begin(), fp.weights.end(),
                                            [](std::int64_t w) { return w < 0; }));
}

EulerClass euler_class(const FixedPoint& fp) {
  Rational eps(1);
  for (auto w : fp.weights) eps *= Rational(static_cast<long>(w));
  return {eps, fp.weights.size()};
}

Rational negative_euler_scalar(const FixedPoint& fp) {
  Rational out(1);
  for (auto w : fp.weights)
    if (w < 0) out *= Rational(static_cast<long>(w));
  return out;
}

Rational positive_euler_scalar(const FixedPoint& fp) {
  Rational out(1);
  for (auto w : fp.weights)
    if (w > 0) out *= Rational(static_cast<long>(w));
  return out;
}

CutLevel::CutLevel(const ManifoldData& m, Rational c) : c_(std::move(c)) {
  for (const auto& fp : m.fixed_points())
    if (fp.moment == c_)
      throw Error(ErrorKind::NotRegularValue,
                  "cut " + c_.str() + " equals the moment value of '" + fp.name + "'");
}

FixedPointSplit split_fixed_points(const ManifoldData& m, const CutLevel& cut) {
  FixedPointSplit s;
  s.is_plus.resize(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& mu = m.point(i).moment;
    if (mu == cut.value())
      throw Error(ErrorKind::NotRegularValue, "cut is not regular for this manifold");
    s.is_plus[i] = mu > cut.value();
    (s.is_plus[i] ? s.plus : s.minus).push_back(i);
  }
  return s;
}

std::vector<std::string> census_warnings(const ManifoldData& m) {
  std::vector<std::string> out;
  const int top = 2 * static_cast<int>(m.n());
  int minima = 0;
  int maxima = 0;
  for (const auto& fp : m.fixed_points()) {
    const int ind = morse_index(fp);
    minima += ind == 0;
    maxima += ind == top;
  }
  if (minima < 1) out.emplace_back("no fixed point of index 0 (no minimum)");
  if (maxima < 1) out.emplace_back("no fixed point of index " + std::to_string(top) + " (no maximum)");
  if (minima > 1) out.emplace_back("more than one fixed point of index 0");
  if (maxima > 1) out.emplace_back("more than one fixed point of top index");
  return out;
}

}  // namespace kirwan
