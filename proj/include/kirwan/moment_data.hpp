#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kirwan/matrix.hpp"
#include "kirwan/rational.hpp"

namespace kirwan {

/// An isolated fixed point of the circle action.
struct FixedPoint {
  std::string name;
  Rational moment;
  std::vector<std::int64_t> weights;  // isotropy weights, all nonzero
};

/// Restriction scalars of a family of classes indexed by fixed points:
/// entry (i, k) is the scalar of class(i) restricted to point k, both in the
/// manifold's (moment, name) order.
using RestrictionTable = MatrixQ;

/// Localization datum of a Hamiltonian circle action with isolated fixed
/// points. Points are kept sorted by (moment, name).
///
/// The Morse function is the moment map itself, so the index of a point is
/// twice its number of negative weights, alpha_minus(F) is supported on
/// points at or above mu(F) and alpha_plus(F) on points at or below it.
class ManifoldData {
 public:
  /// Sorts the points (permuting the tables along) and checks structural
  /// invariants. Does not run alpha-basis validation.
  static ManifoldData create(std::string name, int orientation_direction,
                             std::vector<FixedPoint> points, RestrictionTable alpha_minus,
                             std::optional<RestrictionTable> alpha_plus);

  const std::string& name() const { return name_; }
  std::size_t n() const { return n_; }
  int orientation_direction() const { return orientation_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<FixedPoint>& fixed_points() const { return points_; }
  const FixedPoint& point(std::size_t i) const { return points_[i]; }
  const RestrictionTable& alpha_minus() const { return alpha_minus_; }
  const std::optional<RestrictionTable>& alpha_plus() const { return alpha_plus_; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws UnknownFixedPoint

  /// Index census: fixed points with Morse index Ind(F) <= d.
  std::vector<std::size_t> points_with_index_at_most(int d) const;

  // Returns a copy with the given tables swapped in; used for tampering tests.
  ManifoldData with_tables(RestrictionTable alpha_minus,
                           std::optional<RestrictionTable> alpha_plus) const;

 private:
  std::string name_;
  std::size_t n_ = 0;
  int orientation_ = 1;
  std::vector<FixedPoint> points_;
  RestrictionTable alpha_minus_;
  std::optional<RestrictionTable> alpha_plus_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
};

int morse_index(const FixedPoint& fp);

struct EulerClass {
  Rational epsilon;
  std::size_t n = 0;
};

/// e_F = epsilon * X^n with epsilon the product of all weights.
EulerClass euler_class(const FixedPoint& fp);

Rational negative_euler_scalar(const FixedPoint& fp);
Rational positive_euler_scalar(const FixedPoint& fp);

/// A regular value of the moment map.
class CutLevel {
 public:
  // Throws NotRegularValue if c equals the moment value of any fixed point.
  CutLevel(const ManifoldData& m, Rational c);

  const Rational& value() const { return c_; }

 private:
  Rational c_;
};

struct FixedPointSplit {
  std::vector<std::size_t> plus;   // mu(F) > c
  std::vector<std::size_t> minus;  // mu(F) < c
  std::vector<bool> is_plus;       // indexed by fixed point
};

FixedPointSplit split_fixed_points(const ManifoldData& m, const CutLevel& cut);

/// Non-fatal structural observations (e.g. no index-0 point).
std::vector<std::string> census_warnings(const ManifoldData& m);

}  // namespace kirwan
