#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kirwan/matrix.hpp"
#include "kirwan/moment_data.hpp"
#include "kirwan/poly.hpp"

namespace kirwan {

/// Homogeneous class of even degree d, stored by restriction scalars:
/// scalars[i] = a_F for the i-th fixed point, meaning eta|_F = a_F X^{d/2}.
struct EquivariantClass {
  int degree = 0;
  VectorQ scalars;

  bool is_zero() const;
  friend bool operator==(const EquivariantClass&, const EquivariantClass&) = default;
};

EquivariantClass zero_class(const ManifoldData& m, int degree);
EquivariantClass unit_class(const ManifoldData& m);

/// The classes X^{n_F} alpha_minus(F), 2 n_F = d - Ind(F), for every F with
/// Ind(F) <= d, in (moment, name) order. This is our model of the degree-d
/// piece of H_T(M). Odd degrees give an empty basis with odd_degree set.
struct DegreeBasis {
  int degree = 0;
  bool odd_degree = false;
  std::vector<std::size_t> sources;  // fixed point index of each alpha_minus(F)
  std::vector<EquivariantClass> classes;
  std::vector<std::string> labels;

  std::size_t size() const { return classes.size(); }
  // rows = basis classes, cols = fixed points
  MatrixQ evaluation() const;
};

DegreeBasis degree_basis(const ManifoldData& m, int d);

/// sum_i coeffs[i] * basis.classes[i]
EquivariantClass combine(const ManifoldData& m, const DegreeBasis& basis,
                         std::span<const Rational> coeffs);

Rational restrict(const ManifoldData& m, const EquivariantClass& eta, std::string_view point);

EquivariantClass multiply(const EquivariantClass& eta, const EquivariantClass& zeta);

/// Result of sum_F eta|_F / e_F. When the sum has a pole, `obstructed` is set
/// and `obstruction` is the coefficient of X^{obstruction_power} (< 0).
struct LocalizationResult {
  bool obstructed = false;
  Poly value;
  Rational obstruction;
  long obstruction_power = 0;
};

LocalizationResult localization_sum(const ManifoldData& m, const EquivariantClass& eta);

enum class ViolationKind { MinusSupport, MinusDiagonal, PlusSupport, PlusDiagonal, Localization };

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> warnings;
  bool ok() const { return violations.empty(); }
};

/// Checks the alpha tables: supports, diagonals equal to the negative
/// (positive) weight products, and localization consistency of products of
/// basis classes. Every violation is listed.
ValidationReport validate_alpha_basis(const ManifoldData& m);

}  // namespace kirwan
