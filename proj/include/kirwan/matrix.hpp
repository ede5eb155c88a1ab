#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kirwan/rational.hpp"

namespace kirwan {

using VectorQ = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static MatrixQ identity(std::size_t n);
  // All rows must have length cols; cols is explicit so zero-row matrices keep a width.
  static MatrixQ from_rows(const std::vector<VectorQ>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  VectorQ row_vector(std::size_t i) const;

  MatrixQ transpose() const;
  VectorQ apply(std::span<const Rational> v) const;
  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const MatrixQ&, const MatrixQ&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);

struct RrefResult {
  MatrixQ reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Exact reduced row echelon form. Row updates for each pivot run in
/// parallel under OpenMP once the matrix is large enough to pay for it.
RrefResult rref(const MatrixQ& m);

/// A linear subspace of Q^ambient stored by its canonical basis: the nonzero
/// rows of an RREF matrix. Two subspaces are equal iff their bases are
/// identical.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : basis_(0, ambient) {}

  static Subspace span(const MatrixQ& generators);
  static Subspace span(std::size_t ambient, const std::vector<VectorQ>& vectors);
  static Subspace whole(std::size_t ambient);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  const MatrixQ& basis() const { return basis_; }
  bool is_zero() const { return dim() == 0; }

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  MatrixQ basis_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

/// Canonical basis of {v : m v = 0}.
Subspace nullspace(const MatrixQ& m);

/// Back substitution for m x = rhs with m upper triangular and an invertible
/// diagonal.
VectorQ solve_upper_triangular(const MatrixQ& m, std::span<const Rational> rhs);

namespace reference {

// Serial two-pass elimination (echelon form, then back elimination). Kept as
// the independent route the parallel kernel is tested against.
RrefResult rref(const MatrixQ& m);

}  // namespace reference

std::string to_string(const MatrixQ& m);

}  // namespace kirwan
