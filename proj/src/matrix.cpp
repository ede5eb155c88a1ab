#include "kirwan/matrix.hpp"

#include <sstream>

#include "kirwan/error.hpp"

namespace kirwan {

namespace {

// Below this many entries the OpenMP fork costs more than the row updates.
constexpr std::size_t kParallelEntries = 2048;

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::DimensionMismatch, what);
}

}  // namespace

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatrixQ MatrixQ::from_rows(const std::vector<VectorQ>& rows, std::size_t cols) {
  MatrixQ m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, "ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

VectorQ MatrixQ::row_vector(std::size_t i) const {
  auto r = row(i);
  return VectorQ(r.begin(), r.end());
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

VectorQ MatrixQ::apply(std::span<const Rational> v) const {
  require(v.size() == cols_, "matrix-vector size mismatch");
  VectorQ out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

void MatrixQ::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
  require(a.cols() == b.rows(), "matrix product size mismatch");
  MatrixQ out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

RrefResult rref(const MatrixQ& m) {
  MatrixQ a = m;
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const bool parallel = rows * cols >= kParallelEntries;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && a.at(p, col).is_zero()) ++p;
    if (p == rows) continue;
    a.swap_rows(r, p);
    const Rational inv = Rational(1) / a.at(r, col);
    for (std::size_t j = col; j < cols; ++j) a.at(r, j) *= inv;

    const auto n_rows = static_cast<long>(rows);
#pragma omp parallel for schedule(static) if (parallel)
    for (long i = 0; i < n_rows; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (ui == r || a.at(ui, col).is_zero()) continue;
      const Rational f = a.at(ui, col);
      for (std::size_t j = col; j < cols; ++j) {
        if (!a.at(r, j).is_zero()) a.at(ui, j) -= f * a.at(r, j);
      }
    }
    pivots.push_back(col);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

namespace reference {

RrefResult rref(const MatrixQ& m) {
  MatrixQ a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t p = r;
    while (p < a.rows() && a.at(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a.at(i, col).is_zero()) continue;
      const Rational f = a.at(i, col) / a.at(r, col);
      for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t col = pivots[k];
    const Rational inv = Rational(1) / a.at(k, col);
    for (std::size_t j = col; j < a.cols(); ++j) a.at(k, j) *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      if (a.at(i, col).is_zero()) continue;
      const Rational f = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return {std::move(a), std::move(pivots)};
}

}  // namespace reference

Subspace Subspace::span(const MatrixQ& generators) {
  RrefResult rr = rref(generators);
  Subspace s;
  s.basis_ = MatrixQ(rr.rank(), generators.cols());
  for (std::size_t i = 0; i < rr.rank(); ++i)
    for (std::size_t j = 0; j < generators.cols(); ++j) s.basis_.at(i, j) = rr.reduced.at(i, j);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<VectorQ>& vectors) {
  return span(MatrixQ::from_rows(vectors, ambient));
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s;
  s.basis_ = MatrixQ::identity(ambient);
  return s;
}

bool Subspace::contains(std::span<const Rational> v) const {
  require(v.size() == ambient_dim(), "vector outside ambient space");
  // Reduce v against the RREF basis; v is in the span iff nothing is left.
  VectorQ rest(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    std::size_t pivot = 0;
    while (basis_.at(i, pivot).is_zero()) ++pivot;
    if (rest[pivot].is_zero()) continue;
    const Rational f = rest[pivot];
    for (std::size_t j = pivot; j < ambient_dim(); ++j) rest[j] -= f * basis_.at(i, j);
  }
  for (const auto& x : rest)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis().row(i))) return false;
  return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), "subspace ambient mismatch");
  MatrixQ stacked(a.dim() + b.dim(), a.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient_dim(); ++j) stacked.at(i, j) = a.basis().at(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient_dim(); ++j)
      stacked.at(a.dim() + i, j) = b.basis().at(i, j);
  return Subspace::span(stacked);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), "subspace ambient mismatch");
  // x A = y B  <=>  (x, y) [A; -B] = 0, i.e. (x, y) in the nullspace of [A; -B]^T.
  const std::size_t n = a.ambient_dim();
  MatrixQ system(n, a.dim() + b.dim());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < a.dim(); ++i) system.at(j, i) = a.basis().at(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i) system.at(j, a.dim() + i) = -b.basis().at(i, j);
  }
  const Subspace coeffs = nullspace(system);
  MatrixQ vectors(coeffs.dim(), n);
  for (std::size_t k = 0; k < coeffs.dim(); ++k)
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Rational& x = coeffs.basis().at(k, i);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) vectors.at(k, j) += x * a.basis().at(i, j);
    }
  return Subspace::span(vectors);
}

Subspace nullspace(const MatrixQ& m) {
  const RrefResult rr = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<VectorQ> vectors;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    VectorQ v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) v[rr.pivots[k]] = -rr.reduced.at(k, free);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(cols, vectors);
}

VectorQ solve_upper_triangular(const MatrixQ& m, std::span<const Rational> rhs) {
  const std::size_t n = m.rows();
  require(m.cols() == n && rhs.size() == n, "triangular solve needs a square system");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (!m.at(i, j).is_zero())
        throw Error(ErrorKind::NotTriangular, "nonzero entry below the diagonal at (" +
                                                  std::to_string(i) + "," + std::to_string(j) + ")");
    if (m.at(i, i).is_zero())
      throw Error(ErrorKind::SingularDiagonal, "zero diagonal entry at " + std::to_string(i));
  }
  VectorQ x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j)
      if (!m.at(i, j).is_zero()) acc -= m.at(i, j) * x[j];
    x[i] = acc / m.at(i, i);
  }
  return x;
}

std::string to_string(const MatrixQ& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "") << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m.at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace kirwan
