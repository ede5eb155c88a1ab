#include "kirwan/kirwan.hpp"

#include <algorithm>
#include <exception>

#include "kirwan/error.hpp"
#include "kirwan/poly.hpp"

namespace kirwan {

namespace {

int complementary_degree(const ManifoldData& m, int d) {
  return 2 * static_cast<int>(m.n()) - 2 - d;
}

// Matrix with rows = the chosen fixed points, cols = basis classes.
MatrixQ evaluation_at(const DegreeBasis& basis, const std::vector<std::size_t>& points) {
  MatrixQ e(points.size(), basis.size());
  for (std::size_t r = 0; r < points.size(); ++r)
    for (std::size_t i = 0; i < basis.size(); ++i) e.at(r, i) = basis.classes[i].scalars[points[r]];
  return e;
}

// Solves sum_j x_j basis[sel_j]|_{source(sel_i)} = rhs_i over the selected
// basis entries. Ordering by descending moment makes the system upper
// triangular: alpha_minus(F) only reaches points at or above mu(F).
VectorQ solve_on_sources(const DegreeBasis& basis, const std::vector<std::size_t>& selected,
                         const VectorQ& rhs_by_point) {
  const std::size_t k = selected.size();
  MatrixQ a(k, k);
  VectorQ rhs(k);
  for (std::size_t r = 0; r < k; ++r) {
    const std::size_t row_sel = selected[k - 1 - r];
    const std::size_t g = basis.sources[row_sel];
    rhs[r] = rhs_by_point[g];
    for (std::size_t c = 0; c < k; ++c) a.at(r, c) = basis.classes[selected[k - 1 - c]].scalars[g];
  }
  VectorQ x_desc = solve_upper_triangular(a, rhs);
  VectorQ x(k);
  for (std::size_t r = 0; r < k; ++r) x[k - 1 - r] = std::move(x_desc[r]);
  return x;
}

std::optional<VectorQ> missing_vector(const Subspace& from, const Subspace& in) {
  for (std::size_t i = 0; i < from.dim(); ++i)
    if (!in.contains(from.basis().row(i))) return from.basis().row_vector(i);
  return std::nullopt;
}

}  // namespace

Rational pairing(const ManifoldData& m, const EquivariantClass& eta, const EquivariantClass& zeta,
                 const CutLevel& cut) {
  const FixedPointSplit split = split_fixed_points(m, cut);
  const EquivariantClass prod = multiply(eta, zeta);
  if (prod.degree < 0 || prod.degree % 2 != 0) return Rational();
  const auto power = static_cast<std::size_t>(prod.degree / 2);
  Rational total;
  for (std::size_t f : split.plus) {
    if (prod.scalars[f].is_zero()) continue;
    const EulerClass e = euler_class(m.point(f));
    total += residue_at_zero(Poly::monomial(prod.scalars[f], power), e.epsilon, e.n);
  }
  return total;
}

PairingMatrix pairing_matrix(const ManifoldData& m, const CutLevel& cut, int d) {
  PairingMatrix pm;
  pm.cut = cut.value();
  pm.degree = d;
  pm.rows = degree_basis(m, d);
  pm.cols = degree_basis(m, complementary_degree(m, d));
  pm.entries = MatrixQ(pm.rows.size(), pm.cols.size());
  for (std::size_t i = 0; i < pm.rows.size(); ++i)
    for (std::size_t j = 0; j < pm.cols.size(); ++j)
      pm.entries.at(i, j) = pairing(m, pm.rows.classes[i], pm.cols.classes[j], cut);
  return pm;
}

Subspace kernel_residue(const ManifoldData& m, const CutLevel& cut, int d) {
  return nullspace(pairing_matrix(m, cut, d).entries.transpose());
}

TwKernels kernel_tw(const ManifoldData& m, const CutLevel& cut, int d) {
  const FixedPointSplit split = split_fixed_points(m, cut);
  const DegreeBasis basis = degree_basis(m, d);
  TwKernels k;
  k.plus = nullspace(evaluation_at(basis, split.plus));
  k.minus = nullspace(evaluation_at(basis, split.minus));
  k.sum = subspace_sum(k.plus, k.minus);
  return k;
}

KernelReport kernels_equal(const ManifoldData& m, const CutLevel& cut, int d) {
  KernelReport r;
  r.cut = cut.value();
  r.degree = d;
  const DegreeBasis basis = degree_basis(m, d);
  r.basis_labels = basis.labels;
  r.residue_kernel = kernel_residue(m, cut, d);
  TwKernels tw = kernel_tw(m, cut, d);
  r.tw_plus = std::move(tw.plus);
  r.tw_minus = std::move(tw.minus);
  r.tw_sum = std::move(tw.sum);
  r.equal = r.residue_kernel == r.tw_sum;
  r.betti = static_cast<int>(basis.size()) - static_cast<int>(r.residue_kernel.dim());
  if (!r.equal) {
    if (auto w = missing_vector(r.residue_kernel, r.tw_sum)) {
      r.witness = std::move(w);
      r.witness_side = "residue kernel class outside K+ + K-";
    } else if (auto w2 = missing_vector(r.tw_sum, r.residue_kernel)) {
      r.witness = std::move(w2);
      r.witness_side = "K+ + K- class outside residue kernel";
    }
  }
  return r;
}

std::vector<int> sweep_degrees(const ManifoldData& m) {
  std::vector<int> out;
  for (int d = 0; d <= 2 * static_cast<int>(m.n()) - 2; d += 2) out.push_back(d);
  return out;
}

std::vector<KernelReport> sweep_kernels(const ManifoldData& m, const CutLevel& cut,
                                        const std::vector<int>& degrees) {
  std::vector<KernelReport> out(degrees.size());
  std::exception_ptr failure;
  const auto count = static_cast<long>(degrees.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = kernels_equal(m, cut, degrees[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(kirwan_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

namespace reference {

std::vector<KernelReport> sweep_kernels(const ManifoldData& m, const CutLevel& cut,
                                        const std::vector<int>& degrees) {
  std::vector<KernelReport> out;
  out.reserve(degrees.size());
  for (int d : degrees) out.push_back(kernels_equal(m, cut, d));
  return out;
}

}  // namespace reference

BMatrix b_matrix(const ManifoldData& m, const CutLevel& cut, int d) {
  if (!m.alpha_plus())
    throw Error(ErrorKind::MissingAlphaPlus, "B matrix needs alpha_plus restriction data");
  const FixedPointSplit split = split_fixed_points(m, cut);
  BMatrix b;
  b.degree = d;
  for (auto it = split.plus.rbegin(); it != split.plus.rend(); ++it) {
    const int ind = morse_index(m.point(*it));
    if (ind < d + 2) continue;
    b.points.push_back(*it);
    b.labels.push_back(m.point(*it).name);
    b.m_exponents.push_back((ind - 2 - d) / 2);
  }
  const std::size_t k = b.points.size();
  b.entries = MatrixQ(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) b.entries.at(r, c) = m.alpha_plus()->at(b.points[r], b.points[c]);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < r; ++c) {
      if (!b.entries.at(r, c).is_zero()) {
        b.upper_triangular = false;
        b.problems.push_back("b_" + b.labels[c] + "(" + b.labels[r] + ") = " +
                             b.entries.at(r, c).str() + " below the diagonal");
      }
    }
    if (b.entries.at(r, r).is_zero()) {
      b.nonzero_diagonal = false;
      b.problems.push_back("zero diagonal entry at " + b.labels[r]);
    }
  }
  return b;
}

VectorQ image_coordinates(const ManifoldData& m, const DegreeBasis& basis,
                          const EquivariantClass& eta) {
  if (eta.scalars.size() != m.size())
    throw Error(ErrorKind::DimensionMismatch, "class has wrong number of restrictions");
  if (eta.degree % 2 != 0 || eta.degree < 0) {
    if (eta.is_zero()) return {};
    throw Error(ErrorKind::NotInImage, "nonzero class of odd or negative degree");
  }
  std::vector<std::size_t> all(basis.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  VectorQ coords = solve_on_sources(basis, all, eta.scalars);
  const EquivariantClass rebuilt = combine(m, basis, coords);
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (rebuilt.scalars[k] != eta.scalars[k])
      throw Error(ErrorKind::NotInImage, "class is not in the degree-" + std::to_string(eta.degree) +
                                             " image: restriction at " + m.point(k).name +
                                             " is not matched by the alpha basis");
  }
  return coords;
}

DecompositionCertificate decompose(const ManifoldData& m, const EquivariantClass& eta,
                                   const CutLevel& cut) {
  const FixedPointSplit split = split_fixed_points(m, cut);
  DecompositionCertificate cert;
  cert.cut = cut.value();
  cert.eta = eta;
  cert.basis = degree_basis(m, eta.degree);
  cert.c = image_coordinates(m, cert.basis, eta);

  const DegreeBasis dual = degree_basis(m, complementary_degree(m, eta.degree));
  for (std::size_t j = 0; j < dual.size(); ++j) {
    const Rational v = pairing(m, eta, dual.classes[j], cut);
    if (!v.is_zero())
      throw Error(ErrorKind::NotInKernel,
                  "class pairs to " + v.str() + " with " + dual.labels[j]);
  }

  const std::size_t size = cert.basis.size();
  cert.plus_coords.assign(size, Rational());
  cert.minus_coords.assign(size, Rational());
  std::vector<std::size_t> plus_entries;
  for (std::size_t i = 0; i < size; ++i) {
    if (split.is_plus[cert.basis.sources[i]]) {
      cert.plus_coords[i] = cert.c[i];
      plus_entries.push_back(i);
    } else {
      cert.minus_coords[i] = cert.c[i];
    }
  }

  // Corrections b_F, F above the cut with Ind(F) <= d: clear eta_minus on
  // those points, lowest moment first (back substitution order).
  const EquivariantClass initial_minus = combine(m, cert.basis, cert.minus_coords);
  const VectorQ corrections = solve_on_sources(cert.basis, plus_entries, initial_minus.scalars);
  cert.b.assign(size, Rational());
  for (std::size_t k = 0; k < plus_entries.size(); ++k) {
    const std::size_t i = plus_entries[k];
    cert.b[i] = corrections[k];
    cert.minus_coords[i] -= corrections[k];
    cert.plus_coords[i] += corrections[k];
  }
  cert.eta_minus = combine(m, cert.basis, cert.minus_coords);
  cert.eta_plus = combine(m, cert.basis, cert.plus_coords);

  for (std::size_t f : split.plus)
    if (!cert.eta_minus.scalars[f].is_zero())
      throw Error(ErrorKind::InternalContradiction,
                  "eta_minus does not vanish at " + m.point(f).name + " above the cut");
  for (std::size_t f : split.minus)
    if (!cert.eta_plus.scalars[f].is_zero())
      throw Error(ErrorKind::InternalContradiction,
                  "eta_plus does not vanish at " + m.point(f).name + " below the cut");
  for (std::size_t k = 0; k < m.size(); ++k)
    if (cert.eta_minus.scalars[k] + cert.eta_plus.scalars[k] != eta.scalars[k])
      throw Error(ErrorKind::InternalContradiction, "eta_plus + eta_minus != eta");

  if (m.alpha_plus()) cert.bmatrix = b_matrix(m, cut, eta.degree);
  return cert;
}

}  // namespace kirwan
