#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kirwan/cohomology.hpp"
#include "kirwan/matrix.hpp"
#include "kirwan/moment_data.hpp"

namespace kirwan {

/// Residue pairing on the reduced space at `cut`:
///   sum over F with mu(F) > c of Res_{X=0} (eta zeta)|_F / e_F.
/// Values are literal X^{-1} coefficients; no global orientation constant is
/// applied. Nonzero only when deg eta + deg zeta = 2n - 2.
Rational pairing(const ManifoldData& m, const EquivariantClass& eta, const EquivariantClass& zeta,
                 const CutLevel& cut);

struct PairingMatrix {
  Rational cut;
  int degree = 0;
  DegreeBasis rows;  // degree d
  DegreeBasis cols;  // degree 2n - 2 - d
  MatrixQ entries;
};

PairingMatrix pairing_matrix(const ManifoldData& m, const CutLevel& cut, int d);

/// Classes of degree d pairing to zero with everything, as a subspace of
/// coefficient vectors over degree_basis(m, d). Testing against the single
/// complementary degree is exact: every other degree pairs to zero.
Subspace kernel_residue(const ManifoldData& m, const CutLevel& cut, int d);

struct TwKernels {
  Subspace plus;   // classes vanishing on every F with mu(F) > c
  Subspace minus;  // classes vanishing on every F with mu(F) < c
  Subspace sum;
};

TwKernels kernel_tw(const ManifoldData& m, const CutLevel& cut, int d);

struct KernelReport {
  Rational cut;
  int degree = 0;
  std::vector<std::string> basis_labels;
  Subspace residue_kernel;
  Subspace tw_plus;
  Subspace tw_minus;
  Subspace tw_sum;
  bool equal = false;
  int betti = 0;  // dim of degree-d cohomology of the reduced space
  // Set when the kernels disagree: a basis vector of one side missing from
  // the other, in basis coordinates.
  std::optional<VectorQ> witness;
  std::string witness_side;
};

KernelReport kernels_equal(const ManifoldData& m, const CutLevel& cut, int d);

/// Kernel reports for each degree, computed in parallel; result order
/// follows `degrees`.
std::vector<KernelReport> sweep_kernels(const ManifoldData& m, const CutLevel& cut,
                                        const std::vector<int>& degrees);

/// Even degrees 0, 2, ..., 2n - 2.
std::vector<int> sweep_degrees(const ManifoldData& m);

/// Matrix of b_G(F) = alpha_plus(F)|_G scalars over F, G above the cut with
/// Ind >= d + 2. Rows and columns run in descending (moment, name) order, which
/// makes the support condition read as upper triangularity.
struct BMatrix {
  int degree = 0;
  MatrixQ entries;
  std::vector<std::size_t> points;
  std::vector<std::string> labels;
  std::vector<int> m_exponents;  // 2 m_F + 2 + d = Ind(F)
  bool upper_triangular = true;
  bool nonzero_diagonal = true;
  std::vector<std::string> problems;

  bool ok() const { return upper_triangular && nonzero_diagonal; }
};

BMatrix b_matrix(const ManifoldData& m, const CutLevel& cut, int d);

struct DecompositionCertificate {
  Rational cut;
  EquivariantClass eta;
  DegreeBasis basis;
  VectorQ c;               // coordinates of eta over `basis`
  VectorQ b;               // corrections, indexed like `basis` (zero off F_plus)
  VectorQ plus_coords;     // coordinates of eta_plus over `basis`
  VectorQ minus_coords;
  EquivariantClass eta_plus;
  EquivariantClass eta_minus;
  std::optional<BMatrix> bmatrix;  // only when alpha_plus is present
};

/// Splits a kernel class as eta = eta_plus + eta_minus with eta_plus vanishing
/// below the cut and eta_minus vanishing above it.
///
/// Throws NotInImage if eta is not a combination of degree_basis(d),
/// NotInKernel if it pairs nontrivially with some complementary basis class,
/// and InternalContradiction if the final vanishing checks fail (which can
/// only happen for inconsistent alpha tables).
DecompositionCertificate decompose(const ManifoldData& m, const EquivariantClass& eta,
                                   const CutLevel& cut);

/// Coordinates of eta over degree_basis(m, eta.degree); throws NotInImage.
VectorQ image_coordinates(const ManifoldData& m, const DegreeBasis& basis,
                          const EquivariantClass& eta);

namespace reference {

std::vector<KernelReport> sweep_kernels(const ManifoldData& m, const CutLevel& cut,
                                        const std::vector<int>& degrees);

}  // namespace reference

}  // namespace kirwan
