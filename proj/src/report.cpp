#include "kirwan/report.hpp"

#include <sstream>

namespace kirwan {

namespace {

Json vector_json(const VectorQ& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json matrix_json(const MatrixQ& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row_vector(i)));
  return out;
}

std::string scalars_text(const ManifoldData& m, const EquivariantClass& eta) {
  std::string s;
  for (std::size_t k = 0; k < m.size(); ++k)
    s += (k ? ", " : "") + m.point(k).name + ": " + eta.scalars[k].str();
  return s;
}

constexpr const char* kConventionNote =
    "pairing values are literal X^-1 coefficients under the fixed residue convention";

}  // namespace

Json subspace_json(const Subspace& s) { return matrix_json(s.basis()); }

Json kernel_report_json(const KernelReport& r) {
  Json j;
  j["cut"] = r.cut.str();
  j["degree"] = r.degree;
  j["basis"] = r.basis_labels;
  j["residue_kernel"] = subspace_json(r.residue_kernel);
  j["tw_plus"] = subspace_json(r.tw_plus);
  j["tw_minus"] = subspace_json(r.tw_minus);
  j["tw_sum"] = subspace_json(r.tw_sum);
  j["equal"] = r.equal;
  j["betti"] = r.betti;
  if (r.witness) {
    j["witness"] = vector_json(*r.witness);
    j["witness_side"] = r.witness_side;
  }
  return j;
}

Json pairing_matrix_json(const PairingMatrix& pm) {
  Json j;
  j["cut"] = pm.cut.str();
  j["degree"] = pm.degree;
  j["rows"] = pm.rows.labels;
  j["cols"] = pm.cols.labels;
  j["entries"] = matrix_json(pm.entries);
  j["note"] = kConventionNote;
  return j;
}

Json b_matrix_json(const BMatrix& b) {
  Json j;
  j["degree"] = b.degree;
  j["points"] = b.labels;
  j["m_exponents"] = b.m_exponents;
  j["entries"] = matrix_json(b.entries);
  j["upper_triangular"] = b.upper_triangular;
  j["nonzero_diagonal"] = b.nonzero_diagonal;
  j["problems"] = b.problems;
  return j;
}

Json certificate_json(const ManifoldData& m, const DecompositionCertificate& cert) {
  Json j;
  j["cut"] = cert.cut.str();
  j["eta"] = class_to_json(m, cert.eta);
  j["basis"] = cert.basis.labels;
  j["c"] = vector_json(cert.c);
  j["b"] = vector_json(cert.b);
  j["eta_plus_coords"] = vector_json(cert.plus_coords);
  j["eta_minus_coords"] = vector_json(cert.minus_coords);
  j["eta_plus"] = class_to_json(m, cert.eta_plus);
  j["eta_minus"] = class_to_json(m, cert.eta_minus);
  if (cert.bmatrix) j["b_matrix"] = b_matrix_json(*cert.bmatrix);
  return j;
}

Json validation_json(const ManifoldData& m, const ValidationReport& r) {
  Json j;
  j["name"] = m.name();
  j["ok"] = r.ok();
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"kind", to_string(x.kind)}, {"message", x.message}});
  j["violations"] = std::move(v);
  j["warnings"] = r.warnings;
  return j;
}

std::string kernel_table_markdown(const ManifoldData& m, const Rational& cut,
                                  const std::vector<KernelReport>& reports, KernelMethod method) {
  std::ostringstream os;
  os << "Kernel of the Kirwan map for " << m.name() << " at c = " << cut.str() << "\n\n";
  os << "| degree | basis dim |";
  if (method != KernelMethod::Tw) os << " dim K (residue) |";
  if (method != KernelMethod::Residue) os << " dim K+ | dim K- | dim K+ + K- |";
  if (method == KernelMethod::Both) os << " equal |";
  os << " betti |\n|---|---|";
  if (method != KernelMethod::Tw) os << "---|";
  if (method != KernelMethod::Residue) os << "---|---|---|";
  if (method == KernelMethod::Both) os << "---|";
  os << "---|\n";
  for (const auto& r : reports) {
    const std::size_t basis_dim = r.basis_labels.size();
    os << "| " << r.degree << " | " << basis_dim << " |";
    if (method != KernelMethod::Tw) os << " " << r.residue_kernel.dim() << " |";
    if (method != KernelMethod::Residue)
      os << " " << r.tw_plus.dim() << " | " << r.tw_minus.dim() << " | " << r.tw_sum.dim() << " |";
    if (method == KernelMethod::Both) os << " " << (r.equal ? "yes" : "NO") << " |";
    const std::size_t k = method == KernelMethod::Tw ? r.tw_sum.dim() : r.residue_kernel.dim();
    os << " " << basis_dim - k << " |\n";
  }
  os << "\nDegrees above " << 2 * static_cast<int>(m.n()) - 2
     << " lie entirely in the kernel (betti 0).\n";
  return os.str();
}

std::string betti_table_markdown(const ManifoldData& m, const Rational& cut,
                                 const std::vector<KernelReport>& reports) {
  std::ostringstream os;
  os << "Betti numbers of the reduced space of " << m.name() << " at c = " << cut.str() << "\n\n";
  os << "| degree |";
  for (const auto& r : reports) os << " " << r.degree << " |";
  os << "\n|---|";
  for (std::size_t i = 0; i < reports.size(); ++i) os << "---|";
  os << "\n| betti |";
  for (const auto& r : reports) os << " " << r.betti << " |";
  os << "\n";
  return os.str();
}

std::string pairing_matrix_markdown(const PairingMatrix& pm) {
  std::ostringstream os;
  os << "Pairing matrix at c = " << pm.cut.str() << ", degree " << pm.degree << " x "
     << pm.cols.degree << " (" << kConventionNote << ")\n\n|  |";
  for (const auto& l : pm.cols.labels) os << " " << l << " |";
  os << "\n|---|";
  for (std::size_t j = 0; j < pm.cols.size(); ++j) os << "---|";
  os << "\n";
  for (std::size_t i = 0; i < pm.rows.size(); ++i) {
    os << "| " << pm.rows.labels[i] << " |";
    for (std::size_t j = 0; j < pm.cols.size(); ++j) os << " " << pm.entries.at(i, j) << " |";
    os << "\n";
  }
  return os.str();
}

std::string b_matrix_markdown(const BMatrix& b) {
  std::ostringstream os;
  os << "B matrix, degree " << b.degree << " (rows F, columns G, descending moment)\n\n|  |";
  for (const auto& l : b.labels) os << " " << l << " |";
  os << "\n|---|";
  for (std::size_t j = 0; j < b.labels.size(); ++j) os << "---|";
  os << "\n";
  for (std::size_t i = 0; i < b.labels.size(); ++i) {
    os << "| " << b.labels[i] << " (m=" << b.m_exponents[i] << ") |";
    for (std::size_t j = 0; j < b.labels.size(); ++j) os << " " << b.entries.at(i, j) << " |";
    os << "\n";
  }
  os << "\nupper triangular: " << (b.upper_triangular ? "yes" : "no")
     << ", nonzero diagonal: " << (b.nonzero_diagonal ? "yes" : "no") << "\n";
  for (const auto& p : b.problems) os << "- " << p << "\n";
  return os.str();
}

std::string certificate_markdown(const ManifoldData& m, const DecompositionCertificate& cert) {
  std::ostringstream os;
  os << "Decomposition at c = " << cert.cut.str() << ", degree " << cert.eta.degree << "\n\n";
  os << "| basis class | c | b | eta+ | eta- |\n|---|---|---|---|---|\n";
  for (std::size_t i = 0; i < cert.basis.size(); ++i)
    os << "| " << cert.basis.labels[i] << " | " << cert.c[i] << " | " << cert.b[i] << " | "
       << cert.plus_coords[i] << " | " << cert.minus_coords[i] << " |\n";
  os << "\neta  = " << scalars_text(m, cert.eta) << "\n";
  os << "eta+ = " << scalars_text(m, cert.eta_plus) << "\n";
  os << "eta- = " << scalars_text(m, cert.eta_minus) << "\n";
  if (cert.bmatrix) os << "\n" << b_matrix_markdown(*cert.bmatrix);
  return os.str();
}

std::string validation_markdown(const ManifoldData& m, const ValidationReport& r) {
  std::ostringstream os;
  os << "Validation of " << m.name() << ": " << (r.ok() ? "ok" : "FAILED") << "\n";
  for (const auto& v : r.violations) os << "- [" << to_string(v.kind) << "] " << v.message << "\n";
  for (const auto& w : r.warnings) os << "- warning: " << w << "\n";
  return os.str();
}

}  // namespace kirwan
