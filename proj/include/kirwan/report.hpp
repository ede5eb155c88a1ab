#pragma once

#include <string>
#include <vector>

#include "kirwan/json_io.hpp"
#include "kirwan/kirwan.hpp"

namespace kirwan {

// JSON and markdown renderings of results. All scalars are "p/q" strings and
// all orderings follow the manifold's (moment, name) order, so output is
// byte-for-byte reproducible.

Json subspace_json(const Subspace& s);
Json kernel_report_json(const KernelReport& r);
Json pairing_matrix_json(const PairingMatrix& pm);
Json b_matrix_json(const BMatrix& b);
Json certificate_json(const ManifoldData& m, const DecompositionCertificate& cert);
Json validation_json(const ManifoldData& m, const ValidationReport& r);

enum class KernelMethod { Residue, Tw, Both };

std::string kernel_table_markdown(const ManifoldData& m, const Rational& cut,
                                  const std::vector<KernelReport>& reports, KernelMethod method);
std::string betti_table_markdown(const ManifoldData& m, const Rational& cut,
                                 const std::vector<KernelReport>& reports);
std::string pairing_matrix_markdown(const PairingMatrix& pm);
std::string b_matrix_markdown(const BMatrix& b);
std::string certificate_markdown(const ManifoldData& m, const DecompositionCertificate& cert);
std::string validation_markdown(const ManifoldData& m, const ValidationReport& r);

}  // namespace kirwan
