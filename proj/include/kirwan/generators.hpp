#pragma once

#include <cstdint>
#include <vector>

#include "kirwan/moment_data.hpp"

namespace kirwan {

/// Complex projective space CP^n with the circle acting on homogeneous
/// coordinates with weights lambda_0 < ... < lambda_n.
///
/// Point p_i sits at moment lambda_i with weights lambda_j - lambda_i (j != i).
///   alpha_minus(p_i)|p_k = prod_{j<i} (lambda_j - lambda_k)
///   alpha_plus(p_i)|p_k  = prod_{j>i} (lambda_j - lambda_k)
/// so the diagonals are the negative and positive weight products.
ManifoldData gen_cpn(const std::vector<std::int64_t>& lambda);

/// Product of k two-spheres, factor i rotated with speed w_i != 0.
///
/// Points are sign vectors s in {-,+}^k named "s" followed by the signs, with
/// moment sum_i s_i |w_i| and weights -s_i |w_i|, so the all-minus vertex is
/// the minimum. Each factor contributes y_i (0 at its bottom, -|w_i| at its
/// top) and z_i (|w_i| at its bottom, 0 at its top); alpha_minus(s) is the
/// product of y_i over the + slots and alpha_plus(s) that of z_i over the -
/// slots.
ManifoldData gen_sphere_product(const std::vector<std::int64_t>& w);

}  // namespace kirwan
