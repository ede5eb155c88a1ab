#include "kirwan/cohomology.hpp"

#include "kirwan/error.hpp"

namespace kirwan {

bool EquivariantClass::is_zero() const {
  for (const auto& s : scalars)
    if (!s.is_zero()) return false;
  return true;
}

EquivariantClass zero_class(const ManifoldData& m, int degree) {
  return {degree, VectorQ(m.size())};
}

EquivariantClass unit_class(const ManifoldData& m) { return {0, VectorQ(m.size(), Rational(1))}; }

MatrixQ DegreeBasis::evaluation() const {
  const std::size_t cols = classes.empty() ? 0 : classes.front().scalars.size();
  MatrixQ e(classes.size(), cols);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t k = 0; k < cols; ++k) e.at(i, k) = classes[i].scalars[k];
  return e;
}

namespace {

std::string basis_label(int power, const std::string& point) {
  std::string x;
  if (power == 1) x = "X ";
  else if (power > 1) x = "X^" + std::to_string(power) + " ";
  return x + "a-(" + point + ")";
}

}  // namespace

DegreeBasis degree_basis(const ManifoldData& m, int d) {
  DegreeBasis b;
  b.degree = d;
  if (d < 0) return b;
  if (d % 2 != 0) {
    b.odd_degree = true;
    return b;
  }
  for (std::size_t f : m.points_with_index_at_most(d)) {
    const int power = (d - morse_index(m.point(f))) / 2;
    b.sources.push_back(f);
    b.classes.push_back({d, m.alpha_minus().row_vector(f)});
    b.labels.push_back(basis_label(power, m.point(f).name));
  }
  return b;
}

EquivariantClass combine(const ManifoldData& m, const DegreeBasis& basis,
                         std::span<const Rational> coeffs) {
  if (coeffs.size() != basis.size())
    throw Error(ErrorKind::DimensionMismatch, "coefficient count does not match basis size");
  EquivariantClass out = zero_class(m, basis.degree);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (std::size_t k = 0; k < m.size(); ++k)
      if (!basis.classes[i].scalars[k].is_zero()) out.scalars[k] += coeffs[i] * basis.classes[i].scalars[k];
  }
  return out;
}

Rational restrict(const ManifoldData& m, const EquivariantClass& eta, std::string_view point) {
  return eta.scalars.at(m.index_of(point));
}

EquivariantClass multiply(const EquivariantClass& eta, const EquivariantClass& zeta) {
  if (eta.scalars.size() != zeta.scalars.size())
    throw Error(ErrorKind::DimensionMismatch, "classes live on different manifolds");
  EquivariantClass out{eta.degree + zeta.degree, VectorQ(eta.scalars.size())};
  for (std::size_t k = 0; k < out.scalars.size(); ++k) out.scalars[k] = eta.scalars[k] * zeta.scalars[k];
  return out;
}

LocalizationResult localization_sum(const ManifoldData& m, const EquivariantClass& eta) {
  // Every summand is a_F / eps_F times the same power X^{d/2 - n}.
  Rational total;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (eta.scalars[k].is_zero()) continue;
    total += eta.scalars[k] / euler_class(m.point(k)).epsilon;
  }
  LocalizationResult r;
  const long power = eta.degree / 2 - static_cast<long>(m.n());
  if (power >= 0) {
    r.value = Poly::monomial(total, static_cast<std::size_t>(power));
  } else if (!total.is_zero()) {
    r.obstructed = true;
    r.obstruction = total;
    r.obstruction_power = power;
  }
  return r;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::MinusSupport: return "alpha_minus support";
    case ViolationKind::MinusDiagonal: return "alpha_minus diagonal";
    case ViolationKind::PlusSupport: return "alpha_plus support";
    case ViolationKind::PlusDiagonal: return "alpha_plus diagonal";
    case ViolationKind::Localization: return "localization";
  }
  return "unknown";
}

namespace {

void check_table(const ManifoldData& m, const RestrictionTable& table, bool minus,
                 ValidationReport& report) {
  const std::string tag = minus ? "alpha_minus" : "alpha_plus";
  const auto& pts = m.fixed_points();
  for (std::size_t f = 0; f < m.size(); ++f) {
    for (std::size_t g = 0; g < m.size(); ++g) {
      if (g == f || table.at(f, g).is_zero()) continue;
      const bool wrong_side = minus ? pts[g].moment < pts[f].moment : pts[g].moment > pts[f].moment;
      const bool same_level = pts[g].moment == pts[f].moment;
      if (wrong_side || same_level) {
        report.violations.push_back(
            {minus ? ViolationKind::MinusSupport : ViolationKind::PlusSupport,
             tag + "(" + pts[f].name + ") restricts to " + table.at(f, g).str() + " at " +
                 pts[g].name + (same_level ? " on the same level" : " on the wrong side")});
      }
    }
    const Rational expected = minus ? negative_euler_scalar(pts[f]) : positive_euler_scalar(pts[f]);
    if (table.at(f, f) != expected) {
      report.violations.push_back(
          {minus ? ViolationKind::MinusDiagonal : ViolationKind::PlusDiagonal,
           tag + "(" + pts[f].name + ")|" + pts[f].name + " = " + table.at(f, f).str() +
               " but the " + (minus ? "negative" : "positive") + " weight product is " +
               expected.str()});
    }
  }
}

void check_products(const ManifoldData& m, const RestrictionTable& table, bool minus,
                    ValidationReport& report) {
  const std::string tag = minus ? "alpha_minus" : "alpha_plus";
  const int top = 2 * static_cast<int>(m.n());
  for (std::size_t f = 0; f < m.size(); ++f) {
    const int df = minus ? morse_index(m.point(f)) : top - morse_index(m.point(f));
    for (std::size_t g = f; g < m.size(); ++g) {
      const int dg = minus ? morse_index(m.point(g)) : top - morse_index(m.point(g));
      const EquivariantClass prod =
          multiply({df, table.row_vector(f)}, {dg, table.row_vector(g)});
      const LocalizationResult loc = localization_sum(m, prod);
      if (loc.obstructed) {
        report.violations.push_back(
            {ViolationKind::Localization,
             tag + "(" + m.point(f).name + ") * " + tag + "(" + m.point(g).name +
                 ") has localization pole " + loc.obstruction.str() + " X^" +
                 std::to_string(loc.obstruction_power)});
      }
    }
  }
}

}  // namespace

ValidationReport validate_alpha_basis(const ManifoldData& m) {
  ValidationReport report;
  report.warnings = census_warnings(m);
  check_table(m, m.alpha_minus(), true, report);
  if (m.alpha_plus()) check_table(m, *m.alpha_plus(), false, report);
  check_products(m, m.alpha_minus(), true, report);
  if (m.alpha_plus()) check_products(m, *m.alpha_plus(), false, report);
  return report;
}

}  // namespace kirwan
