// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All checks are exact; there are no tolerances.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kirwan/error.hpp"
#include "kirwan/json_io.hpp"
#include "kirwan/kirwan.hpp"
#include "support.hpp"

using namespace kirwan;
using testsupport::q;

namespace {

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}

  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_++ == 0) first_failure_ = what;
  }

  bool report(const std::string& detail) const {
    const bool pass = failures_ == 0 && checks_ > 0;
    std::cout << (pass ? "PASS " : "FAIL ") << title_ << " -- " << checks_ << " checks";
    if (!detail.empty()) std::cout << ", " << detail;
    if (!pass)
      std::cout << "; " << failures_ << " failed, first: "
                << (checks_ == 0 ? std::string("no checks ran") : first_failure_);
    std::cout << "\n";
    return pass;
  }

 private:
  std::string title_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

std::string where(const ManifoldData& m, const CutLevel& cut, int d) {
  return m.name() + " c=" + cut.value().str() + " d=" + std::to_string(d);
}

// Kernel-agreement sweep plus the duality and directness observations that ride
// on the same kernel reports.
struct SweepChecks {
  Criterion* theorem;
  Criterion* duality;
  Criterion* directness;
};

void sweep_and_check(const ManifoldData& m, const CutLevel& cut, const SweepChecks& c) {
  const std::vector<KernelReport> reports = sweep_kernels(m, cut, sweep_degrees(m));
  for (const auto& r : reports) {
    c.theorem->check(r.equal, where(m, cut, r.degree));
    c.directness->check(subspace_intersection(r.tw_plus, r.tw_minus).is_zero(),
                        where(m, cut, r.degree));
  }
  for (std::size_t i = 0; i < reports.size(); ++i)
    c.duality->check(reports[i].betti == reports[reports.size() - 1 - i].betti,
                     where(m, cut, reports[i].degree));
}

VectorQ coords_in(const Subspace& s, const VectorQ& mix) {
  VectorQ v(s.ambient_dim());
  for (std::size_t k = 0; k < s.dim(); ++k)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += mix[k] * s.basis().at(k, i);
  return v;
}

}  // namespace

int main() {
  std::mt19937_64 rng(20020501);
  bool all = true;
  const std::vector<ManifoldData> fixtures = testsupport::standard_fixtures();

  Criterion c1("[1] residue kernel = K+ + K- for CP^n, n = 1..4");
  Criterion c2("[2] residue kernel = K+ + K- for products of 1..3 spheres");
  Criterion c8("[8] Poincare duality betti(d) = betti(2n-2-d)");
  Criterion c9("[9] K+ and K- intersect trivially");

  // [1]
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t cpn_cases = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const ManifoldData m = gen_cpn(testsupport::random_lambda(rng, n));
      for (int k = 0; k < 3; ++k) {
        sweep_and_check(m, testsupport::random_cut(rng, m), {&c1, &c8, &c9});
        ++cpn_cases;
      }
    }
  }
  const double cpn_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c1.check(cpn_seconds < 10.0, "runtime " + std::to_string(cpn_seconds) + " s >= 10 s");
  std::ostringstream c1_detail;
  c1_detail << cpn_cases << " (weights, cut) cases in " << cpn_seconds << " s";
  all &= c1.report(c1_detail.str());

  // [2]
  std::size_t sphere_cases = 0;
  std::vector<std::vector<std::int64_t>> sphere_specs = {{1, 1}, {1}, {1, 1, 1}, {2, -2, 1}};
  for (std::size_t k = 1; k <= 3; ++k)
    for (int trial = 0; trial < 20; ++trial) sphere_specs.push_back(testsupport::random_sphere_weights(rng, k));
  for (const auto& w : sphere_specs) {
    const ManifoldData m = gen_sphere_product(w);
    std::vector<CutLevel> cuts = testsupport::all_gap_cuts(m);
    for (int k = 0; k < 3; ++k) cuts.push_back(testsupport::random_cut(rng, m));
    for (const auto& cut : cuts) {
      sweep_and_check(m, cut, {&c2, &c8, &c9});
      ++sphere_cases;
    }
  }
  all &= c2.report(std::to_string(sphere_cases) + " (weights, cut) cases incl. tied w = [1,1]");

  // [3] regression values from hand-written fixtures
  Criterion c3("[3] regression fixtures");
  {
    const ManifoldData cp2 = load_manifold(testsupport::read_fixture("cp2.json"));
    const CutLevel upper(cp2, Rational(3, 2));
    const EquivariantClass one = unit_class(cp2);
    const EquivariantClass a1{2, cp2.alpha_minus().row_vector(cp2.index_of("p1"))};
    const EquivariantClass x = combine(cp2, degree_basis(cp2, 2), q({1, 0}));
    c3.check(pairing(cp2, a1, one, upper) == Rational(-1), "CP2 c=3/2 pairing(a-(p1), 1)");
    c3.check(pairing(cp2, x, one, upper) == Rational(1, 2), "CP2 c=3/2 pairing(X, 1)");
    const Subspace k2 = kernel_residue(cp2, upper, 2);
    const DegreeBasis b2 = degree_basis(cp2, 2);
    c3.check(k2.dim() == 1 &&
                 combine(cp2, b2, k2.basis().row_vector(0)).scalars ==
                     VectorQ{Rational(1), Rational(1, 2), Rational(0)},
             "CP2 c=3/2 K^2 = span{(2,1,0)}");
    const auto up = sweep_kernels(cp2, upper, {0, 2});
    c3.check(up[0].betti == 1 && up[1].betti == 1, "CP2 c=3/2 betti (1,1)");

    const CutLevel lower(cp2, Rational(1, 2));
    const auto low = sweep_kernels(cp2, lower, {0, 2, 4});
    c3.check(low[1].residue_kernel.dim() == 1, "CP2 c=1/2 dim K^2 = 1");
    c3.check(low[2].residue_kernel.dim() == 3, "CP2 c=1/2 dim K^4 = 3");
    c3.check(low[0].betti == 1 && low[1].betti == 1 && low[2].betti == 0, "CP2 c=1/2 betti (1,1,0)");

    const ManifoldData cp1 = load_manifold(testsupport::read_fixture("cp1.json"));
    const CutLevel mid(cp1, Rational(1, 2));
    const auto r = sweep_kernels(cp1, mid, {0, 2});
    c3.check(r[0].betti == 1, "CP1 c=1/2 betti (1)");
    c3.check(r[1].residue_kernel == Subspace::whole(2), "CP1 c=1/2 K^2 is everything");
    c3.check(r[1].tw_plus == Subspace::span(2, {q({1, 1})}), "CP1 K+ = span{X + a-(p1)}");
    c3.check(r[1].tw_minus == Subspace::span(2, {q({0, 1})}), "CP1 K- = span{a-(p1)}");
  }
  all &= c3.report("CP^2 at 3/2 and 1/2, CP^1 at 1/2");

  // [4]
  Criterion c4("[4] localization sum vanishes below the top degree; single-entry mutations break it");
  for (int trial = 0; trial < 1000; ++trial) {
    const ManifoldData& m = fixtures[static_cast<std::size_t>(trial) % fixtures.size()];
    std::uniform_int_distribution<int> half(0, static_cast<int>(m.n()) - 1);
    const int d = 2 * half(rng);
    const DegreeBasis b = degree_basis(m, d);
    EquivariantClass eta = combine(m, b, testsupport::random_vector(rng, b.size()));
    c4.check(!localization_sum(m, eta).obstructed, m.name() + " d=" + std::to_string(d));
    std::uniform_int_distribution<std::size_t> pick(0, m.size() - 1);
    Rational delta = testsupport::random_rational(rng);
    if (delta.is_zero()) delta = Rational(1, 3);
    eta.scalars[pick(rng)] += delta;
    c4.check(localization_sum(m, eta).obstructed, "mutation not detected on " + m.name());
  }
  for (const auto& m : fixtures) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      EquivariantClass one = unit_class(m);
      one.scalars[k] += Rational(1);
      c4.check(localization_sum(m, one).obstructed, "unit mutation at " + m.point(k).name);
    }
  }
  all &= c4.report("1000 random classes over " + std::to_string(fixtures.size()) + " fixtures");

  // [5]
  Criterion c5("[5] residues above and below the cut cancel in degree 2n-2");
  for (const auto& m : fixtures) {
    const CutLevel cut = testsupport::random_interior_cut(rng, m);
    const auto split = split_fixed_points(m, cut);
    const int d = 2 * static_cast<int>(m.n()) - 2;
    const DegreeBasis b = degree_basis(m, d);
    for (int trial = 0; trial < 500; ++trial) {
      const EquivariantClass eta = combine(m, b, testsupport::random_vector(rng, b.size()));
      auto side_sum = [&](const std::vector<std::size_t>& side) {
        Rational s;
        for (std::size_t f : side) {
          const EulerClass e = euler_class(m.point(f));
          s += residue_at_zero(Poly::monomial(eta.scalars[f], m.n() - 1), e.epsilon, e.n);
        }
        return s;
      };
      c5.check((side_sum(split.plus) + side_sum(split.minus)).is_zero(), where(m, cut, d));
    }
  }
  all &= c5.report("500 classes per fixture");

  // [6]
  Criterion c6("[6] decompose splits kernel classes and rejects non-kernel classes");
  std::size_t decomposed = 0;
  std::size_t rejected = 0;
  for (const auto& m : fixtures) {
    std::size_t kernel_done = 0;
    std::size_t reject_done = 0;
    for (int attempt = 0; attempt < 2000 && (kernel_done < 100 || reject_done < 20); ++attempt) {
      const CutLevel cut = testsupport::random_interior_cut(rng, m);
      const auto split = split_fixed_points(m, cut);
      std::uniform_int_distribution<int> half(0, static_cast<int>(m.n()));
      const int d = 2 * half(rng);
      const DegreeBasis b = degree_basis(m, d);
      const Subspace k = kernel_residue(m, cut, d);
      if (kernel_done < 100 && k.dim() > 0) {
        const EquivariantClass eta =
            combine(m, b, coords_in(k, testsupport::random_vector(rng, k.dim())));
        try {
          const DecompositionCertificate cert = decompose(m, eta, cut);
          bool ok = true;
          for (std::size_t f = 0; f < m.size(); ++f) {
            ok &= cert.eta_plus.scalars[f] + cert.eta_minus.scalars[f] == eta.scalars[f];
            if (split.is_plus[f]) ok &= cert.eta_minus.scalars[f].is_zero();
            else ok &= cert.eta_plus.scalars[f].is_zero();
          }
          c6.check(ok, "bad split at " + where(m, cut, d));
        } catch (const Error& e) {
          c6.check(false, std::string(e.what()) + " at " + where(m, cut, d));
        }
        ++kernel_done;
      }
      if (reject_done < 20 && k.dim() < b.size()) {
        const EquivariantClass eta = combine(m, b, testsupport::random_vector(rng, b.size()));
        if (k.contains(image_coordinates(m, b, eta))) continue;
        bool raised = false;
        try {
          decompose(m, eta, cut);
        } catch (const Error& e) {
          raised = e.kind() == ErrorKind::NotInKernel;
        }
        c6.check(raised, "NotInKernel not raised at " + where(m, cut, d));
        ++reject_done;
      }
    }
    c6.check(kernel_done >= 100, "fewer than 100 kernel samples on " + m.name());
    c6.check(reject_done >= 20, "fewer than 20 non-kernel samples on " + m.name());
    decomposed += kernel_done;
    rejected += reject_done;
  }
  all &= c6.report(std::to_string(decomposed) + " decompositions, " + std::to_string(rejected) +
                   " rejections");

  // [7]
  Criterion c7("[7] B matrix is upper triangular with nonzero diagonal");
  std::size_t nonempty = 0;
  for (const auto& m : fixtures) {
    for (const auto& cut : testsupport::all_gap_cuts(m)) {
      for (int d = 0; d <= 2 * static_cast<int>(m.n()) - 2; d += 2) {
        const BMatrix b = b_matrix(m, cut, d);
        if (b.points.empty()) continue;
        ++nonempty;
        c7.check(b.ok(), where(m, cut, d) + ": " + (b.problems.empty() ? "" : b.problems.front()));
      }
    }
  }
  all &= c7.report(std::to_string(nonempty) + " nonempty index sets");

  // [8], [9] also cover every regular gap of the fixture family.
  for (const auto& m : fixtures)
    for (const auto& cut : testsupport::all_gap_cuts(m)) {
      Criterion scratch("fixture sweep");
      sweep_and_check(m, cut, {&scratch, &c8, &c9});
    }
  all &= c8.report("all generated data and cuts from [1], [2] plus every fixture gap");
  all &= c9.report("every computed degree");

  std::cout << (all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << "\n";
  return all ? 0 : 1;
}
