#include "doctest.h"
#include "kirwan/error.hpp"
#include "kirwan/generators.hpp"
#include "kirwan/json_io.hpp"
#include "support.hpp"

using namespace kirwan;
using testsupport::q;

TEST_CASE("gen_cpn on (0,1)") {
  const ManifoldData m = gen_cpn({0, 1});
  REQUIRE(m.size() == 2);
  CHECK(m.point(0).moment == Rational(0));
  CHECK(m.point(0).weights == std::vector<std::int64_t>{1});
  CHECK(m.point(1).moment == Rational(1));
  CHECK(m.point(1).weights == std::vector<std::int64_t>{-1});
  CHECK(m.alpha_minus().row_vector(0) == q({1, 1}));
  CHECK(m.alpha_minus().row_vector(1) == q({0, -1}));
}

TEST_CASE("gen_cpn on (0,1,2)") {
  const ManifoldData m = gen_cpn({0, 1, 2});
  VectorQ eps;
  for (const auto& fp : m.fixed_points()) eps.push_back(euler_class(fp).epsilon);
  CHECK(eps == q({2, -1, 2}));
  CHECK(m.alpha_minus().row_vector(1) == q({0, -1, -2}));
  CHECK(m.alpha_minus().row_vector(2) == q({0, 0, 2}));
  CHECK(m.alpha_plus()->row_vector(0) == q({2, 0, 0}));
  CHECK(m.alpha_plus()->row_vector(1) == q({2, 1, 0}));
  CHECK(m.alpha_plus()->row_vector(2) == q({1, 1, 1}));
}

TEST_CASE("gen_cpn rejects non-increasing weights") {
  try {
    gen_cpn({0, 0, 1});
    FAIL("expected SpecError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Spec);
  }
  CHECK_THROWS_AS(gen_cpn({2, 1}), Error);
  CHECK_THROWS_AS(gen_cpn({0}), Error);
}

TEST_CASE("gen_sphere_product") {
  const ManifoldData one = gen_sphere_product({1});
  const ManifoldData cp1 = gen_cpn({0, 1});
  REQUIRE(one.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) CHECK(one.point(i).weights == cp1.point(i).weights);
  CHECK(one.alpha_minus() == cp1.alpha_minus());
  CHECK(*one.alpha_plus() == *cp1.alpha_plus());

  const ManifoldData two = gen_sphere_product({1, 1});
  REQUIRE(two.size() == 4);
  CHECK(two.point(0).moment == Rational(-2));
  CHECK(two.point(1).moment == Rational(0));
  CHECK(two.point(2).moment == Rational(0));
  CHECK(two.point(3).moment == Rational(2));

  try {
    gen_sphere_product({1, 0});
    FAIL("expected SpecError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Spec);
  }
}

TEST_CASE("generated data is valid for random parameters") {
  std::mt19937_64 rng(51);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const ManifoldData m = gen_cpn(testsupport::random_lambda(rng, n));
      CHECK(validate_alpha_basis(m).ok());
      std::vector<int> census;
      for (const auto& fp : m.fixed_points()) census.push_back(morse_index(fp));
      for (std::size_t i = 0; i < census.size(); ++i) CHECK(census[i] == static_cast<int>(2 * i));
    }
  }
  for (std::size_t k = 1; k <= 4; ++k) {
    for (int trial = 0; trial < 5; ++trial) {
      const ManifoldData m = gen_sphere_product(testsupport::random_sphere_weights(rng, k));
      CHECK(validate_alpha_basis(m).ok());
    }
  }
}

TEST_CASE("shifting all weights shifts the cut and leaves kernels unchanged") {
  std::mt19937_64 rng(52);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto lambda = testsupport::random_lambda(rng, n);
    auto shifted = lambda;
    for (auto& x : shifted) x += 5;
    const ManifoldData a = gen_cpn(lambda);
    const ManifoldData b = gen_cpn(shifted);
    const CutLevel ca = testsupport::random_interior_cut(rng, a);
    const CutLevel cb(b, ca.value() + Rational(5));
    for (int d = 0; d <= 2 * static_cast<int>(n); d += 2) {
      CHECK(kernel_residue(a, ca, d) == kernel_residue(b, cb, d));
      CHECK(kernel_tw(a, ca, d).sum == kernel_tw(b, cb, d).sum);
    }
  }
}
