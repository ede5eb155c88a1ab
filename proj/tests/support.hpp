#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kirwan/generators.hpp"
#include "kirwan/kirwan.hpp"

namespace testsupport {

using namespace kirwan;

inline std::string fixture_path(const std::string& name) {
  return std::string(KIRWAN_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline VectorQ q(std::initializer_list<long> values) {
  VectorQ v;
  for (long x : values) v.emplace_back(x);
  return v;
}

inline Rational random_rational(std::mt19937_64& rng, long range = 5, long max_den = 4) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline VectorQ random_vector(std::mt19937_64& rng, std::size_t size) {
  VectorQ v(size);
  for (auto& x : v) x = random_rational(rng);
  return v;
}

// n + 1 distinct sorted integers from [lo, hi].
inline std::vector<std::int64_t> random_lambda(std::mt19937_64& rng, std::size_t n, long lo = -9,
                                               long hi = 9) {
  std::vector<std::int64_t> pool;
  for (long x = lo; x <= hi; ++x) pool.push_back(x);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<std::int64_t> out(pool.begin(), pool.begin() + static_cast<long>(n + 1));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::int64_t> random_sphere_weights(std::mt19937_64& rng, std::size_t k) {
  std::uniform_int_distribution<long> dist(-9, 8);
  std::vector<std::int64_t> w;
  for (std::size_t i = 0; i < k; ++i) {
    long x = dist(rng);
    w.push_back(x >= 0 ? x + 1 : x);
  }
  return w;
}

// A regular value strictly between min - 1 and max + 1 of the moment values.
inline CutLevel random_cut(std::mt19937_64& rng, const ManifoldData& m) {
  const Rational lo = m.point(0).moment - Rational(1);
  const Rational hi = m.point(m.size() - 1).moment + Rational(1);
  std::uniform_int_distribution<long> step(1, 59);
  for (;;) {
    const Rational c = lo + (hi - lo) * Rational(step(rng), 60);
    bool regular = true;
    for (const auto& fp : m.fixed_points()) regular = regular && fp.moment != c;
    if (regular) return CutLevel(m, c);
  }
}

// A regular value strictly between the lowest and highest moment, so both
// sides of the cut are nonempty.
inline CutLevel random_interior_cut(std::mt19937_64& rng, const ManifoldData& m) {
  const Rational lo = m.point(0).moment;
  const Rational hi = m.point(m.size() - 1).moment;
  std::uniform_int_distribution<long> step(1, 59);
  for (;;) {
    const Rational c = lo + (hi - lo) * Rational(step(rng), 60);
    bool regular = true;
    for (const auto& fp : m.fixed_points()) regular = regular && fp.moment != c;
    if (regular) return CutLevel(m, c);
  }
}

// Every regular gap: one cut below, between each pair of distinct levels, above.
inline std::vector<CutLevel> all_gap_cuts(const ManifoldData& m) {
  std::vector<Rational> levels;
  for (const auto& fp : m.fixed_points())
    if (levels.empty() || levels.back() != fp.moment) levels.push_back(fp.moment);
  std::vector<CutLevel> cuts;
  cuts.emplace_back(m, levels.front() - Rational(1));
  for (std::size_t i = 0; i + 1 < levels.size(); ++i)
    cuts.emplace_back(m, (levels[i] + levels[i + 1]) / Rational(2));
  cuts.emplace_back(m, levels.back() + Rational(1));
  return cuts;
}

// The named fixture family used by the property suites.
inline std::vector<ManifoldData> standard_fixtures() {
  return {gen_cpn({0, 1}),          gen_cpn({0, 1, 2}),      gen_cpn({0, 1, 2, 3}),
          gen_cpn({-3, -1, 4, 7, 9}), gen_cpn({-7, 2, 5}),   gen_sphere_product({1}),
          gen_sphere_product({1, 1}), gen_sphere_product({2, -3}),
          gen_sphere_product({1, 2, 3}), gen_sphere_product({1, 1, 1})};
}

}  // namespace testsupport
