#include <doctest.h>

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <set>

#include "flagdom/error.hpp"
#include "flagdom/orbits.hpp"

using namespace flagdom;

namespace {

using Chain = std::vector<std::pair<int, int>>;

// Signature chains of random flags for the Hermitian form diag(1^p, -1^q).
std::set<Chain> sampled_chains(int p, int q, const std::vector<int>& dims, int samples) {
  const int n = p + q;
  std::mt19937 rng(1234);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) h(i, i) = i < p ? 1.0 : -1.0;
  std::set<Chain> out;
  for (int s = 0; s < samples; ++s) {
    Eigen::MatrixXcd basis(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) basis(i, j) = {g(rng), g(rng)};
    Chain chain;
    for (int k : dims) {
      const Eigen::MatrixXcd v = basis.leftCols(k);
      const Eigen::MatrixXcd form = v.adjoint() * h * v;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(form);
      int pos = 0, neg = 0;
      for (int i = 0; i < k; ++i) (solver.eigenvalues()(i) > 0 ? pos : neg)++;
      chain.emplace_back(pos, neg);
    }
    out.insert(chain);
  }
  return out;
}

// Complex dimension of the partial flags d_1 < ... < d_m in C^n (entries 0
// and n allowed and skipped).
int flag_dim(std::vector<int> dims, int n) {
  int total = 0;
  int prev = 0;
  std::sort(dims.begin(), dims.end());
  for (int d : dims) {
    if (d <= prev || d >= n) continue;
    total += (d - prev) * (n - d);
    prev = d;
  }
  return total;
}

std::vector<FlagType> flag_types(int n) {
  std::vector<FlagType> out;
  for (int mask = 1; mask < (1 << (n - 1)); ++mask) {
    FlagType t;
    for (int k = 1; k < n; ++k)
      if (mask >> (k - 1) & 1) t.dims.push_back(k);
    out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("flag types") {
  CHECK(parse_flag_type("proj", 3).dims == std::vector<int>{1});
  CHECK(parse_flag_type("gr,2", 4).dims == std::vector<int>{2});
  CHECK(parse_flag_type("flag,1,3", 4).dims == std::vector<int>{1, 3});
  CHECK(parse_flag_type("full", 4).dims == std::vector<int>{1, 2, 3});
  CHECK(format_flag_type(parse_flag_type("gr,2", 4)) == "gr,2");
  CHECK_THROWS_AS(parse_flag_type("gr,4", 4), UnsupportedError);
  CHECK_THROWS_AS(parse_flag_type("flag,2,1", 4), UnsupportedError);
  CHECK_THROWS_AS(parse_flag_type("gr,x", 4), ParseError);
  CHECK_THROWS_AS(parse_flag_type("gr", 4), ParseError);
  CHECK_THROWS_AS(parse_flag_type("quadric", 4), UnsupportedError);
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      const FlagManifold z = flag_manifold_for(su_pq(1, n - 1), FlagType{{k}});
      CHECK(z.dim == k * (n - k));
    }
}

TEST_CASE("open orbit counts") {
  CHECK(enumerate_open_orbits(su_pq(1, 1), FlagType{{1}}).size() == 2);
  CHECK(enumerate_open_orbits(su_pq(2, 1), FlagType{{1}}).size() == 2);
  CHECK(enumerate_open_orbits(su_pq(2, 2), FlagType{{2}}).size() == 3);
  CHECK(enumerate_open_orbits(sl_n_r(3), FlagType{{1}}).size() == 1);
  CHECK_THROWS_AS(enumerate_open_orbits(sl_n_r(2), FlagType{{1}}), UnsupportedError);
  CHECK_THROWS_AS(enumerate_open_orbits(sl_n_r(4), FlagType{{2}}), UnsupportedError);
  CHECK_THROWS_AS(find_open_orbit(su_pq(2, 1), FlagType{{1}}, {{2, 0}}), UnsupportedError);
  CHECK(parse_signature_chain("1,0/2,1") == std::vector<Signature>{{1, 0}, {2, 1}});
  CHECK_THROWS_AS(parse_signature_chain("1"), ParseError);
}

TEST_CASE("open orbits match random Hermitian signatures") {
  struct Case {
    int p, q;
    std::vector<int> dims;
  };
  for (const Case& c : std::vector<Case>{{1, 1, {1}},
                                          {2, 1, {1}},
                                          {2, 1, {1, 2}},
                                          {2, 2, {2}},
                                          {2, 2, {1, 3}},
                                          {3, 1, {2}},
                                          {2, 3, {1, 2}}}) {
    std::set<Chain> expected;
    for (const auto& orbit : enumerate_open_orbits(su_pq(c.p, c.q), FlagType{c.dims})) {
      Chain chain;
      for (const auto& s : orbit.chain) chain.emplace_back(s.a, s.b);
      expected.insert(chain);
    }
    CAPTURE(c.p);
    CAPTURE(c.q);
    CHECK(sampled_chains(c.p, c.q, c.dims, 6000) == expected);
  }
}

TEST_CASE("base cycles") {
  const OpenOrbitModel sl3 = enumerate_open_orbits(sl_n_r(3), FlagType{{1}}).front();
  const BaseCycle c3 = base_cycle(sl3);
  CHECK(c3.q == 1);
  CHECK(c3.description.rfind("quadric", 0) == 0);
  for (int n = 3; n <= 7; ++n) {
    CHECK(base_cycle(enumerate_open_orbits(sl_n_r(n), FlagType{{1}}).front()).q == n - 2);
  }
  for (const auto& orbit : enumerate_open_orbits(su_pq(1, 1), FlagType{{1}})) {
    CHECK(base_cycle(orbit).q == 0);
    CHECK(base_cycle(orbit).description == "point");
  }
  CHECK(base_cycle(find_open_orbit(su_pq(2, 2), FlagType{{2}}, {{1, 1}})).description == "P^1 x P^1");
  CHECK(base_cycle(find_open_orbit(su_pq(2, 1), FlagType{{1}}, {{1, 0}})).q == 1);
  CHECK(base_cycle(find_open_orbit(su_pq(2, 1), FlagType{{1}}, {{0, 1}})).q == 0);
}

TEST_CASE("su(p,q) base cycle dimension is the product of K flag manifolds") {
  for (int n = 2; n <= 5; ++n)
    for (int p = 1; p < n; ++p)
      for (const auto& type : flag_types(n))
        for (const auto& orbit : enumerate_open_orbits(su_pq(p, n - p), type)) {
          std::vector<int> a, b;
          for (const auto& s : orbit.chain) {
            a.push_back(s.a);
            b.push_back(s.b);
          }
          CHECK(base_cycle(orbit).q == flag_dim(a, p) + flag_dim(b, n - p));
        }
}

TEST_CASE("fiber weight at the base point is a Weyl conjugate of lambda") {
  for (int n = 2; n <= 5; ++n)
    for (int p = 1; p < n; ++p)
      for (const auto& type : flag_types(n))
        for (const auto& orbit : enumerate_open_orbits(su_pq(p, n - p), type)) {
          IntVector degrees;
          for (std::size_t i = 0; i < type.dims.size(); ++i) degrees.push_back(static_cast<Int>(i) + 1);
          const IntVector lambda = character_from_flag_degrees(orbit, degrees);
          const IntVector mu = epsilon_to_fundamental(fiber_weight_at_base_point(orbit, lambda));
          const RootSystem rs = complex_root_system(orbit.spec);
          CHECK(dominant_normalize(rs, Weight(mu)).dominant == Weight(lambda));
        }
  const OpenOrbitModel sl3 = enumerate_open_orbits(sl_n_r(3), FlagType{{1}}).front();
  CHECK_THROWS_AS(fiber_weight_at_base_point(sl3, {1, 0}), NotDominantError);
  CHECK_THROWS_AS(fiber_weight_at_base_point(sl3, {1}), RankMismatchError);
  CHECK_THROWS_AS(character_from_flag_degrees(sl3, {1, 2}), RankMismatchError);
}

TEST_CASE("exception classification") {
  for (const auto& orbit : enumerate_open_orbits(su_pq(1, 1), FlagType{{1}})) {
    CHECK(classify_exception(orbit) == OrbitClass::HermitianHolomorphicType);
  }
  const OpenOrbitModel sl3 = enumerate_open_orbits(sl_n_r(3), FlagType{{1}}).front();
  CHECK(classify_exception(sl3) == OrbitClass::Generic);
  const OpenOrbitModel su21 = find_open_orbit(su_pq(2, 1), FlagType{{1}}, {{1, 0}});
  CHECK(classify_exception(su21) == OrbitClass::Generic);
  CHECK(classify_exception(su21, true) == OrbitClass::HermitianHolomorphicType);
  CHECK(parse_orbit_class(to_string(OrbitClass::Transitive)) == OrbitClass::Transitive);
  CHECK_THROWS_AS(parse_orbit_class("Other"), ParseError);
}

TEST_CASE("Schubert slice data") {
  const OpenOrbitModel sl3 = enumerate_open_orbits(sl_n_r(3), FlagType{{1}}).front();
  const SchubertSliceData d3 = schubert_slice_data(sl3);
  REQUIRE(d3.codim_q_reps.size() == 1);
  REQUIRE(d3.base_class.has_value());
  CHECK(d3.d_values.front() == 2);

  const SchubertSliceData d21 = schubert_slice_data(find_open_orbit(su_pq(2, 1), FlagType{{1}}, {{1, 0}}));
  CHECK(d21.d_values.front() == 1);

  const SchubertSliceData point = schubert_slice_data(find_open_orbit(su_pq(2, 2), FlagType{{2}}, {{2, 0}}));
  REQUIRE(point.codim_q_reps.size() == 1);
  CHECK(point.d_values.front() == 1);

  const SchubertSliceData open = schubert_slice_data(find_open_orbit(su_pq(2, 2), FlagType{{2}}, {{1, 1}}));
  CHECK_FALSE(open.base_class.has_value());
  CHECK(open.codim_q_reps.size() == 2);
  for (const auto& v : open.d_values) CHECK_FALSE(v.has_value());
  CHECK(open.status.find("exists") != std::string::npos);
}
