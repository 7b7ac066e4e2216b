// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "flagdom/cert.hpp"
#include "flagdom/error.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace flagdom;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << "first failure: " << what;
      ok = false;
    }
  }
};

OpenOrbitModel sl3_p2() { return enumerate_open_orbits(sl_n_r(3), FlagType{{1}}).front(); }

Int euler(const BBWResult& r) { return r.zero ? 0 : (r.degree % 2 ? -r.dim : r.dim); }

void criterion1(Check& c) {
  const auto orbits = enumerate_open_orbits(sl_n_r(3), FlagType{{1}});
  c.expect(orbits.size() == 1, "one open orbit");
  const OpenOrbitModel& o = orbits.front();
  const BaseCycle cycle = base_cycle(o);
  c.expect(cycle.q == 1, "q = 1");
  c.expect(cycle.description.find("quadric") != std::string::npos, "C0 is the quadric");
  const SchubertSliceData slice = schubert_slice_data(o);
  c.expect(slice.d_values.size() == 1 && slice.d_values[0] == Int{2}, "d = 2");
  const FibrationDims d = fibration_dims(o);
  c.expect(d.dim_Sigma == 1 && d.dim_F == 4, "(dim_Sigma, dim_F) = (1, 4)");
  if (c.ok) c.detail << "orbits=1 q=1 d=2 (dim_Sigma,dim_F)=(1,4)";
}

void criterion2(Check& c) {
  const auto orbits = enumerate_open_orbits(su_pq(1, 1), FlagType{{1}});
  c.expect(orbits.size() == 2, "two open orbits");
  for (const auto& o : orbits) {
    c.expect(base_cycle(o).q == 0, "q = 0");
    c.expect(classify_exception(o) == OrbitClass::HermitianHolomorphicType, "Hermitian holomorphic type");
    for (Int k = -6; k <= 6; ++k) {
      const InjectivityCertificate cert = certify(o, {k});
      c.expect(cert.verdict == Verdict::Inconclusive, "verdict Inconclusive");
      c.expect(!cert.notes.empty() && cert.notes.back().find("exceptional") != std::string::npos,
               "exceptional note");
    }
  }
  if (c.ok) c.detail << "orbits=2 q=0 HermitianHolomorphicType verdict=Inconclusive with note";
}

void criterion3(Check& c) {
  const PolytopeU sl2 = polytope_U(sl_n_r(2));
  for (auto [num, den] : std::vector<std::pair<Int, Int>>{{0, 1}, {1, 2}, {-1, 2}, {1, 1}, {-1, 1}, {3, 2}, {-3, 2}}) {
    const Rational t(num, den);
    c.expect(membership(sl2, {t / 2}) == (boost::abs(t) < 1), "sl2 membership at t");
  }
  const PolytopeU sl3 = polytope_U(sl_n_r(3));
  const RestrictedRootSystem rrs = restricted_roots(sl_n_r(3));
  const std::set<IntVector> facets(sl3.facet_normals.begin(), sl3.facet_normals.end());
  const std::set<IntVector> roots(rrs.roots.begin(), rrs.roots.end());
  c.expect(sl3.facet_normals.size() == 6 && facets == roots, "sl3 facets are the restricted roots");
  c.expect(sl3.bound == Rational(1, 2), "bound pi/2");
  c.expect(!membership(sl3, {Rational(1, 3), Rational(1, 3)}), "pi/3,pi/3 outside");
  if (c.ok) c.detail << "sl2 |t|<1 at 7 points, sl3 6 facets bound 1/2 pi, (pi/3,pi/3) outside";
}

void criterion4(Check& c) {
  const FlagManifold p1 = make_flag_manifold(build_root_system('A', 1), Parabolic{});
  for (Int k = -10; k <= 10; ++k) {
    const BBWResult r = bbw_line(p1, Weight({k}));
    c.expect(cohomology_dim(r, 0) == oracle::p1_h0(k) && cohomology_dim(r, 1) == oracle::p1_h1(k),
             "P^1 line bundle k=" + std::to_string(k));
  }
  std::size_t euler_cases = 0, serre_cases = 0;
  for (int n : {1, 2}) {
    const RootSystem rs = build_root_system('A', n);
    const auto cm = oracle::cartan('A', n);
    for (const auto& p : support::all_parabolics(n)) {
      const FlagManifold flag = make_flag_manifold(rs, p);
      for (const auto& lambda : support::levi_dominant_box(n, p, 10)) {
        c.expect(euler(bbw_line(flag, Weight(lambda))) == oracle::euler_characteristic(cm, lambda),
                 "Euler characteristic");
        ++euler_cases;
      }
      for (const auto& lambda : support::levi_dominant_box(n, p, 6)) {
        const BBWResult r = bbw_line(flag, Weight(lambda));
        const BBWResult d = bbw_line(flag, Weight(oracle::serre_dual(cm, p.levi, lambda)));
        for (int q = 0; q <= flag.dim; ++q)
          c.expect(cohomology_dim(r, q) == cohomology_dim(d, flag.dim - q), "Serre duality");
        ++serre_cases;
      }
    }
  }
  if (c.ok) c.detail << "P^1 k=-10..10, Euler " << euler_cases << " cases, Serre " << serre_cases << " cases";
}

void criterion5(Check& c) {
  const std::vector<std::tuple<char, int, std::uint64_t>> orders = {
      {'A', 2, 6}, {'B', 2, 8}, {'A', 3, 24}, {'B', 3, 48}, {'G', 2, 12}};
  for (auto [t, n, expected] : orders)
    c.expect(weyl_group_order(build_root_system(t, n)) == expected,
             std::string("order of ") + t + std::to_string(n));
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'B', 2}}) {
    const RootSystem rs = build_root_system(t, n);
    const std::uint64_t order = weyl_group_order(rs);
    for (const auto& p : support::all_parabolics(n)) {
      const FlagManifold flag = make_flag_manifold(rs, p);
      const auto cells = minimal_coset_reps(flag);
      c.expect(cells.size() * levi_weyl_order(flag) == order, "|W^Q| |W_Q| = |W|");
      const auto poly = poincare_polynomial(flag);
      c.expect(std::equal(poly.begin(), poly.end(), poly.rbegin()), "palindromic Poincare polynomial");
      for (const auto& u : cells) {
        int row = 0;
        for (const auto& v : cells)
          if (u.dim + v.dim == flag.dim) row += poincare_pairing(flag, u, v);
        c.expect(row == 1, "pairing row has a single 1");
        c.expect(poincare_pairing(flag, u, dual_variety(flag, u)) == 1, "pairing with the dual cell");
      }
    }
  }
  if (c.ok) c.detail << "orders 6,8,24,48,12; cosets, palindromes and pairing on A2,A3,B2";
}

void criterion6(Check& c) {
  const OpenOrbitModel o = sl3_p2();
  for (Int k = -8; k <= 8; ++k) {
    const IntVector lambda = character_from_flag_degrees(o, {k});
    c.expect(restricted_k_weight(o, lambda) == Weight({2 * k}), "restriction degree 2k");
    c.expect(cohomology_dim(derived_fiber(o, lambda).fiber, 1) == oracle::p1_h1(2 * k), "H^1 oracle");
  }
  const DerivedFiber f = derived_fiber(o, character_from_flag_degrees(o, {-4}));
  c.expect(!f.fiber.zero && f.fiber.degree == 1 && f.fiber.dim == 7, "O(-4) gives H^1 of dim 7");
  if (c.ok) c.detail << "O(-4): H^" << f.fiber.degree << " dim " << f.fiber.dim;
}

void criterion7(Check& c) {
  // cotangent K-weights of the fiber, derived by hand: q_{z0} modulo k on
  // the A1 torus of SO(3)
  const std::vector<oracle::Vec> cotangent = {{0}, {-2}, {2}, {4}};
  auto vanishes = [&](Int k) {
    for (int r = 1; r <= static_cast<int>(cotangent.size()); ++r)
      for (const auto& [w, n] : oracle::exterior_power(cotangent, r))
        if (oracle::p1_h0(w[0] - 2 * k) != 0) return false;
    return true;
  };
  std::optional<Int> expected;
  for (Int k = 12; k >= 0 && vanishes(k); --k) expected = k;
  const OpenOrbitModel o = sl3_p2();
  const ScanReport report = threshold_scan(o, character_from_flag_degrees(o, {-1}), 0, 12);
  c.expect(expected.has_value(), "oracle finds a boundary");
  c.expect(report.boundary == expected, "scan boundary equals oracle boundary");
  c.expect(report.contiguous, "Injective region contiguous");
  if (c.ok) c.detail << "k0=" << *expected << " scan boundary=" << *report.boundary << " contiguous";
}

void criterion8(Check& c) {
  std::vector<OpenOrbitModel> set{sl3_p2()};
  for (const auto& o : enumerate_open_orbits(su_pq(2, 1), FlagType{{1}})) set.push_back(o);
  for (const auto& o : enumerate_open_orbits(su_pq(2, 2), FlagType{{2}})) set.push_back(o);
  c.expect(set.size() == 6, "regression set has 6 orbits");
  std::ostringstream dims;
  for (const auto& o : set) {
    const Int m = total_multiplicity(mu_fiber_module(o).weights);
    const Int f = fibration_model(o).dim_F;
    c.expect(m == f, "multiplicity = dim_F on " + o.descriptor());
    dims << " " << m;
  }
  if (c.ok) c.detail << "6 orbits, dim_F:" << dims.str();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"exact", criterion1}, {"exact", criterion2}, {"exact rational", criterion3},
      {"exact", criterion4}, {"exact", criterion5}, {"exact", criterion6},
      {"exact", criterion7}, {"exact", criterion8}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    if (!c.ok) ++failures;
    std::printf("criterion %zu: %s [%s] %s\n", i + 1, c.ok ? "PASS" : "FAIL",
                criteria[i].first.c_str(), c.detail.str().c_str());
  }
  return failures == 0 ? 0 : 1;
}
