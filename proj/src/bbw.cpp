#include "flagdom/bbw.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>

#include "flagdom/error.hpp"
#include "flagdom/realform.hpp"

namespace flagdom {

namespace {

using boost::multiprecision::cpp_int;

Weight add(const Weight& a, const Weight& b) {
  if (a.coords.size() != b.coords.size() || a.central.size() != b.central.size()) {
    throw RankMismatchError("cannot add weights " + format_weight(a) + " and " +
                            format_weight(b));
  }
  Weight out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  for (std::size_t i = 0; i < out.central.size(); ++i) out.central[i] += b.central[i];
  return out;
}

Weight scaled(const Weight& w, Int t) {
  Weight out = w;
  for (auto& c : out.coords) c *= t;
  for (auto& c : out.central) c *= t;
  return out;
}

Weight zero_like(const Weight& w) {
  return Weight(IntVector(w.coords.size(), 0), IntVector(w.central.size(), 0));
}

Int binomial(Int n, Int k) {
  Int out = 1;
  for (Int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

Int cohomology_dim(const BBWResult& r, int p) {
  return (!r.zero && r.degree == p) ? r.dim : 0;
}

Int total_multiplicity(const WeightMultiset& m) {
  Int total = 0;
  for (const auto& [w, n] : m) total += n;
  return total;
}

WeightMultiset negate(const WeightMultiset& m) {
  WeightMultiset out;
  for (const auto& [w, n] : m) out[scaled(w, -1)] += n;
  return out;
}

Int weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (static_cast<int>(lambda.coords.size()) != rs.rank) {
    throw RankMismatchError("weight " + format_weight(lambda) + " has rank " +
                            std::to_string(lambda.coords.size()) + ", expected " +
                            std::to_string(rs.rank));
  }
  if (!is_dominant(lambda)) {
    throw NotDominantError("weight " + format_weight(lambda) + " is not dominant");
  }
  const Weight r = rho(rs);
  IntVector shifted = lambda.coords;
  for (int i = 0; i < rs.rank; ++i) shifted[i] += r.coords[i];
  cpp_int num = 1;
  cpp_int den = 1;
  for (const auto& beta : rs.positive_roots) {
    num *= coroot_pairing(rs, shifted, beta);
    den *= coroot_pairing(rs, r.coords, beta);
  }
  if (num % den != 0) {
    throw ConsistencyError("Weyl dimension formula is not integral");
  }
  const cpp_int dim = num / den;
  if (dim > std::numeric_limits<Int>::max()) {
    throw CapExceededError("dimension of " + format_weight(lambda) +
                           " exceeds 64-bit range");
  }
  return static_cast<Int>(dim);
}

BBWResult bbw_line(const FlagManifold& c, const Weight& lambda) {
  const RootSystem& rs = c.rs;
  if (static_cast<int>(lambda.coords.size()) != rs.rank ||
      static_cast<int>(lambda.central.size()) != rs.torus_rank) {
    throw RankMismatchError("weight " + format_weight(lambda) +
                            " does not match " + rs.label);
  }
  for (int j : c.parabolic.levi) {
    if (lambda.coords[j] < 0) {
      throw NotDominantError("weight " + format_weight(lambda) +
                             " is not dominant on the Levi root " +
                             std::to_string(j + 1));
    }
  }
  const Weight r = rho(rs);
  Weight shifted = lambda;
  for (int i = 0; i < rs.rank; ++i) shifted.coords[i] += r.coords[i];
  const DominantResult d = dominant_normalize(rs, shifted);
  if (d.singular) return BBWResult::vanishing();
  BBWResult out;
  out.zero = false;
  out.degree = d.w.length();
  out.highest_weight = d.dominant;
  for (int i = 0; i < rs.rank; ++i) out.highest_weight.coords[i] -= r.coords[i];
  out.dim = weyl_dim(rs, out.highest_weight);
  return out;
}

WeightMultiset exterior_power_weights(const WeightMultiset& m, int r) {
  const Int total = total_multiplicity(m);
  if (r < 0 || r > total) {
    throw DimensionMismatchError("exterior power " + std::to_string(r) +
                                 " of a module of rank " + std::to_string(total));
  }
  const Weight zero = m.empty() ? Weight() : zero_like(m.begin()->first);
  // layers[j] = weights of Lambda^j of the entries seen so far
  std::vector<WeightMultiset> layers(r + 1);
  layers[0][zero] = 1;
  for (const auto& [w, mult] : m) {
    std::vector<WeightMultiset> next(r + 1);
    for (int j = 0; j <= r; ++j) {
      for (const auto& [sum, n] : layers[j]) {
        for (Int t = 0; t <= mult && j + t <= r; ++t) {
          next[j + t][add(sum, scaled(w, t))] += n * binomial(mult, t);
        }
      }
    }
    layers = std::move(next);
  }
  return layers[r];
}

std::string to_string(VanishingStatus s) {
  return s == VanishingStatus::Proved ? "Proved" : "Inconclusive";
}

VanishingStatus parse_vanishing_status(std::string_view text) {
  if (text == "Proved") return VanishingStatus::Proved;
  if (text == "Inconclusive") return VanishingStatus::Inconclusive;
  throw ParseError("unknown vanishing status '" + std::string(text) + "'");
}

VanishingStatus vanishing_in_degree(const FlagManifold& c,
                                    const WeightMultiset& pieces,
                                    const Weight& lambda, int p) {
  const FlagManifold borel = make_flag_manifold(c.rs, Parabolic{});
  for (const auto& [mu, n] : pieces) {
    if (cohomology_dim(bbw_line(borel, add(mu, lambda)), p) != 0) {
      return VanishingStatus::Inconclusive;
    }
  }
  return VanishingStatus::Proved;
}

VanishingStatus vanishing_check(const FlagManifold& c,
                                const WeightMultiset& pieces,
                                const Weight& lambda, int p_max) {
  const FlagManifold borel = make_flag_manifold(c.rs, Parabolic{});
  for (const auto& [mu, n] : pieces) {
    const BBWResult res = bbw_line(borel, add(mu, lambda));
    if (!res.zero && res.degree <= p_max) return VanishingStatus::Inconclusive;
  }
  return VanishingStatus::Proved;
}

Weight restricted_k_weight(const OpenOrbitModel& orbit, const IntVector& lambda) {
  const InvolutionData inv = involution_data(orbit.spec);
  return restrict_to_k(inv, fiber_weight_at_base_point(orbit, lambda));
}

DerivedFiber derived_fiber(const OpenOrbitModel& orbit, const IntVector& lambda) {
  const BaseCycle cycle = base_cycle(orbit);
  DerivedFiber out;
  out.k_weight = restricted_k_weight(orbit, lambda);
  out.q = cycle.q;
  out.cohomology = bbw_line(cycle.k_flag, out.k_weight);
  out.degree_is_q = !out.cohomology.zero && out.cohomology.degree == cycle.q;
  out.fiber = out.degree_is_q ? out.cohomology : BBWResult::vanishing();
  return out;
}

}  // namespace flagdom
