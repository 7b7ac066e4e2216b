#pragma once

#include <map>
#include <string>

#include "flagdom/orbits.hpp"
#include "flagdom/rootsys.hpp"
#include "flagdom/schubert.hpp"

namespace flagdom {

/// Cohomology of a homogeneous line bundle: either zero in every degree or
/// the irreducible module of `highest_weight` in degree `degree`.
struct BBWResult {
  bool zero = true;
  int degree = 0;
  Weight highest_weight;
  Int dim = 0;

  static BBWResult vanishing() { return {}; }
  bool operator==(const BBWResult&) const = default;
};

// dim H^p of the result
Int cohomology_dim(const BBWResult& r, int p);

using WeightMultiset = std::map<Weight, Int>;

Int total_multiplicity(const WeightMultiset& m);
WeightMultiset negate(const WeightMultiset& m);

// lambda must pair non-negatively with the Levi coroots of C; throws
// NotDominantError otherwise.
BBWResult bbw_line(const FlagManifold& c, const Weight& lambda);

// Weyl dimension formula; lambda dominant.
Int weyl_dim(const RootSystem& rs, const Weight& lambda);

// All sums over r-element sub-multisets, with multiplicity.
WeightMultiset exterior_power_weights(const WeightMultiset& m, int r);

enum class VanishingStatus { Proved, Inconclusive };

std::string to_string(VanishingStatus s);
VanishingStatus parse_vanishing_status(std::string_view text);

// H^p = 0 for every line bundle mu + lambda, mu in pieces, over the Borel
// flag of C's group, hence for every bundle filtered by them on C.
VanishingStatus vanishing_in_degree(const FlagManifold& c,
                                    const WeightMultiset& pieces,
                                    const Weight& lambda, int p);
// Same for every degree p <= p_max.
VanishingStatus vanishing_check(const FlagManifold& c,
                                const WeightMultiset& pieces,
                                const Weight& lambda, int p_max);

struct DerivedFiber {
  Weight k_weight;       // restriction of the bundle to C_0, as a K-weight
  BBWResult cohomology;  // full BBW answer on C_0
  BBWResult fiber;       // H^q(C_0; E|C_0); zero unless the degree is q
  int q = 0;
  bool degree_is_q = false;
};

// lambda: G-character in fundamental coordinates.
DerivedFiber derived_fiber(const OpenOrbitModel& orbit, const IntVector& lambda);

// Restriction of the bundle with character lambda to C_0.
Weight restricted_k_weight(const OpenOrbitModel& orbit, const IntVector& lambda);

}  // namespace flagdom
