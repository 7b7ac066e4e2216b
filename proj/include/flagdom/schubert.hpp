#pragma once

#include <map>
#include <vector>

#include "flagdom/rootsys.hpp"

namespace flagdom {

/// Parabolic subgroup Q given by the simple roots generating its Levi factor
/// (0-based, sorted). The empty set is the Borel subgroup.
struct Parabolic {
  std::vector<int> levi;

  bool contains(int i) const;
  bool operator==(const Parabolic&) const = default;
};

/// Z = G/Q. Throughout, Q contains the Borel subgroup of negative roots, so
/// the tangent space at the base point carries the nilradical roots
/// (positive roots outside the Levi) and a weight lambda labels the line
/// bundle whose sections form the irreducible module of highest weight
/// lambda when lambda is dominant.
struct FlagManifold {
  RootSystem rs;
  Parabolic parabolic;
  int dim = 0;
};

FlagManifold make_flag_manifold(RootSystem rs, Parabolic parabolic);
// Positive roots whose support leaves the Levi.
std::vector<IntVector> nilradical_roots(const FlagManifold& flag);
// Parabolic subgroup W_Q, generated by the Levi reflections.
RootSystem levi_root_system(const FlagManifold& flag);
std::size_t levi_weyl_order(const FlagManifold& flag);

struct SchubertVariety {
  WeylElement rep;  // minimal-length representative of rep * W_Q
  int dim = 0;      // = length(rep)
  int codim = 0;    // = dim(Z) - dim

  auto operator<=>(const SchubertVariety& o) const { return rep <=> o.rep; }
  bool operator==(const SchubertVariety& o) const { return rep == o.rep; }
};

bool is_minimal_coset_rep(const FlagManifold& flag, const WeylElement& w);
WeylElement minimal_coset_rep(const FlagManifold& flag, const WeylElement& w);
SchubertVariety schubert_variety(const FlagManifold& flag,
                                 const WeylElement& w);

// One Schubert variety per coset w W_Q, sorted by (dim, word).
std::vector<SchubertVariety> minimal_coset_reps(
    const FlagManifold& flag, std::size_t cap = kDefaultWeylCap);

// Cell count per dimension, index = dimension.
std::vector<Int> poincare_polynomial(const FlagManifold& flag);

// Bruhat order u <= w, decided by the lifting property on left descents.
bool bruhat_leq(const RootSystem& rs, const WeylElement& u,
                const WeylElement& w);

// Poincare dual: minimal representative of w0 * u * W_Q.
SchubertVariety dual_variety(const FlagManifold& flag,
                             const SchubertVariety& u);
// 1 iff v is the Poincare dual of u; requires dim u + dim v = dim Z.
int poincare_pairing(const FlagManifold& flag, const SchubertVariety& u,
                     const SchubertVariety& v);

/// Effective homology class sum_u coeffs[u] [S_u], all of one dimension.
struct CycleClass {
  int degree = 0;
  std::map<WeylElement, Int> coeffs;

  bool operator==(const CycleClass&) const = default;
};

CycleClass make_cycle_class(const FlagManifold& flag, int degree,
                            const std::map<WeylElement, Int>& coeffs);

// [c].[s] for codim(s) = degree(c).
Int intersection_number(const FlagManifold& flag, const CycleClass& c,
                        const SchubertVariety& s);

}  // namespace flagdom
