#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagdom/realform.hpp"
#include "flagdom/schubert.hpp"

namespace flagdom {

/// Partial flag type 0 < k_1 < ... < k_m < N of subspaces of C^N.
struct FlagType {
  std::vector<int> dims;

  bool operator==(const FlagType&) const = default;
};

// "proj" (lines), "gr,k", "flag,k1,k2,...", "full"
FlagType parse_flag_type(std::string_view text, int matrix_size);
std::string format_flag_type(const FlagType& type);

// Z = SL(N)/Q for the flag type. The base point is the flag of spans of the
// last k_i basis vectors, so the Levi of Q omits the simple roots N - k_i.
FlagManifold flag_manifold_for(const RealFormSpec& spec, const FlagType& type);

struct Signature {
  int a = 0;  // positive part
  int b = 0;  // negative part

  bool operator==(const Signature&) const = default;
};

/// An open G_0-orbit D in Z. For su(p,q) it is labeled by the signatures of
/// the Hermitian form on the subspaces of the flag; sl(n,R) acts on
/// P^{n-1} with a single open orbit, the complement of the real points.
struct OpenOrbitModel {
  RealFormSpec spec;
  FlagType type;
  FlagManifold flag;
  std::vector<Signature> chain;  // su(p,q) only
  std::string tag;

  std::string descriptor() const;
};

std::vector<OpenOrbitModel> enumerate_open_orbits(const RealFormSpec& spec,
                                                  const FlagType& type);
// Picks the orbit with the given signature chain (ignored for sl(n,R)).
OpenOrbitModel find_open_orbit(const RealFormSpec& spec, const FlagType& type,
                               const std::vector<Signature>& chain);
// "1,0" or "1,0/2,0" for multi-step flags
std::vector<Signature> parse_signature_chain(std::string_view text);

/// Base point z_0 of D lying on the base cycle, encoded by the level of
/// each basis vector: level[x] = least i with e_x in V_i (m = outside V_m).
/// For su(p,q) V_i spans the last a_i vectors of C^p and the last b_i of
/// C^q. For sl(n,R) z_0 is the isotropic line through the second vector of
/// the first isotropic pair.
std::vector<int> base_point_levels(const OpenOrbitModel& orbit);

/// C_0 = K_0 . z_0 as a flag manifold of the complexified K.
struct BaseCycle {
  FlagManifold k_flag;
  int q = 0;
  std::string description;
};

BaseCycle base_cycle(const OpenOrbitModel& orbit);

// Fiber weight at z_0, in epsilon coordinates, of the G-homogeneous line
// bundle with character lambda (fundamental coordinates). Throws if lambda
// is not a character of Q.
IntVector fiber_weight_at_base_point(const OpenOrbitModel& orbit,
                                     const IntVector& lambda);
// Character sum_i c_i omega_{N-k_i}: c_i is the power of det(V_i)^* in the
// flag bundle; on P^{N-1} and Grassmannians c is the Plucker degree.
IntVector character_from_flag_degrees(const OpenOrbitModel& orbit,
                                      const IntVector& degrees);

enum class OrbitClass { Generic, HermitianHolomorphicType, Transitive };

std::string to_string(OrbitClass c);
OrbitClass parse_orbit_class(std::string_view text);

// q = 0 is read as the bounded-symmetric-domain case. `hermitian_override`
// forces HermitianHolomorphicType for holomorphic-type orbits with q > 0.
OrbitClass classify_exception(const OpenOrbitModel& orbit,
                              bool hermitian_override = false);

struct SchubertSliceData {
  std::vector<SchubertVariety> codim_q_reps;
  std::optional<CycleClass> base_class;
  std::vector<std::optional<Int>> d_values;  // parallel to codim_q_reps
  std::string status;
};

SchubertSliceData schubert_slice_data(const OpenOrbitModel& orbit);

}  // namespace flagdom
