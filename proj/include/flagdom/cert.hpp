#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagdom/bbw.hpp"
#include "flagdom/orbits.hpp"

namespace flagdom {

/// Dimensions in the fibration M_D = Sigma x F over the Schubert slice.
/// M_Z is G/K, or Z itself when C_0 is a point.
struct FibrationDims {
  Int dim_Z = 0;
  Int q = 0;
  Int dim_MZ = 0;
  Int dim_Sigma = 0;  // dim_Z - q
  Int dim_F = 0;      // dim_MZ - dim_Sigma

  bool operator==(const FibrationDims&) const = default;
};

// Throws ExceptionalOrbitError unless the orbit is Generic.
FibrationDims fibration_dims(const OpenOrbitModel& orbit,
                             bool hermitian_override = false);
// The same identities evaluated without the Generic precondition.
FibrationDims fibration_model(const OpenOrbitModel& orbit);

/// K-weights of q_{z0} / (q_{z0} cap g_{C0}), the tangent model of the fiber
/// F. g_{C0} is k, or q_{z0} when C_0 is a point.
struct MuFiberModule {
  WeightMultiset weights;
};

// Throws ConsistencyError if the multiplicity differs from dim_F.
MuFiberModule mu_fiber_module(const OpenOrbitModel& orbit);

enum class Verdict { Injective, Inconclusive };

std::string to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

struct VanishingEntry {
  int p = 0;
  int r = 0;
  VanishingStatus status = VanishingStatus::Inconclusive;

  bool operator==(const VanishingEntry&) const = default;
};

struct StructuralFact {
  std::string status;    // "Satisfied"
  std::string citation;

  bool operator==(const StructuralFact&) const = default;
};

struct InjectivityCertificate {
  std::string orbit;  // OpenOrbitModel::descriptor()
  IntVector lambda;   // G-character, fundamental coordinates
  int q = 0;
  FibrationDims fibration;
  OrbitClass exceptional = OrbitClass::Generic;
  StructuralFact buchdahl;
  StructuralFact stein_contractible;
  std::vector<VanishingEntry> vanishing_table;  // p < q, 1 <= r <= dim_F
  BBWResult derived_fiber;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> notes;

  bool operator==(const InjectivityCertificate&) const = default;
};

InjectivityCertificate certify(const OpenOrbitModel& orbit, const IntVector& lambda,
                               bool hermitian_override = false);

inline constexpr std::string_view kCertificateFormat = "flagdom-cert/1";

std::string render_certificate_text(const InjectivityCertificate& c);
InjectivityCertificate parse_certificate_text(std::string_view text);
std::string render_certificate_json(const InjectivityCertificate& c);
InjectivityCertificate parse_certificate_json(std::string_view text);

struct ScanEntry {
  Int k = 0;
  IntVector lambda;  // k * direction
  Verdict verdict = Verdict::Inconclusive;
};

struct ScanReport {
  std::string orbit;
  IntVector direction;
  std::vector<ScanEntry> entries;  // increasing k
  // least k in range from which every verdict up to the end is Injective
  std::optional<Int> boundary;
  // the Injective verdicts are exactly the k >= boundary
  bool contiguous = true;
};

// k runs over k_min..k_max inclusive; empty if k_min > k_max.
ScanReport threshold_scan(const OpenOrbitModel& orbit, const IntVector& direction,
                          Int k_min, Int k_max, bool hermitian_override = false);

}  // namespace flagdom
