#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace flagdom {

using Int = std::int64_t;
using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>;

/// Root datum of a (possibly reductive) complex Lie algebra.
///
/// Simple types come from `build_root_system` with Bourbaki numbering; the
/// maximal compact subgroups of the supported real forms are built with
/// `root_system_from_simple_roots` and may be products with a central torus.
/// Indices are 0-based internally; reports print them 1-based.
struct RootSystem {
  std::string label;  // e.g. "A2", "A1xA1", "A1+T1"
  int rank = 0;       // semisimple rank
  int torus_rank = 0;
  // cartan[i][j] = <alpha_i^vee, alpha_j> = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)
  IntMatrix cartan;
  // (alpha_i, alpha_i) up to a common positive scale
  IntVector root_norms;
  // simple-root coordinates; ordered by height, then lexicographically
  // descending so the simple roots come first in index order
  std::vector<IntVector> positive_roots;
  std::vector<std::string> components;

  std::size_t num_positive_roots() const { return positive_roots.size(); }
  // Complex dimension of the Lie algebra, center included.
  Int dimension() const {
    return 2 * static_cast<Int>(positive_roots.size()) + rank + torus_rank;
  }
};

/// Integral weight: fundamental-weight coordinates on the semisimple part
/// plus central charges that every Weyl group operation leaves untouched.
struct Weight {
  IntVector coords;
  IntVector central;

  Weight() = default;
  explicit Weight(IntVector c, IntVector z = {})
      : coords(std::move(c)), central(std::move(z)) {}

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;
};

/// Weyl group element stored as its lexicographically smallest reduced word.
/// The word (i1, ..., ik) denotes s_{i1} s_{i2} ... s_{ik}.
struct WeylElement {
  std::vector<int> word;

  int length() const { return static_cast<int>(word.size()); }
  bool is_identity() const { return word.empty(); }

  auto operator<=>(const WeylElement& other) const {
    if (auto c = length() <=> other.length(); c != 0) return c;
    return word <=> other.word;
  }
  bool operator==(const WeylElement&) const = default;
};

struct WeylGroup {
  std::vector<WeylElement> elements;  // sorted by (length, word)
  WeylElement longest;
};

struct DominantResult {
  WeylElement w;    // minimal-length element with w(lambda) dominant
  Weight dominant;  // w(lambda)
  bool singular = false;      // lambda lies on a reflecting hyperplane
  bool dot_singular = false;  // lambda + rho lies on a reflecting hyperplane
};

inline constexpr std::size_t kDefaultWeylCap = 1'000'000;

RootSystem build_root_system(char family, int rank);
// Parses "A2", "a2", "A,2" or "a,2".
RootSystem parse_root_system(std::string_view text);

// Root datum spanned by integer simple roots in an orthogonal ambient basis
// (standard dot product). Components are labeled by classification.
RootSystem root_system_from_simple_roots(const std::vector<IntVector>& simple,
                                         int torus_rank);

IntVector root_to_weight(const RootSystem& rs, const IntVector& root);
// <lambda, beta^vee> for a weight in fundamental coordinates.
Int coroot_pairing(const RootSystem& rs, const IntVector& lambda,
                   const IntVector& root);
// Half the sum of the positive roots, in fundamental coordinates.
Weight rho(const RootSystem& rs);
Weight zero_weight(const RootSystem& rs);
bool is_dominant(const Weight& w);
bool is_positive_root(const IntVector& root);
bool is_negative_root(const IntVector& root);

Weight reflect(const RootSystem& rs, int i, const Weight& lambda);
IntVector reflect_root(const RootSystem& rs, int i, const IntVector& root);

Weight act(const RootSystem& rs, const WeylElement& w, const Weight& lambda);
IntVector act_on_root(const RootSystem& rs, const WeylElement& w,
                      const IntVector& root);
// w . lambda = w(lambda + rho) - rho
Weight dot_act(const RootSystem& rs, const WeylElement& w,
               const Weight& lambda);

// Canonical element for an arbitrary (not necessarily reduced) word.
WeylElement element_from_word(const RootSystem& rs,
                              const std::vector<int>& word);
// The unique element w with w(rho) == image.
WeylElement element_from_rho_image(const RootSystem& rs, IntVector image);
WeylElement multiply(const RootSystem& rs, const WeylElement& u,
                     const WeylElement& v);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);
WeylElement longest_element(const RootSystem& rs);
int inversion_count(const RootSystem& rs, const WeylElement& w);

// Order from the classical formulas per component.
std::uint64_t weyl_group_order(const RootSystem& rs);
WeylGroup enumerate_weyl_group(const RootSystem& rs,
                               std::size_t cap = kDefaultWeylCap);

DominantResult dominant_normalize(const RootSystem& rs, const Weight& lambda);

std::string format_weight(const Weight& w);
Weight parse_weight(std::string_view text);
std::string format_word(const WeylElement& w);

}  // namespace flagdom
