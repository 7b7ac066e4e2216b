#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flagdom/rational.hpp"
#include "flagdom/rootsys.hpp"

namespace flagdom {

enum class RealFamily { SuPQ, SlNR };

/// A supported non-compact real form: su(p,q) or sl(n,R). Both complexify
/// to sl(N,C), N = p+q or n, of type A_{N-1}.
struct RealFormSpec {
  RealFamily family = RealFamily::SlNR;
  int p = 0;
  int q = 0;
  int n = 0;

  int matrix_size() const { return family == RealFamily::SuPQ ? p + q : n; }
  std::string name() const;  // "su(2,1)", "sl(3,R)"
  std::string key() const;   // "su,2,1", "sl_r,3"
  bool operator==(const RealFormSpec&) const = default;
};

RealFormSpec su_pq(int p, int q);
RealFormSpec sl_n_r(int n);
// "su,p,q" or "sl_r,n"
RealFormSpec parse_real_form(std::string_view text);

RootSystem complex_root_system(const RealFormSpec& spec);

// sl(N) weights in epsilon coordinates, defined modulo (1,...,1).
IntVector fundamental_to_epsilon(const IntVector& lambda);
IntVector epsilon_to_fundamental(const IntVector& eps);
IntVector root_to_epsilon(const IntVector& root);

using AmbientMultiset = std::map<IntVector, Int>;

/// Cartan involution data on the root datum.
///
/// Weights of G are written in epsilon coordinates with respect to a
/// theta-stable Cartan subalgebra h containing a Cartan subalgebra t of k.
/// For su(p,q) h = t is the diagonal torus. For sl(n,R) the basis of C^n is
/// arranged in isotropic pairs (e_{2i-1}, e_{2i}) for the form sum z_k^2, so
/// t = {diag(x1,-x1,x2,-x2,...)} and epsilon_{2i-1} -> f_i, epsilon_{2i} ->
/// -f_i, epsilon_n -> 0 (n odd).
struct InvolutionData {
  RealFormSpec spec;
  RootSystem g_roots;
  IntMatrix theta;  // N x N, column a = theta(epsilon_a)
  IntMatrix torus_projection;  // epsilon coords -> ambient coords of t
  std::vector<IntVector> k_simple_roots;     // in t-ambient coords
  std::vector<IntVector> k_central_charges;  // rows on t-ambient coords
  RootSystem k_roots;
  std::vector<bool> compact_root_flags;  // per positive root of g
  IntMatrix restrict_weight;  // epsilon coords -> K weight (coords, central)
};

InvolutionData involution_data(const RealFormSpec& spec);

IntVector project_to_torus(const InvolutionData& inv, const IntVector& eps);
Weight torus_to_k_weight(const InvolutionData& inv, const IntVector& ambient);
Weight restrict_to_k(const InvolutionData& inv, const IntVector& eps);
IntVector k_root_ambient(const InvolutionData& inv, const IntVector& root);

// Restriction to t of the adjoint weights of g (roots and the n-1 zeros).
AmbientMultiset adjoint_restriction(const InvolutionData& inv);
// Adjoint weights of k in t-ambient coordinates.
AmbientMultiset k_adjoint_weights(const InvolutionData& inv);

Int dim_g(const RealFormSpec& spec);
Int dim_k(const RealFormSpec& spec);

// Plain-text table with trailing CRC-32; see docs/realform-tables.md.
std::string render_involution_table(const InvolutionData& inv);
InvolutionData parse_involution_table(std::string_view text);

/// Restricted roots, in coordinates of the simple restricted roots.
struct RestrictedRootSystem {
  std::string label;   // "A2", "BC1", "C2"
  int a_rank = 0;
  RootSystem reduced;  // carries the Weyl group of the restricted system
  std::vector<IntVector> roots;  // both signs
  std::vector<Int> multiplicities;
};

RestrictedRootSystem restricted_roots(const RealFormSpec& spec);

/// V = { xi in a_0 : |alpha(xi)| < pi/2 for all restricted roots alpha }.
/// Points are given by the values of the simple restricted roots in units of
/// pi, so all arithmetic is exact.
struct PolytopeU {
  int dim = 0;
  std::vector<IntVector> facet_normals;
  Rational bound{1, 2};  // times pi
};

PolytopeU polytope_U(const RealFormSpec& spec);
bool membership(const PolytopeU& polytope, const std::vector<Rational>& xi,
                const Rational& scale = Rational(1));
// Image of xi under the simple reflection s_j of the restricted Weyl group.
std::vector<Rational> restricted_reflect(const RestrictedRootSystem& rrs,
                                         int j, const std::vector<Rational>& xi);

struct IwasawaDims {
  Int dim_a = 0;
  Int dim_n = 0;
};

IwasawaDims iwasawa_dims(const RealFormSpec& spec);

}  // namespace flagdom
