#include "flagdom/orbits.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "flagdom/error.hpp"

namespace flagdom {

namespace {

int parse_small_int(std::string_view text, std::string_view whole,
                    const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(std::string("malformed ") + what + " '" +
                     std::string(whole) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    const auto end = text.find(sep, pos);
    out.push_back(text.substr(pos, end - pos));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::string space_name(int dim_sub, int ambient) {
  if (dim_sub == 1 || dim_sub == ambient - 1) {
    return "P^" + std::to_string(ambient - 1);
  }
  return "Gr(" + std::to_string(dim_sub) + "," + std::to_string(ambient) + ")";
}

// Partial flag manifold of the proper subspace dimensions in C^ambient.
std::string block_description(std::vector<int> dims, int ambient) {
  dims.erase(std::remove_if(dims.begin(), dims.end(),
                            [&](int d) { return d <= 0 || d >= ambient; }),
             dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  if (dims.empty()) return "pt";
  if (dims.size() == 1) return space_name(dims[0], ambient);
  std::string out = "Fl(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    out += (i ? "," : "") + std::to_string(dims[i]);
  }
  return out + ";" + std::to_string(ambient) + ")";
}

void enumerate_chains(const RealFormSpec& spec, const FlagType& type,
                      std::size_t step, std::vector<Signature>& current,
                      std::vector<std::vector<Signature>>& out) {
  if (step == type.dims.size()) {
    out.push_back(current);
    return;
  }
  const int k = type.dims[step];
  const int a_min = current.empty() ? 0 : current.back().a;
  const int b_min = current.empty() ? 0 : current.back().b;
  for (int a = a_min; a <= std::min(spec.p, k); ++a) {
    const int b = k - a;
    if (b < b_min || b > spec.q) continue;
    current.push_back({a, b});
    enumerate_chains(spec, type, step + 1, current, out);
    current.pop_back();
  }
}

std::string format_chain(const std::vector<Signature>& chain) {
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += "/";
    out += std::to_string(chain[i].a) + "," + std::to_string(chain[i].b);
  }
  return out;
}

}  // namespace

FlagType parse_flag_type(std::string_view text, int matrix_size) {
  const auto parts = split(text, ',');
  std::string head(parts[0]);
  std::transform(head.begin(), head.end(), head.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  FlagType type;
  if (head == "proj" && parts.size() == 1) {
    type.dims = {1};
  } else if (head == "full" && parts.size() == 1) {
    for (int k = 1; k < matrix_size; ++k) type.dims.push_back(k);
  } else if (head == "gr" && parts.size() == 2) {
    type.dims = {parse_small_int(parts[1], text, "flag")};
  } else if (head == "flag" && parts.size() >= 2) {
    for (std::size_t i = 1; i < parts.size(); ++i) {
      type.dims.push_back(parse_small_int(parts[i], text, "flag"));
    }
  } else if (head == "proj" || head == "full" || head == "gr" || head == "flag") {
    throw ParseError("malformed flag '" + std::string(text) + "'");
  } else {
    throw UnsupportedError("unsupported flag '" + std::string(text) +
                           "'; supported: proj, gr,k, flag,k1,...,km, full");
  }
  for (std::size_t i = 0; i < type.dims.size(); ++i) {
    const int k = type.dims[i];
    if (k <= 0 || k >= matrix_size || (i > 0 && k <= type.dims[i - 1])) {
      throw UnsupportedError("flag dimensions must satisfy 0 < k_1 < ... < " +
                             std::to_string(matrix_size) + ", got '" +
                             std::string(text) + "'");
    }
  }
  return type;
}

std::string format_flag_type(const FlagType& type) {
  if (type.dims.size() == 1) {
    return type.dims[0] == 1 ? "proj" : "gr," + std::to_string(type.dims[0]);
  }
  std::string out = "flag";
  for (int k : type.dims) out += "," + std::to_string(k);
  return out;
}

FlagManifold flag_manifold_for(const RealFormSpec& spec, const FlagType& type) {
  const int size = spec.matrix_size();
  Parabolic parabolic;
  for (int j = 0; j + 1 < size; ++j) {
    const bool omitted = std::any_of(type.dims.begin(), type.dims.end(),
                                     [&](int k) { return j == size - k - 1; });
    if (!omitted) parabolic.levi.push_back(j);
  }
  return make_flag_manifold(complex_root_system(spec), parabolic);
}

std::string OpenOrbitModel::descriptor() const {
  std::string out = "form=" + spec.key() + ";flag=" + format_flag_type(type);
  if (!chain.empty()) out += ";orbit=" + format_chain(chain);
  return out;
}

std::vector<OpenOrbitModel> enumerate_open_orbits(const RealFormSpec& spec,
                                                  const FlagType& type) {
  std::vector<OpenOrbitModel> out;
  if (spec.family == RealFamily::SlNR) {
    if (type.dims != std::vector<int>{1} || spec.n < 3) {
      throw UnsupportedError(
          "sl(n,R) orbits are supported on P^{n-1} (flag proj) for n >= 3");
    }
    OpenOrbitModel orbit{spec, type, flag_manifold_for(spec, type), {},
                         "complement of RP^" + std::to_string(spec.n - 1)};
    out.push_back(std::move(orbit));
    return out;
  }
  std::vector<std::vector<Signature>> chains;
  std::vector<Signature> current;
  enumerate_chains(spec, type, 0, current, chains);
  const FlagManifold flag = flag_manifold_for(spec, type);
  for (auto& chain : chains) {
    std::string tag = "signature " + format_chain(chain);
    out.push_back(OpenOrbitModel{spec, type, flag, std::move(chain), std::move(tag)});
  }
  return out;
}

std::vector<Signature> parse_signature_chain(std::string_view text) {
  std::vector<Signature> chain;
  if (text.empty()) return chain;
  for (auto step : split(text, '/')) {
    const auto ab = split(step, ',');
    if (ab.size() != 2) throw ParseError("malformed orbit '" + std::string(text) + "'");
    chain.push_back({parse_small_int(ab[0], text, "orbit"),
                     parse_small_int(ab[1], text, "orbit")});
  }
  return chain;
}

OpenOrbitModel find_open_orbit(const RealFormSpec& spec, const FlagType& type,
                               const std::vector<Signature>& chain) {
  auto orbits = enumerate_open_orbits(spec, type);
  if (spec.family == RealFamily::SlNR) return orbits.front();
  for (auto& orbit : orbits) {
    if (orbit.chain == chain) return orbit;
  }
  throw UnsupportedError("no open orbit with signature '" + format_chain(chain) +
                         "' for " + spec.name() + " on " + format_flag_type(type));
}

std::vector<int> base_point_levels(const OpenOrbitModel& orbit) {
  const int size = orbit.spec.matrix_size();
  if (orbit.spec.family == RealFamily::SlNR) {
    std::vector<int> level(size, 1);
    level[1] = 0;
    return level;
  }
  const int p = orbit.spec.p;
  const int steps = static_cast<int>(orbit.chain.size());
  std::vector<int> level(size, steps);
  for (int x = 0; x < size; ++x) {
    const bool first_block = x < p;
    const int pos = first_block ? p - 1 - x : size - 1 - x;
    for (int i = 0; i < steps; ++i) {
      const int span = first_block ? orbit.chain[i].a : orbit.chain[i].b;
      if (pos < span) {
        level[x] = i;
        break;
      }
    }
  }
  return level;
}

BaseCycle base_cycle(const OpenOrbitModel& orbit) {
  const InvolutionData inv = involution_data(orbit.spec);
  Parabolic parabolic;
  BaseCycle cycle;
  if (orbit.spec.family == RealFamily::SuPQ) {
    const auto level = base_point_levels(orbit);
    const int size = orbit.spec.matrix_size();
    int index = 0;
    for (int j = 0; j + 1 < size; ++j) {
      if (j + 1 == orbit.spec.p) continue;
      if (level[j] == level[j + 1]) parabolic.levi.push_back(index);
      ++index;
    }
    std::vector<int> dims_p, dims_q;
    for (const auto& s : orbit.chain) {
      dims_p.push_back(s.a);
      dims_q.push_back(s.b);
    }
    const std::string left = block_description(dims_p, orbit.spec.p);
    const std::string right = block_description(dims_q, orbit.spec.q);
    if (left == "pt" && right == "pt") {
      cycle.description = "point";
    } else if (left == "pt") {
      cycle.description = right;
    } else if (right == "pt") {
      cycle.description = left;
    } else {
      cycle.description = left + " x " + right;
    }
  } else {
    // Stabilizer of an isotropic line: the Levi omits every simple root
    // involving f_1.
    for (std::size_t j = 0; j < inv.k_simple_roots.size(); ++j) {
      if (inv.k_simple_roots[j][0] == 0) parabolic.levi.push_back(static_cast<int>(j));
    }
    cycle.description = "quadric Q^" + std::to_string(orbit.spec.n - 2) +
                        " = {z_1^2+...+z_" + std::to_string(orbit.spec.n) +
                        "^2 = 0} in P^" + std::to_string(orbit.spec.n - 1);
  }
  cycle.k_flag = make_flag_manifold(inv.k_roots, parabolic);
  cycle.q = cycle.k_flag.dim;
  if (cycle.q >= orbit.flag.dim) {
    throw ConsistencyError("base cycle is not a proper subvariety of Z");
  }
  return cycle;
}

IntVector character_from_flag_degrees(const OpenOrbitModel& orbit,
                                      const IntVector& degrees) {
  if (degrees.size() != orbit.type.dims.size()) {
    throw RankMismatchError("expected " + std::to_string(orbit.type.dims.size()) +
                            " flag degrees, got " + std::to_string(degrees.size()));
  }
  const int size = orbit.spec.matrix_size();
  IntVector lambda(size - 1, 0);
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    lambda[size - orbit.type.dims[i] - 1] = degrees[i];
  }
  return lambda;
}

IntVector fiber_weight_at_base_point(const OpenOrbitModel& orbit,
                                     const IntVector& lambda) {
  const int size = orbit.spec.matrix_size();
  if (static_cast<int>(lambda.size()) != size - 1) {
    throw RankMismatchError("character has " + std::to_string(lambda.size()) +
                            " coordinates, expected " + std::to_string(size - 1));
  }
  for (int j : orbit.flag.parabolic.levi) {
    if (lambda[j] != 0) {
      throw NotDominantError("weight " + format_weight(Weight(lambda)) +
                             " is not a character of Q (nonzero on Levi root " +
                             std::to_string(j + 1) + ")");
    }
  }
  const auto level = base_point_levels(orbit);
  IntVector eps(size, 0);
  for (std::size_t i = 0; i < orbit.type.dims.size(); ++i) {
    const Int c = lambda[size - orbit.type.dims[i] - 1];
    for (int x = 0; x < size; ++x) {
      if (level[x] <= static_cast<int>(i)) eps[x] -= c;
    }
  }
  return eps;
}

std::string to_string(OrbitClass c) {
  switch (c) {
    case OrbitClass::Generic:
      return "Generic";
    case OrbitClass::HermitianHolomorphicType:
      return "HermitianHolomorphicType";
    case OrbitClass::Transitive:
      return "Transitive";
  }
  return "Generic";
}

OrbitClass parse_orbit_class(std::string_view text) {
  if (text == "Generic") return OrbitClass::Generic;
  if (text == "HermitianHolomorphicType") return OrbitClass::HermitianHolomorphicType;
  if (text == "Transitive") return OrbitClass::Transitive;
  throw ParseError("unknown orbit class '" + std::string(text) + "'");
}

OrbitClass classify_exception(const OpenOrbitModel& orbit,
                              bool hermitian_override) {
  const BaseCycle cycle = base_cycle(orbit);
  // G_0 transitive on Z would make D = Z; base_cycle already rules out
  // q = dim Z for every supported orbit.
  if (cycle.q == 0 || hermitian_override) return OrbitClass::HermitianHolomorphicType;
  return OrbitClass::Generic;
}

SchubertSliceData schubert_slice_data(const OpenOrbitModel& orbit) {
  const BaseCycle cycle = base_cycle(orbit);
  SchubertSliceData data;
  const auto reps = minimal_coset_reps(orbit.flag);
  for (const auto& s : reps) {
    if (s.codim == cycle.q) data.codim_q_reps.push_back(s);
  }
  // [C_0] is known when C_0 is a point, a linear subspace of P^{N-1}, or the
  // quadric of degree 2 in P^{n-1}.
  const bool projective = orbit.type.dims == std::vector<int>{1};
  Int coefficient = 0;
  if (cycle.q == 0 || (projective && orbit.spec.family == RealFamily::SuPQ)) {
    coefficient = 1;
  } else if (projective && orbit.spec.family == RealFamily::SlNR) {
    coefficient = 2;
  }
  if (coefficient > 0) {
    std::map<WeylElement, Int> coeffs;
    for (const auto& s : reps) {
      if (s.dim == cycle.q) coeffs[s.rep] = coefficient;
    }
    if (coeffs.size() != 1) {
      throw ConsistencyError("expected a unique Schubert class in degree q");
    }
    data.base_class = make_cycle_class(orbit.flag, cycle.q, coeffs);
    for (const auto& s : data.codim_q_reps) {
      data.d_values.push_back(intersection_number(orbit.flag, *data.base_class, s));
    }
    data.status = "computed from the base-cycle class";
  } else {
    data.d_values.assign(data.codim_q_reps.size(), std::nullopt);
    data.status = "exists by homology generation; value not computed";
  }
  return data;
}

}  // namespace flagdom
