#include "flagdom/cert.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "flagdom/error.hpp"
#include "flagdom/realform.hpp"

namespace flagdom {

namespace {

using json = nlohmann::ordered_json;

const StructuralFact kBuchdahl{
    "Satisfied",
    "Schubert slice theorem (M_D = Sigma x F) and contractibility of the "
    "fiber F; structural, not recomputed"};
const StructuralFact kStein{
    "Satisfied",
    "cycle space theorem (M_D is the universal domain, Stein and "
    "contractible); structural, not recomputed"};

std::string exceptional_note(OrbitClass c) {
  return "exceptional orbit (" + to_string(c) +
         "): M_D is either the bounded symmetric domain B or its conjugate, "
         "so the Generic fibration argument does not apply";
}

Weight ambient_to_k(const InvolutionData& inv, const IntVector& t) {
  return torus_to_k_weight(inv, t);
}

void subtract(AmbientMultiset& from, const AmbientMultiset& what) {
  for (const auto& [w, n] : what) {
    auto it = from.find(w);
    if (it == from.end() || it->second < n) {
      throw ConsistencyError("k cap q_{z0} is not contained in q_{z0}");
    }
    it->second -= n;
    if (it->second == 0) from.erase(it);
  }
}

Int parse_int(std::string_view text) {
  Int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("malformed integer '" + std::string(text) + "'");
  }
  return value;
}

std::string format_int_list(const IntVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

IntVector parse_int_list(std::string_view text) {
  IntVector out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  for (;;) {
    const auto end = text.find(',', pos);
    out.push_back(parse_int(text.substr(pos, end - pos)));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::string render_bbw(const BBWResult& r) {
  if (r.zero) return "zero";
  return "H^" + std::to_string(r.degree) + " " + format_weight(r.highest_weight) +
         " dim " + std::to_string(r.dim);
}

BBWResult parse_bbw(std::string_view text) {
  if (text == "zero") return BBWResult::vanishing();
  std::istringstream in{std::string(text)};
  std::string degree, weight, dim_key, dim;
  in >> degree >> weight >> dim_key >> dim;
  if (degree.rfind("H^", 0) != 0 || dim_key != "dim" || dim.empty()) {
    throw ParseError("malformed cohomology '" + std::string(text) + "'");
  }
  BBWResult r;
  r.zero = false;
  r.degree = static_cast<int>(parse_int(std::string_view(degree).substr(2)));
  r.highest_weight = parse_weight(weight);
  r.dim = parse_int(dim);
  return r;
}

json bbw_to_json(const BBWResult& r) {
  if (r.zero) return json{{"outcome", "Zero"}};
  return json{{"outcome", "Cohomology"},
              {"degree", r.degree},
              {"highest_weight", format_weight(r.highest_weight)},
              {"dim", r.dim}};
}

BBWResult bbw_from_json(const json& j) {
  const std::string outcome = j.at("outcome").get<std::string>();
  if (outcome == "Zero") return BBWResult::vanishing();
  if (outcome != "Cohomology") throw ParseError("unknown outcome '" + outcome + "'");
  BBWResult r;
  r.zero = false;
  r.degree = j.at("degree").get<int>();
  r.highest_weight = parse_weight(j.at("highest_weight").get<std::string>());
  r.dim = j.at("dim").get<Int>();
  return r;
}

json fact_to_json(const StructuralFact& f) {
  return json{{"status", f.status}, {"citation", f.citation}};
}

StructuralFact fact_from_json(const json& j) {
  return {j.at("status").get<std::string>(), j.at("citation").get<std::string>()};
}

}  // namespace

FibrationDims fibration_model(const OpenOrbitModel& orbit) {
  FibrationDims d;
  d.dim_Z = orbit.flag.dim;
  d.q = base_cycle(orbit).q;
  // A point cycle is stabilized by Q_{z0}, so M_Z = Z and M_D = D; otherwise
  // the stabilizer of C_0 is K and M_Z = G/K.
  d.dim_MZ = d.q == 0 ? d.dim_Z : dim_g(orbit.spec) - dim_k(orbit.spec);
  d.dim_Sigma = d.dim_Z - d.q;
  d.dim_F = d.dim_MZ - d.dim_Sigma;
  if (d.dim_Sigma < 0 || d.dim_F < 0) {
    throw ConsistencyError("negative fibration dimension for " + orbit.descriptor());
  }
  return d;
}

FibrationDims fibration_dims(const OpenOrbitModel& orbit, bool hermitian_override) {
  const OrbitClass c = classify_exception(orbit, hermitian_override);
  if (c != OrbitClass::Generic) {
    throw ExceptionalOrbitError("orbit " + orbit.descriptor() + " is " +
                                to_string(c) +
                                "; the Schubert fibration needs a Generic orbit");
  }
  return fibration_model(orbit);
}

MuFiberModule mu_fiber_module(const OpenOrbitModel& orbit) {
  const InvolutionData inv = involution_data(orbit.spec);
  const BaseCycle cycle = base_cycle(orbit);
  const auto level = base_point_levels(orbit);
  const int size = orbit.spec.matrix_size();
  const std::size_t t_dim = inv.torus_projection.size();
  MuFiberModule module;
  if (cycle.q == 0) return module;

  // t-weights of q_{z0}: the Cartan h plus the roots e_i - e_j, level i <= level j
  AmbientMultiset q_weights;
  q_weights[IntVector(t_dim, 0)] += size - 1;
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (i == j || level[i] > level[j]) continue;
      IntVector eps(size, 0);
      eps[i] = 1;
      eps[j] = -1;
      ++q_weights[project_to_torus(inv, eps)];
    }
  }
  // t-weights of k cap q_{z0}: all of k except the positive nilradical of
  // the parabolic of K defining C_0
  AmbientMultiset kq_weights = k_adjoint_weights(inv);
  AmbientMultiset tangent;
  for (const auto& beta : nilradical_roots(cycle.k_flag)) {
    ++tangent[k_root_ambient(inv, beta)];
  }
  subtract(kq_weights, tangent);
  subtract(q_weights, kq_weights);

  for (const auto& [t, n] : q_weights) module.weights[ambient_to_k(inv, t)] += n;
  const FibrationDims dims = fibration_model(orbit);
  if (total_multiplicity(module.weights) != dims.dim_F) {
    throw ConsistencyError("mu-fiber module of " + orbit.descriptor() + " has rank " +
                           std::to_string(total_multiplicity(module.weights)) +
                           " but dim_F = " + std::to_string(dims.dim_F));
  }
  return module;
}

std::string to_string(Verdict v) {
  return v == Verdict::Injective ? "Injective" : "Inconclusive";
}

Verdict parse_verdict(std::string_view text) {
  if (text == "Injective") return Verdict::Injective;
  if (text == "Inconclusive") return Verdict::Inconclusive;
  throw ParseError("unknown verdict '" + std::string(text) + "'");
}

InjectivityCertificate certify(const OpenOrbitModel& orbit, const IntVector& lambda,
                               bool hermitian_override) {
  InjectivityCertificate c;
  c.orbit = orbit.descriptor();
  c.lambda = lambda;
  const BaseCycle cycle = base_cycle(orbit);
  c.q = cycle.q;
  c.exceptional = classify_exception(orbit, hermitian_override);
  c.fibration = fibration_model(orbit);
  c.buchdahl = kBuchdahl;
  c.stein_contractible = kStein;
  const DerivedFiber fiber = derived_fiber(orbit, lambda);
  c.derived_fiber = fiber.fiber;
  if (!fiber.cohomology.zero && !fiber.degree_is_q) {
    c.notes.push_back("E|C_0 has cohomology only in degree " +
                      std::to_string(fiber.cohomology.degree) + ", not q");
  }
  if (c.exceptional != OrbitClass::Generic) {
    c.verdict = Verdict::Inconclusive;
    c.notes.push_back(exceptional_note(c.exceptional));
    return c;
  }

  const WeightMultiset cotangent = negate(mu_fiber_module(orbit).weights);
  bool all_proved = true;
  for (int r = 1; r <= c.fibration.dim_F; ++r) {
    const WeightMultiset pieces = exterior_power_weights(cotangent, r);
    for (int p = 0; p < c.q; ++p) {
      const VanishingStatus s = vanishing_in_degree(cycle.k_flag, pieces, fiber.k_weight, p);
      all_proved = all_proved && s == VanishingStatus::Proved;
      c.vanishing_table.push_back({p, r, s});
    }
  }
  std::sort(c.vanishing_table.begin(), c.vanishing_table.end(),
            [](const VanishingEntry& a, const VanishingEntry& b) {
              return std::pair(a.p, a.r) < std::pair(b.p, b.r);
            });
  c.verdict = all_proved ? Verdict::Injective : Verdict::Inconclusive;
  if (!all_proved) {
    c.notes.push_back("bundle not shown sufficiently negative: some relative "
                      "form piece may have cohomology below degree q");
  }
  return c;
}

std::string render_certificate_text(const InjectivityCertificate& c) {
  std::ostringstream out;
  out << "format: " << kCertificateFormat << "\n";
  out << "orbit: " << c.orbit << "\n";
  out << "lambda: " << format_int_list(c.lambda) << "\n";
  out << "q: " << c.q << "\n";
  out << "dim_Z: " << c.fibration.dim_Z << "\n";
  out << "dim_MZ: " << c.fibration.dim_MZ << "\n";
  out << "dim_Sigma: " << c.fibration.dim_Sigma << "\n";
  out << "dim_F: " << c.fibration.dim_F << "\n";
  out << "exceptional: " << to_string(c.exceptional) << "\n";
  out << "buchdahl: " << c.buchdahl.status << " | " << c.buchdahl.citation << "\n";
  out << "stein_contractible: " << c.stein_contractible.status << " | "
      << c.stein_contractible.citation << "\n";
  for (const auto& e : c.vanishing_table) {
    out << "vanishing: " << e.p << " " << e.r << " " << to_string(e.status) << "\n";
  }
  out << "derived_fiber: " << render_bbw(c.derived_fiber) << "\n";
  out << "verdict: " << to_string(c.verdict) << "\n";
  for (const auto& note : c.notes) out << "note: " << note << "\n";
  return out.str();
}

InjectivityCertificate parse_certificate_text(std::string_view text) {
  InjectivityCertificate c;
  std::istringstream in{std::string(text)};
  std::string line;
  bool saw_format = false;
  auto split_fact = [](const std::string& v) {
    const auto bar = v.find(" | ");
    if (bar == std::string::npos) throw ParseError("malformed fact '" + v + "'");
    return StructuralFact{v.substr(0, bar), v.substr(bar + 3)};
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto colon = line.find(": ");
    const std::string key = line.substr(0, colon);
    if (colon == std::string::npos) {
      throw ParseError("malformed certificate line '" + line + "'");
    }
    const std::string value = line.substr(colon + 2);
    if (key == "format") {
      if (value != kCertificateFormat) {
        throw ParseError("unsupported certificate format '" + value + "'");
      }
      saw_format = true;
    } else if (key == "orbit") {
      c.orbit = value;
    } else if (key == "lambda") {
      c.lambda = parse_int_list(value);
    } else if (key == "q") {
      c.q = static_cast<int>(parse_int(value));
    } else if (key == "dim_Z") {
      c.fibration.dim_Z = parse_int(value);
      c.fibration.q = c.q;
    } else if (key == "dim_MZ") {
      c.fibration.dim_MZ = parse_int(value);
    } else if (key == "dim_Sigma") {
      c.fibration.dim_Sigma = parse_int(value);
    } else if (key == "dim_F") {
      c.fibration.dim_F = parse_int(value);
    } else if (key == "exceptional") {
      c.exceptional = parse_orbit_class(value);
    } else if (key == "buchdahl") {
      c.buchdahl = split_fact(value);
    } else if (key == "stein_contractible") {
      c.stein_contractible = split_fact(value);
    } else if (key == "vanishing") {
      std::istringstream v(value);
      std::string p, r, s;
      v >> p >> r >> s;
      c.vanishing_table.push_back({static_cast<int>(parse_int(p)),
                                   static_cast<int>(parse_int(r)),
                                   parse_vanishing_status(s)});
    } else if (key == "derived_fiber") {
      c.derived_fiber = parse_bbw(value);
    } else if (key == "verdict") {
      c.verdict = parse_verdict(value);
    } else if (key == "note") {
      c.notes.push_back(value);
    } else {
      throw ParseError("unknown certificate key '" + key + "'");
    }
  }
  if (!saw_format) throw ParseError("certificate lacks a format line");
  return c;
}

std::string render_certificate_json(const InjectivityCertificate& c) {
  json table = json::array();
  for (const auto& e : c.vanishing_table) {
    table.push_back({{"p", e.p}, {"r", e.r}, {"status", to_string(e.status)}});
  }
  const json j{
      {"format", std::string(kCertificateFormat)},
      {"orbit", c.orbit},
      {"lambda", c.lambda},
      {"q", c.q},
      {"fibration",
       {{"dim_Z", c.fibration.dim_Z},
        {"q", c.fibration.q},
        {"dim_MZ", c.fibration.dim_MZ},
        {"dim_Sigma", c.fibration.dim_Sigma},
        {"dim_F", c.fibration.dim_F}}},
      {"exceptional", to_string(c.exceptional)},
      {"buchdahl", fact_to_json(c.buchdahl)},
      {"stein_contractible", fact_to_json(c.stein_contractible)},
      {"vanishing_table", table},
      {"derived_fiber", bbw_to_json(c.derived_fiber)},
      {"verdict", to_string(c.verdict)},
      {"notes", c.notes}};
  return j.dump(2);
}

InjectivityCertificate parse_certificate_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.at("format").get<std::string>() != kCertificateFormat) {
      throw ParseError("unsupported certificate format");
    }
    InjectivityCertificate c;
    c.orbit = j.at("orbit").get<std::string>();
    c.lambda = j.at("lambda").get<IntVector>();
    c.q = j.at("q").get<int>();
    const json& f = j.at("fibration");
    c.fibration = {f.at("dim_Z").get<Int>(), f.at("q").get<Int>(),
                   f.at("dim_MZ").get<Int>(), f.at("dim_Sigma").get<Int>(),
                   f.at("dim_F").get<Int>()};
    c.exceptional = parse_orbit_class(j.at("exceptional").get<std::string>());
    c.buchdahl = fact_from_json(j.at("buchdahl"));
    c.stein_contractible = fact_from_json(j.at("stein_contractible"));
    for (const auto& e : j.at("vanishing_table")) {
      c.vanishing_table.push_back(
          {e.at("p").get<int>(), e.at("r").get<int>(),
           parse_vanishing_status(e.at("status").get<std::string>())});
    }
    c.derived_fiber = bbw_from_json(j.at("derived_fiber"));
    c.verdict = parse_verdict(j.at("verdict").get<std::string>());
    c.notes = j.at("notes").get<std::vector<std::string>>();
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed certificate JSON: ") + e.what());
  }
}

ScanReport threshold_scan(const OpenOrbitModel& orbit, const IntVector& direction,
                          Int k_min, Int k_max, bool hermitian_override) {
  ScanReport report;
  report.orbit = orbit.descriptor();
  report.direction = direction;
  for (Int k = k_min; k <= k_max; ++k) {
    IntVector lambda = direction;
    for (auto& c : lambda) c *= k;
    const Verdict v = certify(orbit, lambda, hermitian_override).verdict;
    report.entries.push_back({k, std::move(lambda), v});
  }
  for (auto it = report.entries.rbegin(); it != report.entries.rend(); ++it) {
    if (it->verdict != Verdict::Injective) break;
    report.boundary = it->k;
  }
  for (const auto& e : report.entries) {
    const bool above = report.boundary && e.k >= *report.boundary;
    if ((e.verdict == Verdict::Injective) != above) report.contiguous = false;
  }
  return report;
}

}  // namespace flagdom
