#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>

#include "flagdom/bbw.hpp"
#include "flagdom/cert.hpp"
#include "flagdom/error.hpp"
#include "flagdom/orbits.hpp"
#include "flagdom/rational.hpp"
#include "flagdom/realform.hpp"
#include "flagdom/report.hpp"
#include "flagdom/rootsys.hpp"
#include "flagdom/schubert.hpp"

namespace flagdom {

namespace {

constexpr int kReportVersion = 1;

struct Options {
  std::string format;
  std::string type;
  std::string levi;
  std::string form;
  std::string flag;
  std::string orbit;
  std::string weight;
  std::string k_type;
  std::string test;
  std::string direction;
  std::string range = "0..12";
  std::size_t cap = kDefaultWeylCap;
  bool list = false;
  bool hermitian_override = false;
};

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

Int to_int(std::string_view text, std::string_view what) {
  try {
    std::size_t used = 0;
    const std::string s(text);
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
}

IntVector parse_ints(std::string_view text, std::string_view what) {
  IntVector out;
  for (auto part : split(text, ',')) out.push_back(to_int(part, what));
  return out;
}

Parabolic parse_levi(const std::string& text) {
  Parabolic p;
  if (text.empty() || text == "none") return p;
  for (Int i : parse_ints(text, "levi")) p.levi.push_back(static_cast<int>(i) - 1);
  return p;
}

Report word_json(const WeylElement& w) { return format_word(w); }

Report roots_report(const RootSystem& rs) {
  Report r;
  r["type"] = rs.label;
  r["rank"] = rs.rank;
  r["dimension"] = rs.dimension();
  r["weyl_order"] = weyl_group_order(rs);
  r["num_positive_roots"] = rs.num_positive_roots();
  r["cartan"] = rs.cartan;
  r["positive_roots"] = rs.positive_roots;
  r["rho"] = format_weight(rho(rs));
  return r;
}

Report weyl_report(const RootSystem& rs, std::size_t cap, bool list) {
  const WeylGroup g = enumerate_weyl_group(rs, cap);
  Report r;
  r["type"] = rs.label;
  r["order"] = g.elements.size();
  r["longest"] = word_json(g.longest);
  r["longest_length"] = g.longest.length();
  std::vector<Int> counts(g.longest.length() + 1, 0);
  for (const auto& w : g.elements) ++counts[w.length()];
  r["length_counts"] = counts;
  if (list) {
    Report elements = Report::array();
    for (const auto& w : g.elements) elements.push_back(word_json(w));
    r["elements"] = elements;
  }
  return r;
}

Report schubert_report(const FlagManifold& flag) {
  Report r;
  r["type"] = flag.rs.label;
  Report levi = Report::array();
  for (int j : flag.parabolic.levi) levi.push_back(j + 1);
  r["levi"] = levi;
  r["dim"] = flag.dim;
  r["levi_weyl_order"] = levi_weyl_order(flag);
  const auto cells = minimal_coset_reps(flag);
  r["num_cells"] = cells.size();
  r["poincare"] = poincare_polynomial(flag);
  Report rows = Report::array();
  for (const auto& s : cells) {
    rows.push_back({{"word", word_json(s.rep)},
                    {"dim", s.dim},
                    {"codim", s.codim},
                    {"dual", word_json(dual_variety(flag, s).rep)}});
  }
  r["cells"] = rows;
  return r;
}

Report restricted_report(const RealFormSpec& spec) {
  const RestrictedRootSystem rrs = restricted_roots(spec);
  Report r;
  r["form"] = spec.name();
  r["type"] = rrs.label;
  r["real_rank"] = rrs.a_rank;
  Report rows = Report::array();
  for (std::size_t i = 0; i < rrs.roots.size(); ++i) {
    rows.push_back({{"root", rrs.roots[i]}, {"multiplicity", rrs.multiplicities[i]}});
  }
  r["roots"] = rows;
  const IwasawaDims iw = iwasawa_dims(spec);
  r["iwasawa"] = {{"dim_a", iw.dim_a}, {"dim_n", iw.dim_n}};
  return r;
}

Report polytope_report(const RealFormSpec& spec, const std::string& test) {
  const PolytopeU poly = polytope_U(spec);
  Report r;
  r["form"] = spec.name();
  r["dim"] = poly.dim;
  r["bound"] = format_rational(poly.bound) + " pi";
  r["facets"] = poly.facet_normals;
  if (!test.empty()) {
    std::vector<Rational> xi;
    Report shown = Report::array();
    for (auto part : split(test, ',')) {
      xi.push_back(parse_rational(part));
      shown.push_back(format_rational(xi.back()) + " pi");
    }
    r["test"] = {{"xi", shown}, {"result", membership(poly, xi) ? "inside" : "outside"}};
  }
  return r;
}

FlagType flag_for(const Options& o, const RealFormSpec& spec) {
  if (o.flag.empty()) throw ParseError("--flag is required");
  return parse_flag_type(o.flag, spec.matrix_size());
}

RealFormSpec form_for(const Options& o) {
  if (o.form.empty()) throw ParseError("--form is required");
  return parse_real_form(o.form);
}

OpenOrbitModel orbit_for(const Options& o) {
  const RealFormSpec spec = form_for(o);
  const FlagType type = flag_for(o, spec);
  if (spec.family == RealFamily::SuPQ && o.orbit.empty()) {
    throw ParseError("--orbit is required for su(p,q)");
  }
  return find_open_orbit(spec, type, parse_signature_chain(o.orbit));
}

Report orbit_summary(const OpenOrbitModel& orbit, bool hermitian_override) {
  const BaseCycle cycle = base_cycle(orbit);
  Report r;
  r["tag"] = orbit.tag;
  r["descriptor"] = orbit.descriptor();
  r["q"] = cycle.q;
  r["base_cycle"] = cycle.description;
  r["classification"] = to_string(classify_exception(orbit, hermitian_override));
  return r;
}

Report orbits_report(const Options& o) {
  const RealFormSpec spec = form_for(o);
  const FlagType type = flag_for(o, spec);
  const auto orbits = enumerate_open_orbits(spec, type);
  Report r;
  r["form"] = spec.name();
  r["flag"] = format_flag_type(type);
  r["dim_Z"] = orbits.front().flag.dim;
  r["num_orbits"] = orbits.size();
  Report rows = Report::array();
  for (const auto& orbit : orbits) rows.push_back(orbit_summary(orbit, o.hermitian_override));
  r["orbits"] = rows;
  return r;
}

Report fibration_json(const FibrationDims& d) {
  return {{"dim_Z", d.dim_Z}, {"q", d.q}, {"dim_MZ", d.dim_MZ},
          {"dim_Sigma", d.dim_Sigma}, {"dim_F", d.dim_F}};
}

Report basecycle_report(const Options& o) {
  const OpenOrbitModel orbit = orbit_for(o);
  const BaseCycle cycle = base_cycle(orbit);
  Report r = orbit_summary(orbit, o.hermitian_override);
  r["k_type"] = cycle.k_flag.rs.label;
  Report levi = Report::array();
  for (int j : cycle.k_flag.parabolic.levi) levi.push_back(j + 1);
  r["k_levi"] = levi;
  const SchubertSliceData slice = schubert_slice_data(orbit);
  Report rows = Report::array();
  for (std::size_t i = 0; i < slice.codim_q_reps.size(); ++i) {
    Report d = slice.d_values[i] ? Report(*slice.d_values[i]) : Report(nullptr);
    rows.push_back({{"word", word_json(slice.codim_q_reps[i].rep)}, {"d", d}});
  }
  r["schubert_slice"] = {{"status", slice.status}, {"cells", rows}};
  r["fibration"] = fibration_json(fibration_model(orbit));
  return r;
}

Report bbw_json(const BBWResult& b) {
  if (b.zero) return {{"outcome", "Zero"}};
  return {{"outcome", "Cohomology"},
          {"degree", b.degree},
          {"highest_weight", format_weight(b.highest_weight)},
          {"dim", b.dim}};
}

Report bbw_report(const Options& o) {
  if (o.weight.empty()) throw ParseError("--weight is required");
  Report r;
  if (!o.k_type.empty()) {
    const FlagManifold c = make_flag_manifold(parse_root_system(o.k_type), parse_levi(o.levi));
    const Weight lambda = parse_weight(o.weight);
    r["type"] = c.rs.label;
    r["dim_C"] = c.dim;
    r["weight"] = format_weight(lambda);
    r["cohomology"] = bbw_json(bbw_line(c, lambda));
    return r;
  }
  const OpenOrbitModel orbit = orbit_for(o);
  const IntVector lambda = character_from_flag_degrees(orbit, parse_ints(o.weight, "weight"));
  const DerivedFiber f = derived_fiber(orbit, lambda);
  r["orbit"] = orbit.descriptor();
  r["lambda"] = lambda;
  r["q"] = f.q;
  r["restricted_weight"] = format_weight(f.k_weight);
  r["cohomology"] = bbw_json(f.cohomology);
  r["fiber"] = bbw_json(f.fiber);
  r["degree_is_q"] = f.degree_is_q;
  return r;
}

Report certify_report(const Options& o) {
  if (o.weight.empty()) throw ParseError("--weight is required");
  const OpenOrbitModel orbit = orbit_for(o);
  const IntVector lambda = character_from_flag_degrees(orbit, parse_ints(o.weight, "weight"));
  const InjectivityCertificate c = certify(orbit, lambda, o.hermitian_override);
  return Report::parse(render_certificate_json(c));
}

Report scan_report(const Options& o) {
  if (o.direction.empty()) throw ParseError("--direction is required");
  const auto dots = o.range.find("..");
  if (dots == std::string::npos) throw ParseError("malformed range '" + o.range + "'");
  const Int k_min = to_int(std::string_view(o.range).substr(0, dots), "range");
  const Int k_max = to_int(std::string_view(o.range).substr(dots + 2), "range");
  const OpenOrbitModel orbit = orbit_for(o);
  const IntVector direction =
      character_from_flag_degrees(orbit, parse_ints(o.direction, "direction"));
  const ScanReport s = threshold_scan(orbit, direction, k_min, k_max, o.hermitian_override);
  Report r;
  r["orbit"] = s.orbit;
  r["direction"] = s.direction;
  Report rows = Report::array();
  for (const auto& e : s.entries) {
    rows.push_back({{"k", e.k}, {"lambda", e.lambda}, {"verdict", to_string(e.verdict)}});
  }
  r["entries"] = rows;
  r["boundary"] = s.boundary ? Report(*s.boundary) : Report(nullptr);
  r["contiguous"] = s.contiguous;
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"flagdom: flag domains, cycle spaces and the double fibration transform"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  if (const char* env = std::getenv("FLAGDOM_FORMAT")) o.format = env;
  if (o.format.empty()) o.format = "text";
  app.add_option("--format", o.format, "text or json (default $FLAGDOM_FORMAT or text)")
      ->check(CLI::IsMember({"text", "json"}));

  auto* roots = app.add_subcommand("roots", "root system data");
  roots->add_option("--type", o.type, "Cartan type, e.g. A2, B3, G2")->required();
  auto* weyl = app.add_subcommand("weyl", "Weyl group enumeration");
  weyl->add_option("--type", o.type, "Cartan type")->required();
  weyl->add_option("--cap", o.cap, "maximal group order");
  weyl->add_flag("--list", o.list, "list every element");
  auto* schubert = app.add_subcommand("schubert", "Schubert cells of G/Q");
  schubert->add_option("--type", o.type, "Cartan type");
  schubert->add_option("--levi", o.levi, "Levi simple roots, 1-based, e.g. 1,3");
  schubert->add_option("--form", o.form, "su,p,q or sl_r,n");
  schubert->add_option("--flag", o.flag, "proj | gr,k | flag,k1,... | full");
  auto* restricted = app.add_subcommand("restricted", "restricted roots");
  restricted->add_option("--form", o.form, "su,p,q or sl_r,n")->required();
  auto* polytope = app.add_subcommand("polytope", "the polytope V");
  polytope->add_option("--form", o.form, "su,p,q or sl_r,n")->required();
  polytope->add_option("--test", o.test, "simple restricted root values in units of pi");
  auto* orbits = app.add_subcommand("orbits", "open orbits in G/Q");
  auto* basecycle = app.add_subcommand("basecycle", "base cycle and Schubert slice");
  auto* bbw = app.add_subcommand("bbw", "Bott-Borel-Weil");
  auto* cert = app.add_subcommand("certify", "injectivity certificate");
  auto* scan = app.add_subcommand("scan", "threshold scan");
  for (auto* sub : {orbits, basecycle, bbw, cert, scan}) {
    sub->add_option("--form", o.form, "su,p,q or sl_r,n");
    sub->add_option("--flag", o.flag, "proj | gr,k | flag,k1,... | full");
    sub->add_flag("--hermitian-override", o.hermitian_override,
                  "treat the orbit as of Hermitian holomorphic type");
  }
  for (auto* sub : {basecycle, bbw, cert, scan}) {
    sub->add_option("--orbit", o.orbit, "signature chain a,b[/a,b...]");
  }
  bbw->add_option("--k-type", o.k_type, "Cartan type of K for a bare flag manifold");
  bbw->add_option("--levi", o.levi, "Levi simple roots of the K flag, 1-based");
  bbw->add_option("--weight", o.weight, "weight (K flag) or flag degrees (orbit)");
  cert->add_option("--weight", o.weight, "flag degrees c_1,...,c_m")->required();
  scan->add_option("--direction", o.direction, "flag degrees of the direction")->required();
  scan->add_option("--range", o.range, "k range a..b");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (o.format != "text" && o.format != "json") {
    err << "error: unknown output format '" << o.format << "' (text or json)\n";
    return 2;
  }

  try {
    Report body;
    std::string verb;
    if (roots->parsed()) {
      verb = "roots";
      body = roots_report(parse_root_system(o.type));
    } else if (weyl->parsed()) {
      verb = "weyl";
      body = weyl_report(parse_root_system(o.type), o.cap, o.list);
    } else if (schubert->parsed()) {
      verb = "schubert";
      if (!o.type.empty()) {
        body = schubert_report(make_flag_manifold(parse_root_system(o.type), parse_levi(o.levi)));
      } else {
        const RealFormSpec spec = form_for(o);
        body = schubert_report(flag_manifold_for(spec, flag_for(o, spec)));
      }
    } else if (restricted->parsed()) {
      verb = "restricted";
      body = restricted_report(form_for(o));
    } else if (polytope->parsed()) {
      verb = "polytope";
      body = polytope_report(form_for(o), o.test);
    } else if (orbits->parsed()) {
      verb = "orbits";
      body = orbits_report(o);
    } else if (basecycle->parsed()) {
      verb = "basecycle";
      body = basecycle_report(o);
    } else if (bbw->parsed()) {
      verb = "bbw";
      body = bbw_report(o);
    } else if (cert->parsed()) {
      verb = "certify";
      body = certify_report(o);
    } else {
      verb = "scan";
      body = scan_report(o);
    }
    Report report;
    report["verb"] = verb;
    report["version"] = kReportVersion;
    report.update(body);
    out << (o.format == "json" ? report.dump(2) + "\n" : render_text(report));
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace flagdom
