#include "flagdom/realform.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iomanip>
#include <set>
#include <sstream>

#include <boost/crc.hpp>

#include "flagdom/error.hpp"

namespace flagdom {

namespace {

constexpr int kMaxMatrixSize = 9;  // complex rank <= 8

int parse_param(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("malformed real form '" + std::string(whole) + "'");
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

Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntMatrix identity(int n) {
  IntMatrix m(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntVector unit(int n, int i, Int value = 1) {
  IntVector v(n, 0);
  v[i] = value;
  return v;
}

IntVector mat_vec(const IntMatrix& m, const IntVector& v) {
  IntVector out(m.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r) out[r] = dot(m[r], v);
  return out;
}

// Simple roots of so(n) on the coordinates f_1..f_m of its Cartan.
std::vector<IntVector> so_simple_roots(int n) {
  const int m = n / 2;
  std::vector<IntVector> out;
  if (n == 2) return out;
  if (n == 3) return {unit(1, 0)};
  if (n == 4) return {IntVector{1, -1}, IntVector{1, 1}};
  for (int i = 0; i + 1 < m; ++i) {
    IntVector v(m, 0);
    v[i] = 1;
    v[i + 1] = -1;
    out.push_back(v);
  }
  if (n % 2 == 1) {
    out.push_back(unit(m, m - 1));
  } else {
    IntVector v(m, 0);
    v[m - 2] = 1;
    v[m - 1] = 1;
    out.push_back(v);
  }
  return out;
}

void finish_restriction(InvolutionData& inv) {
  inv.k_roots = root_system_from_simple_roots(
      inv.k_simple_roots, static_cast<int>(inv.k_central_charges.size()));
  const int cols = inv.spec.matrix_size();
  inv.restrict_weight.clear();
  auto compose = [&](const IntVector& row_on_torus, Int num, Int den) {
    IntVector row(cols, 0);
    for (int a = 0; a < cols; ++a) {
      Int s = 0;
      for (std::size_t t = 0; t < row_on_torus.size(); ++t) {
        s += row_on_torus[t] * inv.torus_projection[t][a];
      }
      if ((s * num) % den != 0) {
        throw ConsistencyError("non-integral restriction matrix");
      }
      row[a] = s * num / den;
    }
    inv.restrict_weight.push_back(row);
  };
  for (const auto& s : inv.k_simple_roots) compose(s, 2, dot(s, s));
  for (const auto& z : inv.k_central_charges) compose(z, 1, 1);
}

}  // namespace

std::string RealFormSpec::name() const {
  if (family == RealFamily::SuPQ) {
    return "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
  return "sl(" + std::to_string(n) + ",R)";
}

std::string RealFormSpec::key() const {
  if (family == RealFamily::SuPQ) {
    return "su," + std::to_string(p) + "," + std::to_string(q);
  }
  return "sl_r," + std::to_string(n);
}

RealFormSpec su_pq(int p, int q) {
  if (p < 1 || q < 1 || p + q > kMaxMatrixSize) {
    throw UnsupportedError("su(p,q) needs p,q >= 1 and p+q <= 9, got su(" +
                           std::to_string(p) + "," + std::to_string(q) + ")");
  }
  RealFormSpec s;
  s.family = RealFamily::SuPQ;
  s.p = p;
  s.q = q;
  return s;
}

RealFormSpec sl_n_r(int n) {
  if (n < 2 || n > kMaxMatrixSize) {
    throw UnsupportedError("sl(n,R) needs 2 <= n <= 9, got n = " +
                           std::to_string(n));
  }
  RealFormSpec s;
  s.family = RealFamily::SlNR;
  s.n = n;
  return s;
}

RealFormSpec parse_real_form(std::string_view text) {
  const auto parts = split(text, ',');
  std::string family(parts[0]);
  std::transform(family.begin(), family.end(), family.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (family == "su" && parts.size() == 3) {
    return su_pq(parse_param(parts[1], text), parse_param(parts[2], text));
  }
  if ((family == "sl_r" || family == "slr") && parts.size() == 2) {
    return sl_n_r(parse_param(parts[1], text));
  }
  if (family == "su" || family == "sl_r" || family == "slr") {
    throw ParseError("malformed real form '" + std::string(text) + "'");
  }
  throw UnsupportedError("unsupported real form '" + std::string(text) +
                         "'; supported families: su,p,q and sl_r,n");
}

RootSystem complex_root_system(const RealFormSpec& spec) {
  return build_root_system('A', spec.matrix_size() - 1);
}

IntVector fundamental_to_epsilon(const IntVector& lambda) {
  IntVector eps(lambda.size() + 1, 0);
  for (std::size_t j = lambda.size(); j-- > 0;) eps[j] = eps[j + 1] + lambda[j];
  return eps;
}

IntVector epsilon_to_fundamental(const IntVector& eps) {
  IntVector lambda(eps.size() - 1);
  for (std::size_t j = 0; j + 1 < eps.size(); ++j) lambda[j] = eps[j] - eps[j + 1];
  return lambda;
}

IntVector root_to_epsilon(const IntVector& root) {
  IntVector eps(root.size() + 1, 0);
  for (std::size_t j = 0; j < root.size(); ++j) {
    eps[j] += root[j];
    eps[j + 1] -= root[j];
  }
  return eps;
}

InvolutionData involution_data(const RealFormSpec& spec) {
  InvolutionData inv;
  inv.spec = spec;
  inv.g_roots = complex_root_system(spec);
  const int size = spec.matrix_size();
  if (spec.family == RealFamily::SuPQ) {
    // Inner involution: theta = Ad(diag(I_p, -I_q)) fixes the diagonal torus.
    inv.theta = identity(size);
    inv.torus_projection = identity(size);
    for (int j = 0; j + 1 < size; ++j) {
      if (j + 1 == spec.p) continue;
      IntVector s(size, 0);
      s[j] = 1;
      s[j + 1] = -1;
      inv.k_simple_roots.push_back(s);
    }
    IntVector charge(size, 0);
    for (int a = 0; a < size; ++a) charge[a] = a < spec.p ? spec.q : -spec.p;
    inv.k_central_charges.push_back(charge);
    for (const auto& beta : inv.g_roots.positive_roots) {
      const IntVector eps = root_to_epsilon(beta);
      int first = -1;
      int last = -1;
      for (int a = 0; a < size; ++a) {
        if (eps[a] != 0) {
          if (first < 0) first = a;
          last = a;
        }
      }
      inv.compact_root_flags.push_back((first < spec.p) == (last < spec.p));
    }
  } else {
    const int n = spec.n;
    const int m = n / 2;
    inv.theta.assign(n, IntVector(n, 0));
    inv.torus_projection.assign(m, IntVector(n, 0));
    for (int i = 0; i < m; ++i) {
      inv.theta[2 * i + 1][2 * i] = -1;
      inv.theta[2 * i][2 * i + 1] = -1;
      inv.torus_projection[i][2 * i] = 1;
      inv.torus_projection[i][2 * i + 1] = -1;
    }
    if (n % 2 == 1) inv.theta[n - 1][n - 1] = -1;
    inv.k_simple_roots = so_simple_roots(n);
    if (n == 2) inv.k_central_charges.push_back(IntVector{1});
    // No root space of this Cartan lies in k: the imaginary roots
    // +-(epsilon_{2i-1} - epsilon_{2i}) are noncompact, the rest are complex.
    inv.compact_root_flags.assign(inv.g_roots.positive_roots.size(), false);
  }
  finish_restriction(inv);
  return inv;
}

IntVector project_to_torus(const InvolutionData& inv, const IntVector& eps) {
  return mat_vec(inv.torus_projection, eps);
}

Weight torus_to_k_weight(const InvolutionData& inv, const IntVector& ambient) {
  Weight w;
  for (const auto& s : inv.k_simple_roots) {
    const Int num = 2 * dot(s, ambient);
    const Int den = dot(s, s);
    if (num % den != 0) throw ConsistencyError("non-integral K weight");
    w.coords.push_back(num / den);
  }
  for (const auto& z : inv.k_central_charges) w.central.push_back(dot(z, ambient));
  return w;
}

Weight restrict_to_k(const InvolutionData& inv, const IntVector& eps) {
  if (static_cast<int>(eps.size()) != inv.spec.matrix_size()) {
    throw RankMismatchError("epsilon vector of wrong length");
  }
  const IntVector row = mat_vec(inv.restrict_weight, eps);
  const auto split_at = inv.k_simple_roots.size();
  return Weight(IntVector(row.begin(), row.begin() + split_at),
                IntVector(row.begin() + split_at, row.end()));
}

IntVector k_root_ambient(const InvolutionData& inv, const IntVector& root) {
  const std::size_t dim = inv.torus_projection.size();
  IntVector out(dim, 0);
  for (std::size_t j = 0; j < root.size(); ++j) {
    for (std::size_t t = 0; t < dim; ++t) out[t] += root[j] * inv.k_simple_roots[j][t];
  }
  return out;
}

AmbientMultiset adjoint_restriction(const InvolutionData& inv) {
  AmbientMultiset out;
  const std::size_t dim = inv.torus_projection.size();
  out[IntVector(dim, 0)] += inv.g_roots.rank;
  for (const auto& beta : inv.g_roots.positive_roots) {
    const IntVector t = project_to_torus(inv, root_to_epsilon(beta));
    IntVector neg = t;
    for (auto& c : neg) c = -c;
    ++out[t];
    ++out[neg];
  }
  return out;
}

AmbientMultiset k_adjoint_weights(const InvolutionData& inv) {
  AmbientMultiset out;
  const std::size_t dim = inv.torus_projection.size();
  out[IntVector(dim, 0)] += inv.k_roots.rank + inv.k_roots.torus_rank;
  for (const auto& beta : inv.k_roots.positive_roots) {
    IntVector t = k_root_ambient(inv, beta);
    ++out[t];
    for (auto& c : t) c = -c;
    ++out[t];
  }
  return out;
}

Int dim_g(const RealFormSpec& spec) {
  const Int size = spec.matrix_size();
  return size * size - 1;
}

Int dim_k(const RealFormSpec& spec) {
  if (spec.family == RealFamily::SuPQ) {
    return Int{spec.p} * spec.p + Int{spec.q} * spec.q - 1;
  }
  return Int{spec.n} * (spec.n - 1) / 2;
}

namespace {

void write_matrix(std::ostringstream& out, const std::string& name,
                  const IntMatrix& m, std::size_t cols) {
  out << name << ' ' << m.size() << ' ' << cols << '\n';
  for (const auto& row : m) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
    out << '\n';
  }
}

std::uint32_t crc_of(std::string_view body) {
  boost::crc_32_type crc;
  crc.process_bytes(body.data(), body.size());
  return crc.checksum();
}

}  // namespace

std::string render_involution_table(const InvolutionData& inv) {
  std::ostringstream out;
  out << "format flagdom-realform/1\n";
  if (inv.spec.family == RealFamily::SuPQ) {
    out << "family su_pq\nparams " << inv.spec.p << ' ' << inv.spec.q << '\n';
  } else {
    out << "family sl_n_r\nparams " << inv.spec.n << '\n';
  }
  out << "g_type " << inv.g_roots.label << '\n';
  out << "k_type " << inv.k_roots.label << '\n';
  const std::size_t size = inv.spec.matrix_size();
  const std::size_t tdim = inv.torus_projection.size();
  write_matrix(out, "theta", inv.theta, size);
  write_matrix(out, "torus_projection", inv.torus_projection, size);
  write_matrix(out, "k_simple_roots", inv.k_simple_roots, tdim);
  write_matrix(out, "k_central_charges", inv.k_central_charges, tdim);
  out << "compact_root_flags " << inv.compact_root_flags.size() << '\n';
  for (std::size_t i = 0; i < inv.compact_root_flags.size(); ++i) {
    out << (i ? " " : "") << (inv.compact_root_flags[i] ? 1 : 0);
  }
  out << '\n';
  write_matrix(out, "restrict_weight", inv.restrict_weight, size);
  const std::string body = out.str();
  std::ostringstream tail;
  tail << "crc32 " << std::hex << std::setw(8) << std::setfill('0')
       << crc_of(body) << '\n';
  return body + tail.str();
}

InvolutionData parse_involution_table(std::string_view text) {
  const auto crc_pos = text.rfind("crc32 ");
  if (crc_pos == std::string_view::npos) {
    throw ParseError("real-form table lacks a crc32 line");
  }
  const std::string_view body = text.substr(0, crc_pos);
  std::uint32_t expected = 0;
  {
    std::string_view hex = text.substr(crc_pos + 6);
    while (!hex.empty() && std::isspace(static_cast<unsigned char>(hex.back()))) hex.remove_suffix(1);
    auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), expected, 16);
    if (ec != std::errc() || ptr != hex.data() + hex.size()) {
      throw ParseError("malformed crc32 line");
    }
  }
  if (crc_of(body) != expected) throw ParseError("real-form table checksum mismatch");

  std::istringstream in{std::string(body)};
  auto expect = [&](const std::string& key) {
    std::string word;
    if (!(in >> word) || word != key) {
      throw ParseError("real-form table: expected '" + key + "'");
    }
  };
  auto read_matrix = [&](const std::string& key) {
    expect(key);
    std::size_t rows = 0, cols = 0;
    in >> rows >> cols;
    IntMatrix m(rows, IntVector(cols));
    for (auto& row : m) {
      for (auto& v : row) in >> v;
    }
    if (!in) throw ParseError("real-form table: truncated " + key);
    return m;
  };
  std::string word;
  expect("format");
  in >> word;
  if (word != "flagdom-realform/1") throw ParseError("unknown table format " + word);
  expect("family");
  in >> word;
  expect("params");
  InvolutionData inv;
  if (word == "su_pq") {
    int p = 0, q = 0;
    in >> p >> q;
    inv.spec = su_pq(p, q);
  } else if (word == "sl_n_r") {
    int n = 0;
    in >> n;
    inv.spec = sl_n_r(n);
  } else {
    throw ParseError("unknown family " + word);
  }
  inv.g_roots = complex_root_system(inv.spec);
  expect("g_type");
  in >> word;
  expect("k_type");
  in >> word;
  inv.theta = read_matrix("theta");
  inv.torus_projection = read_matrix("torus_projection");
  inv.k_simple_roots = read_matrix("k_simple_roots");
  inv.k_central_charges = read_matrix("k_central_charges");
  expect("compact_root_flags");
  std::size_t count = 0;
  in >> count;
  for (std::size_t i = 0; i < count; ++i) {
    int bit = 0;
    in >> bit;
    inv.compact_root_flags.push_back(bit != 0);
  }
  const IntMatrix restriction = read_matrix("restrict_weight");
  finish_restriction(inv);
  if (restriction != inv.restrict_weight) {
    throw ParseError("restriction matrix disagrees with the K root data");
  }
  return inv;
}

RestrictedRootSystem restricted_roots(const RealFormSpec& spec) {
  RestrictedRootSystem rrs;
  if (spec.family == RealFamily::SlNR) {
    // Split form: a_0 is the full diagonal Cartan.
    rrs.reduced = complex_root_system(spec);
    rrs.label = rrs.reduced.label;
    rrs.a_rank = rrs.reduced.rank;
    for (const auto& beta : rrs.reduced.positive_roots) {
      IntVector neg = beta;
      for (auto& c : neg) c = -c;
      rrs.roots.push_back(beta);
      rrs.multiplicities.push_back(1);
      rrs.roots.push_back(neg);
      rrs.multiplicities.push_back(1);
    }
    return rrs;
  }
  const int p = std::max(spec.p, spec.q);
  const int r = std::min(spec.p, spec.q);
  const bool reduced_c = p == r;
  rrs.a_rank = r;
  rrs.label = (reduced_c ? "C" : "BC") + std::to_string(r);
  // Simple roots in the orthonormal basis e_1..e_r of a_0^*.
  std::vector<IntVector> simple;
  for (int i = 0; i + 1 < r; ++i) {
    IntVector v(r, 0);
    v[i] = 1;
    v[i + 1] = -1;
    simple.push_back(v);
  }
  simple.push_back(unit(r, r - 1, reduced_c ? 2 : 1));
  rrs.reduced = root_system_from_simple_roots(simple, 0);

  auto to_simple = [&](const IntVector& e) {
    IntVector c(r, 0);
    Int partial = 0;
    for (int i = 0; i < r; ++i) {
      partial += e[i];
      c[i] = partial;
    }
    if (reduced_c) {
      if (c[r - 1] % 2 != 0) throw ConsistencyError("non-integral restricted root");
      c[r - 1] /= 2;
    }
    return c;
  };
  auto add = [&](const IntVector& e, Int mult) {
    IntVector neg = e;
    for (auto& x : neg) x = -x;
    rrs.roots.push_back(to_simple(e));
    rrs.multiplicities.push_back(mult);
    rrs.roots.push_back(to_simple(neg));
    rrs.multiplicities.push_back(mult);
  };
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      IntVector v(r, 0);
      v[i] = 1;
      v[j] = -1;
      add(v, 2);
      v[j] = 1;
      add(v, 2);
    }
  }
  for (int i = 0; i < r; ++i) {
    if (!reduced_c) add(unit(r, i), 2 * (p - r));
    add(unit(r, i, 2), 1);
  }
  return rrs;
}

PolytopeU polytope_U(const RealFormSpec& spec) {
  const RestrictedRootSystem rrs = restricted_roots(spec);
  PolytopeU poly;
  poly.dim = rrs.a_rank;
  std::set<IntVector> distinct(rrs.roots.begin(), rrs.roots.end());
  poly.facet_normals.assign(distinct.begin(), distinct.end());
  return poly;
}

bool membership(const PolytopeU& polytope, const std::vector<Rational>& xi,
                const Rational& scale) {
  if (static_cast<int>(xi.size()) != polytope.dim) {
    throw DimensionMismatchError("point has " + std::to_string(xi.size()) +
                                 " coordinates, polytope lives in dimension " +
                                 std::to_string(polytope.dim));
  }
  for (const auto& normal : polytope.facet_normals) {
    Rational value(0);
    for (std::size_t i = 0; i < xi.size(); ++i) value += normal[i] * xi[i];
    value *= scale;
    if (boost::abs(value) >= polytope.bound) return false;
  }
  return true;
}

std::vector<Rational> restricted_reflect(const RestrictedRootSystem& rrs,
                                         int j, const std::vector<Rational>& xi) {
  std::vector<Rational> out = xi;
  for (int i = 0; i < rrs.a_rank; ++i) out[i] -= rrs.reduced.cartan[j][i] * xi[j];
  return out;
}

IwasawaDims iwasawa_dims(const RealFormSpec& spec) {
  const RestrictedRootSystem rrs = restricted_roots(spec);
  IwasawaDims dims;
  dims.dim_a = rrs.a_rank;
  for (std::size_t i = 0; i < rrs.roots.size(); ++i) {
    if (is_positive_root(rrs.roots[i])) dims.dim_n += rrs.multiplicities[i];
  }
  return dims;
}

}  // namespace flagdom
