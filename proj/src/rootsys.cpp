#include "flagdom/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "flagdom/error.hpp"

namespace flagdom {

namespace {

void check_rank(const RootSystem& rs, const Weight& lambda) {
  if (static_cast<int>(lambda.coords.size()) != rs.rank) {
    throw RankMismatchError("weight has " +
                            std::to_string(lambda.coords.size()) +
                            " coordinates, root system " + rs.label +
                            " has rank " + std::to_string(rs.rank));
  }
}

Int height(const IntVector& root) {
  return std::accumulate(root.begin(), root.end(), Int{0});
}

std::vector<IntVector> generate_positive_roots(const IntMatrix& cartan) {
  const int n = static_cast<int>(cartan.size());
  std::set<IntVector> seen;
  std::deque<IntVector> queue;
  for (int i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVector beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Int p = 0;
      for (int j = 0; j < n; ++j) p += beta[j] * cartan[i][j];
      IntVector image = beta;
      image[i] -= p;
      if (!is_positive_root(image)) continue;
      if (seen.insert(image).second) queue.push_back(image);
    }
  }
  std::vector<IntVector> roots(seen.begin(), seen.end());
  std::sort(roots.begin(), roots.end(),
            [](const IntVector& a, const IntVector& b) {
              Int ha = height(a), hb = height(b);
              if (ha != hb) return ha < hb;
              return a > b;
            });
  return roots;
}

// Connected components of the Dynkin diagram, as sorted index lists.
std::vector<std::vector<int>> dynkin_components(const IntMatrix& cartan) {
  const int n = static_cast<int>(cartan.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = static_cast<int>(out.size());
    std::vector<int> members;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int u = 0; u < n; ++u) {
        if (u != v && cartan[v][u] != 0 && comp[u] < 0) {
          comp[u] = comp[s];
          stack.push_back(u);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  return out;
}

std::string classify_component(const IntMatrix& cartan,
                               const IntVector& norms) {
  const int r = static_cast<int>(cartan.size());
  const auto roots = generate_positive_roots(cartan);
  const auto count = static_cast<Int>(roots.size());
  const Int long_norm = *std::max_element(norms.begin(), norms.end());
  const Int short_norm = *std::min_element(norms.begin(), norms.end());
  const std::string rank = std::to_string(r);
  if (long_norm == short_norm) {
    if (count == r * (r + 1) / 2) return "A" + rank;
    if (count == r * (r - 1)) return "D" + rank;
    if (count == 36) return "E6";
    if (count == 63) return "E7";
    if (count == 120) return "E8";
    throw ConsistencyError("unclassifiable simply-laced component");
  }
  if (r == 2 && count == 6) return "G2";
  if (r == 4 && count == 24) return "F4";
  const auto shorts = std::count(norms.begin(), norms.end(), short_norm);
  return (shorts == 1 ? "B" : "C") + rank;
}

std::uint64_t component_order(const std::string& label) {
  const char family = label[0];
  const int r = std::stoi(label.substr(1));
  auto factorial = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  switch (family) {
    case 'A':
      return factorial(r + 1);
    case 'B':
    case 'C':
      return (std::uint64_t{1} << r) * factorial(r);
    case 'D':
      return (std::uint64_t{1} << (r - 1)) * factorial(r);
    case 'E':
      return r == 6 ? 51840ULL : r == 7 ? 2903040ULL : 696729600ULL;
    case 'F':
      return 1152;
    case 'G':
      return 12;
    default:
      throw ConsistencyError("unknown component label " + label);
  }
}

RootSystem finish(IntMatrix cartan, IntVector norms, int torus_rank) {
  const int n = static_cast<int>(cartan.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (norms[i] * cartan[i][j] != norms[j] * cartan[j][i]) {
        throw ConsistencyError("Cartan matrix is not symmetrizable by norms");
      }
    }
  }
  RootSystem rs;
  rs.rank = n;
  rs.torus_rank = torus_rank;
  rs.cartan = std::move(cartan);
  rs.root_norms = std::move(norms);
  rs.positive_roots = generate_positive_roots(rs.cartan);
  for (const auto& members : dynkin_components(rs.cartan)) {
    IntMatrix sub(members.size(), IntVector(members.size()));
    IntVector sub_norms(members.size());
    for (std::size_t a = 0; a < members.size(); ++a) {
      sub_norms[a] = rs.root_norms[members[a]];
      for (std::size_t b = 0; b < members.size(); ++b) {
        sub[a][b] = rs.cartan[members[a]][members[b]];
      }
    }
    rs.components.push_back(classify_component(sub, sub_norms));
  }
  std::string label;
  for (const auto& c : rs.components) {
    if (!label.empty()) label += "x";
    label += c;
  }
  if (torus_rank > 0) {
    label += (label.empty() ? "T" : "+T") + std::to_string(torus_rank);
  }
  rs.label = label.empty() ? "trivial" : label;
  return rs;
}

void link(IntMatrix& c, int i, int j) {
  c[i][j] = -1;
  c[j][i] = -1;
}

}  // namespace

bool is_positive_root(const IntVector& root) {
  bool nonzero = false;
  for (Int c : root) {
    if (c < 0) return false;
    if (c > 0) nonzero = true;
  }
  return nonzero;
}

bool is_negative_root(const IntVector& root) {
  bool nonzero = false;
  for (Int c : root) {
    if (c > 0) return false;
    if (c < 0) nonzero = true;
  }
  return nonzero;
}

RootSystem build_root_system(char family, int rank) {
  family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
  const bool valid = rank >= 1 && rank <= 8 &&
                     ((family == 'A') ||
                      ((family == 'B' || family == 'C') && rank >= 2) ||
                      (family == 'D' && rank >= 4) ||
                      (family == 'E' && rank >= 6) ||
                      (family == 'F' && rank == 4) ||
                      (family == 'G' && rank == 2));
  if (!valid) {
    throw InvalidTypeError(std::string("invalid simple type ") + family +
                           std::to_string(rank) +
                           " (supported: A1-A8, B2-B8, C2-C8, D4-D8, E6-E8, "
                           "F4, G2)");
  }
  IntMatrix c(rank, IntVector(rank, 0));
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  IntVector norms(rank, 2);
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < rank; ++i) link(c, i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < rank; ++i) link(c, i, i + 1);
      c[rank - 1][rank - 2] = -2;
      norms[rank - 1] = 1;
      break;
    case 'C':
      for (int i = 0; i + 1 < rank; ++i) link(c, i, i + 1);
      c[rank - 2][rank - 1] = -2;
      std::fill(norms.begin(), norms.end() - 1, 1);
      break;
    case 'D':
      for (int i = 0; i + 2 < rank; ++i) link(c, i, i + 1);
      link(c, rank - 3, rank - 1);
      break;
    case 'E':
      link(c, 0, 2);
      link(c, 1, 3);
      for (int i = 2; i + 1 < rank; ++i) link(c, i, i + 1);
      break;
    case 'F':
      link(c, 0, 1);
      link(c, 1, 2);
      c[2][1] = -2;
      link(c, 2, 3);
      norms = {2, 2, 1, 1};
      break;
    case 'G':
      c[0][1] = -3;
      c[1][0] = -1;
      norms = {2, 6};
      break;
  }
  RootSystem rs = finish(std::move(c), std::move(norms), 0);
  rs.label = std::string(1, family) + std::to_string(rank);
  rs.components = {rs.label};
  return rs;
}

RootSystem parse_root_system(std::string_view text) {
  std::string cleaned;
  for (char ch : text) {
    if (ch != ',' && !std::isspace(static_cast<unsigned char>(ch))) {
      cleaned += ch;
    }
  }
  if (cleaned.size() < 2 || !std::isalpha(static_cast<unsigned char>(cleaned[0]))) {
    throw InvalidTypeError("cannot parse root system type '" +
                           std::string(text) + "'");
  }
  int rank = 0;
  const char* first = cleaned.data() + 1;
  const char* last = cleaned.data() + cleaned.size();
  auto [ptr, ec] = std::from_chars(first, last, rank);
  if (ec != std::errc() || ptr != last) {
    throw InvalidTypeError("cannot parse root system type '" +
                           std::string(text) + "'");
  }
  return build_root_system(cleaned[0], rank);
}

RootSystem root_system_from_simple_roots(const std::vector<IntVector>& simple,
                                         int torus_rank) {
  const int n = static_cast<int>(simple.size());
  auto dot = [](const IntVector& a, const IntVector& b) {
    Int s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
  };
  IntMatrix c(n, IntVector(n));
  IntVector norms(n);
  for (int i = 0; i < n; ++i) {
    norms[i] = dot(simple[i], simple[i]);
    for (int j = 0; j < n; ++j) {
      const Int num = 2 * dot(simple[i], simple[j]);
      const Int den = dot(simple[i], simple[i]);
      if (den == 0 || num % den != 0) {
        throw ConsistencyError("simple roots do not form a root basis");
      }
      c[i][j] = num / den;
    }
  }
  return finish(std::move(c), std::move(norms), torus_rank);
}

IntVector root_to_weight(const RootSystem& rs, const IntVector& root) {
  IntVector w(rs.rank, 0);
  for (int i = 0; i < rs.rank; ++i) {
    for (int j = 0; j < rs.rank; ++j) w[i] += root[j] * rs.cartan[i][j];
  }
  return w;
}

Int coroot_pairing(const RootSystem& rs, const IntVector& lambda,
                   const IntVector& root) {
  // <lambda, beta^vee> = 2(lambda, beta)/(beta, beta); with (lambda, alpha_j)
  // = lambda_j |alpha_j|^2 / 2 the factors of 1/2 cancel.
  Int num = 0;
  Int den = 0;
  for (int j = 0; j < rs.rank; ++j) {
    num += root[j] * lambda[j] * rs.root_norms[j];
    for (int i = 0; i < rs.rank; ++i) {
      den += root[i] * root[j] * rs.root_norms[i] * rs.cartan[i][j];
    }
  }
  // den = 2 (beta, beta) in the same scale as num = 2 (lambda, beta)
  return 2 * num / den;
}

Weight rho(const RootSystem& rs) {
  return Weight(IntVector(rs.rank, 1), IntVector(rs.torus_rank, 0));
}

Weight zero_weight(const RootSystem& rs) {
  return Weight(IntVector(rs.rank, 0), IntVector(rs.torus_rank, 0));
}

bool is_dominant(const Weight& w) {
  return std::all_of(w.coords.begin(), w.coords.end(),
                     [](Int c) { return c >= 0; });
}

Weight reflect(const RootSystem& rs, int i, const Weight& lambda) {
  Weight out = lambda;
  const Int p = lambda.coords[i];
  for (int j = 0; j < rs.rank; ++j) out.coords[j] -= p * rs.cartan[j][i];
  return out;
}

IntVector reflect_root(const RootSystem& rs, int i, const IntVector& root) {
  Int p = 0;
  for (int j = 0; j < rs.rank; ++j) p += root[j] * rs.cartan[i][j];
  IntVector out = root;
  out[i] -= p;
  return out;
}

Weight act(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
  check_rank(rs, lambda);
  Weight out = lambda;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    out = reflect(rs, *it, out);
  }
  return out;
}

IntVector act_on_root(const RootSystem& rs, const WeylElement& w,
                      const IntVector& root) {
  IntVector out = root;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    out = reflect_root(rs, *it, out);
  }
  return out;
}

Weight dot_act(const RootSystem& rs, const WeylElement& w,
               const Weight& lambda) {
  check_rank(rs, lambda);
  Weight shifted = lambda;
  for (auto& c : shifted.coords) c += 1;
  Weight out = act(rs, w, shifted);
  for (auto& c : out.coords) c -= 1;
  return out;
}

WeylElement element_from_rho_image(const RootSystem& rs, IntVector image) {
  // The left descents of w are exactly the negative coordinates of w(rho);
  // peeling off the smallest one each time yields the lex-least reduced word.
  Weight v(std::move(image));
  WeylElement w;
  for (;;) {
    auto it = std::find_if(v.coords.begin(), v.coords.end(),
                           [](Int c) { return c < 0; });
    if (it == v.coords.end()) break;
    const int i = static_cast<int>(it - v.coords.begin());
    w.word.push_back(i);
    v = reflect(rs, i, v);
  }
  return w;
}

WeylElement element_from_word(const RootSystem& rs,
                              const std::vector<int>& word) {
  Weight v = rho(rs);
  v.central.clear();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= rs.rank) {
      throw RankMismatchError("simple reflection index out of range");
    }
    v = reflect(rs, *it, v);
  }
  return element_from_rho_image(rs, v.coords);
}

WeylElement multiply(const RootSystem& rs, const WeylElement& u,
                     const WeylElement& v) {
  std::vector<int> word = u.word;
  word.insert(word.end(), v.word.begin(), v.word.end());
  return element_from_word(rs, word);
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> word(w.word.rbegin(), w.word.rend());
  return element_from_word(rs, word);
}

WeylElement longest_element(const RootSystem& rs) {
  return element_from_rho_image(rs, IntVector(rs.rank, -1));
}

int inversion_count(const RootSystem& rs, const WeylElement& w) {
  int count = 0;
  for (const auto& beta : rs.positive_roots) {
    if (is_negative_root(act_on_root(rs, w, beta))) ++count;
  }
  return count;
}

std::uint64_t weyl_group_order(const RootSystem& rs) {
  std::uint64_t order = 1;
  for (const auto& c : rs.components) order *= component_order(c);
  return order;
}

WeylGroup enumerate_weyl_group(const RootSystem& rs, std::size_t cap) {
  if (weyl_group_order(rs) > cap) {
    throw CapExceededError("Weyl group of " + rs.label + " has order " +
                           std::to_string(weyl_group_order(rs)) +
                           ", above the enumeration cap " +
                           std::to_string(cap));
  }
  // Elements correspond one-to-one to the W-orbit of the regular weight rho.
  std::set<IntVector> seen;
  std::deque<IntVector> queue;
  seen.insert(IntVector(rs.rank, 1));
  queue.push_back(IntVector(rs.rank, 1));
  while (!queue.empty()) {
    Weight v(queue.front());
    queue.pop_front();
    for (int i = 0; i < rs.rank; ++i) {
      Weight image = reflect(rs, i, v);
      if (seen.insert(image.coords).second) {
        if (seen.size() > cap) {
          throw CapExceededError("Weyl group enumeration exceeded cap " +
                                 std::to_string(cap));
        }
        queue.push_back(image.coords);
      }
    }
  }
  WeylGroup group;
  group.elements.reserve(seen.size());
  for (const auto& image : seen) {
    group.elements.push_back(element_from_rho_image(rs, image));
  }
  std::sort(group.elements.begin(), group.elements.end());
  group.longest = group.elements.back();
  return group;
}

DominantResult dominant_normalize(const RootSystem& rs, const Weight& lambda) {
  check_rank(rs, lambda);
  DominantResult result;
  Weight v = lambda;
  std::vector<int> reversed;
  for (;;) {
    auto it = std::find_if(v.coords.begin(), v.coords.end(),
                           [](Int c) { return c < 0; });
    if (it == v.coords.end()) break;
    const int i = static_cast<int>(it - v.coords.begin());
    reversed.push_back(i);
    v = reflect(rs, i, v);
  }
  // v = s_{ik} ... s_{i1}(lambda)
  result.w = element_from_word(
      rs, std::vector<int>(reversed.rbegin(), reversed.rend()));
  result.dominant = v;
  result.singular = std::any_of(v.coords.begin(), v.coords.end(),
                                [](Int c) { return c == 0; });
  // lambda + rho is singular iff some positive coroot pairs to zero with it
  IntVector shifted = lambda.coords;
  for (auto& c : shifted) c += 1;
  result.dot_singular =
      std::any_of(rs.positive_roots.begin(), rs.positive_roots.end(),
                  [&](const IntVector& beta) {
                    return coroot_pairing(rs, shifted, beta) == 0;
                  });
  return result;
}

std::string format_weight(const Weight& w) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (i) out << ',';
    out << w.coords[i];
  }
  if (!w.central.empty()) {
    out << '|';
    for (std::size_t i = 0; i < w.central.size(); ++i) {
      if (i) out << ',';
      out << w.central[i];
    }
  }
  out << ')';
  return out.str();
}

namespace {

IntVector parse_int_list(std::string_view text, std::string_view whole) {
  IntVector out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    Int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParseError("malformed weight '" + std::string(whole) + "'");
    }
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

}  // namespace

Weight parse_weight(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw ParseError("malformed weight '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  Weight w;
  const auto bar = body.find('|');
  w.coords = parse_int_list(body.substr(0, bar), text);
  if (bar != std::string_view::npos) {
    w.central = parse_int_list(body.substr(bar + 1), text);
  }
  return w;
}

std::string format_word(const WeylElement& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.word[i] + 1);
  }
  return out + "]";
}

}  // namespace flagdom
