#pragma once
// Independent reference computations used by the test suites. Nothing here
// calls the algorithms under test; inputs are plain Cartan matrices, words
// and weight lists.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Int = std::int64_t;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

// Bourbaki Cartan matrices, cartan[i][j] = <alpha_i^vee, alpha_j>.
inline Mat cartan(char type, int n) {
  Mat c(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  for (int i = 0; i + 1 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
  switch (type) {
    case 'B': c[n - 1][n - 2] = -2; break;
    case 'C': c[n - 2][n - 1] = -2; break;
    case 'D':
      c[n - 2][n - 1] = c[n - 1][n - 2] = 0;
      c[n - 3][n - 1] = c[n - 1][n - 3] = -1;
      break;
    case 'G': c[0][1] = -3; break;
    case 'F': c[2][1] = -2; break;
    case 'E': {
      // chain 1-3-4-...-n with 2 attached to 4
      c = Mat(n, Vec(n, 0));
      for (int i = 0; i < n; ++i) c[i][i] = 2;
      auto link = [&](int a, int b) { c[a][b] = c[b][a] = -1; };
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    }
    default: break;
  }
  return c;
}

// Simple reflection s_i on fundamental coordinates: lambda - lambda_i alpha_i,
// where alpha_i has fundamental coordinates (cartan[k][i])_k.
inline Mat reflection_matrix(const Mat& c, int i) {
  const int n = static_cast<int>(c.size());
  Mat m(n, Vec(n, 0));
  for (int k = 0; k < n; ++k) m[k][k] = 1;
  for (int k = 0; k < n; ++k) m[k][i] -= c[k][i];
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat out(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline Vec mat_apply(const Mat& m, const Vec& v) {
  Vec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

inline Mat identity(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Closure of the generators {s_i : i in gens} under multiplication.
inline std::set<Mat> generated_group(const Mat& c, const std::vector<int>& gens) {
  const int n = static_cast<int>(c.size());
  std::set<Mat> group{identity(n)};
  std::vector<Mat> frontier{identity(n)};
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& g : frontier) {
      for (int i : gens) {
        Mat h = mul(g, reflection_matrix(c, i));
        if (group.insert(h).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  return group;
}

inline std::size_t group_order(const Mat& c) {
  std::vector<int> gens(c.size());
  std::iota(gens.begin(), gens.end(), 0);
  return generated_group(c, gens).size();
}

inline Mat word_matrix(const Mat& c, const std::vector<int>& word) {
  Mat m = identity(static_cast<int>(c.size()));
  for (int i : word) m = mul(m, reflection_matrix(c, i));
  return m;
}

// Images w(rho) of all u <= w, by the subword property on one reduced word.
inline std::set<Vec> bruhat_ideal(const Mat& c, const std::vector<int>& reduced_word) {
  const Vec rho(c.size(), 1);
  std::set<Vec> out;
  const std::size_t len = reduced_word.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    std::vector<int> sub;
    for (std::size_t k = 0; k < len; ++k)
      if (mask >> k & 1) sub.push_back(reduced_word[k]);
    out.insert(mat_apply(word_matrix(c, sub), rho));
  }
  return out;
}

// Multiset of sums over r-element index subsets of the expanded list.
inline std::map<Vec, Int> exterior_power(const std::vector<Vec>& weights, int r) {
  std::map<Vec, Int> out;
  const int n = static_cast<int>(weights.size());
  const std::size_t dim = weights.empty() ? 0 : weights[0].size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (__builtin_popcountll(mask) != r) continue;
    Vec sum(dim, 0);
    for (int k = 0; k < n; ++k)
      if (mask >> k & 1)
        for (std::size_t d = 0; d < dim; ++d) sum[d] += weights[k][d];
    ++out[sum];
  }
  return out;
}

inline Int binomial(Int n, Int k) {
  Int out = 1;
  for (Int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Line bundle O(m) on P^1.
inline Int p1_h0(Int m) { return std::max<Int>(m + 1, 0); }
inline Int p1_h1(Int m) { return std::max<Int>(-m - 1, 0); }

// Positive roots in simple-root coordinates by closing the simple roots
// under reflections (roots only, no Weyl group data).
inline std::vector<Vec> positive_roots(const Mat& c) {
  const int n = static_cast<int>(c.size());
  std::set<Vec> roots;
  std::vector<Vec> frontier;
  for (int i = 0; i < n; ++i) {
    Vec a(n, 0);
    a[i] = 1;
    roots.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& b : frontier) {
      for (int i = 0; i < n; ++i) {
        // <alpha_i^vee, beta> = sum_j cartan[i][j] beta_j
        Int pair = 0;
        for (int j = 0; j < n; ++j) pair += c[i][j] * b[j];
        Vec r = b;
        r[i] -= pair;
        if (roots.insert(r).second) next.push_back(r);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Vec> out;
  for (const auto& r : roots)
    if (std::all_of(r.begin(), r.end(), [](Int x) { return x >= 0; })) out.push_back(r);
  return out;
}

// Squared root lengths d_i, from d_i cartan[i][j] = d_j cartan[j][i].
inline Vec norms(const Mat& c) {
  const int n = static_cast<int>(c.size());
  std::vector<double> d(n, 0.0);
  d[0] = 1.0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j != i && c[i][j] != 0 && d[j] == 0.0) {
        d[j] = d[i] * static_cast<double>(c[i][j]) / static_cast<double>(c[j][i]);
        stack.push_back(j);
      }
    }
  }
  const double lo = *std::min_element(d.begin(), d.end());
  Vec out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<Int>(d[i] / lo + 0.5);
  return out;
}

// (num, den) with <lambda, beta^vee> = num / den.
inline std::pair<Int, Int> coroot_pair(const Mat& c, const Vec& lambda, const Vec& beta) {
  const Vec d = norms(c);
  // (alpha_i, alpha_j) = d_i cartan[i][j] / 2; (lambda, alpha_i) = lambda_i d_i / 2
  Int num = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) num += lambda[i] * d[i] * beta[i];
  Int den = 0;
  for (std::size_t i = 0; i < beta.size(); ++i)
    for (std::size_t j = 0; j < beta.size(); ++j) den += beta[i] * beta[j] * d[i] * c[i][j];
  den /= 2;
  return {num, den};
}

// Signed Weyl product prod <lambda+rho, beta^vee> / <rho, beta^vee>: the Euler
// characteristic of the line bundle lambda on G/B.
inline Int euler_characteristic(const Mat& c, const Vec& lambda) {
  const Vec rho(c.size(), 1);
  Vec shifted = lambda;
  for (auto& x : shifted) ++x;
  long double value = 1;
  for (const auto& beta : positive_roots(c)) {
    const auto [a, da] = coroot_pair(c, shifted, beta);
    const auto [b, db] = coroot_pair(c, rho, beta);
    value *= static_cast<long double>(a) / static_cast<long double>(da);
    value /= static_cast<long double>(b) / static_cast<long double>(db);
  }
  return static_cast<Int>(value < 0 ? value - 0.5L : value + 0.5L);
}

// Number of semistandard tableaux of the shape with column lengths given by
// fundamental coordinates lambda of A_n, entries 1..n+1: dim V_lambda.
inline Int ssyt_count(const Vec& lambda) {
  const int n = static_cast<int>(lambda.size());
  std::vector<int> rows;  // row lengths
  for (int r = 0; r < n; ++r) {
    Int len = 0;
    for (int j = r; j < n; ++j) len += lambda[j];
    if (len > 0) rows.push_back(static_cast<int>(len));
  }
  const int top = n + 1;
  std::vector<std::vector<int>> t;
  for (int len : rows) t.emplace_back(len, 0);
  // fill cells row by row with backtracking
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < rows[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  Int count = 0;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= top; ++v) {
      t[r][c] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return count;
}

// Orders of the Weyl groups in closed form, for cross-checks.
inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// kappa - w_{0,L} lambda, computed from the Cartan matrix alone.
inline Vec serre_dual(const Mat& c, const std::vector<int>& levi, const Vec& lambda) {
  const int n = static_cast<int>(c.size());
  Vec kappa(n, 0);
  for (const auto& beta : positive_roots(c)) {
    bool in_levi = true;
    for (int j = 0; j < n; ++j)
      if (beta[j] != 0 && std::find(levi.begin(), levi.end(), j) == levi.end()) in_levi = false;
    if (in_levi) continue;
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) kappa[k] -= c[k][j] * beta[j];
  }
  // w_{0,L}: the element of W_L sending rho to the vector with every Levi
  // coordinate negative
  Mat w0 = identity(n);
  const Vec rho(n, 1);
  for (const auto& g : generated_group(c, levi)) {
    const auto img = mat_apply(g, rho);
    if (std::all_of(levi.begin(), levi.end(), [&](int j) { return img[j] < 0; })) w0 = g;
  }
  const auto wl = mat_apply(w0, lambda);
  Vec out(n);
  for (int k = 0; k < n; ++k) out[k] = kappa[k] - wl[k];
  return out;
}

}  // namespace oracle
