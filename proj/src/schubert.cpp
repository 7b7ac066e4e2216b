#include "flagdom/schubert.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "flagdom/error.hpp"

namespace flagdom {

bool Parabolic::contains(int i) const {
  return std::binary_search(levi.begin(), levi.end(), i);
}

FlagManifold make_flag_manifold(RootSystem rs, Parabolic parabolic) {
  std::sort(parabolic.levi.begin(), parabolic.levi.end());
  parabolic.levi.erase(std::unique(parabolic.levi.begin(), parabolic.levi.end()),
                       parabolic.levi.end());
  for (int i : parabolic.levi) {
    if (i < 0 || i >= rs.rank) {
      throw RankMismatchError("Levi index " + std::to_string(i + 1) +
                              " outside 1.." + std::to_string(rs.rank));
    }
  }
  FlagManifold flag{std::move(rs), std::move(parabolic), 0};
  flag.dim = static_cast<int>(nilradical_roots(flag).size());
  return flag;
}

std::vector<IntVector> nilradical_roots(const FlagManifold& flag) {
  std::vector<IntVector> out;
  for (const auto& beta : flag.rs.positive_roots) {
    for (int j = 0; j < flag.rs.rank; ++j) {
      if (beta[j] != 0 && !flag.parabolic.contains(j)) {
        out.push_back(beta);
        break;
      }
    }
  }
  return out;
}

RootSystem levi_root_system(const FlagManifold& flag) {
  const auto& levi = flag.parabolic.levi;
  RootSystem sub;
  sub.rank = static_cast<int>(levi.size());
  sub.cartan.assign(levi.size(), IntVector(levi.size()));
  sub.root_norms.resize(levi.size());
  for (std::size_t a = 0; a < levi.size(); ++a) {
    sub.root_norms[a] = flag.rs.root_norms[levi[a]];
    for (std::size_t b = 0; b < levi.size(); ++b) {
      sub.cartan[a][b] = flag.rs.cartan[levi[a]][levi[b]];
    }
  }
  for (const auto& beta : flag.rs.positive_roots) {
    IntVector restricted;
    bool inside = true;
    for (int j = 0; j < flag.rs.rank; ++j) {
      if (flag.parabolic.contains(j)) {
        restricted.push_back(beta[j]);
      } else if (beta[j] != 0) {
        inside = false;
      }
    }
    if (inside) sub.positive_roots.push_back(restricted);
  }
  return sub;
}

std::size_t levi_weyl_order(const FlagManifold& flag) {
  // |W_Q| = number of elements of W_Q = size of the W_Q-orbit of rho_L.
  const RootSystem sub = levi_root_system(flag);
  std::set<IntVector> seen{IntVector(sub.rank, 1)};
  std::deque<IntVector> queue{IntVector(sub.rank, 1)};
  while (!queue.empty()) {
    Weight v(queue.front());
    queue.pop_front();
    for (int i = 0; i < sub.rank; ++i) {
      Weight image = reflect(sub, i, v);
      if (seen.insert(image.coords).second) queue.push_back(image.coords);
    }
  }
  return seen.size();
}

bool is_minimal_coset_rep(const FlagManifold& flag, const WeylElement& w) {
  for (int j : flag.parabolic.levi) {
    IntVector alpha(flag.rs.rank, 0);
    alpha[j] = 1;
    if (is_negative_root(act_on_root(flag.rs, w, alpha))) return false;
  }
  return true;
}

WeylElement minimal_coset_rep(const FlagManifold& flag, const WeylElement& w) {
  WeylElement current = w;
  for (;;) {
    bool reduced = false;
    for (int j : flag.parabolic.levi) {
      IntVector alpha(flag.rs.rank, 0);
      alpha[j] = 1;
      if (is_negative_root(act_on_root(flag.rs, current, alpha))) {
        current = multiply(flag.rs, current, WeylElement{{j}});
        reduced = true;
        break;
      }
    }
    if (!reduced) return current;
  }
}

SchubertVariety schubert_variety(const FlagManifold& flag,
                                 const WeylElement& w) {
  WeylElement rep = minimal_coset_rep(flag, w);
  const int dim = rep.length();
  return SchubertVariety{std::move(rep), dim, flag.dim - dim};
}

std::vector<SchubertVariety> minimal_coset_reps(const FlagManifold& flag,
                                                std::size_t cap) {
  const RootSystem& rs = flag.rs;
  // W^Q is in bijection with the W-orbit of a weight whose stabilizer is W_Q.
  IntVector seed(rs.rank, 0);
  for (int j = 0; j < rs.rank; ++j) {
    if (!flag.parabolic.contains(j)) seed[j] = 1;
  }
  std::set<IntVector> seen{seed};
  std::deque<IntVector> queue{seed};
  while (!queue.empty()) {
    Weight v(queue.front());
    queue.pop_front();
    for (int i = 0; i < rs.rank; ++i) {
      Weight image = reflect(rs, i, v);
      if (seen.insert(image.coords).second) {
        if (seen.size() > cap) {
          throw CapExceededError("coset enumeration exceeded cap " +
                                 std::to_string(cap));
        }
        queue.push_back(image.coords);
      }
    }
  }
  std::vector<SchubertVariety> out;
  out.reserve(seen.size());
  for (const auto& image : seen) {
    // Walking down by negative coordinates reaches the seed along a reduced
    // word of the minimal representative.
    Weight v(image);
    std::vector<int> word;
    for (;;) {
      auto it = std::find_if(v.coords.begin(), v.coords.end(),
                             [](Int c) { return c < 0; });
      if (it == v.coords.end()) break;
      const int i = static_cast<int>(it - v.coords.begin());
      word.push_back(i);
      v = reflect(rs, i, v);
    }
    WeylElement rep = element_from_word(rs, word);
    if (rep.length() != static_cast<int>(word.size())) {
      throw ConsistencyError("non-reduced coset walk");
    }
    const int dim = rep.length();
    out.push_back(SchubertVariety{std::move(rep), dim, flag.dim - dim});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> poincare_polynomial(const FlagManifold& flag) {
  std::vector<Int> counts(flag.dim + 1, 0);
  for (const auto& s : minimal_coset_reps(flag)) ++counts[s.dim];
  return counts;
}

namespace {

bool bruhat_leq_images(const RootSystem& rs, const Weight& u, const Weight& w,
                       int len_u, int len_w) {
  if (len_u > len_w) return false;
  auto it = std::find_if(w.coords.begin(), w.coords.end(),
                         [](Int c) { return c < 0; });
  if (it == w.coords.end()) return len_u == 0;
  const int s = static_cast<int>(it - w.coords.begin());
  const Weight sw = reflect(rs, s, w);
  if (u.coords[s] < 0) {
    return bruhat_leq_images(rs, reflect(rs, s, u), sw, len_u - 1, len_w - 1);
  }
  return bruhat_leq_images(rs, u, sw, len_u, len_w - 1);
}

}  // namespace

bool bruhat_leq(const RootSystem& rs, const WeylElement& u,
                const WeylElement& w) {
  const Weight r = rho(rs);
  Weight ur = act(rs, u, Weight(r.coords));
  Weight wr = act(rs, w, Weight(r.coords));
  return bruhat_leq_images(rs, ur, wr, u.length(), w.length());
}

SchubertVariety dual_variety(const FlagManifold& flag,
                             const SchubertVariety& u) {
  const WeylElement w0 = longest_element(flag.rs);
  return schubert_variety(flag, multiply(flag.rs, w0, u.rep));
}

int poincare_pairing(const FlagManifold& flag, const SchubertVariety& u,
                     const SchubertVariety& v) {
  if (u.dim + v.dim != flag.dim) {
    throw DimensionMismatchError(
        "Poincare pairing needs complementary dimensions, got " +
        std::to_string(u.dim) + " + " + std::to_string(v.dim) +
        " != " + std::to_string(flag.dim));
  }
  return dual_variety(flag, u).rep == minimal_coset_rep(flag, v.rep) ? 1 : 0;
}

CycleClass make_cycle_class(const FlagManifold& flag, int degree,
                            const std::map<WeylElement, Int>& coeffs) {
  CycleClass c;
  c.degree = degree;
  for (const auto& [w, n] : coeffs) {
    if (n < 0) throw DimensionMismatchError("cycle coefficients must be >= 0");
    if (n == 0) continue;
    SchubertVariety s = schubert_variety(flag, w);
    if (s.dim != degree) {
      throw DimensionMismatchError("cycle class term of dimension " +
                                   std::to_string(s.dim) + " in degree " +
                                   std::to_string(degree));
    }
    c.coeffs[s.rep] += n;
  }
  return c;
}

Int intersection_number(const FlagManifold& flag, const CycleClass& c,
                        const SchubertVariety& s) {
  if (s.codim != c.degree) {
    throw DimensionMismatchError(
        "intersection needs codim(S) = degree(C), got " +
        std::to_string(s.codim) + " vs " + std::to_string(c.degree));
  }
  Int d = 0;
  for (const auto& [rep, n] : c.coeffs) {
    d += n * poincare_pairing(flag, SchubertVariety{rep, c.degree,
                                                     flag.dim - c.degree},
                              s);
  }
  return d;
}

}  // namespace flagdom
