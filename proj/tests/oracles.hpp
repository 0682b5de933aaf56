#pragma once

// Independent reference computations used only by the tests.  None of them
// calls into the closed forms they are compared against.

#include <cstdint>
#include <map>
#include <vector>

#include "frobpush/picard.hpp"

namespace oracle {

using frobpush::BigInt;
using frobpush::Coords;
using frobpush::Rational;

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t f = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --f;
  return f;
}

/// Walks every point of [0, q-1]^n.
template <class F>
void for_each_box_point(int n, std::int64_t q, F&& f) {
  std::vector<std::int64_t> x(static_cast<std::size_t>(n), 0);
  while (true) {
    f(x);
    int k = 0;
    while (k < n && ++x[static_cast<std::size_t>(k)] == q) x[static_cast<std::size_t>(k++)] = 0;
    if (k == n) return;
  }
}

/// Tuples in [0, q-1]^{d+1} summing to m + i q, by enumeration.
inline BigInt brute_tuple_count(std::int64_t i, std::int64_t m, int d, std::int64_t q) {
  BigInt count = 0;
  for_each_box_point(d + 1, q, [&](const std::vector<std::int64_t>& x) {
    std::int64_t s = 0;
    for (auto v : x) s += v;
    if (s == m + i * q) ++count;
  });
  return count;
}

/// A smooth complete toric variety: primitive rays and the class of each
/// torus-invariant divisor in a chosen Picard basis.
struct ToricModel {
  std::vector<Coords> rays;
  std::vector<Coords> classes;
};

inline Coords unit(int n, int k) {
  Coords c(static_cast<std::size_t>(n), 0);
  c[static_cast<std::size_t>(k)] = 1;
  return c;
}

/// Rays for P^d: e_1..e_d and -(e_1+...+e_d); the last ray is listed first.
inline std::vector<Coords> projspace_rays(int d) {
  std::vector<Coords> rays{Coords(static_cast<std::size_t>(d), -1)};
  for (int k = 0; k < d; ++k) rays.push_back(unit(d, k));
  return rays;
}

inline ToricModel projspace(int d) {
  ToricModel t{projspace_rays(d), {}};
  t.classes.assign(t.rays.size(), Coords{1});
  return t;
}

/// Rays of `a` padded into the first block, rays of `b` into the second.
inline std::vector<Coords> product_rays(const std::vector<Coords>& a, int na, const std::vector<Coords>& b, int nb,
                                        int extra = 0) {
  std::vector<Coords> out;
  for (const auto& r : a) {
    Coords c(static_cast<std::size_t>(na + nb + extra), 0);
    std::copy(r.begin(), r.end(), c.begin());
    out.push_back(c);
  }
  for (const auto& r : b) {
    Coords c(static_cast<std::size_t>(na + nb + extra), 0);
    std::copy(r.begin(), r.end(), c.begin() + na);
    out.push_back(c);
  }
  return out;
}

inline ToricModel product(int r, int s) {
  ToricModel t{product_rays(projspace_rays(r), r, projspace_rays(s), s), {}};
  for (int k = 0; k <= r; ++k) t.classes.push_back({1, 0});
  for (int k = 0; k <= s; ++k) t.classes.push_back({0, 1});
  return t;
}

/// X_eps with rays (1,0), (0,1), (-1,eps), (0,-1); basis [C0, f].
/// The ray (0,1) is the negative section C0.
inline ToricModel hirzebruch(int eps) {
  return {{{1, 0}, {0, 1}, {-1, eps}, {0, -1}}, {{0, 1}, {1, 0}, {0, 1}, {1, eps}}};
}

/// Bl_{P^{r-1}} P^d in the basis [H, E]: the rays e_r..e_d are blown up,
/// with the exceptional ray e_r + ... + e_d appended last.
inline ToricModel linear_blowup(int d, int r) {
  ToricModel t{projspace_rays(d), {}};
  t.classes.push_back({1, 0});
  Coords e(static_cast<std::size_t>(d), 0);
  for (int k = 1; k <= d; ++k) {
    const bool blown = k >= r;
    t.classes.push_back(blown ? Coords{1, -1} : Coords{1, 0});
    if (blown) e[static_cast<std::size_t>(k - 1)] = 1;
  }
  t.rays.push_back(e);
  t.classes.push_back({0, 1});
  return t;
}

/// P(O + O(eps)) over P^d in the basis [H, H']: base rays lifted with the last
/// coordinate eps on -(e_1+...+e_d), then the sections (0,1) ~ H - eps H' and (0,-1) ~ H.
inline ToricModel veronese_blowup(int d, int eps) {
  ToricModel t;
  auto base = projspace_rays(d);
  for (std::size_t k = 0; k < base.size(); ++k) {
    Coords c = base[k];
    c.push_back(k == 0 ? eps : 0);
    t.rays.push_back(c);
    t.classes.push_back({0, 1});
  }
  Coords up(static_cast<std::size_t>(d + 1), 0), down(static_cast<std::size_t>(d + 1), 0);
  up.back() = 1;
  down.back() = -1;
  t.rays.push_back(up);
  t.classes.push_back({1, -eps});
  t.rays.push_back(down);
  t.classes.push_back({1, 0});
  return t;
}

/// P(O + O(1,1)) over P^r x P^s in the basis [H, G1, G2].
inline ToricModel segre_blowup(int r, int s) {
  ToricModel t;
  auto rays = product_rays(projspace_rays(r), r, projspace_rays(s), s, 1);
  rays[0].back() = 1;
  rays[static_cast<std::size_t>(r + 1)].back() = 1;
  for (int k = 0; k <= r; ++k) t.classes.push_back({0, 1, 0});
  for (int k = 0; k <= s; ++k) t.classes.push_back({0, 0, 1});
  t.rays = rays;
  Coords up(static_cast<std::size_t>(r + s + 1), 0), down(static_cast<std::size_t>(r + s + 1), 0);
  up.back() = 1;
  down.back() = -1;
  t.rays.push_back(up);
  t.classes.push_back({1, -1, -1});
  t.rays.push_back(down);
  t.classes.push_back({1, 0, 0});
  return t;
}

/// F^e_* O(sum a_rho D_rho) as the multiset of classes
/// sum_rho floor((a_rho + <w, v_rho>) / q) [D_rho] over w in [0, q-1]^n.
inline std::map<Coords, BigInt> toric_pushforward(const ToricModel& t, const Coords& a, std::int64_t q) {
  const int n = static_cast<int>(t.rays.front().size());
  const std::size_t rank = t.classes.front().size();
  std::map<Coords, BigInt> out;
  for_each_box_point(n, q, [&](const std::vector<std::int64_t>& w) {
    Coords cls(rank, 0);
    for (std::size_t rho = 0; rho < t.rays.size(); ++rho) {
      std::int64_t pairing = a[rho];
      for (int k = 0; k < n; ++k) pairing += w[static_cast<std::size_t>(k)] * t.rays[rho][static_cast<std::size_t>(k)];
      const std::int64_t f = floor_div(pairing, q);
      for (std::size_t b = 0; b < rank; ++b) cls[b] += f * t.classes[rho][b];
    }
    out[cls] += 1;
  });
  return out;
}

/// Known multiplicities of a line-bundle decomposition keyed by class.
inline std::map<Coords, BigInt> entries(const frobpush::Decomposition& d) {
  std::map<Coords, BigInt> out;
  for (const auto& [s, m] : d.entries()) out[s.coords()] = *m;
  return out;
}

/// Points of [0, q-1]^{r+1} x [0, q-1]^{s+1} with equal coordinate sums: the free
/// summands of F^e_* of the Segre cone's coordinate ring.
inline BigInt segre_box_count(int r, int s, std::int64_t q) {
  std::map<std::int64_t, BigInt> left, right;
  for_each_box_point(r + 1, q, [&](const std::vector<std::int64_t>& x) {
    std::int64_t t = 0;
    for (auto v : x) t += v;
    left[t] += 1;
  });
  for_each_box_point(s + 1, q, [&](const std::vector<std::int64_t>& x) {
    std::int64_t t = 0;
    for (auto v : x) t += v;
    right[t] += 1;
  });
  BigInt total = 0;
  for (const auto& [t, c] : left)
    if (right.count(t)) total += c * right.at(t);
  return total;
}

/// Points of [0, q-1]^{d+1} with coordinate sum divisible by eps: the free
/// summands for the cone over the eps-th Veronese of P^d.
inline BigInt veronese_box_count(int d, int eps, std::int64_t q) {
  BigInt total = 0;
  for_each_box_point(d + 1, q, [&](const std::vector<std::int64_t>& x) {
    std::int64_t t = 0;
    for (auto v : x) t += v;
    if (t % eps == 0) ++total;
  });
  return total;
}

/// Lagrange interpolation through (x_k, y_k), evaluated at x.
inline Rational interpolate(const std::vector<std::pair<std::int64_t, BigInt>>& pts, std::int64_t x) {
  Rational total = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Rational term(pts[i].second);
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      Rational f(static_cast<long>(x - pts[j].first), static_cast<long>(pts[i].first - pts[j].first));
      f.canonicalize();
      term *= f;
    }
    total += term;
  }
  return total;
}

}  // namespace oracle
