#pragma once

// Independent reference computations used to cross-check the library. None
// of these call the routine they are checking.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "pellab/perm.hpp"
#include "pellab/poly.hpp"

namespace oracle {

using pellab::Perm;
using pellab::Poly;
using pellab::Rat;

// Determinant by fraction-exact Gaussian elimination.
inline Rat determinant(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rat factor = m[r][col] / m[col][col];
      if (factor == 0) continue;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

// det of the Sylvester matrix: deg q shifted rows of p, then deg p rows of q.
inline Rat sylvester_resultant(const Poly& p, const Poly& q) {
  const int dp = p.degree();
  const int dq = q.degree();
  const int size = dp + dq;
  std::vector<std::vector<Rat>> m(size, std::vector<Rat>(size, 0));
  for (int r = 0; r < dq; ++r) {
    for (int i = 0; i <= dp; ++i) m[r][r + i] = p.coeff(dp - i);
  }
  for (int r = 0; r < dp; ++r) {
    for (int i = 0; i <= dq; ++i) m[dq + r][r + i] = q.coeff(dq - i);
  }
  return determinant(std::move(m));
}

inline Rat factorial(int k) {
  Rat out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

// T_m(t) = (m/2) sum_k (-1)^k (m-k-1)! / (k! (m-2k)!) (2t)^(m-2k), m >= 1.
inline Poly chebyshev_closed_form(int m) {
  if (m == 0) return Poly::constant(1);
  Poly out;
  for (int k = 0; 2 * k <= m; ++k) {
    Rat c = Rat(m, 2) * factorial(m - k - 1) / (factorial(k) * factorial(m - 2 * k));
    c.canonicalize();
    if (k % 2 == 1) c = -c;
    Rat two_pow = 1;
    for (int i = 0; i < m - 2 * k; ++i) two_pow *= 2;
    out += Poly::monomial(c * two_pow, static_cast<std::size_t>(m - 2 * k));
  }
  return out;
}

// Dickson D_m(x, 1): D_0 = 2, D_1 = x, D_(m+1) = x D_m - D_(m-1).
inline Poly dickson(int m) {
  Poly prev = Poly::constant(2);
  Poly cur = Poly::identity();
  if (m == 0) return prev;
  for (int i = 1; i < m; ++i) {
    Poly next = Poly::identity() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Every partition of {1..n} into ell blocks of equal size, blocks sorted and
// listed by their least element.
inline std::vector<std::vector<std::vector<int>>> all_equal_partitions(int n, int ell) {
  std::vector<std::vector<std::vector<int>>> out;
  const int size = n / ell;
  std::vector<std::vector<int>> blocks;
  std::vector<bool> used(n + 1, false);
  std::function<void()> next_block;
  std::function<void(std::vector<int>&, int)> fill = [&](std::vector<int>& block, int from) {
    if (static_cast<int>(block.size()) == size) {
      blocks.push_back(block);
      next_block();
      blocks.pop_back();
      return;
    }
    for (int x = from; x <= n; ++x) {
      if (used[x]) continue;
      used[x] = true;
      block.push_back(x);
      fill(block, x + 1);
      block.pop_back();
      used[x] = false;
    }
  };
  next_block = [&] {
    int first = 1;
    while (first <= n && used[first]) ++first;
    if (first > n) {
      out.push_back(blocks);
      return;
    }
    used[first] = true;
    std::vector<int> block{first};
    fill(block, first + 1);
    used[first] = false;
  };
  next_block();
  return out;
}

inline bool preserves(const Perm& g, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> label(g.size() + 1, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int x : blocks[b]) label[x] = static_cast<int>(b);
  }
  for (const auto& block : blocks) {
    const int target = label[g(block.front())];
    for (int x : block) {
      if (label[g(x)] != target) return false;
    }
  }
  return true;
}

// All ell-block systems preserved by every generator.
inline std::vector<std::vector<std::vector<int>>> preserved_partitions(const std::vector<Perm>& gens,
                                                                       int ell) {
  const int n = static_cast<int>(gens.front().size());
  std::vector<std::vector<std::vector<int>>> out;
  for (auto& p : all_equal_partitions(n, ell)) {
    if (std::all_of(gens.begin(), gens.end(), [&](const Perm& g) { return preserves(g, p); })) {
      out.push_back(std::move(p));
    }
  }
  return out;
}

inline Rat random_rat(std::mt19937& rng, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 3);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Poly random_poly(std::mt19937& rng, int max_degree = 4) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rat> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.push_back(random_rat(rng));
  return Poly(std::move(c));
}

inline Perm random_perm(std::mt19937& rng, int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Perm::from_images(std::move(images));
}

// Random permutation mapping blocks of `blocks` onto blocks.
inline Perm random_block_perm(std::mt19937& rng, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> order(blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  std::vector<int> images(n + 1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    auto target = blocks[order[b]];
    std::shuffle(target.begin(), target.end(), rng);
    for (std::size_t i = 0; i < target.size(); ++i) images[blocks[b][i]] = target[i];
  }
  return Perm::from_images(std::vector<int>(images.begin() + 1, images.end()));
}

}  // namespace oracle
