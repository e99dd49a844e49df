#include "pellab/blocks.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "pellab/error.hpp"

namespace pellab {

BlockPartition::BlockPartition(std::size_t n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)), label_(n, 0) {
  if (blocks_.empty() || n % blocks_.size() != 0) {
    throw Error(ErrorCode::InvalidArgument, "block count must divide N");
  }
  const std::size_t block_size = n / blocks_.size();
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    auto& block = blocks_[b];
    std::sort(block.begin(), block.end());
    if (block.size() != block_size) {
      throw Error(ErrorCode::InvalidArgument, "blocks must have equal size");
    }
    for (int x : block) {
      if (x < 1 || static_cast<std::size_t>(x) > n || label_[x - 1] != 0) {
        throw Error(ErrorCode::InvalidArgument, "blocks must partition 1..N");
      }
      label_[x - 1] = static_cast<int>(b + 1);
    }
  }
}

BlockPartition congruence_partition(std::size_t n, std::size_t ell) {
  if (ell == 0 || n % ell != 0) {
    throw Error(ErrorCode::NotADivisor,
                std::to_string(ell) + " does not divide " + std::to_string(n));
  }
  std::vector<std::vector<int>> blocks(ell);
  for (std::size_t x = 1; x <= n; ++x) blocks[(x - 1) % ell].push_back(static_cast<int>(x));
  return BlockPartition(n, std::move(blocks));
}

std::optional<Perm> preserves_partition(const Perm& a, const BlockPartition& p) {
  if (a.size() != p.size()) throw Error(ErrorCode::SizeMismatch, "partition size mismatch");
  std::vector<int> image(p.ell(), 0);
  for (std::size_t x = 1; x <= a.size(); ++x) {
    const int from = p.block_of(static_cast<int>(x));
    const int to = p.block_of(a(static_cast<int>(x)));
    int& slot = image[from - 1];
    if (slot == 0) {
      slot = to;
    } else if (slot != to) {
      return std::nullopt;
    }
  }
  // Equal block sizes make a consistent block map injective.
  return Perm::from_images(std::move(image));
}

std::optional<BlockPartition> is_ell_imprimitive(std::span<const Perm> gens, std::size_t ell,
                                                 std::optional<std::size_t> cycle_index) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "no generators");
  const std::size_t n = gens.front().size();
  if (ell == 0 || n % ell != 0) {
    throw Error(ErrorCode::NotADivisor,
                std::to_string(ell) + " does not divide " + std::to_string(n));
  }
  std::optional<std::size_t> cyc = cycle_index;
  if (!cyc) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (is_full_cycle(gens[i])) {
        cyc = i;
        break;
      }
    }
  }
  if (!cyc || *cyc >= gens.size() || !is_full_cycle(gens[*cyc])) {
    throw Error(ErrorCode::NeedFullCycle, "no designated N-cycle among the generators");
  }
  const Perm& full = gens[*cyc];
  // Walk the cycle from N; the point at step p gets block ((N - p - 1) mod ell) + 1,
  // which reproduces residue classes for the descending cycle.
  std::vector<std::vector<int>> blocks(ell);
  int x = static_cast<int>(n);
  for (std::size_t step = 0; step < n; ++step) {
    blocks[(n - step - 1) % ell].push_back(x);
    x = full(x);
  }
  BlockPartition candidate(n, std::move(blocks));
  for (const auto& g : gens) {
    if (!preserves_partition(g, candidate)) return std::nullopt;
  }
  return candidate;
}

std::vector<Perm> induced_block_action(std::span<const Perm> gens, const BlockPartition& p) {
  std::vector<Perm> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    auto action = preserves_partition(g, p);
    if (!action) throw Error(ErrorCode::NotPreserved, "generator " + to_string(g) +
                                                          " does not preserve the partition");
    out.push_back(std::move(*action));
  }
  return out;
}

bool is_dihedral_of_order(std::span<const Perm> gens, std::size_t order, std::size_t bound) {
  if (order % 2 != 0 || order < 6) {
    throw Error(ErrorCode::InvalidArgument, "dihedral check needs order 2m with m >= 3");
  }
  const std::size_t m = order / 2;
  if (bound == 0) bound = 10 * m;
  if (gens.empty()) return false;
  const std::size_t points = gens.front().size();

  std::set<Perm> seen{Perm::identity(points)};
  std::deque<Perm> frontier{Perm::identity(points)};
  while (!frontier.empty()) {
    const Perm g = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : gens) {
      Perm h = compose_perm(s, g);
      if (seen.insert(h).second) {
        if (seen.size() > bound) {
          throw Error(ErrorCode::ClosureOverflow,
                      "closure exceeds " + std::to_string(bound) + " elements");
        }
        frontier.push_back(std::move(h));
      }
    }
  }
  if (seen.size() != order || gens.size() < 2) return false;
  const Perm& r = gens[0];
  const Perm& s = gens[1];
  const Perm sr = compose_perm(s, r);
  return power(r, static_cast<long>(m)).is_identity() && !r.is_identity() &&
         compose_perm(s, s).is_identity() && !s.is_identity() &&
         compose_perm(sr, sr).is_identity();
}

}  // namespace pellab
