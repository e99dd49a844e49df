#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pellab/perm.hpp"

namespace pellab {

/// Partition of {1..N} into ell blocks of equal size N/ell. Block labels are
/// 1..ell; blocks()[b - 1] holds the sorted members of block b.
class BlockPartition {
 public:
  /// Validates disjointness, coverage and equal sizes; throws
  /// Error(InvalidArgument) otherwise.
  BlockPartition(std::size_t n, std::vector<std::vector<int>> blocks);

  std::size_t size() const noexcept { return n_; }
  std::size_t ell() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
  /// Label of the block containing x.
  int block_of(int x) const { return label_[static_cast<std::size_t>(x - 1)]; }

  friend bool operator==(const BlockPartition& a, const BlockPartition& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> label_;
};

/// Block h holds the x with x == h (mod ell); block ell is residue 0.
/// Throws Error(NotADivisor) unless ell | n.
BlockPartition congruence_partition(std::size_t n, std::size_t ell);

/// The induced permutation of block labels when `a` maps blocks onto blocks,
/// otherwise nullopt.
std::optional<Perm> preserves_partition(const Perm& a, const BlockPartition& p);

/// Looks for an ell-block system preserved by every generator. A generator
/// that is an N-cycle admits exactly one candidate (blocks = positions along
/// the cycle mod ell), so only that candidate is tested. `cycle_index`
/// designates the N-cycle; without it the first N-cycle in `gens` is used.
/// Throws Error(NeedFullCycle) if there is none, Error(NotADivisor) unless
/// ell | N. For the descending cycle (N, ..., 1) the candidate is exactly
/// congruence_partition(N, ell).
std::optional<BlockPartition> is_ell_imprimitive(std::span<const Perm> gens, std::size_t ell,
                                                 std::optional<std::size_t> cycle_index = {});

/// Action of each generator on block labels. Throws Error(NotPreserved) if a
/// generator breaks a block.
std::vector<Perm> induced_block_action(std::span<const Perm> gens, const BlockPartition& p);

/// gens[0] = r, gens[1] = s (further generators allowed). True iff the group
/// they generate has exactly `order` == 2m elements and r^m = s^2 = (s r)^2 = 1.
/// Requires m >= 3. The closure is abandoned with Error(ClosureOverflow) once
/// it exceeds `bound` elements (default 10 m).
bool is_dihedral_of_order(std::span<const Perm> gens, std::size_t order, std::size_t bound = 0);

}  // namespace pellab
