#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pellab {

/// Bijection of {1, ..., N} stored as its image sequence: images()[i - 1] is
/// the image of i. Labels are 1-based everywhere in the public interface.
class Perm {
 public:
  Perm() = default;

  static Perm identity(std::size_t n);
  /// Validates that `images` is a bijection of {1..N}; throws Error(InvalidArgument).
  static Perm from_images(std::vector<int> images);
  /// Cycles are listed as sequences a1 -> a2 -> ... -> ak -> a1.
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles);
  /// The N-cycle N -> N-1 -> ... -> 1 -> N, written (N, N-1, ..., 1).
  static Perm descending_cycle(std::size_t n);
  static Perm transposition(std::size_t n, int a, int b);

  std::size_t size() const noexcept { return images_.size(); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& images() const noexcept { return images_; }
  bool is_identity() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  explicit Perm(std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

/// (a * b)(x) == a(b(x)). Throws Error(SizeMismatch) for different N.
Perm compose_perm(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
/// g^-1 * a * g: relabels every point x of a as g^-1(x).
Perm conjugate(const Perm& a, const Perm& g);
/// a^k for any integer k.
Perm power(const Perm& a, long k);

/// Cycle lengths including 1-cycles, sorted ascending.
std::vector<int> cycle_type(const Perm& a);
std::vector<int> fixed_points(const Perm& a);
/// Nontrivial cycles, each starting at its smallest element, ordered by it.
std::vector<std::vector<int>> cycles(const Perm& a);
/// Sum over cycles of (length - 1), i.e. N minus the number of cycles.
int branching(const Perm& a);
bool is_full_cycle(const Perm& a);

/// One orbit under the group generated by `gens` (union-find over images).
bool is_transitive(std::span<const Perm> gens);

/// Cycle notation "(1,8)(2,7)" with fixed points omitted; identity is "()".
std::string to_string(const Perm& a);
/// Parses cycle notation for a permutation of {1..n}. Throws Error(Parse)
/// naming the byte offset.
Perm parse_perm(std::string_view text, std::size_t n);

}  // namespace pellab
