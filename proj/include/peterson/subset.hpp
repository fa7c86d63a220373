#ifndef PETERSON_SUBSET_HPP
#define PETERSON_SUBSET_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "peterson/permutation.hpp"

namespace peterson {

// {lo, lo+1, ..., hi}
struct ConsecutiveString {
  int lo;
  int hi;

  int size() const { return hi - lo + 1; }
  bool contains(int j) const { return lo <= j && j <= hi; }
  friend bool operator==(const ConsecutiveString&, const ConsecutiveString&) = default;
};

/// A subset of {1, ..., n-1}. Indexes both the fixed points w_A of the
/// circle action and the basis classes.
///
/// Stored as a bitmask (bit j-1 for member j), which caps the rank at 64;
/// restriction tables have 2^{n-1} entries, so that is never the binding limit.
class IndexSubset {
 public:
  /// Throws std::invalid_argument on duplicates or members outside {1..n-1}.
  IndexSubset(int n, std::span<const int> members);
  IndexSubset(int n, std::initializer_list<int> members)
      : IndexSubset(n, std::span<const int>(members.begin(), members.size())) {}

  static IndexSubset empty(int n);
  static IndexSubset full(int n);
  static IndexSubset from_mask(int n, std::uint64_t mask);
  /// `[lo, hi]` inside {1..n-1}.
  static IndexSubset interval(int n, int lo, int hi);

  int rank() const { return rank_; }
  std::uint64_t mask() const { return mask_; }
  int size() const;
  bool is_empty() const { return mask_ == 0; }
  bool contains(int j) const;
  std::vector<int> members() const;

  bool is_subset_of(const IndexSubset& other) const;
  IndexSubset with(int k) const;
  IndexSubset without(int k) const;
  IndexSubset unite(const IndexSubset& other) const;

  /// Sorted, comma separated, no spaces; "" for the empty set.
  std::string to_csv() const;

  friend bool operator==(const IndexSubset&, const IndexSubset&) = default;
  /// Cardinality first, then lexicographic on the sorted member lists.
  friend std::strong_ordering operator<=>(const IndexSubset& a, const IndexSubset& b);

 private:
  IndexSubset(int n, std::uint64_t mask) : rank_(n), mask_(mask) {}

  int rank_;
  std::uint64_t mask_;
};

/// Parses "1,2,3,5". The empty string and "-" denote the empty subset.
IndexSubset parse_subset(int n, std::string_view text);

/// All 2^{n-1} subsets ordered by (cardinality, lexicographic).
std::vector<IndexSubset> all_subsets(int n);

std::vector<ConsecutiveString> decompose_strings(const IndexSubset& a);

/// Largest element of the maximal consecutive string of `a` containing j.
int head(const IndexSubset& a, int j);
/// Smallest element of the maximal consecutive string of `a` containing j.
int tail(const IndexSubset& a, int j);
ConsecutiveString string_containing(const IndexSubset& a, int j);

/// The fixed point w_A: a block-antidiagonal involution, one block per
/// maximal string [lo, hi] covering positions lo..hi+1, identity elsewhere.
Permutation fixed_point(const IndexSubset& a);

/// Inverse of fixed_point. Throws NotAPetersonFixedPoint naming the first i
/// with w^{-1}(i) > w^{-1}(i+1) + 1.
IndexSubset subset_of_fixed_point(const Permutation& w);

/// The fixed reduced word of w_A: for each string [lo, hi] in increasing
/// order, the blocks (lo..hi)(lo..hi-1)...(lo).
Word fixed_point_word(const IndexSubset& a);

/// The members of `a` in increasing order; evaluates to the basis
/// permutation v_A.
Word basis_word(const IndexSubset& a);
Permutation basis_permutation(const IndexSubset& a);

}  // namespace peterson

#endif  // PETERSON_SUBSET_HPP
