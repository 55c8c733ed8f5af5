#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symshuffle/partition.hpp"

namespace symshuffle {

/// Subset of {1, ..., n-1} stored as a bitmask; bit i marks position i.
class DescentSet {
 public:
  DescentSet() = default;
  DescentSet(int n, std::uint64_t mask);
  static DescentSet from_positions(int n, const std::vector<int>& positions);

  int n() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  bool contains(int i) const { return i >= 1 && i < n_ && ((mask_ >> i) & 1U) != 0; }
  std::vector<int> positions() const;
  // Complement inside {1, ..., n-1}.
  DescentSet complement() const;

  friend bool operator==(const DescentSet&, const DescentSet&) = default;
  friend auto operator<=>(const DescentSet&, const DescentSet&) = default;

 private:
  int n_ = 0;
  std::uint64_t mask_ = 0;
};

// All subsets of {1..n-1}, in increasing mask order.
std::vector<DescentSet> all_descent_sets(int n);

/// Bijection of {1..n} in one-line form.
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless images is a permutation of 1..n.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  // n n-1 ... 1
  static Permutation longest(int n);
  // Space-separated one-line form, e.g. "2 3 1".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(images_.size()); }
  // 1-based: w(i).
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  // Images read right to left.
  Permutation reverse() const;
  // Values replaced by n+1-w(i); equals longest ∘ w.
  Permutation complement() const;
  // (this ∘ other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;

  DescentSet descents() const;
  DescentSet ascents() const;
  Partition cycle_type() const;
  // N_i(w): number of i-cycles, for each i with N_i > 0.
  std::map<int, int> cycle_counts() const;
  int fixed_points() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct PermutationStats {
  DescentSet descents;
  DescentSet ascents;
  Partition cycle_type;
  std::map<int, int> cycle_counts;
  Permutation inverse;
  Permutation reverse;
};

PermutationStats permutation_stats(const Permutation& w);

// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

// True when no subsequence of w is order-isomorphic to pattern.
bool avoids_pattern(const Permutation& w, std::span<const int> pattern);

struct UnimodalPermutation {
  Permutation perm;
  int max_position;  // 1-based index of the value n
};

// The 2^{n-1} permutations increasing up to n then decreasing.
std::vector<UnimodalPermutation> enumerate_unimodal(int n);

}  // namespace symshuffle

template <>
struct std::hash<symshuffle::Permutation> {
  std::size_t operator()(const symshuffle::Permutation& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int v : w.images()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ULL;
    }
    return h;
  }
};
