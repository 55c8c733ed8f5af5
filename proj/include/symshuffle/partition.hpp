#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "symshuffle/rational.hpp"

namespace symshuffle {

/// Integer partition stored as weakly decreasing positive parts, with the
/// multiplicity map m_i cached at construction.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  // Sorts arbitrary positive parts; zeros are dropped.
  static Partition from_parts(std::vector<int> parts);
  static Partition from_multiplicities(const std::map<int, int>& mult);
  // (r)
  static Partition row(int r);
  // (1^r)
  static Partition column(int r);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // 0-based part lookup, 0 past the end.
  int part(int i) const {
    return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  int multiplicity(int i) const;
  const std::map<int, int>& multiplicities() const { return mult_; }

  Partition conjugate() const;
  // prod_i i^{m_i} m_i!
  Integer z() const;
  // (-1)^{|lambda| - l(lambda)}
  int epsilon() const { return (size_ - length()) % 2 == 0 ? 1 : -1; }
  bool all_parts_odd() const;
  bool contains(const Partition& inner) const;
  // lambda_{k+1} <= k: fits in the hook of k rows and k columns.
  bool fits_in_hook(int rows, int cols) const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  std::map<int, int> mult_;
  int size_ = 0;
};

struct PartitionStats {
  Partition conjugate;
  Integer z;
  int epsilon;
  int length;
  std::map<int, int> multiplicities;
};

PartitionStats partition_stats(const Partition& lambda);

// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);

// Partitions of n with at most max_length parts and parts at most max_part
// (either bound may be negative for "unbounded").
std::vector<Partition> enumerate_partitions_bounded(int n, int max_length, int max_part);

}  // namespace symshuffle
