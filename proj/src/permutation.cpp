#include "symshuffle/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symshuffle {

DescentSet::DescentSet(int n, std::uint64_t mask) : n_(n), mask_(mask) {
  if (n < 0 || n > 63) throw std::invalid_argument("descent sets support 0 <= n <= 63");
  std::uint64_t allowed = n <= 1 ? 0 : (((std::uint64_t{1} << n) - 1) & ~std::uint64_t{1});
  if ((mask & ~allowed) != 0) throw std::invalid_argument("descent position outside 1..n-1");
}

DescentSet DescentSet::from_positions(int n, const std::vector<int>& positions) {
  std::uint64_t mask = 0;
  for (int p : positions) {
    if (p < 1 || p >= n) throw std::invalid_argument("descent position outside 1..n-1");
    mask |= std::uint64_t{1} << p;
  }
  return DescentSet(n, mask);
}

std::vector<int> DescentSet::positions() const {
  std::vector<int> out;
  for (int i = 1; i < n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

DescentSet DescentSet::complement() const {
  std::uint64_t all = n_ <= 1 ? 0 : (((std::uint64_t{1} << n_) - 1) & ~std::uint64_t{1});
  return DescentSet(n_, all & ~mask_);
}

std::vector<DescentSet> all_descent_sets(int n) {
  std::vector<DescentSet> out;
  const int bits = std::max(n - 1, 0);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m) out.emplace_back(n, m << 1);
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::vector<int> v;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int x = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad permutation token: " + tok);
    v.push_back(x);
  }
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::reverse() const {
  return Permutation(std::vector<int>(images_.rbegin(), images_.rend()));
}

Permutation Permutation::complement() const {
  std::vector<int> v = images_;
  for (int& x : v) x = size() + 1 - x;
  return Permutation(std::move(v));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> v(images_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = images_[static_cast<std::size_t>(other.images_[i] - 1)];
  }
  return Permutation(std::move(v));
}

DescentSet Permutation::descents() const {
  std::uint64_t mask = 0;
  for (int i = 1; i < size(); ++i) {
    if ((*this)(i) > (*this)(i + 1)) mask |= std::uint64_t{1} << i;
  }
  return DescentSet(size(), mask);
}

DescentSet Permutation::ascents() const { return descents().complement(); }

std::map<int, int> Permutation::cycle_counts() const {
  std::map<int, int> counts;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t j = start; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
      seen[j] = true;
      ++len;
    }
    ++counts[len];
  }
  return counts;
}

Partition Permutation::cycle_type() const { return Partition::from_multiplicities(cycle_counts()); }

int Permutation::fixed_points() const {
  int f = 0;
  for (int i = 1; i <= size(); ++i) f += (*this)(i) == i ? 1 : 0;
  return f;
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(images_[i]);
  }
  return s;
}

PermutationStats permutation_stats(const Permutation& w) {
  return {w.descents(), w.ascents(), w.cycle_type(), w.cycle_counts(), w.inverse(), w.reverse()};
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

bool avoids_pattern(const Permutation& w, std::span<const int> pattern) {
  const int n = w.size();
  const int k = static_cast<int>(pattern.size());
  if (k > n) return true;
  std::vector<int> idx(static_cast<std::size_t>(k));
  // Iterate k-subsets of positions in lexicographic order.
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    bool match = true;
    for (int a = 0; a < k && match; ++a) {
      for (int b = a + 1; b < k && match; ++b) {
        bool lhs = w(idx[static_cast<std::size_t>(a)]) < w(idx[static_cast<std::size_t>(b)]);
        bool rhs = pattern[static_cast<std::size_t>(a)] < pattern[static_cast<std::size_t>(b)];
        match = lhs == rhs;
      }
    }
    if (match) return false;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return true;
}

std::vector<UnimodalPermutation> enumerate_unimodal(int n) {
  if (n < 1) throw std::invalid_argument("unimodal permutations need n >= 1");
  std::vector<UnimodalPermutation> out;
  const int rest = n - 1;
  for (std::uint64_t left = 0; left < (std::uint64_t{1} << rest); ++left) {
    std::vector<int> images;
    for (int v = 1; v <= rest; ++v) {
      if ((left >> (v - 1)) & 1U) images.push_back(v);
    }
    const int max_pos = static_cast<int>(images.size()) + 1;
    images.push_back(n);
    for (int v = rest; v >= 1; --v) {
      if (((left >> (v - 1)) & 1U) == 0) images.push_back(v);
    }
    out.push_back({Permutation(std::move(images)), max_pos});
  }
  return out;
}

}  // namespace symshuffle
