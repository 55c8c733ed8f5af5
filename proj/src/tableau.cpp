#include "symshuffle/tableau.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace symshuffle {

Tableau::Tableau(std::vector<Row> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) throw std::invalid_argument("tableau rows must be nonempty");
    if (i > 0 && rows_[i].size() > rows_[i - 1].size()) {
      throw std::invalid_argument("tableau row lengths must be weakly decreasing");
    }
  }
}

int Tableau::size() const {
  int s = 0;
  for (const auto& r : rows_) s += static_cast<int>(r.size());
  return s;
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

bool Tableau::is_semistandard() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j > 0 && rows_[i][j - 1] > rows_[i][j]) return false;
      if (i > 0 && rows_[i - 1][j] >= rows_[i][j]) return false;
    }
  }
  return true;
}

bool Tableau::is_standard() const {
  if (!is_semistandard()) return false;
  std::vector<int> all;
  for (const auto& r : rows_) all.insert(all.end(), r.begin(), r.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

int Tableau::row_of(int value) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (std::find(rows_[i].begin(), rows_[i].end(), value) != rows_[i].end()) {
      return static_cast<int>(i);
    }
  }
  throw std::invalid_argument("value not present in tableau");
}

DescentSet Tableau::descent_set() const {
  const int n = size();
  std::vector<int> row(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (int v : rows_[i]) {
      if (v < 1 || v > n) throw std::invalid_argument("descent set needs a standard tableau");
      row[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  std::vector<int> d;
  for (int i = 1; i < n; ++i) {
    if (row[static_cast<std::size_t>(i + 1)] > row[static_cast<std::size_t>(i)]) d.push_back(i);
  }
  return DescentSet::from_positions(n, d);
}

std::string Tableau::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += " / ";
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(rows_[i][j]);
    }
  }
  return s;
}

std::vector<Tableau> enumerate_syt(const Partition& lambda) {
  // Fill 1..n in order; a value may go at the end of row i when the row
  // above is strictly longer (or i is the top row).
  const int n = lambda.size();
  std::vector<Tableau> out;
  std::vector<Tableau::Row> rows(static_cast<std::size_t>(lambda.length()));
  std::function<void(int)> rec = [&](int next) {
    if (next > n) {
      out.emplace_back(rows);
      return;
    }
    for (int i = 0; i < lambda.length(); ++i) {
      auto& r = rows[static_cast<std::size_t>(i)];
      if (static_cast<int>(r.size()) >= lambda.part(i)) continue;
      if (i > 0 && rows[static_cast<std::size_t>(i - 1)].size() <= r.size()) continue;
      r.push_back(next);
      rec(next + 1);
      r.pop_back();
    }
  };
  rec(1);
  return out;
}

Integer hook_length_count(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.part(i); ++j) {
      hooks *= (lambda.part(i) - j - 1) + (conj.part(j) - i - 1) + 1;
    }
  }
  return factorial(static_cast<unsigned>(lambda.size())) / hooks;
}

std::vector<Tableau> enumerate_ssyt(const Partition& lambda, int max_entry) {
  std::vector<Tableau> out;
  if (lambda.empty()) {
    out.emplace_back();
    return out;
  }
  if (max_entry < 1) return out;
  std::vector<Tableau::Row> rows;
  for (int p : lambda.parts()) rows.emplace_back(static_cast<std::size_t>(p), 0);
  const int len = lambda.length();
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (i == len) {
      out.emplace_back(rows);
      return;
    }
    if (j == lambda.part(i)) {
      rec(i + 1, 0);
      return;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]);
    if (i > 0) lo = std::max(lo, rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + 1);
    for (int v = lo; v <= max_entry; ++v) {
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      rec(i, j + 1);
    }
  };
  rec(0, 0);
  return out;
}

Integer beta(const Partition& lambda, const DescentSet& descents) {
  if (descents.n() != lambda.size()) throw std::invalid_argument("descent set size mismatch");
  Integer count = 0;
  for (const auto& t : enumerate_syt(lambda)) {
    if (t.descent_set() == descents) ++count;
  }
  return count;
}

Integer kostka(const Partition& lambda, const std::vector<int>& content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw std::invalid_argument("content entries must be nonnegative");
    total += c;
  }
  if (total != lambda.size()) throw std::invalid_argument("shape and content sizes differ");

  // Add one horizontal strip per letter.
  std::vector<int> shape(static_cast<std::size_t>(lambda.length()), 0);
  std::function<Integer(std::size_t)> letters = [&](std::size_t letter) -> Integer {
    if (letter == content.size()) return 1;
    Integer count = 0;
    const std::vector<int> base = shape;
    std::function<void(int, int)> strip = [&](int row, int remaining) {
      if (row == lambda.length()) {
        if (remaining == 0) count += letters(letter + 1);
        return;
      }
      // New cells in this row may not pass the old end of the row above.
      int cap = lambda.part(row) - base[static_cast<std::size_t>(row)];
      if (row > 0) cap = std::min(cap, base[static_cast<std::size_t>(row - 1)] - base[static_cast<std::size_t>(row)]);
      for (int add = std::min(cap, remaining); add >= 0; --add) {
        shape[static_cast<std::size_t>(row)] = base[static_cast<std::size_t>(row)] + add;
        strip(row + 1, remaining - add);
      }
      shape[static_cast<std::size_t>(row)] = base[static_cast<std::size_t>(row)];
    };
    strip(0, content[letter]);
    return count;
  };
  return letters(0);
}

Integer skew_count(const Partition& lambda, int r) {
  if (r < 0) throw std::invalid_argument("negative row length");
  if (r > lambda.part(0) && !(r == 0)) return 0;
  // Count removal paths from lambda down to (r).
  std::map<std::vector<int>, Integer> memo;
  std::function<Integer(std::vector<int>&)> rec = [&](std::vector<int>& shape) -> Integer {
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    int sz = std::accumulate(shape.begin(), shape.end(), 0);
    if (sz == r) {
      bool is_row = r == 0 ? shape.empty() : (shape.size() == 1 && shape[0] == r);
      return is_row ? 1 : 0;
    }
    if (auto it = memo.find(shape); it != memo.end()) return it->second;
    Integer total = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
      bool corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
      if (!corner) continue;
      if (i == 0 && shape[0] <= r) continue;
      std::vector<int> smaller = shape;
      --smaller[i];
      total += rec(smaller);
    }
    memo.emplace(shape, total);
    return total;
  };
  std::vector<int> start = lambda.parts();
  return rec(start);
}

namespace {

// Beta-set (first-column hook lengths) form of a partition with a fixed
// number of beads.
std::vector<int> beta_set(const std::vector<int>& parts, int beads) {
  std::vector<int> b(static_cast<std::size_t>(beads));
  for (int i = 0; i < beads; ++i) {
    int part = i < static_cast<int>(parts.size()) ? parts[static_cast<std::size_t>(i)] : 0;
    b[static_cast<std::size_t>(i)] = part + beads - 1 - i;
  }
  return b;
}

std::vector<int> parts_from_beta(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<>());
  const int beads = static_cast<int>(b.size());
  std::vector<int> parts;
  for (int i = 0; i < beads; ++i) {
    int p = b[static_cast<std::size_t>(i)] - (beads - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return parts;
}

}  // namespace

Integer mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("character sizes differ");
  std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo;
  const auto& mparts = mu.parts();
  std::function<Integer(const std::vector<int>&, std::size_t)> rec =
      [&](const std::vector<int>& parts, std::size_t k) -> Integer {
    if (k == mparts.size()) return parts.empty() ? 1 : 0;
    auto key = std::make_pair(parts, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int r = mparts[k];
    const int beads = static_cast<int>(parts.size());
    std::vector<int> b = beta_set(parts, beads);
    Integer total = 0;
    for (int i = 0; i < beads; ++i) {
      int from = b[static_cast<std::size_t>(i)];
      int to = from - r;
      if (to < 0 || std::find(b.begin(), b.end(), to) != b.end()) continue;
      // Rim-hook height = beads strictly between the new and old positions.
      int height = 0;
      for (int x : b) height += (x > to && x < from) ? 1 : 0;
      std::vector<int> nb = b;
      nb[static_cast<std::size_t>(i)] = to;
      Integer sub = rec(parts_from_beta(nb), k + 1);
      total += height % 2 == 0 ? sub : Integer(-sub);
    }
    memo.emplace(key, total);
    return total;
  };
  return rec(lambda.parts(), 0);
}

}  // namespace symshuffle
