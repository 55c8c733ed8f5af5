#include "symshuffle/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace symshuffle {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ += parts_[i];
    ++mult_[parts_[i]];
  }
}

Partition Partition::from_parts(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::from_multiplicities(const std::map<int, int>& mult) {
  std::vector<int> parts;
  for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
    if (it->first <= 0 || it->second < 0) throw std::invalid_argument("bad multiplicity map");
    parts.insert(parts.end(), static_cast<std::size_t>(it->second), it->first);
  }
  return Partition(std::move(parts));
}

Partition Partition::row(int r) { return r == 0 ? Partition() : Partition({r}); }

Partition Partition::column(int r) {
  return Partition(std::vector<int>(static_cast<std::size_t>(r), 1));
}

int Partition::multiplicity(int i) const {
  auto it = mult_.find(i);
  return it == mult_.end() ? 0 : it->second;
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  if (parts_.empty()) return Partition();
  conj.resize(static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(conj));
}

Integer Partition::z() const {
  Integer z = 1;
  for (const auto& [part, m] : mult_) {
    z *= pow(Integer(part), static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(m));
  }
  return z;
}

bool Partition::all_parts_odd() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i) {
    if (inner.part(i) > part(i)) return false;
  }
  return true;
}

bool Partition::fits_in_hook(int rows, int cols) const { return part(rows) <= cols; }

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

PartitionStats partition_stats(const Partition& lambda) {
  return {lambda.conjugate(), lambda.z(), lambda.epsilon(), lambda.length(),
          lambda.multiplicities()};
}

std::vector<Partition> enumerate_partitions_bounded(int n, int max_length, int max_part) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (max_length >= 0 && static_cast<int>(current.size()) >= max_length) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, max_part < 0 ? n : max_part);
  return out;
}

std::vector<Partition> enumerate_partitions(int n) { return enumerate_partitions_bounded(n, -1, -1); }

}  // namespace symshuffle
