#include "nilsem/partition.hpp"

#include "nilsem/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nilsem {

Partition Partition::identity(int n) {
  Partition p;
  p.repr_.resize(n);
  for (int i = 0; i < n; ++i) p.repr_[i] = i;
  return p;
}

Partition Partition::full(int n) {
  Partition p;
  p.repr_.assign(n, 0);
  return p;
}

Partition Partition::from_labels(const std::vector<int>& labels) {
  // First element seen with a given label becomes the class representative.
  std::map<int, int> first;
  Partition p;
  p.repr_.resize(labels.size());
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    auto [it, fresh] = first.emplace(labels[i], i);
    p.repr_[i] = it->second;
  }
  return p;
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> labels(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int x : blocks[b]) {
      if (x < 0 || x >= n) throw DomainError("block element out of range");
      if (labels[x] != -1) throw DomainError("blocks overlap");
      labels[x] = static_cast<int>(b);
    }
  }
  for (int x = 0; x < n; ++x)
    if (labels[x] == -1) throw DomainError("blocks do not cover the carrier");
  return from_labels(labels);
}

int Partition::block_count() const {
  int c = 0;
  for (int i = 0; i < order(); ++i)
    if (repr_[i] == i) ++c;
  return c;
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out;
  std::vector<int> where(order(), -1);
  for (int i = 0; i < order(); ++i) {
    int r = repr_[i];
    if (where[r] == -1) {
      where[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[where[r]].push_back(i);
  }
  return out;
}

bool Partition::is_identity() const {
  for (int i = 0; i < order(); ++i)
    if (repr_[i] != i) return false;
  return true;
}

bool Partition::is_full() const {
  for (int i = 0; i < order(); ++i)
    if (repr_[i] != 0) return false;
  return order() > 0;
}

bool Partition::leq(const Partition& q) const {
  for (int x = 0; x < order(); ++x)
    if (q.repr_[x] != q.repr_[repr_[x]]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string s = "{";
  bool first_block = true;
  for (const auto& blk : blocks()) {
    if (!first_block) s += ",";
    first_block = false;
    s += "{";
    for (std::size_t i = 0; i < blk.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(blk[i]);
    }
    s += "}";
  }
  s += "}";
  return s;
}

Partition meet(const Partition& p, const Partition& q) {
  std::map<std::pair<int, int>, int> first;
  std::vector<int> labels(p.order());
  for (int x = 0; x < p.order(); ++x) {
    auto key = std::make_pair(p.repr(x), q.repr(x));
    auto [it, fresh] = first.emplace(key, x);
    labels[x] = it->second;
  }
  return Partition::from_labels(labels);
}

Partition join(const Partition& p, const Partition& q) {
  UnionFind uf(p.order());
  for (int x = 0; x < p.order(); ++x) {
    uf.unite(x, p.repr(x));
    uf.unite(x, q.repr(x));
  }
  return uf.to_partition();
}

Partition UnionFind::to_partition() {
  std::vector<int> labels(parent_.size());
  for (std::size_t i = 0; i < parent_.size(); ++i) labels[i] = find(static_cast<int>(i));
  return Partition::from_labels(labels);
}

}  // namespace nilsem
