#ifndef NILSEM_PARTITION_HPP
#define NILSEM_PARTITION_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace nilsem {

// Partition of {0,...,n-1} in canonical least-representative form:
// repr(x) is the smallest element of x's class, so repr(x) <= x,
// repr(repr(x)) == repr(x), and two partitions are equal iff their repr
// arrays are equal.
class Partition {
 public:
  Partition() = default;

  static Partition identity(int n);
  static Partition full(int n);
  // Canonicalizes an arbitrary representative array (entries merely have to
  // be class labels, not least representatives).
  static Partition from_labels(const std::vector<int>& labels);
  // Blocks may be given in any order; they must be disjoint and cover 0..n-1.
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int order() const { return static_cast<int>(repr_.size()); }
  int repr(int x) const { return repr_[x]; }
  bool same(int a, int b) const { return repr_[a] == repr_[b]; }
  int block_count() const;
  std::vector<std::vector<int>> blocks() const;

  bool is_identity() const;
  bool is_full() const;

  // Refinement order: *this <= q iff every class of *this lies inside a class
  // of q (i.e. *this, viewed as a relation, is contained in q).
  bool leq(const Partition& q) const;

  const std::vector<int>& labels() const { return repr_; }
  // "{{0,4},{2,6}}": blocks by least element, elements ascending.
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.repr_ == b.repr_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.repr_ < b.repr_; }

 private:
  std::vector<int> repr_;
};

// Lattice operations on partitions of the same set. meet is intersection of
// the relations; join is the transitive closure of their union.
Partition meet(const Partition& p, const Partition& q);
Partition join(const Partition& p, const Partition& q);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.labels()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Small union-find used wherever relations get closed into partitions.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Returns true when the two classes were distinct (a merge happened).
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep the smaller element on top
    parent_[b] = a;
    return true;
  }
  Partition to_partition();

 private:
  std::vector<int> parent_;
};

}  // namespace nilsem

#endif
