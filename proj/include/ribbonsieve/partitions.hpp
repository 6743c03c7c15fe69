#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ribbonsieve/common.hpp"

namespace ribbonsieve {

// Box coordinates are 0-based internally; (0,0) is the top-left box.
struct Box {
  int row = 0;
  int col = 0;
  auto operator<=>(const Box&) const = default;
};

class Partition {
 public:
  Partition() = default;
  // Throws InvalidPartition unless parts are weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < length() ? parts_[i] : 0; }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  bool contains_box(Box b) const { return b.row >= 0 && b.col >= 0 && b.col < part(b.row); }

  Partition conjugate() const;
  // Compact form such as "844421"; parts above 9 switch to "(10,2)".
  std::string str() const;

  bool operator==(const Partition& other) const { return parts_ == other.parts_; }
  auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

struct AmbientRectangle {
  int d = 1;
  int n = 2;

  // Throws BadParameter unless 0 < d < n.
  static AmbientRectangle make(int d, int n);
  int width() const { return n - d; }
  int N() const { return d * (n - d); }
  Partition full() const;
  bool fits(const Partition& p) const { return p.length() <= d && p.part(0) <= width(); }
  bool operator==(const AmbientRectangle&) const = default;
};

class SkewShape {
 public:
  SkewShape() = default;
  // Throws NotNested unless inner is contained in outer.
  SkewShape(Partition outer, Partition inner = {});

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }
  bool is_straight() const { return inner_.empty(); }
  bool contains(Box b) const { return outer_.contains_box(b) && !inner_.contains_box(b); }
  // Boxes in row-major order.
  std::vector<Box> boxes() const;
  std::string str() const;
  bool operator==(const SkewShape&) const = default;

 private:
  Partition outer_;
  Partition inner_;
};

bool contains(const Partition& inner, const Partition& outer);
Partition meet(const Partition& a, const Partition& b);
Partition join(const Partition& a, const Partition& b);

Partition dual(const Partition& lambda, const AmbientRectangle& rect);

// J(λ) in ascending order.
std::vector<int> bead_positions(const Partition& lambda, int d);
Partition partition_from_beads(std::span<const int> beads, int d);

Integer q_constant(const Partition& lambda, int d);

// Hook length of each box, row-major.
std::vector<int> hook_lengths(const Partition& lambda);
Integer count_syt(const Partition& lambda);

// All ν with mu ⊆ ν ⊆ lambda; size ascending, lexicographically descending within a size.
std::vector<Partition> interval(const Partition& mu, const Partition& lambda,
                                const AmbientRectangle& rect);
std::vector<Partition> partitions_in_rect(const AmbientRectangle& rect);
// Partitions of m in the interval order above.
std::vector<Partition> partitions_of(int m);

}  // namespace ribbonsieve
