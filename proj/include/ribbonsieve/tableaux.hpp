#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ribbonsieve/partitions.hpp"

namespace ribbonsieve {

// Integer labels on a skew shape. The grid spans the outer shape; inner boxes and
// unfilled boxes hold 0.
class Filling {
 public:
  Filling() = default;
  explicit Filling(SkewShape shape);
  // rows[i] lists the labels of row i from column inner_i to outer_i - 1.
  Filling(SkewShape shape, const std::vector<std::vector<int>>& rows);

  const SkewShape& shape() const { return shape_; }
  int at(Box b) const { return grid_[b.row][b.col]; }
  void set(Box b, int v) { grid_[b.row][b.col] = v; }
  std::vector<std::vector<int>> rows() const;
  const std::vector<std::vector<int>>& grid() const { return grid_; }
  std::vector<std::vector<int>>& grid() { return grid_; }
  std::string str() const;
  bool operator==(const Filling&) const = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> grid_;
};

class StandardTableau {
 public:
  StandardTableau() = default;
  // Throws InvalidTableau unless entries are 1..size, increasing along rows and columns.
  explicit StandardTableau(Filling filling);
  StandardTableau(SkewShape shape, const std::vector<std::vector<int>>& rows)
      : StandardTableau(Filling(std::move(shape), rows)) {}
  // Skips validation; for internal producers that preserve standardness.
  static StandardTableau unchecked(Filling filling);

  const SkewShape& shape() const { return filling_.shape(); }
  const Filling& filling() const { return filling_; }
  int size() const { return filling_.shape().size(); }
  int at(Box b) const { return filling_.at(b); }
  Box position(int entry) const;
  std::vector<std::vector<int>> rows() const { return filling_.rows(); }
  // Entries in row-major order; a compact key for hashing.
  std::vector<int> key() const;
  std::string str() const { return filling_.str(); }

  bool operator==(const StandardTableau& o) const { return filling_ == o.filling_; }

 private:
  Filling filling_;
};

bool is_standard(const Filling& filling);

struct ShapeSequence {
  std::vector<Partition> blocks;

  int total() const;
  // Entry range [first, last] of block k (0-based), within 1..total().
  std::pair<int, int> range(int k) const;
  ShapeSequence swapped(int k) const;
};

std::vector<StandardTableau> enumerate_syt(const SkewShape& shape);

struct SlideResult {
  Filling filling;
  Box hole;
  std::vector<Filling> frames;  // every intermediate position of the hole, starting with the input
};
// The hole is the unique box holding 0 at `hole`; neighbours are taken from labels in [lo, hi].
SlideResult jdt_slide(const Filling& with_hole, Box hole, int lo = 1,
                      int hi = std::numeric_limits<int>::max());

StandardTableau promote(const StandardTableau& t);
// Hole frames of the slide followed by the promoted tableau.
std::vector<Filling> promote_trace(const StandardTableau& t);
StandardTableau promote_power(const StandardTableau& t, int a);
StandardTableau promote_restricted(const StandardTableau& t, int i);
StandardTableau evacuate(const StandardTableau& t);
StandardTableau rotate_complement(const StandardTableau& t, const AmbientRectangle& rect);

enum class SlideOrder { TopCornerFirst, BottomCornerFirst };
StandardTableau rectify(const StandardTableau& t, SlideOrder order = SlideOrder::TopCornerFirst);

// Entries first..last of t, relabelled from 1, as a skew tableau.
StandardTableau block_subtableau(const StandardTableau& t, int first, int last);
bool has_type(const StandardTableau& t, const ShapeSequence& blocks);

std::vector<std::vector<StandardTableau>> dual_equivalence_classes(const SkewShape& shape,
                                                                   const ShapeSequence& blocks);
// k is 1-based, 1 <= k < s. The result carries blocks.swapped(k).
StandardTableau switch_blocks(const StandardTableau& t, const ShapeSequence& blocks, int k);

struct Generator {
  enum class Kind { Promotion, Evacuation, EvacuationAfterPromotion };
  Kind kind = Kind::Promotion;
  int power = 1;

  static Generator j(int a) { return {Kind::Promotion, a}; }
  static Generator e() { return {Kind::Evacuation, 1}; }
  static Generator ej() { return {Kind::EvacuationAfterPromotion, 1}; }
};
StandardTableau apply_generator(const StandardTableau& t, const Generator& g);
long long count_fixed(const Partition& shape, const std::vector<Generator>& word);
long long orbit_count_mirrc(const AmbientRectangle& rect);

// Uniform sample via the hook walk.
StandardTableau random_syt(const Partition& shape, std::mt19937_64& rng);
// Random linear extension (not uniform) of a skew shape.
StandardTableau random_skew_syt(const SkewShape& shape, std::mt19937_64& rng);

// Labels ordered by absolute value; at equal absolute value the positive label comes first.
struct RealLabel {
  Rational value;
  bool infinite = false;

  static RealLabel inf() { return {Rational(0), true}; }
  int sign() const { return infinite ? 1 : sgn(value); }
  bool operator==(const RealLabel& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
  std::string str() const { return infinite ? "∞" : to_string(value); }
};
bool precedes(const RealLabel& a, const RealLabel& b);

class RealValuedTableau {
 public:
  RealValuedTableau() = default;
  // Throws InvalidTableau unless labels strictly increase along rows and columns under precedes.
  RealValuedTableau(SkewShape shape, const std::vector<std::vector<RealLabel>>& rows);

  const SkewShape& shape() const { return shape_; }
  const RealLabel& at(Box b) const { return grid_[b.row][b.col]; }
  std::optional<Box> find(const RealLabel& label) const;
  std::vector<std::vector<RealLabel>> rows() const;
  StandardTableau standardize() const;
  std::string str() const;
  bool operator==(const RealValuedTableau&) const = default;

 private:
  friend struct PassEngine;
  SkewShape shape_;
  std::vector<std::vector<RealLabel>> grid_;
};

struct Crossing {
  RealLabel label;
  bool opposite_sign = true;
  RealLabel moving_after;  // label carried by the moving entry once it has passed `label`
};

struct PassResult {
  RealValuedTableau tableau;
  std::vector<RealValuedTableau> frames;  // input first, then one per crossing
};
// In the standardized picture: same sign leaves T unchanged; opposite sign leaves T unchanged
// when the two boxes share a row or column and exchanges k, k+1 otherwise.
PassResult pass_entry(const RealValuedTableau& t, const RealLabel& moving,
                      const std::vector<Crossing>& crossings);

}  // namespace ribbonsieve
