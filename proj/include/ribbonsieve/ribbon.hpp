#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ribbonsieve/abacus.hpp"
#include "ribbonsieve/tableaux.hpp"

namespace ribbonsieve {

// Labels 1..ℓ on a skew shape together with the partition chain they sweep out.
// chain.front() is the inner shape and chain.back() the outer shape.
struct RibbonTableau {
  Filling labels;
  int r = 1;
  std::vector<Partition> chain;

  const SkewShape& shape() const { return labels.shape(); }
  int length() const { return static_cast<int>(chain.size()) - 1; }
  std::string str() const { return labels.str(); }
  bool operator==(const RibbonTableau& o) const { return r == o.r && labels == o.labels; }
};

struct RibbonValidation {
  bool ok = false;
  std::string diagnostic;
};

RibbonValidation validate_ribbon(const Filling& filling, int r);
// Labels 1..ℓ-1 where label ℓ/2 covers 2r boxes. With long_ribbon the middle region must be a
// 2r-ribbon; otherwise it must split into two r-ribbons along a valid intermediate shape.
RibbonValidation validate_almost_standard(const Filling& filling, int r, bool long_ribbon);
// Throws InvalidTableau with the diagnostic when validation fails.
RibbonTableau make_ribbon_tableau(Filling filling, int r);

RibbonTableau tableau_from_chain(const std::vector<Partition>& chain, int r);

void for_each_srt(const SkewShape& shape, int r, const std::function<void(const RibbonTableau&)>& visit);
std::vector<RibbonTableau> enumerate_srt(const SkewShape& shape, int r);
Integer count_srt(const SkewShape& shape, int r);

// Rotation by 180° inside rect with label i -> (max label + 1 - i).
Filling rotate_labels(const Filling& labels, const AmbientRectangle& rect);
bool is_rotation_invariant(const Filling& labels, const AmbientRectangle& rect);

std::vector<RibbonTableau> enumerate_rrt(const SkewShape& shape, int r, const AmbientRectangle& rect);
std::vector<RibbonTableau> enumerate_rrt_hat(const SkewShape& shape, int r,
                                             const AmbientRectangle& rect);

struct QuotientBox {
  int runner = 0;
  Box box;
  bool operator==(const QuotientBox&) const = default;
};
// Entry i-1 describes label i.
std::vector<QuotientBox> ribbon_quotient_box(const RibbonTableau& t, int d, int r);

struct FillRule {
  // Values for unswept boxes in runner order, row-major within a runner. When absent, boxes
  // outside the outer quotient get b_ℓ-1, b_ℓ-2, ... and boxes inside the inner quotient get
  // values above b_1, largest first.
  std::optional<std::vector<Rational>> values;
};

struct WeightVector {
  AmbientRectangle rect;
  int r = 1;
  Partition core;
  // Filled Rect_k grids, one per runner.
  std::vector<std::vector<std::vector<Rational>>> grids;
  std::vector<std::pair<Partition, Rational>> weights;  // over Λ in interval order

  Rational at(const Partition& nu) const;
};

WeightVector weight_vector(const RibbonTableau& t, const AmbientRectangle& rect,
                           const std::vector<Rational>& b, const FillRule& rule = {});

}  // namespace ribbonsieve
