#include "ribbonsieve/ribbon.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace ribbonsieve {

namespace {

bool connected_without_square(const std::vector<Box>& region) {
  std::set<Box> cells(region.begin(), region.end());
  for (Box b : region) {
    if (cells.count({b.row, b.col + 1}) && cells.count({b.row + 1, b.col}) &&
        cells.count({b.row + 1, b.col + 1})) {
      return false;
    }
  }
  std::set<Box> seen{region.front()};
  std::deque<Box> queue{region.front()};
  while (!queue.empty()) {
    Box b = queue.front();
    queue.pop_front();
    for (Box nb : {Box{b.row - 1, b.col}, Box{b.row + 1, b.col}, Box{b.row, b.col - 1},
                   Box{b.row, b.col + 1}}) {
      if (cells.count(nb) && seen.insert(nb).second) queue.push_back(nb);
    }
  }
  return seen.size() == cells.size();
}

// Checks that each prefix of labels sweeps a partition; fills chain on success.
std::optional<std::string> check_chain(const Filling& f, int labels, std::vector<Partition>& chain) {
  const SkewShape& shape = f.shape();
  chain.assign(1, shape.inner());
  for (int i = 1; i <= labels; ++i) {
    std::vector<int> parts(shape.outer().length());
    for (int row = 0; row < shape.outer().length(); ++row) {
      int len = shape.inner().part(row);
      while (len < shape.outer().part(row) && f.at({row, len}) <= i) ++len;
      for (int col = len; col < shape.outer().part(row); ++col) {
        if (f.at({row, col}) <= i) {
          return "labels <= " + std::to_string(i) + " do not form a left-justified row segment";
        }
      }
      parts[row] = len;
      if (row > 0 && parts[row] > parts[row - 1]) {
        return "labels <= " + std::to_string(i) + " do not sweep a partition";
      }
    }
    chain.emplace_back(parts);
  }
  return std::nullopt;
}

std::vector<std::vector<Box>> regions(const Filling& f, int labels) {
  std::vector<std::vector<Box>> out(labels + 1);
  for (Box b : f.shape().boxes()) {
    int v = f.at(b);
    if (v >= 1 && v <= labels) out[v].push_back(b);
  }
  return out;
}

RibbonValidation validate_impl(const Filling& f, int r, bool almost, bool long_ribbon,
                               std::vector<Partition>* chain_out) {
  if (r < 1) return {false, "r must be positive"};
  int size = f.shape().size();
  if (size % r != 0) return {false, "shape size is not a multiple of r"};
  int ell = size / r;
  if (almost && (ell % 2 != 0 || ell < 2)) return {false, "almost-standard needs even ℓ >= 2"};
  int labels = almost ? ell - 1 : ell;
  int middle = almost ? ell / 2 : 0;
  for (Box b : f.shape().boxes()) {
    if (f.at(b) < 1 || f.at(b) > labels) {
      return {false, "label out of range at row " + std::to_string(b.row + 1)};
    }
  }
  auto regs = regions(f, labels);
  for (int i = 1; i <= labels; ++i) {
    int want = i == middle ? 2 * r : r;
    if (static_cast<int>(regs[i].size()) != want) {
      return {false, "label " + std::to_string(i) + " covers " + std::to_string(regs[i].size()) +
                         " boxes, expected " + std::to_string(want)};
    }
    if (i == middle && !long_ribbon) continue;
    if (!connected_without_square(regs[i])) {
      return {false, "label " + std::to_string(i) + " is not a connected region free of 2x2 squares"};
    }
  }
  std::vector<Partition> chain;
  if (auto problem = check_chain(f, labels, chain)) return {false, *problem};
  if (almost && !long_ribbon) {
    const Partition& lo = chain[middle - 1];
    const Partition& hi = chain[middle];
    bool splits = false;
    for (const Partition& mid : add_ribbons(lo, r, hi)) {
      auto tops = add_ribbons(mid, r, hi);
      if (std::find(tops.begin(), tops.end(), hi) != tops.end()) splits = true;
    }
    if (!splits) return {false, "middle region does not split into two r-ribbons"};
  }
  if (chain_out) *chain_out = std::move(chain);
  return {true, ""};
}

// Counts and visits chains inner -> outer whose i-th step adds a ribbon of size steps[i].
class ChainSearch {
 public:
  ChainSearch(const SkewShape& shape, std::vector<int> steps)
      : shape_(shape), steps_(std::move(steps)) {}

  Integer count() { return count_from(0, shape_.inner()); }

  void visit(const std::function<void(const std::vector<Partition>&)>& fn) {
    if (count() == 0) return;
    std::vector<Partition> chain{shape_.inner()};
    walk(chain, fn);
  }

 private:
  Integer count_from(std::size_t step, const Partition& p) {
    if (step == steps_.size()) return p == shape_.outer() ? 1 : 0;
    auto key = std::make_pair(step, p);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Integer total = 0;
    for (const Partition& next : add_ribbons(p, steps_[step], shape_.outer())) {
      total += count_from(step + 1, next);
    }
    memo_.emplace(key, total);
    return total;
  }

  void walk(std::vector<Partition>& chain,
            const std::function<void(const std::vector<Partition>&)>& fn) {
    std::size_t step = chain.size() - 1;
    if (step == steps_.size()) {
      fn(chain);
      return;
    }
    for (const Partition& next : add_ribbons(chain.back(), steps_[step], shape_.outer())) {
      if (count_from(step + 1, next) == 0) continue;
      chain.push_back(next);
      walk(chain, fn);
      chain.pop_back();
    }
  }

  SkewShape shape_;
  std::vector<int> steps_;
  std::map<std::pair<std::size_t, Partition>, Integer> memo_;
};

std::vector<int> standard_steps(const SkewShape& shape, int r) {
  if (r < 1 || shape.size() % r != 0) return {};
  return std::vector<int>(shape.size() / r, r);
}

}  // namespace

RibbonValidation validate_ribbon(const Filling& filling, int r) {
  return validate_impl(filling, r, false, true, nullptr);
}

RibbonValidation validate_almost_standard(const Filling& filling, int r, bool long_ribbon) {
  return validate_impl(filling, r, true, long_ribbon, nullptr);
}

RibbonTableau make_ribbon_tableau(Filling filling, int r) {
  std::vector<Partition> chain;
  RibbonValidation v = validate_impl(filling, r, false, true, &chain);
  if (!v.ok) throw Error(ErrorKind::InvalidTableau, v.diagnostic);
  return RibbonTableau{std::move(filling), r, std::move(chain)};
}

RibbonTableau tableau_from_chain(const std::vector<Partition>& chain, int r) {
  SkewShape shape(chain.back(), chain.front());
  Filling f(shape);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    for (Box b : SkewShape(chain[i], chain[i - 1]).boxes()) f.set(b, static_cast<int>(i));
  }
  return RibbonTableau{std::move(f), r, chain};
}

void for_each_srt(const SkewShape& shape, int r,
                  const std::function<void(const RibbonTableau&)>& visit) {
  if (r < 1 || shape.size() % r != 0) return;
  if (shape.size() == 0) {
    visit(tableau_from_chain({shape.inner()}, r));
    return;
  }
  ChainSearch search(shape, standard_steps(shape, r));
  search.visit([&](const std::vector<Partition>& chain) { visit(tableau_from_chain(chain, r)); });
}

std::vector<RibbonTableau> enumerate_srt(const SkewShape& shape, int r) {
  std::vector<RibbonTableau> out;
  for_each_srt(shape, r, [&](const RibbonTableau& t) { out.push_back(t); });
  return out;
}

Integer count_srt(const SkewShape& shape, int r) {
  if (r < 1 || shape.size() % r != 0) return 0;
  if (shape.size() == 0) return 1;
  return ChainSearch(shape, standard_steps(shape, r)).count();
}

Filling rotate_labels(const Filling& labels, const AmbientRectangle& rect) {
  const SkewShape& shape = labels.shape();
  if (!rect.fits(shape.outer())) {
    throw Error(ErrorKind::ShapeOverflow, shape.str() + " does not fit the rectangle");
  }
  int top = 0;
  for (Box b : shape.boxes()) top = std::max(top, labels.at(b));
  Filling out(SkewShape(dual(shape.inner(), rect), dual(shape.outer(), rect)));
  for (Box b : shape.boxes()) {
    out.set({rect.d - 1 - b.row, rect.width() - 1 - b.col}, top + 1 - labels.at(b));
  }
  return out;
}

bool is_rotation_invariant(const Filling& labels, const AmbientRectangle& rect) {
  if (!rect.fits(labels.shape().outer())) return false;
  return rotate_labels(labels, rect) == labels;
}

std::vector<RibbonTableau> enumerate_rrt(const SkewShape& shape, int r, const AmbientRectangle& rect) {
  std::vector<RibbonTableau> out;
  if (!rect.fits(shape.outer()) || shape.inner() != dual(shape.outer(), rect)) return out;
  for_each_srt(shape, r, [&](const RibbonTableau& t) {
    if (is_rotation_invariant(t.labels, rect)) out.push_back(t);
  });
  return out;
}

std::vector<RibbonTableau> enumerate_rrt_hat(const SkewShape& shape, int r,
                                             const AmbientRectangle& rect) {
  if (r < 1 || shape.size() % r != 0) {
    throw Error(ErrorKind::NondivisibleSize, "shape size is not a multiple of r");
  }
  int ell = shape.size() / r;
  if (ell % 2 != 0) throw Error(ErrorKind::OddLength, "hat tableaux need an even ribbon count");
  std::vector<RibbonTableau> out;
  if (ell == 0 || !rect.fits(shape.outer()) || shape.inner() != dual(shape.outer(), rect)) {
    return out;
  }
  std::vector<int> steps(ell - 1, r);
  steps[ell / 2 - 1] = 2 * r;
  ChainSearch search(shape, steps);
  search.visit([&](const std::vector<Partition>& chain) {
    RibbonTableau t = tableau_from_chain(chain, r);
    if (is_rotation_invariant(t.labels, rect)) out.push_back(std::move(t));
  });
  return out;
}

std::vector<QuotientBox> ribbon_quotient_box(const RibbonTableau& t, int d, int r) {
  if (t.r != r) throw Error(ErrorKind::InvalidTableau, "tableau has a different ribbon size");
  RibbonValidation v = validate_ribbon(t.labels, r);
  if (!v.ok) throw Error(ErrorKind::InvalidTableau, v.diagnostic);
  std::vector<QuotientBox> out;
  std::vector<Partition> prev = r_quotient(t.chain.front(), d, r);
  for (std::size_t i = 1; i < t.chain.size(); ++i) {
    std::vector<Partition> next = r_quotient(t.chain[i], d, r);
    std::optional<QuotientBox> found;
    for (int k = 0; k < r; ++k) {
      if (prev[k] == next[k]) continue;
      if (found || next[k].size() != prev[k].size() + 1 || !contains(prev[k], next[k])) {
        throw Error(ErrorKind::InternalMismatch, "ribbon step does not add one quotient box");
      }
      for (int row = 0; row < next[k].length(); ++row) {
        if (next[k].part(row) != prev[k].part(row)) found = QuotientBox{k, {row, prev[k].part(row)}};
      }
    }
    if (!found) throw Error(ErrorKind::InternalMismatch, "ribbon step left the quotient unchanged");
    out.push_back(*found);
    prev = std::move(next);
  }
  return out;
}

Rational WeightVector::at(const Partition& nu) const {
  for (const auto& [p, w] : weights) {
    if (p == nu) return w;
  }
  throw Error(ErrorKind::ShapeOverflow, nu.str() + " is not in the rectangle");
}

WeightVector weight_vector(const RibbonTableau& t, const AmbientRectangle& rect,
                           const std::vector<Rational>& b, const FillRule& rule) {
  const int r = t.r;
  const int d = rect.d;
  if (!rect.fits(t.shape().outer())) {
    throw Error(ErrorKind::ShapeOverflow, "tableau does not fit the rectangle");
  }
  if (static_cast<int>(b.size()) != t.length()) {
    throw Error(ErrorKind::SizeMismatch, "need one value per ribbon");
  }
  CoreQuotient top = core_quotient(t.chain.back(), d, r);
  CoreQuotient bottom = core_quotient(t.chain.front(), d, r);
  WeightVector wv{rect, r, top.core, {}, {}};
  std::vector<int> widths(r);
  std::vector<std::vector<std::vector<std::optional<Rational>>>> cells(r);
  for (int k = 0; k < r; ++k) {
    int m_k = (rect.n - k + r - 1) / r;
    widths[k] = m_k - top.spec[k];
    cells[k].assign(top.spec[k], std::vector<std::optional<Rational>>(std::max(widths[k], 0)));
  }
  std::vector<QuotientBox> boxes = ribbon_quotient_box(t, d, r);
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    cells[boxes[i].runner][boxes[i].box.row][boxes[i].box.col] = b[i];
  }
  std::vector<std::tuple<int, int, int>> outside, inside;
  for (int k = 0; k < r; ++k) {
    for (int row = 0; row < top.spec[k]; ++row) {
      for (int col = 0; col < widths[k]; ++col) {
        if (cells[k][row][col]) continue;
        if (bottom.quotient[k].contains_box({row, col})) {
          inside.emplace_back(k, row, col);
        } else {
          outside.emplace_back(k, row, col);
        }
      }
    }
  }
  if (rule.values) {
    std::vector<std::tuple<int, int, int>> all;
    for (int k = 0; k < r; ++k) {
      for (int row = 0; row < top.spec[k]; ++row) {
        for (int col = 0; col < widths[k]; ++col) {
          if (!cells[k][row][col]) all.emplace_back(k, row, col);
        }
      }
    }
    if (all.size() != rule.values->size()) {
      throw Error(ErrorKind::SizeMismatch, "fill list needs " + std::to_string(all.size()) + " values");
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      auto [k, row, col] = all[i];
      cells[k][row][col] = (*rule.values)[i];
    }
  } else {
    Rational low = b.empty() ? Rational(0) : b.back();
    Rational high = b.empty() ? Rational(0) : b.front();
    for (std::size_t i = 0; i < outside.size(); ++i) {
      auto [k, row, col] = outside[i];
      cells[k][row][col] = low - Rational(static_cast<long>(i) + 1);
    }
    for (std::size_t i = 0; i < inside.size(); ++i) {
      auto [k, row, col] = inside[i];
      cells[k][row][col] = high + Rational(static_cast<long>(inside.size() - i));
    }
  }
  wv.grids.resize(r);
  for (int k = 0; k < r; ++k) {
    auto& grid = wv.grids[k];
    grid.assign(top.spec[k], std::vector<Rational>(std::max(widths[k], 0)));
    for (int row = 0; row < top.spec[k]; ++row) {
      for (int col = 0; col < widths[k]; ++col) grid[row][col] = *cells[k][row][col];
    }
    for (int row = 0; row < top.spec[k]; ++row) {
      for (int col = 0; col < widths[k]; ++col) {
        bool right = col + 1 < widths[k];
        bool down = row + 1 < top.spec[k];
        if ((right && grid[row][col + 1] > grid[row][col]) ||
            (down && grid[row + 1][col] > grid[row][col])) {
          throw Error(ErrorKind::ConditionViolated, "filled Rect_" + std::to_string(k) + " is not weakly decreasing");
        }
        if (right && down && grid[row][col] == grid[row][col + 1] &&
            grid[row][col] == grid[row + 1][col] && grid[row][col] == grid[row + 1][col + 1]) {
          throw Error(ErrorKind::ConditionViolated, "filled Rect_" + std::to_string(k) + " has a constant 2x2 square");
        }
      }
    }
  }
  auto outside_sum = [&](int k, const Partition& q) {
    Rational s = 0;
    for (int row = 0; row < top.spec[k]; ++row) {
      for (int col = q.part(row); col < widths[k]; ++col) s += wv.grids[k][row][col];
    }
    return s;
  };
  Rational base = 0;
  for (int k = 0; k < r; ++k) base += outside_sum(k, top.quotient[k]);
  for (const Partition& nu : partitions_in_rect(rect)) {
    Rational w = 0;
    if (r_core(nu, d, r) == top.core) {
      std::vector<Partition> q = r_quotient(nu, d, r);
      for (int k = 0; k < r; ++k) w += outside_sum(k, q[k]);
      w -= base;
    }
    wv.weights.emplace_back(nu, w);
  }
  return wv;
}

}  // namespace ribbonsieve
