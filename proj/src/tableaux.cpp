#include "ribbonsieve/tableaux.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace ribbonsieve {

namespace {

using Grid = std::vector<std::vector<int>>;

Grid empty_grid(const SkewShape& shape) {
  Grid g(shape.outer().length());
  for (int i = 0; i < shape.outer().length(); ++i) g[i].assign(shape.outer().part(i), 0);
  return g;
}

bool in_grid(const Grid& g, Box b) {
  return b.row >= 0 && b.row < static_cast<int>(g.size()) && b.col >= 0 &&
         b.col < static_cast<int>(g[b.row].size());
}

// Moves the hole east/south through labels in [lo, hi] until it has no such neighbour.
Box slide_hole(Grid& g, Box hole, int lo, int hi, std::vector<Grid>* frames) {
  auto eligible = [&](Box b) {
    if (!in_grid(g, b)) return false;
    int v = g[b.row][b.col];
    return v >= lo && v <= hi && v > 0;
  };
  if (frames) frames->push_back(g);
  for (;;) {
    Box east{hole.row, hole.col + 1};
    Box south{hole.row + 1, hole.col};
    bool e = eligible(east);
    bool s = eligible(south);
    if (!e && !s) return hole;
    Box next;
    if (e && s) {
      next = g[east.row][east.col] < g[south.row][south.col] ? east : south;
    } else {
      next = e ? east : south;
    }
    g[hole.row][hole.col] = g[next.row][next.col];
    g[next.row][next.col] = 0;
    hole = next;
    if (frames) frames->push_back(g);
  }
}

Box locate(const Grid& g, int value) {
  for (int i = 0; i < static_cast<int>(g.size()); ++i) {
    for (int j = 0; j < static_cast<int>(g[i].size()); ++j) {
      if (g[i][j] == value) return {i, j};
    }
  }
  throw Error(ErrorKind::InvalidTableau, "entry " + std::to_string(value) + " not present");
}

Filling filling_of(const SkewShape& shape, Grid g) {
  Filling f(shape);
  f.grid() = std::move(g);
  return f;
}

}  // namespace

Filling::Filling(SkewShape shape) : shape_(std::move(shape)), grid_(empty_grid(shape_)) {}

Filling::Filling(SkewShape shape, const std::vector<std::vector<int>>& rows)
    : shape_(std::move(shape)), grid_(empty_grid(shape_)) {
  const Partition& outer = shape_.outer();
  const Partition& inner = shape_.inner();
  for (std::size_t i = outer.length(); i < rows.size(); ++i) {
    if (!rows[i].empty()) throw Error(ErrorKind::InvalidShape, "more rows than the outer shape");
  }
  for (int i = 0; i < outer.length(); ++i) {
    int width = outer.part(i) - inner.part(i);
    const std::vector<int>* row = i < static_cast<int>(rows.size()) ? &rows[i] : nullptr;
    if ((row ? static_cast<int>(row->size()) : 0) != width) {
      throw Error(ErrorKind::InvalidShape, "row " + std::to_string(i + 1) + " has the wrong length");
    }
    for (int j = 0; j < width; ++j) grid_[i][inner.part(i) + j] = (*row)[j];
  }
}

std::vector<std::vector<int>> Filling::rows() const {
  std::vector<std::vector<int>> out(shape_.outer().length());
  for (int i = 0; i < shape_.outer().length(); ++i) {
    out[i].assign(grid_[i].begin() + shape_.inner().part(i), grid_[i].end());
  }
  return out;
}

std::string Filling::str() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < shape_.outer().length(); ++i) {
    out << (i ? "," : "") << '[';
    for (int j = 0; j < shape_.outer().part(i); ++j) {
      if (j) out << ',';
      if (shape_.inner().contains_box({i, j})) {
        out << '_';
      } else if (grid_[i][j] == 0) {
        out << '.';
      } else {
        out << grid_[i][j];
      }
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

bool is_standard(const Filling& f) {
  const SkewShape& shape = f.shape();
  int m = shape.size();
  std::vector<bool> seen(m + 1, false);
  for (Box b : shape.boxes()) {
    int v = f.at(b);
    if (v < 1 || v > m || seen[v]) return false;
    seen[v] = true;
    Box east{b.row, b.col + 1};
    Box south{b.row + 1, b.col};
    if (shape.contains(east) && f.at(east) <= v) return false;
    if (shape.contains(south) && f.at(south) <= v) return false;
  }
  return true;
}

StandardTableau::StandardTableau(Filling filling) : filling_(std::move(filling)) {
  if (!is_standard(filling_)) {
    throw Error(ErrorKind::InvalidTableau, "not a standard filling: " + filling_.str());
  }
}

StandardTableau StandardTableau::unchecked(Filling filling) {
  StandardTableau t;
  t.filling_ = std::move(filling);
  return t;
}

Box StandardTableau::position(int entry) const { return locate(filling_.grid(), entry); }

std::vector<int> StandardTableau::key() const {
  std::vector<int> k;
  k.reserve(static_cast<std::size_t>(size()));
  for (const auto& row : filling_.grid()) k.insert(k.end(), row.begin(), row.end());
  return k;
}

int ShapeSequence::total() const {
  int s = 0;
  for (const auto& b : blocks) s += b.size();
  return s;
}

std::pair<int, int> ShapeSequence::range(int k) const {
  int first = 1;
  for (int i = 0; i < k; ++i) first += blocks[i].size();
  return {first, first + blocks[k].size() - 1};
}

ShapeSequence ShapeSequence::swapped(int k) const {
  ShapeSequence out = *this;
  std::swap(out.blocks[k - 1], out.blocks[k]);
  return out;
}

std::vector<StandardTableau> enumerate_syt(const SkewShape& shape) {
  std::vector<StandardTableau> out;
  Grid g = empty_grid(shape);
  const Partition& outer = shape.outer();
  // fill[i] = columns of row i occupied so far (inner included).
  std::vector<int> fill(outer.length());
  for (int i = 0; i < outer.length(); ++i) fill[i] = shape.inner().part(i);
  int m = shape.size();
  std::function<void(int)> rec = [&](int next) {
    if (next > m) {
      out.push_back(StandardTableau::unchecked(filling_of(shape, g)));
      return;
    }
    for (int i = 0; i < outer.length(); ++i) {
      int j = fill[i];
      if (j < outer.part(i) && (i == 0 || fill[i - 1] > j)) {
        g[i][j] = next;
        ++fill[i];
        rec(next + 1);
        --fill[i];
        g[i][j] = 0;
      }
    }
  };
  rec(1);
  return out;
}

SlideResult jdt_slide(const Filling& with_hole, Box hole, int lo, int hi) {
  const SkewShape& shape = with_hole.shape();
  if (!shape.contains(hole) || with_hole.at(hole) != 0) {
    throw Error(ErrorKind::HoleNotInnerCorner, "hole must be an empty box of the shape");
  }
  Box north{hole.row - 1, hole.col};
  Box west{hole.row, hole.col - 1};
  for (Box b : {north, west}) {
    if (shape.contains(b) && with_hole.at(b) >= lo && with_hole.at(b) <= hi) {
      throw Error(ErrorKind::HoleNotInnerCorner, "hole has a filled north or west neighbour");
    }
  }
  Grid g = with_hole.grid();
  std::vector<Grid> frames;
  Box end = slide_hole(g, hole, lo, hi, &frames);
  SlideResult result{filling_of(shape, std::move(g)), end, {}};
  for (auto& fr : frames) result.frames.push_back(filling_of(shape, std::move(fr)));
  return result;
}

namespace {

Grid promote_grid(Grid g, int m, std::vector<Grid>* frames) {
  Box hole = locate(g, 1);
  g[hole.row][hole.col] = 0;
  hole = slide_hole(g, hole, 2, m, frames);
  for (auto& row : g) {
    for (int& v : row) {
      if (v >= 2 && v <= m) --v;
    }
  }
  g[hole.row][hole.col] = m;
  return g;
}

}  // namespace

StandardTableau promote(const StandardTableau& t) {
  if (t.size() == 0) return t;
  return StandardTableau::unchecked(
      filling_of(t.shape(), promote_grid(t.filling().grid(), t.size(), nullptr)));
}

std::vector<Filling> promote_trace(const StandardTableau& t) {
  std::vector<Grid> frames;
  Grid out = promote_grid(t.filling().grid(), t.size(), &frames);
  std::vector<Filling> result;
  for (auto& fr : frames) result.push_back(filling_of(t.shape(), std::move(fr)));
  result.push_back(filling_of(t.shape(), std::move(out)));
  return result;
}

StandardTableau promote_power(const StandardTableau& t, int a) {
  int m = t.size();
  if (m == 0) return t;
  int steps = ((a % m) + m) % m;
  Grid g = t.filling().grid();
  for (int s = 0; s < steps; ++s) g = promote_grid(std::move(g), m, nullptr);
  return StandardTableau::unchecked(filling_of(t.shape(), std::move(g)));
}

StandardTableau promote_restricted(const StandardTableau& t, int i) {
  if (i < 1 || i > t.size()) {
    throw Error(ErrorKind::OutOfRange, "restriction index outside 1..m");
  }
  return StandardTableau::unchecked(
      filling_of(t.shape(), promote_grid(t.filling().grid(), i, nullptr)));
}

StandardTableau evacuate(const StandardTableau& t) {
  Grid g = t.filling().grid();
  for (int i = t.size(); i >= 1; --i) g = promote_grid(std::move(g), i, nullptr);
  return StandardTableau::unchecked(filling_of(t.shape(), std::move(g)));
}

StandardTableau rotate_complement(const StandardTableau& t, const AmbientRectangle& rect) {
  const SkewShape& shape = t.shape();
  if (!rect.fits(shape.outer())) {
    throw Error(ErrorKind::ShapeNotCompatible, shape.str() + " does not fit the rectangle");
  }
  SkewShape rotated(dual(shape.inner(), rect), dual(shape.outer(), rect));
  Grid g = empty_grid(rotated);
  int m = t.size();
  for (Box b : shape.boxes()) {
    g[rect.d - 1 - b.row][rect.width() - 1 - b.col] = m + 1 - t.at(b);
  }
  return StandardTableau::unchecked(filling_of(rotated, std::move(g)));
}

StandardTableau rectify(const StandardTableau& t, SlideOrder order) {
  Grid g = t.filling().grid();
  std::vector<int> inner = t.shape().inner().parts();
  while (!inner.empty()) {
    int row = -1;
    for (int i = 0; i < static_cast<int>(inner.size()); ++i) {
      int below = i + 1 < static_cast<int>(inner.size()) ? inner[i + 1] : 0;
      if (inner[i] > below) {
        row = i;
        if (order == SlideOrder::TopCornerFirst) break;
      }
    }
    Box hole{row, inner[row] - 1};
    --inner[row];
    if (inner.back() == 0) inner.pop_back();
    Box end = slide_hole(g, hole, 1, std::numeric_limits<int>::max(), nullptr);
    g[end.row].pop_back();
    if (g[end.row].empty()) g.erase(g.begin() + end.row);
  }
  std::vector<int> parts;
  for (const auto& row : g) parts.push_back(static_cast<int>(row.size()));
  return StandardTableau::unchecked(filling_of(SkewShape(Partition(parts)), std::move(g)));
}

StandardTableau block_subtableau(const StandardTableau& t, int first, int last) {
  const Grid& g = t.filling().grid();
  std::vector<int> outer(g.size(), 0);
  std::vector<int> inner(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g[i].size(); ++j) {
      int v = g[i][j];
      bool in_inner_shape = t.shape().inner().contains_box({int(i), int(j)});
      if (in_inner_shape || v < first) inner[i] = static_cast<int>(j) + 1;
      if (in_inner_shape || v <= last) outer[i] = static_cast<int>(j) + 1;
    }
  }
  SkewShape shape{Partition(outer), Partition(inner)};
  Grid sub = empty_grid(shape);
  for (Box b : shape.boxes()) sub[b.row][b.col] = g[b.row][b.col] - first + 1;
  return StandardTableau::unchecked(filling_of(shape, std::move(sub)));
}

bool has_type(const StandardTableau& t, const ShapeSequence& blocks) {
  for (int k = 0; k < static_cast<int>(blocks.blocks.size()); ++k) {
    auto [first, last] = blocks.range(k);
    if (rectify(block_subtableau(t, first, last)).shape().outer() != blocks.blocks[k]) {
      return false;
    }
  }
  return true;
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Index of each box in the reading word (bottom row first, left to right).
std::vector<std::vector<int>> reading_index(const SkewShape& shape) {
  std::vector<std::vector<int>> idx(shape.outer().length());
  int next = 0;
  for (int i = shape.outer().length() - 1; i >= 0; --i) {
    idx[i].assign(shape.outer().part(i), -1);
    for (int j = shape.inner().part(i); j < shape.outer().part(i); ++j) idx[i][j] = next++;
  }
  return idx;
}

}  // namespace

std::vector<std::vector<StandardTableau>> dual_equivalence_classes(const SkewShape& shape,
                                                                   const ShapeSequence& blocks) {
  if (blocks.total() != shape.size()) {
    throw Error(ErrorKind::SizeMismatch, "block sizes do not sum to the shape size");
  }
  std::vector<StandardTableau> all = enumerate_syt(shape);
  std::unordered_map<std::vector<int>, int, KeyHash> index;
  for (int i = 0; i < static_cast<int>(all.size()); ++i) index.emplace(all[i].key(), i);
  auto reading = reading_index(shape);
  int m = shape.size();
  UnionFind uf(static_cast<int>(all.size()));
  std::vector<Box> where(m + 1);
  for (int t = 0; t < static_cast<int>(all.size()); ++t) {
    const StandardTableau& T = all[t];
    for (Box b : shape.boxes()) where[T.at(b)] = b;
    auto pos = [&](int v) { return reading[where[v].row][where[v].col]; };
    for (int k = 0; k < static_cast<int>(blocks.blocks.size()); ++k) {
      auto [first, last] = blocks.range(k);
      for (int i = first + 1; i < last; ++i) {
        int a = pos(i - 1), b = pos(i), c = pos(i + 1);
        auto between = [](int x, int lo, int hi) { return (lo < x && x < hi) || (hi < x && x < lo); };
        int x, y;
        if (between(b, a, c)) continue;
        if (between(a, b, c)) {
          x = i;
          y = i + 1;
        } else {
          x = i - 1;
          y = i;
        }
        Grid g = T.filling().grid();
        std::swap(g[where[x].row][where[x].col], g[where[y].row][where[y].col]);
        std::vector<int> key;
        for (const auto& row : g) key.insert(key.end(), row.begin(), row.end());
        auto it = index.find(key);
        if (it == index.end()) {
          throw Error(ErrorKind::InternalMismatch, "dual equivalence move left SYT(shape)");
        }
        uf.unite(t, it->second);
      }
    }
  }
  std::map<int, std::vector<StandardTableau>> classes;
  for (int t = 0; t < static_cast<int>(all.size()); ++t) classes[uf.find(t)].push_back(all[t]);
  std::vector<std::vector<StandardTableau>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  return out;
}

StandardTableau switch_blocks(const StandardTableau& t, const ShapeSequence& blocks, int k) {
  int s = static_cast<int>(blocks.blocks.size());
  if (k < 1 || k >= s) throw Error(ErrorKind::OutOfRange, "switch index outside 1..s-1");
  if (blocks.total() != t.size()) {
    throw Error(ErrorKind::SizeMismatch, "block sizes do not sum to the tableau size");
  }
  auto [a_first, a_last] = blocks.range(k - 1);
  auto [b_first, b_last] = blocks.range(k);
  Grid g = t.filling().grid();
  auto in_b = [&](Box x) {
    if (!in_grid(g, x)) return false;
    int v = g[x.row][x.col];
    return v >= b_first && v <= b_last;
  };
  for (int v = a_last; v >= a_first; --v) {
    Box p = locate(g, v);
    for (;;) {
      Box east{p.row, p.col + 1};
      Box south{p.row + 1, p.col};
      bool e = in_b(east), so = in_b(south);
      if (!e && !so) break;
      Box next = (e && so) ? (g[east.row][east.col] < g[south.row][south.col] ? east : south)
                           : (e ? east : south);
      std::swap(g[p.row][p.col], g[next.row][next.col]);
      p = next;
    }
  }
  int a_size = a_last - a_first + 1;
  int b_size = b_last - b_first + 1;
  for (auto& row : g) {
    for (int& v : row) {
      if (v >= b_first && v <= b_last) {
        v -= a_size;
      } else if (v >= a_first && v <= a_last) {
        v += b_size;
      }
    }
  }
  return StandardTableau::unchecked(filling_of(t.shape(), std::move(g)));
}

namespace {

AmbientRectangle rectangle_of(const SkewShape& shape) {
  const Partition& p = shape.outer();
  if (!shape.is_straight() || p.empty() ||
      std::any_of(p.parts().begin(), p.parts().end(), [&](int x) { return x != p.part(0); })) {
    throw Error(ErrorKind::ShapeNotCompatible, "evacuation word needs a rectangular shape");
  }
  return AmbientRectangle{p.length(), p.length() + p.part(0)};
}

}  // namespace

StandardTableau apply_generator(const StandardTableau& t, const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::Promotion:
      return promote_power(t, g.power);
    case Generator::Kind::Evacuation:
      return rotate_complement(t, rectangle_of(t.shape()));
    case Generator::Kind::EvacuationAfterPromotion:
      return rotate_complement(promote(t), rectangle_of(t.shape()));
  }
  return t;
}

long long count_fixed(const Partition& shape, const std::vector<Generator>& word) {
  for (const Generator& g : word) {
    if (g.kind != Generator::Kind::Promotion) rectangle_of(SkewShape(shape));
  }
  long long count = 0;
  for (const StandardTableau& t : enumerate_syt(SkewShape(shape))) {
    bool fixed = std::all_of(word.begin(), word.end(),
                             [&](const Generator& g) { return apply_generator(t, g) == t; });
    count += fixed ? 1 : 0;
  }
  return count;
}

long long orbit_count_mirrc(const AmbientRectangle& rect) {
  std::vector<StandardTableau> all = enumerate_syt(SkewShape(rect.full()));
  std::unordered_map<std::vector<int>, int, KeyHash> index;
  for (int i = 0; i < static_cast<int>(all.size()); ++i) index.emplace(all[i].key(), i);
  std::vector<int> next(all.size());
  for (int i = 0; i < static_cast<int>(all.size()); ++i) next[i] = index.at(promote(all[i]).key());
  int signs = rect.d % 2 == 0 ? 2 : 1;
  std::vector<bool> seen(all.size() * signs, false);
  long long orbits = 0;
  for (int start = 0; start < static_cast<int>(seen.size()); ++start) {
    if (seen[start]) continue;
    ++orbits;
    int cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      int t = cur / signs;
      int e = cur % signs;
      cur = next[t] * signs + (signs == 2 ? 1 - e : 0);
    }
  }
  return orbits;
}

StandardTableau random_syt(const Partition& shape, std::mt19937_64& rng) {
  SkewShape full(shape);
  Grid g = empty_grid(full);
  std::vector<int> rows = shape.parts();
  for (int m = shape.size(); m >= 1; --m) {
    // Current shape has m boxes; pick one uniformly, then walk down hooks to a corner.
    std::uniform_int_distribution<int> pick(0, m - 1);
    int target = pick(rng);
    Box cell{0, 0};
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (target < rows[i]) {
        cell = {i, target};
        break;
      }
      target -= rows[i];
    }
    for (;;) {
      int arm = rows[cell.row] - cell.col - 1;
      int leg = 0;
      while (cell.row + leg + 1 < static_cast<int>(rows.size()) && rows[cell.row + leg + 1] > cell.col) {
        ++leg;
      }
      if (arm + leg == 0) break;
      std::uniform_int_distribution<int> step(1, arm + leg);
      int s = step(rng);
      cell = s <= arm ? Box{cell.row, cell.col + s} : Box{cell.row + (s - arm), cell.col};
    }
    g[cell.row][cell.col] = m;
    --rows[cell.row];
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
  }
  return StandardTableau::unchecked(filling_of(full, std::move(g)));
}

StandardTableau random_skew_syt(const SkewShape& shape, std::mt19937_64& rng) {
  Grid g = empty_grid(shape);
  const Partition& outer = shape.outer();
  std::vector<int> fill(outer.length());
  for (int i = 0; i < outer.length(); ++i) fill[i] = shape.inner().part(i);
  for (int next = 1; next <= shape.size(); ++next) {
    std::vector<int> choices;
    for (int i = 0; i < outer.length(); ++i) {
      if (fill[i] < outer.part(i) && (i == 0 || fill[i - 1] > fill[i])) choices.push_back(i);
    }
    std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
    int i = choices[pick(rng)];
    g[i][fill[i]++] = next;
  }
  return StandardTableau::unchecked(filling_of(shape, std::move(g)));
}

bool precedes(const RealLabel& a, const RealLabel& b) {
  if (a.infinite || b.infinite) return !a.infinite && b.infinite;
  Rational abs_a = abs(a.value);
  Rational abs_b = abs(b.value);
  if (abs_a != abs_b) return abs_a < abs_b;
  return sgn(a.value) > sgn(b.value);
}

RealValuedTableau::RealValuedTableau(SkewShape shape, const std::vector<std::vector<RealLabel>>& rows)
    : shape_(std::move(shape)) {
  grid_.resize(shape_.outer().length());
  for (int i = 0; i < shape_.outer().length(); ++i) {
    int lo = shape_.inner().part(i);
    int width = shape_.outer().part(i) - lo;
    if (i >= static_cast<int>(rows.size()) || static_cast<int>(rows[i].size()) != width) {
      throw Error(ErrorKind::InvalidShape, "row " + std::to_string(i + 1) + " has the wrong length");
    }
    grid_[i].resize(shape_.outer().part(i));
    for (int j = 0; j < width; ++j) grid_[i][lo + j] = rows[i][j];
  }
  for (Box b : shape_.boxes()) {
    for (Box nb : {Box{b.row, b.col + 1}, Box{b.row + 1, b.col}}) {
      if (shape_.contains(nb) && !precedes(at(b), at(nb))) {
        throw Error(ErrorKind::InvalidTableau, "labels must increase along rows and columns");
      }
    }
  }
}

std::optional<Box> RealValuedTableau::find(const RealLabel& label) const {
  for (Box b : shape_.boxes()) {
    if (at(b) == label) return b;
  }
  return std::nullopt;
}

std::vector<std::vector<RealLabel>> RealValuedTableau::rows() const {
  std::vector<std::vector<RealLabel>> out(shape_.outer().length());
  for (int i = 0; i < shape_.outer().length(); ++i) {
    out[i].assign(grid_[i].begin() + shape_.inner().part(i), grid_[i].end());
  }
  return out;
}

StandardTableau RealValuedTableau::standardize() const {
  std::vector<Box> boxes = shape_.boxes();
  std::sort(boxes.begin(), boxes.end(), [&](Box a, Box b) { return precedes(at(a), at(b)); });
  Filling f(shape_);
  for (std::size_t k = 0; k < boxes.size(); ++k) f.set(boxes[k], static_cast<int>(k) + 1);
  return StandardTableau(std::move(f));
}

std::string RealValuedTableau::str() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < shape_.outer().length(); ++i) {
    out << (i ? "," : "") << '[';
    for (int j = 0; j < shape_.outer().part(i); ++j) {
      out << (j ? "," : "");
      out << (shape_.inner().contains_box({i, j}) ? std::string("_") : grid_[i][j].str());
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

struct PassEngine {
  static PassResult run(const RealValuedTableau& t, const RealLabel& moving,
                        const std::vector<Crossing>& crossings) {
    PassResult result{t, {t}};
    RealValuedTableau& cur = result.tableau;
    std::optional<Box> pos = cur.find(moving);
    if (!pos) throw Error(ErrorKind::NonAdjacentCrossing, "moving label not in tableau");
    RealLabel label = moving;
    auto strictly_between = [](const RealLabel& x, const RealLabel& a, const RealLabel& b) {
      const RealLabel& lo = precedes(a, b) ? a : b;
      const RealLabel& hi = precedes(a, b) ? b : a;
      return precedes(lo, x) && precedes(x, hi);
    };
    for (const Crossing& c : crossings) {
      std::optional<Box> other = cur.find(c.label);
      if (!other) throw Error(ErrorKind::NonAdjacentCrossing, c.label.str() + " not in tableau");
      bool flips = precedes(label, c.label) != precedes(c.moving_after, c.label);
      if (!flips) {
        throw Error(ErrorKind::NonAdjacentCrossing, "moving label does not cross " + c.label.str());
      }
      for (Box b : cur.shape().boxes()) {
        if (b == *pos || b == *other) continue;
        const RealLabel& x = cur.at(b);
        if (strictly_between(x, label, c.label) || strictly_between(x, c.label, c.moving_after) ||
            x == c.moving_after) {
          throw Error(ErrorKind::NonAdjacentCrossing,
                      x.str() + " lies between " + label.str() + " and " + c.label.str());
        }
      }
      bool aligned = pos->row == other->row || pos->col == other->col;
      bool swap_positions = !c.opposite_sign || aligned;
      if (swap_positions) {
        cur.grid_[pos->row][pos->col] = c.label;
        pos = other;
      }
      label = c.moving_after;
      cur.grid_[pos->row][pos->col] = label;
      for (Box b : cur.shape().boxes()) {
        for (Box nb : {Box{b.row, b.col + 1}, Box{b.row + 1, b.col}}) {
          if (cur.shape().contains(nb) && !precedes(cur.at(b), cur.at(nb))) {
            throw Error(ErrorKind::InternalMismatch, "pass produced a non-increasing tableau");
          }
        }
      }
      result.frames.push_back(cur);
    }
    return result;
  }
};

PassResult pass_entry(const RealValuedTableau& t, const RealLabel& moving,
                      const std::vector<Crossing>& crossings) {
  return PassEngine::run(t, moving, crossings);
}

}  // namespace ribbonsieve
