#include "ribbonsieve/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ribbonsieve {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw Error(ErrorKind::InvalidPartition, "parts must be weakly decreasing and nonnegative");
    }
    size_ += parts_[i];
  }
}

Partition Partition::conjugate() const {
  std::vector<int> conj(part(0), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++conj[j];
  }
  return Partition(std::move(conj));
}

std::string Partition::str() const {
  if (parts_.empty()) return "∅";
  std::ostringstream out;
  if (parts_.front() <= 9) {
    for (int p : parts_) out << p;
  } else {
    out << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
    out << ')';
  }
  return out.str();
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL + (h >> 7);
  return h;
}

AmbientRectangle AmbientRectangle::make(int d, int n) {
  if (d <= 0 || n <= d) {
    throw Error(ErrorKind::BadParameter, "rectangle needs 0 < d < n");
  }
  return AmbientRectangle{d, n};
}

Partition AmbientRectangle::full() const { return Partition(std::vector<int>(d, width())); }

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!ribbonsieve::contains(inner_, outer_)) {
    throw Error(ErrorKind::NotNested, inner_.str() + " is not contained in " + outer_.str());
  }
}

std::vector<Box> SkewShape::boxes() const {
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 0; i < outer_.length(); ++i) {
    for (int j = inner_.part(i); j < outer_.part(i); ++j) out.push_back({i, j});
  }
  return out;
}

std::string SkewShape::str() const {
  return inner_.empty() ? outer_.str() : outer_.str() + "/" + inner_.str();
}

bool contains(const Partition& inner, const Partition& outer) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i) {
    if (inner.part(i) > outer.part(i)) return false;
  }
  return true;
}

Partition meet(const Partition& a, const Partition& b) {
  std::vector<int> parts(std::min(a.length(), b.length()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    parts[i] = std::min(a.part(static_cast<int>(i)), b.part(static_cast<int>(i)));
  }
  return Partition(std::move(parts));
}

Partition join(const Partition& a, const Partition& b) {
  std::vector<int> parts(std::max(a.length(), b.length()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    parts[i] = std::max(a.part(static_cast<int>(i)), b.part(static_cast<int>(i)));
  }
  return Partition(std::move(parts));
}

Partition dual(const Partition& lambda, const AmbientRectangle& rect) {
  if (!rect.fits(lambda)) {
    throw Error(ErrorKind::ShapeOverflow, lambda.str() + " does not fit the rectangle");
  }
  std::vector<int> parts(rect.d);
  for (int i = 0; i < rect.d; ++i) parts[i] = rect.width() - lambda.part(rect.d - 1 - i);
  return Partition(std::move(parts));
}

std::vector<int> bead_positions(const Partition& lambda, int d) {
  if (lambda.length() > d) {
    throw Error(ErrorKind::TooManyParts, lambda.str() + " has more than d parts");
  }
  // i-th smallest bead (1-based i) sits at i-1+λ^{d+1-i}.
  std::vector<int> beads(d);
  for (int i = 1; i <= d; ++i) beads[i - 1] = i - 1 + lambda.part(d - i);
  return beads;
}

Partition partition_from_beads(std::span<const int> beads, int d) {
  if (static_cast<int>(beads.size()) != d) {
    throw Error(ErrorKind::MalformedBeadSet, "expected exactly d beads");
  }
  std::vector<int> sorted(beads.begin(), beads.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || (i > 0 && sorted[i] == sorted[i - 1])) {
      throw Error(ErrorKind::MalformedBeadSet, "beads must be distinct and nonnegative");
    }
  }
  std::vector<int> parts(d);
  for (int i = 1; i <= d; ++i) parts[d - i] = sorted[i - 1] - (i - 1);
  return Partition(std::move(parts));
}

Integer q_constant(const Partition& lambda, int d) {
  std::vector<int> beads = bead_positions(lambda, d);
  // j-i+λ^{d+1-j}-λ^{d+1-i} is the gap between the j-th and i-th beads.
  Integer q = 1;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) q *= beads[j] - beads[i];
  }
  return q;
}

std::vector<int> hook_lengths(const Partition& lambda) {
  Partition conj = lambda.conjugate();
  std::vector<int> hooks;
  hooks.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.part(i); ++j) {
      hooks.push_back((lambda.part(i) - j - 1) + (conj.part(j) - i - 1) + 1);
    }
  }
  return hooks;
}

Integer count_syt(const Partition& lambda) {
  Integer num = 1;
  for (int k = 2; k <= lambda.size(); ++k) num *= k;
  Integer den = 1;
  for (int h : hook_lengths(lambda)) den *= h;
  return num / den;
}

namespace {

bool interval_before(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return b.parts() < a.parts();
}

void grow(const Partition& lambda, std::vector<int>& current, int row, int max_part,
          std::vector<Partition>& out, const Partition& mu) {
  if (row == lambda.length()) {
    out.emplace_back(current);
    return;
  }
  int upper = std::min(max_part, lambda.part(row));
  for (int v = mu.part(row); v <= upper; ++v) {
    current[row] = v;
    grow(lambda, current, row + 1, v, out, mu);
  }
  current[row] = 0;
}

}  // namespace

std::vector<Partition> interval(const Partition& mu, const Partition& lambda,
                                const AmbientRectangle& rect) {
  if (!contains(mu, lambda) || !rect.fits(lambda)) {
    throw Error(ErrorKind::NotNested, "interval requires mu ⊆ lambda ⊆ Rect");
  }
  std::vector<Partition> out;
  std::vector<int> current(lambda.length(), 0);
  grow(lambda, current, 0, lambda.part(0), out, mu);
  std::sort(out.begin(), out.end(), interval_before);
  return out;
}

std::vector<Partition> partitions_in_rect(const AmbientRectangle& rect) {
  return interval(Partition{}, rect.full(), rect);
}

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(m, m);
  return out;
}

}  // namespace ribbonsieve
