#pragma once

#include <random>

#include "doctest.h"
#include "ribbonsieve/common.hpp"
#include "ribbonsieve/partitions.hpp"

namespace ribbonsieve::testing {

// The error kind raised by f, or nullopt-equivalent -1 when nothing was thrown.
template <class F>
int thrown_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return static_cast<int>(e.kind());
  }
  return -1;
}

#define CHECK_ERROR(kind, expr) \
  CHECK(::ribbonsieve::testing::thrown_kind([&] { (void)(expr); }) == static_cast<int>(kind))

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Uniform over lattice paths, hence over partitions fitting in the rectangle.
inline Partition random_partition_in(const AmbientRectangle& rect, std::mt19937_64& rng) {
  std::vector<int> steps(rect.n, 0);
  for (int i = 0; i < rect.d; ++i) steps[i] = 1;
  std::shuffle(steps.begin(), steps.end(), rng);
  // Reading the path: a 1 is a row whose length is the number of 0s seen after it.
  std::vector<int> parts;
  int zeros_after = 0;
  for (int i = rect.n - 1; i >= 0; --i) {
    if (steps[i] == 0) {
      ++zeros_after;
    } else {
      parts.push_back(zeros_after);
    }
  }
  std::reverse(parts.begin(), parts.end());
  return Partition(parts);
}

inline AmbientRectangle rect_of(int rows, int cols) { return AmbientRectangle::make(rows, rows + cols); }

}  // namespace ribbonsieve::testing
