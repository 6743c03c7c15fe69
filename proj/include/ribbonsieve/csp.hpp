#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ribbonsieve/partitions.hpp"

namespace ribbonsieve {

enum class DihedralVariant { E, EJ };
const char* to_string(DihedralVariant v);

struct SievingReport {
  AmbientRectangle rect;
  int r = 1;
  long long fixed_count = 0;
  long long ribbon_count = 0;
  // Signed (−1)^{N(d−1)/r} K(ζ_r); empty for dihedral reports or irrational evaluations.
  std::optional<Rational> cyclotomic_count;
  int sign = 1;
  bool ok = false;
  std::string note;
};

SievingReport verify_cyclic(const AmbientRectangle& rect, int r);
SievingReport verify_dihedral(const AmbientRectangle& rect, int r, DihedralVariant variant);
// Orbit sizes of promotion on SYT(Rect), ascending.
std::vector<long long> orbit_spectrum(const AmbientRectangle& rect);

std::vector<int> divisors(int n);
// All rectangles (d, n) with 0 < d < n and N = d(n−d) <= max_n, ordered by N, then d.
std::vector<AmbientRectangle> rectangles_up_to(int max_n);

}  // namespace ribbonsieve
