#include "ribbonsieve/csp.hpp"

#include <algorithm>
#include <map>

#include "ribbonsieve/ribbon.hpp"
#include "ribbonsieve/symfunc.hpp"
#include "ribbonsieve/tableaux.hpp"

namespace ribbonsieve {

const char* to_string(DihedralVariant v) { return v == DihedralVariant::E ? "e" : "ej"; }

namespace {

void check_divides(const AmbientRectangle& rect, int r) {
  if (r < 1 || rect.N() % r != 0) {
    throw Error(ErrorKind::NondivisibleSize, "r must divide N = " + std::to_string(rect.N()));
  }
}

long long to_ll(const Integer& x) { return x.get_si(); }

}  // namespace

SievingReport verify_cyclic(const AmbientRectangle& rect, int r) {
  check_divides(rect, r);
  SievingReport report;
  report.rect = rect;
  report.r = r;
  int N = rect.N();
  report.fixed_count = count_fixed(rect.full(), {Generator::j(N / r)});
  report.ribbon_count = to_ll(count_srt(SkewShape(rect.full()), r));
  CyclotomicValue value = eval_at_root(q_hook_kostka_rect(rect), r);
  if (!value.is_rational()) {
    report.note = "cyclotomic evaluation is not rational: " + value.str();
    return report;
  }
  Rational signed_value = value.rational();
  if ((N * (rect.d - 1) / r) % 2 != 0) signed_value = -signed_value;
  report.cyclotomic_count = signed_value;
  report.sign = sgn(signed_value) < 0 ? -1 : 1;
  report.ok = report.fixed_count == report.ribbon_count &&
              abs(signed_value) == Rational(static_cast<long>(report.ribbon_count));
  return report;
}

SievingReport verify_dihedral(const AmbientRectangle& rect, int r, DihedralVariant variant) {
  check_divides(rect, r);
  SievingReport report;
  report.rect = rect;
  report.r = r;
  int N = rect.N();
  SkewShape full(rect.full());
  Generator g = variant == DihedralVariant::E ? Generator::e() : Generator::ej();
  report.fixed_count = count_fixed(rect.full(), {g, Generator::j(N / r)});
  bool hat = variant == DihedralVariant::EJ && (N / r) % 2 == 0;
  report.ribbon_count = static_cast<long long>(hat ? enumerate_rrt_hat(full, r, rect).size()
                                                   : enumerate_rrt(full, r, rect).size());
  report.note = hat ? "compared with hat-RRT" : "compared with RRT";
  report.ok = report.fixed_count == report.ribbon_count;
  return report;
}

std::vector<long long> orbit_spectrum(const AmbientRectangle& rect) {
  std::vector<StandardTableau> all = enumerate_syt(SkewShape(rect.full()));
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(all.size()); ++i) index.emplace(all[i].key(), i);
  std::vector<bool> seen(all.size(), false);
  std::vector<long long> sizes;
  for (int i = 0; i < static_cast<int>(all.size()); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    int cur = i;
    while (!seen[cur]) {
      seen[cur] = true;
      ++len;
      cur = index.at(promote(all[cur]).key());
    }
    sizes.push_back(len);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int k = 1; k <= n; ++k) {
    if (n % k == 0) out.push_back(k);
  }
  return out;
}

std::vector<AmbientRectangle> rectangles_up_to(int max_n) {
  std::vector<AmbientRectangle> out;
  for (int N = 1; N <= max_n; ++N) {
    for (int d = 1; d <= N; ++d) {
      if (N % d == 0) out.push_back(AmbientRectangle{d, d + N / d});
    }
  }
  return out;
}

}  // namespace ribbonsieve
