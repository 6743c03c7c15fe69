#include <set>

#include "ribbonsieve/puiseux.hpp"
#include "support.hpp"

using namespace ribbonsieve;
using namespace ribbonsieve::testing;

namespace {

using TS = TruncatedSeries;

TS u_pow(long num, long den = 1, long coef = 1) {
  Rational e(num, den);
  e.canonicalize();
  return TS::monomial(Rational(coef), e);
}

TS random_series(std::mt19937_64& rng, bool allow_inexact) {
  int e = uniform(rng, 1, 3);
  std::map<Rational, Rational> terms;
  int start = uniform(rng, -3, 4);
  int count = uniform(rng, 1, 5);
  for (int i = 0; i < count; ++i) {
    int k = start + (i == 0 ? 0 : uniform(rng, 1, 8));
    Rational exp(k, e);
    exp.canonicalize();
    int c = uniform(rng, -4, 4);
    terms[exp] = Rational(i == 0 && c == 0 ? 1 : c);
  }
  std::optional<Rational> order;
  if (allow_inexact && uniform(rng, 0, 1) == 1) order = Rational(start + 10, e);
  return TS::from_terms(e, terms, order);
}

Filling horizontal() { return Filling(SkewShape(Partition{2, 2}), {{1, 1}, {2, 2}}); }
Filling vertical() { return Filling(SkewShape(Partition{2, 2}), {{1, 2}, {1, 2}}); }

}  // namespace

TEST_CASE("series arithmetic examples") {
  TS u = u_pow(1);
  CHECK((u + u_pow(2)) * u == u_pow(2) + u_pow(3));
  TS q = (TS(1) + u) / (TS(1) - u);
  CHECK(q.coefficient(0) == 1);
  for (int k = 1; k < kDefaultTruncationOrder; ++k) CHECK(q.coefficient(k) == 2);
  CHECK_ERROR(ErrorKind::InsufficientPrecision, q.coefficient(kDefaultTruncationOrder));
  TS half = u_pow(1, 2) + u;
  CHECK(half.val() == Rational(1, 2));
  CHECK(half.lt() == u_pow(1, 2));
  CHECK(half.ramification() == 2);
  CHECK_ERROR(ErrorKind::DivideByZeroSeries, TS(1) / TS(0));
  CHECK_ERROR(ErrorKind::DivideByZeroSeries, TS(0).val());
  CHECK_ERROR(ErrorKind::Malformed, TS::from_terms(2, {{Rational(1, 3), Rational(1)}}, std::nullopt));
  // Exact monomials invert exactly.
  CHECK(inverse(u_pow(3, 2, 2)) == TS::monomial(Rational(1, 2), Rational(-3, 2)));
  // O(u^5) absorbs anything at or above its order.
  TS fuzzy = TS(1) + TS::big_o(5);
  CHECK((fuzzy + u_pow(7)) == fuzzy);
  CHECK(fuzzy.agrees_with(TS(1) + u_pow(6)));
  CHECK_FALSE(fuzzy.agrees_with(TS(1) + u_pow(4)));
  CHECK((fuzzy * u).order() == Rational(6));
}

TEST_CASE("square roots") {
  TS x = TS(1) + u_pow(1, 1, 14) + u_pow(2);
  TS s = sqrt_series(x);
  CHECK(s.coefficient(0) == 1);
  CHECK(s.coefficient(1) == 7);
  CHECK(s.coefficient(2) == -24);
  CHECK((s * s).agrees_with(x));
  CHECK(sqrt_series(u_pow(2)) == u_pow(1));
  CHECK(sqrt_series(TS(4)) == TS(2));
  CHECK(sqrt_series(u_pow(1)) == u_pow(1, 2));
  CHECK_ERROR(ErrorKind::LeadingCoefficientNotSquare, sqrt_series(TS(2) + u_pow(1)));
  CHECK_ERROR(ErrorKind::LeadingCoefficientNotSquare, sqrt_series(TS(-1)));
}

TEST_CASE("val and LT are multiplicative") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    TS x = random_series(rng, true), y = random_series(rng, true);
    TS xy = x * y;
    CHECK(xy.val() == x.val() + y.val());
    CHECK(xy.lc() == x.lc() * y.lc());
    CHECK(xy.lt() == x.lt() * y.lt());
    // val of a sum is at least the minimum.
    TS sum = x + y;
    if (!sum.zero()) CHECK(sum.val() >= std::min(x.val(), y.val()));
    // Division undoes multiplication on the common range.
    CHECK((xy / y).agrees_with(x));
  }
}

TEST_CASE("square roots square back") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    TS base = random_series(rng, true);
    TS x = base * base;
    TS s = sqrt_series(x);
    CHECK((s * s).agrees_with(x));
    CHECK(s.val() == base.val());
    CHECK(abs(s.lc()) == abs(base.lc()));
  }
}

TEST_CASE("tableau extraction from valuations") {
  auto points = ribbon_from_fixed_fibre_gr24(u_pow(1), TS(1));
  REQUIRE(points.size() == 2);
  // The + branch: a = 1/3 + 4/3 u - ...; the − branch: a = −u + 4u² − ...
  CHECK(points[0].basis[0][0].coefficient(0) == Rational(1, 3));
  CHECK(points[0].basis[0][0].coefficient(1) == Rational(4, 3));
  CHECK(points[1].basis[0][0].val() == 1);
  CHECK(points[1].basis[0][0].coefficient(1) == -1);
  CHECK(points[1].basis[0][0].coefficient(2) == 4);
  CHECK(points[0].tableau.labels == horizontal());
  CHECK(points[1].tableau.labels == vertical());
  for (const auto& pt : points) CHECK(pt.leading_terms_ok);

  RootValuationProfile profile{{Rational(1, 2), Rational(1, 2), 0, 0}};
  CHECK(profile.boundaries() == std::vector<int>{2, 4});
  SkewShape full(Partition{2, 2});
  CHECK(tableau_from_valuations(points[0].plucker, full, profile) == horizontal());

  // Constant profile: one block.
  RootValuationProfile flat{{0, 0, 0, 0}};
  CHECK(flat.boundaries() == std::vector<int>{4});
  CHECK(tableau_from_valuations(points[0].plucker, full, flat) ==
        Filling(full, {{1, 1}, {1, 1}}));

  // Projectivity: scaling every coordinate by one nonzero series changes nothing.
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    TS scale = random_series(rng, false);
    for (const auto& pt : points) {
      PluckerVector<TS> scaled = pt.plucker;
      for (TS& v : scaled.values) v = v * scale;
      CHECK(tableau_from_valuations(scaled, full, profile) == pt.tableau.labels);
    }
  }

  CHECK_ERROR(ErrorKind::SizeMismatch, tableau_from_valuations(points[0].plucker, full, {{0, 0}}));
  CHECK_ERROR(ErrorKind::Malformed, tableau_from_valuations(points[0].plucker, full, {{0, 0, 1, 1}}));
  // Equal valuations at size 2 would need p_(2) and p_(1,1) to tie; force it.
  PluckerVector<TS> tied = points[0].plucker;
  for (std::size_t i = 0; i < tied.index.size(); ++i) {
    if (tied.index[i].size() == 2) tied.values[i] = TS(1);
  }
  CHECK_ERROR(ErrorKind::NoUniqueMinimum, tableau_from_valuations(tied, full, profile));
}

TEST_CASE("leading-term law by hand on the + branch") {
  auto points = ribbon_from_fixed_fibre_gr24(u_pow(1), TS(1));
  const auto& p = points[0].plucker;
  Rational q22(q_constant(Partition{2, 2}, 2));
  Rational q2(q_constant(Partition{2}, 2));
  Rational q0(q_constant(Partition{}, 2));
  // Normalised so p_(2,2) = be = 1.
  CHECK(p.at(Partition{2, 2}) == TS(1));
  Rational r0 = q22 / q0, r2 = q22 / q2;
  CHECK(p.at(Partition{}).lt() == TS::monomial(r0, 1));
  CHECK(p.at(Partition{2}).lt() == TS::monomial(r2, 0));
  CHECK(p.at(Partition{1, 1}).val() > 0);
}

TEST_CASE("fibre extraction is a bijection onto the domino tableaux") {
  std::vector<std::pair<TS, TS>> inputs{{u_pow(1), TS(1)},
                                        {u_pow(2), u_pow(1)},
                                        {u_pow(1) + u_pow(2), TS(2) - u_pow(1)},
                                        {u_pow(3, 1, 5), TS(-1)},
                                        {u_pow(1, 2), TS(3)}};
  std::set<std::string> expected{horizontal().str(), vertical().str()};
  for (const auto& [h1, h2] : inputs) {
    auto points = ribbon_from_fixed_fibre_gr24(h1, h2);
    std::multiset<std::string> got;
    for (const auto& pt : points) {
      got.insert(pt.tableau.labels.str());
      CHECK(pt.leading_terms_ok);
      // Wronskian of the point is (z² + h1)(z² + h2) up to the order we hold.
      const auto& m = pt.basis;
      // For span{a + z², cz + z³}: Wr = z⁴ + (3a − c) z² + ac.
      TS a = m[0][0], c = m[1][1];
      CHECK((TS(3) * a - c).agrees_with(h1 + h2));
      CHECK((a * c).agrees_with(h1 * h2));
    }
    CHECK(got == std::multiset<std::string>(expected.begin(), expected.end()));
  }
  CHECK_ERROR(ErrorKind::NonDistinctValuations, ribbon_from_fixed_fibre_gr24(TS(1), TS(2)));
  CHECK_ERROR(ErrorKind::NonDistinctValuations, ribbon_from_fixed_fibre_gr24(TS(1), u_pow(1)));
}
