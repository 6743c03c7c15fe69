#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ribbonsieve/ribbon.hpp"
#include "ribbonsieve/wronski.hpp"

namespace ribbonsieve {

constexpr int kDefaultTruncationOrder = 12;

// Σ c_q u^q over exponents q in (1/e)Z, known below `order` (absent order: exact).
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(long constant);  // NOLINT: exact constants convert implicitly
  TruncatedSeries(const Rational& constant);  // NOLINT
  static TruncatedSeries monomial(const Rational& coefficient, const Rational& exponent);
  // Throws Malformed if an exponent is not a multiple of 1/e.
  static TruncatedSeries from_terms(int e, const std::map<Rational, Rational>& terms,
                                    std::optional<Rational> order);
  static TruncatedSeries big_o(const Rational& order);

  int ramification() const { return e_; }
  const std::optional<Rational>& order() const { return order_; }
  const std::map<Rational, Rational>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  bool exact() const { return !order_.has_value(); }
  // Throws DivideByZeroSeries for a series with no known nonzero term.
  Rational val() const;
  Rational lc() const;
  TruncatedSeries lt() const;
  Rational coefficient(const Rational& exponent) const;
  TruncatedSeries truncated(const Rational& order) const;
  std::string str() const;

  TruncatedSeries operator-() const;
  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const { return *this + (-o); }
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator/(const TruncatedSeries& o) const;
  // Equal coefficients below the smaller of the two orders.
  bool agrees_with(const TruncatedSeries& o) const;
  // Mathematical equality; the ramification index is bookkeeping and is not compared.
  bool operator==(const TruncatedSeries& o) const { return terms_ == o.terms_ && order_ == o.order_; }

 private:
  void normalise();
  int e_ = 1;
  std::map<Rational, Rational> terms_;
  std::optional<Rational> order_;
};

inline bool is_zero(const TruncatedSeries& x) { return x.zero(); }

// Inverse whose absolute order is capped at `cap` when y is exact and not a monomial.
TruncatedSeries inverse(const TruncatedSeries& y, const Rational& cap = kDefaultTruncationOrder);
TruncatedSeries divide(const TruncatedSeries& x, const TruncatedSeries& y,
                       const Rational& cap = kDefaultTruncationOrder);
TruncatedSeries sqrt_series(const TruncatedSeries& x, const Rational& cap = kDefaultTruncationOrder);

// Weakly decreasing valuations of the roots a_1..a_K.
struct RootValuationProfile {
  std::vector<Rational> vals;
  // Indices k (1-based) with vals[k-1] > vals[k], followed by K.
  std::vector<int> boundaries() const;
};

// Block labels on the shape: block i covers λ_{k_i}/λ_{k_{i-1}} along the descent boundaries.
Filling tableau_from_valuations(const PluckerVector<TruncatedSeries>& p, const SkewShape& shape,
                                const RootValuationProfile& profile);

struct FibrePoint {
  Matrix<TruncatedSeries> basis;
  PluckerVector<TruncatedSeries> plucker;
  RibbonTableau tableau;
  bool leading_terms_ok = false;
};

std::vector<FibrePoint> ribbon_from_fixed_fibre_gr24(const TruncatedSeries& h1,
                                                     const TruncatedSeries& h2,
                                                     const Rational& cap = kDefaultTruncationOrder);

}  // namespace ribbonsieve
