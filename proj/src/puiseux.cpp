#include "ribbonsieve/puiseux.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace ribbonsieve {

namespace {

int denominator_of(const Rational& q) { return static_cast<int>(q.get_den().get_si()); }

bool below(const Rational& exponent, const std::optional<Rational>& order) {
  return !order || exponent < *order;
}

std::optional<Rational> min_order(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

// Valuation of a series, with a truncated zero counting as its order and an exact zero as +∞.
std::optional<Rational> effective_val(const TruncatedSeries& x) {
  if (!x.zero()) return x.val();
  return x.order();
}

std::optional<Rational> add_opt(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

}  // namespace

TruncatedSeries::TruncatedSeries(long constant) : TruncatedSeries(Rational(constant)) {}

TruncatedSeries::TruncatedSeries(const Rational& constant) {
  if (sgn(constant) != 0) terms_.emplace(Rational(0), constant);
}

TruncatedSeries TruncatedSeries::monomial(const Rational& coefficient, const Rational& exponent) {
  TruncatedSeries s;
  s.e_ = denominator_of(exponent);
  if (sgn(coefficient) != 0) s.terms_.emplace(exponent, coefficient);
  return s;
}

TruncatedSeries TruncatedSeries::from_terms(int e, const std::map<Rational, Rational>& terms,
                                            std::optional<Rational> order) {
  if (e < 1) throw Error(ErrorKind::Malformed, "ramification must be positive");
  TruncatedSeries s;
  s.e_ = e;
  s.order_ = std::move(order);
  for (const auto& [q, c] : terms) {
    if (e % denominator_of(q) != 0) {
      throw Error(ErrorKind::Malformed, "exponent " + to_string(q) + " is not a multiple of 1/e");
    }
    if (below(q, s.order_) && sgn(c) != 0) s.terms_.emplace(q, c);
  }
  return s;
}

TruncatedSeries TruncatedSeries::big_o(const Rational& order) {
  TruncatedSeries s;
  s.order_ = order;
  s.e_ = denominator_of(order);
  return s;
}

void TruncatedSeries::normalise() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (sgn(it->second) == 0 || !below(it->first, order_)) {
      it = terms_.erase(it);
    } else {
      e_ = std::lcm(e_, denominator_of(it->first));
      ++it;
    }
  }
}

Rational TruncatedSeries::val() const {
  if (terms_.empty()) throw Error(ErrorKind::DivideByZeroSeries, "series has no nonzero term");
  return terms_.begin()->first;
}

Rational TruncatedSeries::lc() const {
  if (terms_.empty()) throw Error(ErrorKind::DivideByZeroSeries, "series has no nonzero term");
  return terms_.begin()->second;
}

TruncatedSeries TruncatedSeries::lt() const { return monomial(lc(), val()); }

Rational TruncatedSeries::coefficient(const Rational& exponent) const {
  if (!below(exponent, order_)) {
    throw Error(ErrorKind::InsufficientPrecision, "coefficient of u^" + to_string(exponent) +
                                                      " lies beyond the truncation order");
  }
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

TruncatedSeries TruncatedSeries::truncated(const Rational& order) const {
  TruncatedSeries s = *this;
  s.order_ = min_order(order_, order);
  s.normalise();
  return s;
}

std::string TruncatedSeries::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [q, c] : terms_) {
    out << (first ? "" : " + ") << to_string(c);
    if (q != 0) out << "*u^" << to_string(q);
    first = false;
  }
  if (order_) out << (first ? "" : " + ") << "O(u^" << to_string(*order_) << ")";
  if (first && !order_) out << "0";
  return out.str();
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries s = *this;
  for (auto& [q, c] : s.terms_) c = -c;
  return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  TruncatedSeries s;
  s.e_ = std::lcm(e_, o.e_);
  s.order_ = min_order(order_, o.order_);
  s.terms_ = terms_;
  for (const auto& [q, c] : o.terms_) s.terms_[q] += c;
  s.normalise();
  return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  TruncatedSeries s;
  s.e_ = std::lcm(e_, o.e_);
  s.order_ = min_order(add_opt(order_, effective_val(o)), add_opt(o.order_, effective_val(*this)));
  for (const auto& [q1, c1] : terms_) {
    for (const auto& [q2, c2] : o.terms_) {
      Rational q = q1 + q2;
      if (below(q, s.order_)) s.terms_[q] += c1 * c2;
    }
  }
  s.normalise();
  return s;
}

TruncatedSeries TruncatedSeries::operator/(const TruncatedSeries& o) const { return divide(*this, o); }

bool TruncatedSeries::agrees_with(const TruncatedSeries& o) const {
  std::optional<Rational> order = min_order(order_, o.order_);
  std::map<Rational, Rational> a, b;
  for (const auto& [q, c] : terms_) {
    if (below(q, order)) a.emplace(q, c);
  }
  for (const auto& [q, c] : o.terms_) {
    if (below(q, order)) b.emplace(q, c);
  }
  return a == b;
}

TruncatedSeries inverse(const TruncatedSeries& y, const Rational& cap) {
  if (y.zero()) throw Error(ErrorKind::DivideByZeroSeries, "division by a zero series");
  Rational v = y.val();
  Rational c = y.lc();
  if (y.exact() && y.terms().size() == 1) return TruncatedSeries::monomial(1 / c, -v);
  // y = c u^v (1 + t) with val(t) > 0, known to relative precision rel.
  Rational rel = y.exact() ? Rational(cap + v) : Rational(*y.order() - v);
  TruncatedSeries t = (y * TruncatedSeries::monomial(1 / c, -v)).truncated(rel) - TruncatedSeries(1);
  TruncatedSeries sum(1);
  TruncatedSeries power(1);
  TruncatedSeries minus_t = -t;
  while (!power.zero()) {
    power = (power * minus_t).truncated(rel);
    sum = sum + power;
  }
  sum = sum.truncated(rel);
  return sum * TruncatedSeries::monomial(1 / c, -v);
}

TruncatedSeries divide(const TruncatedSeries& x, const TruncatedSeries& y, const Rational& cap) {
  if (y.zero()) throw Error(ErrorKind::DivideByZeroSeries, "division by a zero series");
  // Shift the inverse's cap so the quotient of exact inputs is known below u^cap.
  Rational shift = x.zero() ? Rational(0) : x.val();
  return x * inverse(y, cap - shift);
}

TruncatedSeries sqrt_series(const TruncatedSeries& x, const Rational& cap) {
  if (x.zero()) return x;
  Rational v = x.val();
  Rational c = x.lc();
  Rational root_c;
  if (!rational_sqrt(c, &root_c)) {
    throw Error(ErrorKind::LeadingCoefficientNotSquare, to_string(c) + " is not a rational square");
  }
  Rational rel = x.exact() ? Rational(cap - v / 2) : Rational(*x.order() - v);
  TruncatedSeries unit = (x * TruncatedSeries::monomial(1 / c, -v)).truncated(rel);
  // Newton: y <- (y + unit / y) / 2, doubling the number of correct terms per step.
  TruncatedSeries y(1);
  int e = unit.ramification();
  int steps = 2;
  for (Rational precision(1, e); precision < rel; precision *= 2) ++steps;
  for (int i = 0; i < steps; ++i) {
    TruncatedSeries next = ((y + divide(unit, y, rel)) * TruncatedSeries(Rational(1, 2))).truncated(rel);
    if (next == y) break;
    y = next;
  }
  if (!(y * y).truncated(rel).agrees_with(unit)) {
    throw Error(ErrorKind::InsufficientPrecision, "Newton iteration did not converge");
  }
  if (x.exact()) {
    // A terminating root of an exact input is itself exact.
    TruncatedSeries closed = TruncatedSeries::from_terms(y.ramification(), y.terms(), std::nullopt);
    if (closed * closed == x * TruncatedSeries::monomial(1 / c, -v)) y = closed;
  }
  return y * TruncatedSeries::monomial(root_c, v / 2);
}

std::vector<int> RootValuationProfile::boundaries() const {
  std::vector<int> out;
  for (std::size_t k = 1; k < vals.size(); ++k) {
    if (vals[k - 1] > vals[k]) out.push_back(static_cast<int>(k));
  }
  out.push_back(static_cast<int>(vals.size()));
  return out;
}

Filling tableau_from_valuations(const PluckerVector<TruncatedSeries>& p, const SkewShape& shape,
                                const RootValuationProfile& profile) {
  if (static_cast<int>(profile.vals.size()) != shape.size()) {
    throw Error(ErrorKind::SizeMismatch, "profile needs one valuation per box");
  }
  for (std::size_t k = 1; k < profile.vals.size(); ++k) {
    if (profile.vals[k - 1] < profile.vals[k]) {
      throw Error(ErrorKind::Malformed, "profile must be weakly decreasing");
    }
  }
  Filling labels(shape);
  Partition prev = shape.inner();
  int block = 0;
  for (int k : profile.boundaries()) {
    int target = shape.inner().size() + k;
    std::optional<Partition> best;
    std::optional<Rational> best_val;
    bool tie = false;
    for (std::size_t i = 0; i < p.index.size(); ++i) {
      if (p.index[i].size() != target || p.values[i].zero()) continue;
      Rational v = p.values[i].val();
      if (!best_val || v < *best_val) {
        best = p.index[i];
        best_val = v;
        tie = false;
      } else if (v == *best_val) {
        tie = true;
      }
    }
    if (!best || tie) {
      throw Error(ErrorKind::NoUniqueMinimum,
                  "no unique minimal valuation among coordinates of size " + std::to_string(target));
    }
    if (!contains(prev, *best) || !contains(*best, shape.outer())) {
      throw Error(ErrorKind::NoUniqueMinimum, "minimal coordinates do not form a chain in the shape");
    }
    ++block;
    for (Box b : SkewShape(*best, prev).boxes()) labels.set(b, block);
    prev = *best;
  }
  if (prev != shape.outer()) {
    throw Error(ErrorKind::NoUniqueMinimum, "chain does not end at the outer shape");
  }
  return labels;
}

std::vector<FibrePoint> ribbon_from_fixed_fibre_gr24(const TruncatedSeries& h1,
                                                     const TruncatedSeries& h2, const Rational& cap) {
  if (h1.zero() || h2.zero()) throw Error(ErrorKind::BadParameter, "h1 and h2 must be nonzero");
  if (!(h1.val() > h2.val())) {
    throw Error(ErrorKind::NonDistinctValuations, "need val(h1) > val(h2)");
  }
  TruncatedSeries s = h1 + h2;
  TruncatedSeries p = h1 * h2;
  TruncatedSeries root = sqrt_series(s * s + TruncatedSeries(12) * p, cap);
  RootValuationProfile profile{{h1.val() / 2, h1.val() / 2, h2.val() / 2, h2.val() / 2}};
  const Partition top{2, 2};
  const AmbientRectangle rect{2, 4};
  std::vector<FibrePoint> out;
  for (long sign : {1L, -1L}) {
    TruncatedSeries a = (s + TruncatedSeries(sign) * root) * TruncatedSeries(Rational(1, 6));
    TruncatedSeries c = TruncatedSeries(3) * a - s;
    Matrix<TruncatedSeries> basis{{a, 0L, 1L, 0L}, {0L, c, 0L, 1L}};
    FibrePoint point{basis, plucker_from_basis(basis), {}, false};
    point.tableau = make_ribbon_tableau(tableau_from_valuations(point.plucker, SkewShape(top), profile), 2);
    // LT(p_{λ_k}) = (q_λ / q_{λ_k}) Π_{blocks after k} LT(h_i).
    std::vector<TruncatedSeries> hs{h1, h2};
    bool ok = true;
    std::vector<int> bounds = profile.boundaries();
    for (std::size_t j = 0; j <= bounds.size(); ++j) {
      int k = j == 0 ? 0 : bounds[j - 1];
      const Partition& lambda_k = point.tableau.chain[k / 2];
      Rational ratio(q_constant(top, rect.d), q_constant(lambda_k, rect.d));
      ratio.canonicalize();
      TruncatedSeries expected(ratio);
      for (std::size_t blk = j; blk < bounds.size(); ++blk) expected = expected * hs[blk].lt();
      const TruncatedSeries& actual = point.plucker.at(lambda_k);
      ok = ok && !actual.zero() && actual.lt() == expected.lt();
    }
    point.leading_terms_ok = ok;
    out.push_back(std::move(point));
  }
  return out;
}

}  // namespace ribbonsieve
