#include "ribbonsieve/symfunc.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "ribbonsieve/ribbon.hpp"

namespace ribbonsieve {

QPolynomial::QPolynomial(std::vector<Integer> coefficients) : c_(std::move(coefficients)) { trim(); }

QPolynomial QPolynomial::monomial(int power, Integer coefficient) {
  std::vector<Integer> c(power + 1, 0);
  c[power] = std::move(coefficient);
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::q_integer(int n) { return QPolynomial(std::vector<Integer>(n, 1)); }

void QPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer QPolynomial::coefficient(int power) const {
  return power >= 0 && power <= degree() ? c_[power] : Integer(0);
}

Integer QPolynomial::evaluate(const Integer& q) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  std::vector<Integer> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
  std::vector<Integer> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Integer> c(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::divide_exact(const QPolynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::InternalNondivisibility, "division by zero");
  std::vector<Integer> rem = c_;
  int dd = divisor.degree();
  if (degree() < dd) {
    if (is_zero()) return {};
    throw Error(ErrorKind::InternalNondivisibility, str() + " / " + divisor.str());
  }
  std::vector<Integer> quot(degree() - dd + 1, 0);
  const Integer& lead = divisor.c_.back();
  for (int i = degree() - dd; i >= 0; --i) {
    Integer num = rem[i + dd];
    if (num % lead != 0) throw Error(ErrorKind::InternalNondivisibility, str() + " / " + divisor.str());
    quot[i] = num / lead;
    for (int j = 0; j <= dd; ++j) rem[i + j] -= quot[i] * divisor.c_[j];
  }
  for (const Integer& x : rem) {
    if (x != 0) throw Error(ErrorKind::InternalNondivisibility, str() + " / " + divisor.str());
  }
  return QPolynomial(std::move(quot));
}

std::string QPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    if (c_[i] == 0) continue;
    Integer a = abs(c_[i]);
    out << (c_[i] < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (a != 1 || i == 0) out << a.get_str();
    if (i >= 1) out << "q";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

QPolynomial cyclotomic_polynomial(int r) {
  if (r < 1) throw Error(ErrorKind::BadParameter, "r must be positive");
  // q^r - 1 divided by Φ_d for every proper divisor d.
  QPolynomial p = QPolynomial::monomial(r) - QPolynomial::monomial(0);
  for (int d = 1; d < r; ++d) {
    if (r % d == 0) p = p.divide_exact(cyclotomic_polynomial(d));
  }
  return p;
}

namespace {

const QPolynomial& cached_cyclotomic(int r) {
  static std::mutex lock;
  static std::map<int, QPolynomial> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(r);
  if (it == cache.end()) it = cache.emplace(r, cyclotomic_polynomial(r)).first;
  return it->second;
}

std::vector<Rational> reduce_mod(std::vector<Rational> c, int r) {
  const QPolynomial& phi = cached_cyclotomic(r);
  int deg = phi.degree();
  for (int i = static_cast<int>(c.size()) - 1; i >= deg; --i) {
    if (c[i] == 0) continue;
    Rational lead = c[i];
    for (int j = 0; j <= deg; ++j) c[i - deg + j] -= lead * Rational(phi.coefficient(j));
  }
  c.resize(deg, Rational(0));
  return c;
}

}  // namespace

CyclotomicValue::CyclotomicValue(int r, std::vector<Rational> residue)
    : r_(r), residue_(reduce_mod(std::move(residue), r)) {}

CyclotomicValue CyclotomicValue::reduce(const QPolynomial& p, int r) {
  std::vector<Rational> c;
  for (const Integer& x : p.coefficients()) c.emplace_back(x);
  return CyclotomicValue(r, std::move(c));
}

bool CyclotomicValue::is_rational() const {
  for (std::size_t i = 1; i < residue_.size(); ++i) {
    if (residue_[i] != 0) return false;
  }
  return true;
}

Rational CyclotomicValue::rational() const {
  if (!is_rational()) throw Error(ErrorKind::Malformed, "value is not rational: " + str());
  return residue_.empty() ? Rational(0) : residue_[0];
}

std::string CyclotomicValue::str() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < residue_.size(); ++i) {
    if (residue_[i] == 0) continue;
    out << (first ? "" : " + ") << to_string(residue_[i]);
    if (i >= 1) out << "*z";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return first ? "0" : out.str();
}

CyclotomicValue CyclotomicValue::operator+(const CyclotomicValue& o) const {
  if (r_ != o.r_) throw Error(ErrorKind::BadParameter, "mixed cyclotomic fields");
  std::vector<Rational> c = residue_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.residue_[i];
  return CyclotomicValue(r_, std::move(c));
}

CyclotomicValue CyclotomicValue::operator*(const CyclotomicValue& o) const {
  if (r_ != o.r_) throw Error(ErrorKind::BadParameter, "mixed cyclotomic fields");
  std::vector<Rational> c(residue_.size() + o.residue_.size(), Rational(0));
  for (std::size_t i = 0; i < residue_.size(); ++i) {
    for (std::size_t j = 0; j < o.residue_.size(); ++j) c[i + j] += residue_[i] * o.residue_[j];
  }
  return CyclotomicValue(r_, std::move(c));
}

int charge(const StandardTableau& t) {
  if (!t.shape().is_straight()) {
    throw Error(ErrorKind::InvalidShape, "charge needs a straight shape; use charge_skew");
  }
  int m = t.size();
  std::vector<int> pos(m + 1);
  int next = 0;
  const auto& grid = t.filling().grid();
  for (int i = static_cast<int>(grid.size()) - 1; i >= 0; --i) {
    for (int v : grid[i]) pos[v] = next++;
  }
  int index = 0;
  int total = 0;
  for (int k = 1; k < m; ++k) {
    if (pos[k + 1] < pos[k]) ++index;
    total += index;
  }
  return total;
}

int charge_skew(const StandardTableau& t) {
  return t.shape().is_straight() ? charge(t) : charge(rectify(t));
}

QPolynomial kostka_foulkes_column(const Partition& nu) {
  QPolynomial sum;
  for (const StandardTableau& t : enumerate_syt(SkewShape(nu))) sum += QPolynomial::monomial(charge(t));
  return sum;
}

QPolynomial q_hook_kostka_rect(const AmbientRectangle& rect) {
  int N = rect.N();
  QPolynomial num = QPolynomial::monomial(N * (rect.d - 1) / 2);
  for (int k = 1; k <= N; ++k) num = num * QPolynomial::q_integer(k);
  QPolynomial den = QPolynomial::monomial(0);
  for (int h : hook_lengths(rect.full())) den = den * QPolynomial::q_integer(h);
  return num.divide_exact(den);
}

namespace {

// Fills λ/μ in reverse reading order (rows top to bottom, right to left), keeping rows weakly
// increasing, columns strictly increasing and the reading word a lattice word.
struct LrSearch {
  const Partition& lambda;
  const Partition& mu;
  const Partition& nu;
  std::vector<std::vector<int>> grid;
  std::vector<int> used;
  std::vector<Box> order;
  Integer count = 0;

  LrSearch(const Partition& l, const Partition& m, const Partition& n)
      : lambda(l), mu(m), nu(n), grid(l.length()), used(n.length() + 1, 0) {
    for (int i = 0; i < l.length(); ++i) {
      grid[i].assign(l.part(i), 0);
      for (int j = l.part(i) - 1; j >= m.part(i); --j) order.push_back({i, j});
    }
  }

  void run(std::size_t idx) {
    if (idx == order.size()) {
      ++count;
      return;
    }
    Box b = order[idx];
    int upper = nu.length();
    if (b.col + 1 < lambda.part(b.row)) upper = std::min(upper, grid[b.row][b.col + 1]);
    int lower = 1;
    if (b.row > 0 && b.col >= mu.part(b.row - 1)) lower = grid[b.row - 1][b.col] + 1;
    for (int v = lower; v <= upper; ++v) {
      if (used[v] >= nu.part(v - 1)) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;
      grid[b.row][b.col] = v;
      ++used[v];
      run(idx + 1);
      --used[v];
    }
    grid[b.row][b.col] = 0;
  }
};

}  // namespace

Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (mu.size() + nu.size() != lambda.size() || !contains(mu, lambda) || !contains(nu, lambda)) {
    return 0;
  }
  LrSearch search(lambda, mu, nu);
  search.run(0);
  return search.count;
}

QPolynomial skew_kostka_foulkes_by_charge(const SkewShape& shape) {
  QPolynomial sum;
  for (const StandardTableau& t : enumerate_syt(shape)) sum += QPolynomial::monomial(charge_skew(t));
  return sum;
}

QPolynomial skew_kostka_foulkes_by_lr(const SkewShape& shape) {
  QPolynomial sum;
  for (const Partition& nu : partitions_of(shape.size())) {
    Integer c = lr_coefficient(shape.outer(), shape.inner(), nu);
    if (c != 0) sum += QPolynomial::monomial(0, c) * kostka_foulkes_column(nu);
  }
  return sum;
}

QPolynomial skew_kostka_foulkes(const SkewShape& shape) {
  QPolynomial by_charge = skew_kostka_foulkes_by_charge(shape);
  QPolynomial by_lr = skew_kostka_foulkes_by_lr(shape);
  if (by_charge != by_lr) {
    throw Error(ErrorKind::InternalMismatch,
                "charge sum " + by_charge.str() + " differs from LR expansion " + by_lr.str());
  }
  return by_charge;
}

CyclotomicValue eval_at_root(const QPolynomial& p, int r) {
  if (r < 1) throw Error(ErrorKind::BadParameter, "r must be positive");
  return CyclotomicValue::reduce(p, r);
}

LltReport llt_verify(const SkewShape& shape, int r) {
  if (r < 1 || shape.size() % r != 0) {
    throw Error(ErrorKind::NondivisibleSize, "r must divide the shape size");
  }
  LltReport report{shape, r, count_srt(shape, r), std::nullopt, 0, false};
  CyclotomicValue value = eval_at_root(skew_kostka_foulkes(shape), r);
  if (value.is_rational()) {
    report.kf_value = value.rational();
    report.sign = sgn(*report.kf_value);
    report.ok = abs(*report.kf_value) == Rational(report.ribbon_count);
  }
  const Partition& outer = shape.outer();
  bool rectangle = shape.is_straight() && !outer.empty() &&
                   outer.part(outer.length() - 1) == outer.part(0);
  if (report.ok && rectangle && r == 2 && report.sign != 0) {
    int d = outer.length();
    int N = outer.size();
    int expected = (N * (d - 1) / 2) % 2 == 0 ? 1 : -1;
    report.ok = report.sign == expected;
  }
  return report;
}

}  // namespace ribbonsieve
