#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ribbonsieve/tableaux.hpp"

namespace ribbonsieve {

class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Integer> coefficients);
  static QPolynomial monomial(int power, Integer coefficient = 1);
  // [n]_q = 1 + q + ... + q^{n-1}
  static QPolynomial q_integer(int n);

  const std::vector<Integer>& coefficients() const { return c_; }
  Integer coefficient(int power) const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Integer evaluate(const Integer& q) const;
  // Throws InternalNondivisibility when the remainder is nonzero.
  QPolynomial divide_exact(const QPolynomial& divisor) const;
  std::string str() const;

  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator-(const QPolynomial& o) const;
  QPolynomial operator*(const QPolynomial& o) const;
  QPolynomial& operator+=(const QPolynomial& o) { return *this = *this + o; }
  bool operator==(const QPolynomial&) const = default;

 private:
  void trim();
  std::vector<Integer> c_;
};

QPolynomial cyclotomic_polynomial(int r);

// Element of Q(ζ_r) stored as its residue modulo the r-th cyclotomic polynomial.
class CyclotomicValue {
 public:
  CyclotomicValue(int r, std::vector<Rational> residue);
  static CyclotomicValue reduce(const QPolynomial& p, int r);

  int r() const { return r_; }
  const std::vector<Rational>& residue() const { return residue_; }
  bool is_rational() const;
  // Throws Malformed unless rational.
  Rational rational() const;
  std::string str() const;

  CyclotomicValue operator+(const CyclotomicValue& o) const;
  CyclotomicValue operator*(const CyclotomicValue& o) const;
  bool operator==(const CyclotomicValue&) const = default;

 private:
  int r_;
  std::vector<Rational> residue_;
};

int charge(const StandardTableau& t);
int charge_skew(const StandardTableau& t);
QPolynomial kostka_foulkes_column(const Partition& nu);
QPolynomial q_hook_kostka_rect(const AmbientRectangle& rect);
Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);
// Charge of the rectification summed over SYT(shape), cross-checked against the LR expansion.
QPolynomial skew_kostka_foulkes(const SkewShape& shape);
QPolynomial skew_kostka_foulkes_by_charge(const SkewShape& shape);
QPolynomial skew_kostka_foulkes_by_lr(const SkewShape& shape);
CyclotomicValue eval_at_root(const QPolynomial& p, int r);

struct LltReport {
  SkewShape shape;
  int r = 1;
  Integer ribbon_count;
  std::optional<Rational> kf_value;  // empty when the evaluation is irrational
  int sign = 0;                      // sign of kf_value; 0 when it vanishes
  bool ok = false;
};
LltReport llt_verify(const SkewShape& shape, int r);

}  // namespace ribbonsieve
