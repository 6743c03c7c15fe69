#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ribbonsieve/abacus.hpp"
#include "ribbonsieve/partitions.hpp"

namespace ribbonsieve {

using Complex = std::complex<double>;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }

// Dense polynomial in z, ascending coefficients, trailing zeros trimmed.
template <class S>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<S> coefficients) : c_(std::move(coefficients)) { trim(); }
  // Constant polynomial; lets Poly<S> serve as a determinant ring.
  explicit Poly(int constant) {
    if (constant != 0) c_.push_back(S(constant));
  }
  static Poly monomial(int k, S coefficient = S(1)) {
    std::vector<S> c(k + 1, S(0));
    c[k] = std::move(coefficient);
    return Poly(std::move(c));
  }

  const std::vector<S>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  S coefficient(int k) const { return k >= 0 && k <= degree() ? c_[k] : S(0); }
  // Lowest power with a nonzero coefficient; -1 for the zero polynomial.
  int mindeg() const {
    for (int k = 0; k <= degree(); ++k) {
      if (!is_zero(c_[k])) return k;
    }
    return -1;
  }

  Poly derivative() const {
    std::vector<S> c;
    for (int k = 1; k <= degree(); ++k) c.push_back(c_[k] * S(k));
    return Poly(std::move(c));
  }

  Poly operator+(const Poly& o) const {
    std::vector<S> c(std::max(c_.size(), o.c_.size()), S(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c[i] + c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] = c[i] + o.c_[i];
    return Poly(std::move(c));
  }
  Poly operator-(const Poly& o) const { return *this + o.scaled(S(-1)); }
  Poly operator*(const Poly& o) const {
    if (zero() || o.zero()) return Poly();
    std::vector<S> c(c_.size() + o.c_.size() - 1, S(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * o.c_[j];
    }
    return Poly(std::move(c));
  }
  Poly scaled(const S& s) const {
    std::vector<S> c = c_;
    for (S& x : c) x = x * s;
    return Poly(std::move(c));
  }
  bool operator==(const Poly& o) const { return c_ == o.c_; }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<S> c_;
};

template <class S>
using Matrix = std::vector<std::vector<S>>;

// Laplace expansion; valid over any commutative ring, intended for d <= 6.
template <class S>
S determinant(const Matrix<S>& m) {
  const std::size_t n = m.size();
  if (n == 0) return S(1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  S total(0);
  for (std::size_t col = 0; col < n; ++col) {
    if (is_zero(m[0][col])) continue;
    Matrix<S> minor(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      minor[i - 1].reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != col) minor[i - 1].push_back(m[i][j]);
      }
    }
    S term = m[0][col] * determinant(minor);
    total = col % 2 == 0 ? S(total + term) : S(total - term);
  }
  return total;
}

template <class S>
bool is_zero(const Poly<S>& p) {
  return p.zero();
}

template <class S>
struct PluckerVector {
  int d = 0;
  int n = 0;
  std::vector<Partition> index;  // Λ in interval order
  std::vector<S> values;

  const S& at(const Partition& lambda) const {
    for (std::size_t i = 0; i < index.size(); ++i) {
      if (index[i] == lambda) return values[i];
    }
    throw Error(ErrorKind::ShapeOverflow, lambda.str() + " is not in the rectangle");
  }
};

template <class S>
Matrix<S> basis_matrix(const std::vector<Poly<S>>& basis, int n) {
  Matrix<S> a(basis.size(), std::vector<S>(n, S(0)));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].degree() >= n) throw Error(ErrorKind::DegreeOverflow, "basis degree must be < n");
    for (int j = 0; j <= basis[i].degree(); ++j) a[i][j] = basis[i].coefficient(j);
  }
  return a;
}

template <class S>
std::vector<Poly<S>> basis_polys(const Matrix<S>& a) {
  std::vector<Poly<S>> out;
  for (const auto& row : a) out.emplace_back(row);
  return out;
}

template <class S>
Poly<S> wronskian_det(const std::vector<Poly<S>>& basis) {
  const std::size_t d = basis.size();
  Matrix<Poly<S>> w(d, std::vector<Poly<S>>(d));
  for (std::size_t i = 0; i < d; ++i) {
    Poly<S> f = basis[i];
    for (std::size_t k = 0; k < d; ++k) {
      w[k][i] = f;
      f = f.derivative();
    }
  }
  Poly<S> result = determinant(w);
  if (result.zero()) throw Error(ErrorKind::DependentBasis, "Wronskian vanishes identically");
  return result;
}

template <class S>
PluckerVector<S> plucker_from_basis(const Matrix<S>& a) {
  PluckerVector<S> p;
  p.d = static_cast<int>(a.size());
  p.n = p.d == 0 ? 0 : static_cast<int>(a[0].size());
  AmbientRectangle rect = AmbientRectangle::make(p.d, p.n);
  p.index = partitions_in_rect(rect);
  bool any = false;
  for (const Partition& lambda : p.index) {
    std::vector<int> cols = bead_positions(lambda, p.d);
    Matrix<S> minor(p.d, std::vector<S>(p.d, S(0)));
    for (int i = 0; i < p.d; ++i) {
      for (int j = 0; j < p.d; ++j) minor[i][j] = a[i][cols[j]];
    }
    p.values.push_back(determinant(minor));
    any = any || !is_zero(p.values.back());
  }
  if (!any) throw Error(ErrorKind::RankDeficient, "all maximal minors vanish");
  return p;
}

template <class S>
Poly<S> wronskian_from_plucker(const PluckerVector<S>& p) {
  std::vector<S> c(p.d * (p.n - p.d) + 1, S(0));
  for (std::size_t i = 0; i < p.index.size(); ++i) {
    const Partition& lambda = p.index[i];
    c[lambda.size()] = c[lambda.size()] + S(q_constant(lambda, p.d).get_si()) * p.values[i];
  }
  return Poly<S>(std::move(c));
}

// Exact test: a * b[k] == b * a[k] at the first nonzero index k of a, and both zero or nonzero.
inline bool proportional(const Poly<Rational>& a, const Poly<Rational>& b) {
  if (a.zero() || b.zero()) return a.zero() && b.zero();
  int k = a.mindeg();
  return a.scaled(b.coefficient(k)) == b.scaled(a.coefficient(k));
}

// Relative tolerance test on the coefficient vectors.
bool proportional(const Poly<Complex>& a, const Poly<Complex>& b, double tol = 1e-9);

template <class S>
struct Mobius {
  S p11, p12, p21, p22;

  static Mobius identity() { return {S(1), S(0), S(0), S(1)}; }
  static Mobius swap() { return {S(0), S(1), S(1), S(0)}; }
  S det() const { return p11 * p22 - p12 * p21; }
  Mobius operator*(const Mobius& o) const {
    return {p11 * o.p11 + p12 * o.p21, p11 * o.p12 + p12 * o.p22, p21 * o.p11 + p22 * o.p21,
            p21 * o.p12 + p22 * o.p22};
  }
};

// (φ21 z + φ11)^m f((φ22 z + φ12)/(φ21 z + φ11)).
template <class S>
Poly<S> mobius_act_poly(const Mobius<S>& phi, const Poly<S>& f, int m) {
  if (f.degree() > m) throw Error(ErrorKind::DegreeOverflow, "polynomial degree exceeds m");
  if (is_zero(phi.det())) throw Error(ErrorKind::BadParameter, "Möbius matrix is singular");
  Poly<S> num(std::vector<S>{phi.p12, phi.p22});
  Poly<S> den(std::vector<S>{phi.p11, phi.p21});
  std::vector<Poly<S>> num_pow{Poly<S>::monomial(0)};
  std::vector<Poly<S>> den_pow{Poly<S>::monomial(0)};
  for (int k = 1; k <= m; ++k) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  Poly<S> out;
  for (int k = 0; k <= f.degree(); ++k) {
    if (is_zero(f.coefficient(k))) continue;
    out = out + (num_pow[k] * den_pow[m - k]).scaled(f.coefficient(k));
  }
  return out;
}

// Wr(φ·basis) ∝ φ·Wr(basis), basis elements acted on with m = n−1 and the Wronskian with m = N.
bool equivariance_check(const Mobius<Rational>& phi, const std::vector<Poly<Rational>>& basis, int n);

int rank(Matrix<Rational> a);

std::vector<int> spec_vector(const Matrix<Rational>& a, int r);
Partition core_of_spec(const std::vector<int>& s, int d, int n, int r);
bool fixed_support_check(const Matrix<Rational>& a, int r);
bool segre_check(const Matrix<Rational>& a, int r);
// Rows spanning span{z^j : j ≡ k mod r} blocks; each row lives in a single M_k, rows sorted by k.
bool rows_in_blocks(const Matrix<Rational>& a, int r);

template <class S>
std::pair<Partition, Partition> richardson_of_point(const PluckerVector<S>& p) {
  std::vector<Partition> support;
  for (std::size_t i = 0; i < p.index.size(); ++i) {
    if (!is_zero(p.values[i])) support.push_back(p.index[i]);
  }
  if (support.empty()) throw Error(ErrorKind::IllPosed, "zero Plücker vector");
  auto extreme = [&](bool maximal) {
    std::vector<Partition> found;
    for (const Partition& a : support) {
      bool dominated = false;
      for (const Partition& b : support) {
        if (a != b && (maximal ? contains(a, b) : contains(b, a))) dominated = true;
      }
      if (!dominated) found.push_back(a);
    }
    if (found.size() != 1) {
      throw Error(ErrorKind::IllPosed, maximal ? "maximal support partition is not unique"
                                               : "minimal support partition is not unique");
    }
    return found.front();
  };
  return {extreme(true), extreme(false)};
}

template <class S>
std::pair<int, int> compatible_shape(const Poly<S>& h, const AmbientRectangle& rect) {
  if (h.zero()) throw Error(ErrorKind::ZeroPolynomial, "h is zero");
  if (h.degree() > rect.N()) throw Error(ErrorKind::DegreeOverflow, "deg h exceeds N");
  return {h.degree(), h.mindeg()};
}

struct CrFixedPolyForm {
  int m = 0;
  int r = 1;
  int ell = 0;
  // h = z^m · g(z^r) with g(w) = lead · Π (w + h_i).
  Poly<Rational> g;
  Rational lead;
  std::vector<Complex> h;  // numerical roots, sorted by (real, imag)
};
CrFixedPolyForm parse_cr_fixed(const Poly<Rational>& h, int r);

// Roots of a polynomial with complex coefficients (Durand–Kerner, polished by Newton steps).
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coefficients);

// Solutions of Wr = (z²+h1)(z²+h2) on span{a+bz², cz+ez³} normalised to b = e = 1.
std::vector<Matrix<Complex>> fixed_fibre_gr24(Complex h1, Complex h2);
// Exact variant; empty optional when the discriminant is not a rational square.
std::optional<std::vector<Matrix<Rational>>> fixed_fibre_gr24_exact(const Rational& h1, const Rational& h2);

}  // namespace ribbonsieve
