#include "ribbonsieve/wronski.hpp"

#include <algorithm>
#include <cmath>

namespace ribbonsieve {

bool proportional(const Poly<Complex>& a, const Poly<Complex>& b, double tol) {
  if (a.zero() || b.zero()) return a.zero() && b.zero();
  // Normalise both by their largest coefficient, then compare.
  auto normalised = [](const Poly<Complex>& p) {
    Complex pivot(0.0, 0.0);
    for (const Complex& c : p.coefficients()) {
      if (std::abs(c) > std::abs(pivot)) pivot = c;
    }
    std::vector<Complex> out;
    for (const Complex& c : p.coefficients()) out.push_back(c / pivot);
    return std::make_pair(out, pivot);
  };
  auto [na, pa] = normalised(a);
  auto [nb, pb] = normalised(b);
  std::size_t len = std::max(na.size(), nb.size());
  na.resize(len, Complex(0.0, 0.0));
  nb.resize(len, Complex(0.0, 0.0));
  // Align phases using the coefficient where a is largest.
  std::size_t k = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (std::abs(na[i]) > std::abs(na[k])) k = i;
  }
  if (std::abs(nb[k]) < tol) return false;
  Complex ratio = na[k] / nb[k];
  for (std::size_t i = 0; i < len; ++i) {
    if (std::abs(na[i] - ratio * nb[i]) > tol) return false;
  }
  return true;
}

bool equivariance_check(const Mobius<Rational>& phi, const std::vector<Poly<Rational>>& basis, int n) {
  int d = static_cast<int>(basis.size());
  std::vector<Poly<Rational>> acted;
  for (const auto& f : basis) acted.push_back(mobius_act_poly(phi, f, n - 1));
  Poly<Rational> lhs = wronskian_det(acted);
  Poly<Rational> rhs = mobius_act_poly(phi, wronskian_det(basis), d * (n - d));
  return proportional(lhs, rhs);
}

int rank(Matrix<Rational> a) {
  int rows = static_cast<int>(a.size());
  int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  int rk = 0;
  for (int col = 0; col < cols && rk < rows; ++col) {
    int pivot = -1;
    for (int i = rk; i < rows; ++i) {
      if (sgn(a[i][col]) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[rk], a[pivot]);
    for (int i = rk + 1; i < rows; ++i) {
      if (sgn(a[i][col]) == 0) continue;
      Rational f = a[i][col] / a[rk][col];
      for (int j = col; j < cols; ++j) a[i][j] -= f * a[rk][j];
    }
    ++rk;
  }
  return rk;
}

namespace {

int runner_size(int n, int k, int r) { return (n - k + r - 1) / r; }

}  // namespace

std::vector<int> spec_vector(const Matrix<Rational>& a, int r) {
  if (r < 1) throw Error(ErrorKind::BadParameter, "r must be positive");
  int d = static_cast<int>(a.size());
  int n = d == 0 ? 0 : static_cast<int>(a[0].size());
  if (rank(a) != d) throw Error(ErrorKind::RankDeficient, "basis rows are dependent");
  std::vector<int> s(r, 0);
  int total = 0;
  for (int k = 0; k < r; ++k) {
    Matrix<Rational> stacked = a;
    int m_k = 0;
    for (int j = k; j < n; j += r) {
      std::vector<Rational> unit(n, Rational(0));
      unit[j] = 1;
      stacked.push_back(std::move(unit));
      ++m_k;
    }
    s[k] = d + m_k - rank(stacked);
    total += s[k];
  }
  if (total != d) throw Error(ErrorKind::NotFixed, "row space is not invariant under C_r");
  return s;
}

Partition core_of_spec(const std::vector<int>& s, int d, int n, int r) {
  if (r < 1 || static_cast<int>(s.size()) != r) throw Error(ErrorKind::InvalidSpec, "spec needs r entries");
  int total = 0;
  std::vector<int> beads;
  for (int k = 0; k < r; ++k) {
    if (s[k] < 0 || s[k] > runner_size(n, k, r)) {
      throw Error(ErrorKind::InvalidSpec, "s_" + std::to_string(k) + " outside 0..m_k");
    }
    total += s[k];
    for (int c = 0; c < s[k]; ++c) beads.push_back(k + r * c);
  }
  if (total != d) throw Error(ErrorKind::InvalidSpec, "spec entries must sum to d");
  return partition_from_beads(beads, d);
}

bool fixed_support_check(const Matrix<Rational>& a, int r) {
  int d = static_cast<int>(a.size());
  int n = static_cast<int>(a[0].size());
  Partition kappa = core_of_spec(spec_vector(a, r), d, n, r);
  PluckerVector<Rational> p = plucker_from_basis(a);
  for (std::size_t i = 0; i < p.index.size(); ++i) {
    if (sgn(p.values[i]) != 0 && r_core(p.index[i], d, r) != kappa) return false;
  }
  return true;
}

bool rows_in_blocks(const Matrix<Rational>& a, int r) {
  int last = -1;
  for (const auto& row : a) {
    int cls = -1;
    for (int j = 0; j < static_cast<int>(row.size()); ++j) {
      if (sgn(row[j]) == 0) continue;
      if (cls >= 0 && j % r != cls) return false;
      cls = j % r;
    }
    if (cls < 0 || cls < last) return false;
    last = cls;
  }
  return true;
}

bool segre_check(const Matrix<Rational>& a, int r) {
  if (!rows_in_blocks(a, r)) {
    throw Error(ErrorKind::NotFixed, "rows must be eigenvectors sorted by eigenspace");
  }
  int d = static_cast<int>(a.size());
  int n = static_cast<int>(a[0].size());
  // Block k holds the coefficients of z^{k + r c} for the rows living in M_k.
  std::vector<Matrix<Rational>> blocks(r);
  for (const auto& row : a) {
    int cls = 0;
    while (sgn(row[cls]) == 0) ++cls;
    cls %= r;
    std::vector<Rational> small;
    for (int j = cls; j < n; j += r) small.push_back(row[j]);
    blocks[cls].push_back(std::move(small));
  }
  std::vector<int> s(r);
  for (int k = 0; k < r; ++k) s[k] = static_cast<int>(blocks[k].size());
  Partition kappa = core_of_spec(s, d, n, r);
  PluckerVector<Rational> p = plucker_from_basis(a);
  for (std::size_t i = 0; i < p.index.size(); ++i) {
    const Partition& lambda = p.index[i];
    if (r_core(lambda, d, r) != kappa) {
      if (sgn(p.values[i]) != 0) return false;
      continue;
    }
    std::vector<Partition> q = r_quotient(lambda, d, r);
    Rational product = epsilon_sign(lambda, d, r);
    for (int k = 0; k < r && sgn(product) != 0; ++k) {
      std::vector<int> cols = bead_positions(q[k], s[k]);
      Matrix<Rational> minor(s[k], std::vector<Rational>(s[k]));
      for (int x = 0; x < s[k]; ++x) {
        for (int y = 0; y < s[k]; ++y) minor[x][y] = blocks[k][x][cols[y]];
      }
      product *= determinant(minor);
    }
    if (product != p.values[i]) return false;
  }
  return true;
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coefficients) {
  std::vector<Complex> c = coefficients;
  while (!c.empty() && c.back() == Complex(0.0, 0.0)) c.pop_back();
  int deg = static_cast<int>(c.size()) - 1;
  if (deg < 1) return {};
  Complex lead = c.back();
  for (Complex& x : c) x /= lead;
  auto eval = [&](Complex z) {
    Complex acc(0.0, 0.0);
    for (int k = deg; k >= 0; --k) acc = acc * z + c[k];
    return acc;
  };
  auto deriv = [&](Complex z) {
    Complex acc(0.0, 0.0);
    for (int k = deg; k >= 1; --k) acc = acc * z + c[k] * static_cast<double>(k);
    return acc;
  };
  std::vector<Complex> roots(deg);
  Complex seed(0.4, 0.9);
  roots[0] = Complex(1.0, 0.0);
  for (int k = 1; k < deg; ++k) roots[k] = roots[k - 1] * seed;
  for (int iter = 0; iter < 1000; ++iter) {
    double change = 0.0;
    for (int i = 0; i < deg; ++i) {
      Complex den(1.0, 0.0);
      for (int j = 0; j < deg; ++j) {
        if (j != i) den *= roots[i] - roots[j];
      }
      Complex step = eval(roots[i]) / den;
      roots[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15) break;
  }
  for (Complex& z : roots) {
    for (int iter = 0; iter < 3; ++iter) {
      Complex dz = deriv(z);
      if (std::abs(dz) > 0) z -= eval(z) / dz;
    }
  }
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

CrFixedPolyForm parse_cr_fixed(const Poly<Rational>& h, int r) {
  if (r < 1) throw Error(ErrorKind::BadParameter, "r must be positive");
  if (h.zero()) throw Error(ErrorKind::ZeroPolynomial, "h is zero");
  CrFixedPolyForm form;
  form.r = r;
  form.m = h.mindeg();
  std::vector<Rational> g;
  for (int j = form.m; j <= h.degree(); ++j) {
    bool on_lattice = (j - form.m) % r == 0;
    if (!on_lattice && sgn(h.coefficient(j)) != 0) {
      throw Error(ErrorKind::NotFixed, "z^" + std::to_string(j) + " breaks the C_r pattern");
    }
    if (on_lattice) g.push_back(h.coefficient(j));
  }
  form.g = Poly<Rational>(g);
  form.ell = form.g.degree();
  form.lead = form.g.coefficient(form.ell);
  std::vector<Complex> gc;
  for (const Rational& x : form.g.coefficients()) gc.emplace_back(x.get_d(), 0.0);
  for (const Complex& w : polynomial_roots(gc)) form.h.push_back(-w);
  std::sort(form.h.begin(), form.h.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return form;
}

std::vector<Matrix<Complex>> fixed_fibre_gr24(Complex h1, Complex h2) {
  if (h1 == Complex(0.0, 0.0) || h2 == Complex(0.0, 0.0)) {
    throw Error(ErrorKind::BadParameter, "h1 and h2 must be nonzero");
  }
  Complex s = h1 + h2;
  Complex p = h1 * h2;
  Complex disc = s * s + 12.0 * p;
  double scale = std::max({1.0, std::norm(s), std::abs(p)});
  if (std::abs(disc) <= 1e-12 * scale) {
    throw Error(ErrorKind::DegenerateDiscriminant, "the quadratic 3a^2 - sa - p has a double root");
  }
  Complex root = std::sqrt(disc);
  std::vector<Matrix<Complex>> out;
  for (double sign : {1.0, -1.0}) {
    Complex a = (s + sign * root) / 6.0;
    Complex c = 3.0 * a - s;
    Complex zero(0.0, 0.0), one(1.0, 0.0);
    out.push_back({{a, zero, one, zero}, {zero, c, zero, one}});
  }
  return out;
}

std::optional<std::vector<Matrix<Rational>>> fixed_fibre_gr24_exact(const Rational& h1,
                                                                    const Rational& h2) {
  if (sgn(h1) == 0 || sgn(h2) == 0) throw Error(ErrorKind::BadParameter, "h1 and h2 must be nonzero");
  Rational s = h1 + h2;
  Rational p = h1 * h2;
  Rational disc = s * s + 12 * p;
  if (sgn(disc) == 0) {
    throw Error(ErrorKind::DegenerateDiscriminant, "the quadratic 3a^2 - sa - p has a double root");
  }
  Rational root;
  if (!rational_sqrt(disc, &root)) return std::nullopt;
  std::vector<Matrix<Rational>> out;
  for (int sign : {1, -1}) {
    Rational a = (s + sign * root) / 6;
    Rational c = 3 * a - s;
    out.push_back({{a, 0, 1, 0}, {0, c, 0, 1}});
  }
  return out;
}

}  // namespace ribbonsieve
