#include "ribbonsieve/suites.hpp"

#include <chrono>

#include "ribbonsieve/parallel.hpp"

namespace ribbonsieve {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<AmbientRectangle> selected_rectangles(const RectangleFilter& f) {
  std::vector<AmbientRectangle> out;
  if (f.d && f.n) {
    out.push_back(AmbientRectangle::make(*f.d, *f.n));
    return out;
  }
  for (const auto& rect : rectangles_up_to(f.max_n)) {
    if ((!f.d || rect.d == *f.d) && (!f.n || rect.n == *f.n)) out.push_back(rect);
  }
  return out;
}

std::string rect_name(const AmbientRectangle& rect) {
  return std::to_string(rect.d) + "x" + std::to_string(rect.width());
}

template <class Check>
VerificationReport sieving_suite(const std::string& name, const RectangleFilter& filter, Check check) {
  Stopwatch clock;
  VerificationReport report;
  report.suite = name;
  report.params = Json{{"max_N", filter.max_n}};
  if (filter.d) report.params["d"] = *filter.d;
  if (filter.n) report.params["n"] = *filter.n;
  if (filter.r) report.params["r"] = *filter.r;
  std::vector<std::pair<AmbientRectangle, int>> jobs;
  for (const auto& rect : selected_rectangles(filter)) {
    if (filter.r) {
      if (rect.N() % *filter.r != 0) {
        throw Error(ErrorKind::BadParameter, "r must divide N = " + std::to_string(rect.N()));
      }
      jobs.emplace_back(rect, *filter.r);
      continue;
    }
    for (int r : divisors(rect.N())) jobs.emplace_back(rect, r);
  }
  std::vector<std::vector<CaseResult>> results = parallel_map<std::vector<CaseResult>>(
      jobs.size(), [&](std::size_t i) { return check(jobs[i].first, jobs[i].second); });
  for (auto& batch : results) {
    for (auto& c : batch) report.cases.push_back(std::move(c));
  }
  report.wall_seconds = clock.seconds();
  return report;
}

}  // namespace

bool VerificationReport::ok() const {
  for (const auto& c : cases) {
    if (!c.ok) return false;
  }
  return true;
}

Json VerificationReport::to_json() const {
  Json list = Json::array();
  for (const auto& c : cases) list.push_back(Json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return Json{{"suite", suite}, {"params", params}, {"cases", list}, {"ok", ok()}};
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
  // splitmix64 finaliser over the pair.
  std::uint64_t z = root + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Matrix<Rational> random_basis(int d, int n, std::mt19937_64& rng, int bound) {
  for (;;) {
    Matrix<Rational> a(d, std::vector<Rational>(n));
    for (auto& row : a) {
      for (auto& x : row) x = uniform(rng, -bound, bound);
    }
    if (rank(a) == d) return a;
  }
}

Matrix<Rational> random_block_basis(int d, int n, int r, std::mt19937_64& rng, int bound) {
  if (r < 1 || d > n) throw Error(ErrorKind::BadParameter, "need r >= 1 and d <= n");
  std::vector<int> capacity(r);
  for (int k = 0; k < r; ++k) capacity[k] = k < n ? (n - k + r - 1) / r : 0;
  // Random spec vector: place d rows one at a time on runners with room left.
  std::vector<int> s(r, 0);
  for (int placed = 0; placed < d; ++placed) {
    std::vector<int> open;
    for (int k = 0; k < r; ++k) {
      if (s[k] < capacity[k]) open.push_back(k);
    }
    ++s[open[uniform(rng, 0, static_cast<int>(open.size()) - 1)]];
  }
  Matrix<Rational> a;
  for (int k = 0; k < r; ++k) {
    if (s[k] == 0) continue;
    Matrix<Rational> small;
    do {
      small.assign(s[k], std::vector<Rational>(capacity[k]));
      for (auto& row : small) {
        for (auto& x : row) x = uniform(rng, -bound, bound);
      }
    } while (rank(small) != s[k]);
    for (const auto& row : small) {
      std::vector<Rational> full(n, Rational(0));
      for (int c = 0; c < capacity[k]; ++c) full[k + r * c] = row[c];
      a.push_back(std::move(full));
    }
  }
  return a;
}

Mobius<Rational> random_mobius(std::mt19937_64& rng, int bound) {
  for (;;) {
    Mobius<Rational> phi{uniform(rng, -bound, bound), uniform(rng, -bound, bound),
                         uniform(rng, -bound, bound), uniform(rng, -bound, bound)};
    if (sgn(phi.det()) != 0) return phi;
  }
}

VerificationReport run_csp_suite(const RectangleFilter& filter) {
  return sieving_suite("csp", filter, [](const AmbientRectangle& rect, int r) {
    SievingReport rep = verify_cyclic(rect, r);
    return std::vector<CaseResult>{
        {"cyclic " + rect_name(rect) + " r=" + std::to_string(r), to_json(rep), rep.ok}};
  });
}

VerificationReport run_dihedral_suite(const RectangleFilter& filter) {
  return sieving_suite("dihedral", filter, [](const AmbientRectangle& rect, int r) {
    std::vector<CaseResult> out;
    for (DihedralVariant v : {DihedralVariant::E, DihedralVariant::EJ}) {
      SievingReport rep = verify_dihedral(rect, r, v);
      Json detail = to_json(rep);
      detail["variant"] = to_string(v);
      out.push_back({std::string("dihedral ") + to_string(v) + " " + rect_name(rect) +
                         " r=" + std::to_string(r),
                     detail, rep.ok});
    }
    return out;
  });
}

VerificationReport run_llt_suite(int rows, int cols, std::optional<int> r) {
  Stopwatch clock;
  VerificationReport report;
  report.suite = "llt";
  report.params = Json{{"rect", std::to_string(rows) + "x" + std::to_string(cols)}};
  if (r) report.params["r"] = *r;
  if (rows < 0 || cols < 0 || rows + cols > 24) {
    throw Error(ErrorKind::BadParameter, "rectangle outside the supported range");
  }
  AmbientRectangle rect = AmbientRectangle::make(rows, rows + cols);
  std::vector<Partition> shapes = partitions_in_rect(rect);
  std::vector<std::pair<SkewShape, int>> jobs;
  for (const auto& outer : shapes) {
    for (const auto& inner : shapes) {
      if (!contains(inner, outer) || inner == outer) continue;
      int m = outer.size() - inner.size();
      for (int k : divisors(m)) {
        if (!r || k == *r) jobs.emplace_back(SkewShape(outer, inner), k);
      }
    }
  }
  auto results = parallel_map<CaseResult>(jobs.size(), [&](std::size_t i) {
    LltReport rep = llt_verify(jobs[i].first, jobs[i].second);
    return CaseResult{jobs[i].first.str() + " r=" + std::to_string(jobs[i].second), to_json(rep), rep.ok};
  });
  report.cases = std::move(results);
  report.wall_seconds = clock.seconds();
  return report;
}

VerificationReport run_wronski_suite(const WronskiParams& params) {
  Stopwatch clock;
  VerificationReport report;
  report.suite = "wronski";
  Json shapes = Json::array();
  for (auto [d, n] : params.shapes) shapes.push_back(Json::array({d, n}));
  report.params = Json{{"shapes", shapes}, {"cases", params.cases},
                       {"block_cases", params.block_cases}, {"seed", params.seed}};
  if (params.r) report.params["r"] = *params.r;
  if (params.cases < 0 || params.block_cases < 0) {
    throw Error(ErrorKind::BadParameter, "case counts must be nonnegative");
  }
  std::uint64_t stream = 0;
  for (auto [d, n] : params.shapes) {
    AmbientRectangle::make(d, n);
    std::string tag = "(" + std::to_string(d) + "," + std::to_string(n) + ")";
    std::uint64_t base = stream;
    stream += static_cast<std::uint64_t>(params.cases + params.block_cases);
    // Each case is 0 (pass) or a bit mask of failed identities.
    auto generic = parallel_map<int>(params.cases, [&](std::size_t i) {
      std::mt19937_64 rng(derive_seed(params.seed, base + i));
      Matrix<Rational> a = random_basis(d, n, rng);
      std::vector<Poly<Rational>> f = basis_polys(a);
      int failed = 0;
      if (!proportional(wronskian_det(f), wronskian_from_plucker(plucker_from_basis(a)))) failed |= 1;
      if (!equivariance_check(random_mobius(rng), f, n)) failed |= 2;
      return failed;
    });
    auto blocks = parallel_map<int>(params.block_cases, [&](std::size_t i) {
      std::mt19937_64 rng(derive_seed(params.seed, base + params.cases + i));
      int r = params.r ? *params.r : uniform(rng, 2, std::max(2, std::min(n, 4)));
      Matrix<Rational> a = random_block_basis(d, n, r, rng);
      int failed = 0;
      if (!fixed_support_check(a, r)) failed |= 1;
      if (!segre_check(a, r)) failed |= 2;
      return failed;
    });
    auto count = [](const std::vector<int>& v, int bit) {
      long fails = 0;
      for (int x : v) fails += (x & bit) != 0;
      return fails;
    };
    auto add = [&](const std::string& name, long total, long fails) {
      report.cases.push_back({name + " " + tag, Json{{"cases", total}, {"failures", fails}}, fails == 0});
    };
    add("determinant-vs-plucker", params.cases, count(generic, 1));
    add("pgl2-equivariance", params.cases, count(generic, 2));
    add("fixed-support", params.block_cases, count(blocks, 1));
    add("segre", params.block_cases, count(blocks, 2));
  }
  report.wall_seconds = clock.seconds();
  return report;
}

VerificationReport run_puiseux_suite(int truncation_order, std::uint64_t seed, int float_cases) {
  Stopwatch clock;
  VerificationReport report;
  report.suite = "puiseux";
  report.params = Json{{"truncation_order", truncation_order}, {"seed", seed}, {"float_cases", float_cases}};
  if (truncation_order < 1) throw Error(ErrorKind::BadParameter, "truncation order must be positive");
  const Partition top{2, 2};
  std::vector<RibbonTableau> dominoes = enumerate_srt(SkewShape(top), 2);

  // Generic complex fibres: two solutions whose Wronskians match (z²+h1)(z²+h2).
  long float_failures = 0;
  double worst = 0;
  std::mt19937_64 rng(derive_seed(seed, 0));
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int i = 0; i < float_cases; ++i) {
    Complex h1(coord(rng), coord(rng)), h2(coord(rng), coord(rng));
    std::vector<Matrix<Complex>> sols = fixed_fibre_gr24(h1, h2);
    Poly<Complex> target({h1 * h2, 0.0, h1 + h2, 0.0, 1.0});
    bool ok = sols.size() == dominoes.size();
    for (const auto& a : sols) {
      Poly<Complex> w = wronskian_det(basis_polys(a));
      ok = ok && proportional(w, target, 1e-9);
      for (int k = 0; k <= 4; ++k) worst = std::max(worst, std::abs(w.coefficient(k) - target.coefficient(k)));
    }
    ok = ok && std::abs(sols[0][0][0] - sols[1][0][0]) > 1e-9;
    float_failures += !ok;
  }
  report.cases.push_back({"generic fibre has 2 solutions",
                          Json{{"cases", float_cases}, {"failures", float_failures}, {"max_abs_error", worst}},
                          float_failures == 0});

  auto series_case = [&](const std::string& name, const TruncatedSeries& h1, const TruncatedSeries& h2) {
    std::vector<FibrePoint> pts = ribbon_from_fixed_fibre_gr24(h1, h2, truncation_order);
    Json tableaux = Json::array();
    bool lt_ok = true;
    std::vector<RibbonTableau> found;
    for (const auto& p : pts) {
      tableaux.push_back(to_json(p.tableau));
      lt_ok = lt_ok && p.leading_terms_ok;
      found.push_back(p.tableau);
    }
    bool bijective = found.size() == dominoes.size();
    for (const auto& t : dominoes) {
      bijective = bijective && std::count(found.begin(), found.end(), t) == 1;
    }
    // The Wronskian of every series point must equal (z²+h1)(z²+h2) to the truncation order.
    bool wronski_ok = true;
    for (const auto& p : pts) {
      Poly<TruncatedSeries> w = wronskian_det(basis_polys(p.basis));
      std::vector<TruncatedSeries> want{h1 * h2, 0L, h1 + h2, 0L, 1L};
      for (int k = 0; k <= 4; ++k) {
        const TruncatedSeries& got = w.coefficient(k);
        wronski_ok = wronski_ok && got.order().value_or(truncation_order) >= truncation_order &&
                     got.agrees_with(want[k]);
      }
    }
    report.cases.push_back({name + " domino bijection", Json{{"tableaux", tableaux}}, bijective});
    report.cases.push_back({name + " leading-term law", Json{}, lt_ok});
    report.cases.push_back({name + " wronskian to order", Json{{"order", truncation_order}}, wronski_ok});
  };
  TruncatedSeries u = TruncatedSeries::monomial(1, 1);
  series_case("(u,1)", u, TruncatedSeries(1));
  series_case("(u^2,u)", u * u, u);
  series_case("(u+u^2,2-u)", u + u * u, TruncatedSeries(2) - u);
  report.wall_seconds = clock.seconds();
  return report;
}

}  // namespace ribbonsieve
