// One line per acceptance criterion; exit status is nonzero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "ribbonsieve/abacus.hpp"
#include "ribbonsieve/csp.hpp"
#include "ribbonsieve/puiseux.hpp"
#include "ribbonsieve/ribbon.hpp"
#include "ribbonsieve/suites.hpp"
#include "ribbonsieve/symfunc.hpp"
#include "ribbonsieve/tableaux.hpp"
#include "ribbonsieve/wronski.hpp"

using namespace ribbonsieve;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << "first failure: " << what << "; ";
      ok = false;
    }
  }
};

bool run(int id, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail << "exception: " << e.what() << "; ";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > budget_s) {
    out.ok = false;
    out.detail << "over budget; ";
  }
  std::printf("%s criterion %d (%.2fs / %.0fs) %s\n", out.ok ? "PASS" : "FAIL", id, secs, budget_s,
              out.detail.str().c_str());
  std::fflush(stdout);
  return out.ok;
}

AmbientRectangle rect_of(int rows, int cols) { return AmbientRectangle::make(rows, rows + cols); }

std::set<std::vector<int>> keys_of(const std::vector<StandardTableau>& ts) {
  std::set<std::vector<int>> out;
  for (const auto& t : ts) out.insert(t.key());
  return out;
}

Filling figure_one() {
  return Filling(SkewShape(Partition{7, 7, 6, 4, 2}, Partition{1}),
                 {{1, 1, 1, 3, 3, 5}, {1, 1, 2, 3, 3, 5, 5}, {2, 2, 2, 3, 5, 5}, {2, 4, 4, 4}, {4, 4}});
}

// Rows drawn from the monomial blocks z^k, z^{k+r}, ... with counts s.
Matrix<Rational> block_matrix(const std::vector<int>& s, int n, int r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-5, 5);
  for (;;) {
    Matrix<Rational> a;
    for (int k = 0; k < r; ++k) {
      for (int row = 0; row < s[k]; ++row) {
        std::vector<Rational> v(n, Rational(0));
        for (int j = k; j < n; j += r) v[j] = coef(rng);
        a.push_back(v);
      }
    }
    if (rank(a) == static_cast<int>(a.size())) return a;
  }
}

void check_report(Outcome& out, const VerificationReport& rep) {
  for (const auto& c : rep.cases) out.require(c.ok, rep.suite + ": " + c.name);
}

}  // namespace

int main() {
  bool all = true;

  all &= run(1, 120, [](Outcome& out) {
    VerificationReport rep = run_csp_suite(RectangleFilter{});
    check_report(out, rep);
    std::size_t expected = 0;
    for (const auto& rect : rectangles_up_to(16)) expected += divisors(rect.N()).size();
    out.require(rep.cases.size() == expected, "one case per rectangle and divisor");
    out.detail << rep.cases.size() << " (rect, r) pairs";
  });

  all &= run(2, 120, [](Outcome& out) {
    VerificationReport rep = run_dihedral_suite(RectangleFilter{});
    check_report(out, rep);
    std::size_t expected = 0;
    for (const auto& rect : rectangles_up_to(16)) expected += 2 * divisors(rect.N()).size();
    out.require(rep.cases.size() == expected, "both variants for every (rect, r)");
    out.detail << rep.cases.size() << " cases over e and e∘j";
  });

  all &= run(3, 60, [](Outcome& out) {
    VerificationReport rep = run_llt_suite(3, 4);
    check_report(out, rep);
    int plus = 0, minus = 0, zero = 0;
    AmbientRectangle rect = rect_of(3, 4);
    for (const auto& outer : partitions_in_rect(rect)) {
      for (const auto& inner : partitions_in_rect(rect)) {
        if (!contains(inner, outer) || outer == inner) continue;
        SkewShape s(outer, inner);
        for (int r = 1; r <= s.size(); ++r) {
          if (s.size() % r != 0) continue;
          LltReport l = llt_verify(s, r);
          out.require(l.ok, "llt " + s.str() + " r=" + std::to_string(r));
          (l.sign > 0 ? plus : l.sign < 0 ? minus : zero) += 1;
        }
      }
    }
    out.detail << "signs +" << plus << " -" << minus << " 0:" << zero;
  });

  all &= run(4, 120, [](Outcome& out) {
    long exhaustive = 0, sampled = 0;
    for (const auto& rect : rectangles_up_to(20)) {
      if (rect.N() <= 12) {
        for (const auto& t : enumerate_syt(SkewShape(rect.full()))) {
          out.require(promote_power(t, rect.N()) == t, "j^N on " + t.str());
          ++exhaustive;
        }
      } else {
        std::mt19937_64 rng(derive_seed(4, static_cast<std::uint64_t>(rect.d * 100 + rect.n)));
        for (int i = 0; i < 1000; ++i) {
          StandardTableau t = random_syt(rect.full(), rng);
          out.require(promote_power(t, rect.N()) == t, "j^N on " + t.str());
          ++sampled;
        }
      }
    }
    out.detail << exhaustive << " exhaustive, " << sampled << " sampled";
  });

  all &= run(5, 120, [](Outcome& out) {
    long count = 0;
    for (const auto& rect : rectangles_up_to(12)) {
      for (const auto& t : enumerate_syt(SkewShape(rect.full()))) {
        StandardTableau e = evacuate(t);
        out.require(evacuate(e) == t, "e^2");
        // e j e = j^{-1}  <=>  j e j e = id
        out.require(promote(evacuate(promote(e))) == t, "eje");
        out.require(e == rotate_complement(t, rect), "rotate-complement");
        ++count;
      }
    }
    out.detail << count << " tableaux";
  });

  all &= run(6, 30, [](Outcome& out) {
    ShapeSequence blocks{{{2, 1}, {2, 1}, {2, 1}, {2, 1}}};
    AmbientRectangle rect = rect_of(3, 4);
    std::vector<std::set<std::vector<int>>> typed;
    for (const auto& c : dual_equivalence_classes(SkewShape(rect.full()), blocks)) {
      if (has_type(c.front(), blocks)) typed.push_back(keys_of(c));
    }
    out.require(typed.size() == 8, "8 classes");
    auto invariant_count = [&](const std::function<StandardTableau(const StandardTableau&)>& f) {
      int n = 0;
      for (const auto& keys : typed) {
        std::set<std::vector<int>> image;
        for (const auto& c : dual_equivalence_classes(SkewShape(rect.full()), blocks)) {
          if (keys_of(c) != keys) continue;
          for (const auto& t : c) image.insert(f(t).key());
        }
        n += image == keys;
      }
      return n;
    };
    // Switching the paired blocks (1,2) and (3,4) exchanges equal shapes, so the type is kept.
    auto sw = [&](const StandardTableau& t) { return switch_blocks(switch_blocks(t, blocks, 1), blocks, 3); };
    int switch_inv = invariant_count(sw);
    int switch_rc_inv = invariant_count([&](const StandardTableau& t) { return rotate_complement(sw(t), rect); });
    out.require(switch_inv == 4, "switch-invariant count");
    out.require(switch_rc_inv == 4, "switch-then-rotate-complement count");
    out.detail << typed.size() << " classes, " << switch_inv << " switch-invariant, " << switch_rc_inv
               << " switch-then-∨ invariant";
  });

  all &= run(7, 60, [](Outcome& out) {
    WronskiParams params;
    params.cases = 1000;
    params.block_cases = 500;
    params.seed = 1;
    VerificationReport rep = run_wronski_suite(params);
    check_report(out, rep);
    for (const char* shape : {"(2,4)", "(2,5)", "(3,6)", "(3,7)"}) {
      bool seen = false;
      for (const auto& c : rep.cases) {
        if (c.name.find(shape) != std::string::npos && c.name.rfind("determinant-vs-plucker", 0) == 0 &&
            c.detail.value("cases", 0) >= 1000) {
          seen = true;
        }
      }
      out.require(seen, std::string("1000 determinant cases at ") + shape);
    }
    out.detail << rep.cases.size() << " suite cases";
  });

  all &= run(8, 10, [](Outcome& out) {
    std::mt19937_64 rng(8);
    std::normal_distribution<double> g;
    for (int i = 0; i < 200; ++i) {
      Complex h1(g(rng), g(rng)), h2(g(rng), g(rng));
      auto sols = fixed_fibre_gr24(h1, h2);
      out.require(sols.size() == 2, "two solutions");
      Poly<Complex> target({h1 * h2, 0.0, h1 + h2, 0.0, 1.0});
      for (const auto& m : sols) out.require(proportional(wronskian_det(basis_polys(m)), target, 1e-9), "float wronskian");
    }
    VerificationReport rep = run_puiseux_suite(12, 1);
    check_report(out, rep);
    std::set<std::string> want{Filling(SkewShape(Partition{2, 2}), {{1, 1}, {2, 2}}).str(),
                               Filling(SkewShape(Partition{2, 2}), {{1, 2}, {1, 2}}).str()};
    auto points = ribbon_from_fixed_fibre_gr24(TruncatedSeries::monomial(1, 1), TruncatedSeries(1), 12);
    std::multiset<std::string> got;
    for (const auto& p : points) {
      got.insert(p.tableau.labels.str());
      out.require(p.leading_terms_ok, "leading-term law");
      TruncatedSeries a = p.basis[0][0], c = p.basis[1][1];
      out.require((a * c).agrees_with(TruncatedSeries::monomial(1, 1)), "ac = h1 h2");
      out.require((a * c).order() && *(a * c).order() >= 12, "order 12 kept");
    }
    out.require(got == std::multiset<std::string>(want.begin(), want.end()), "both dominoes once");
    out.detail << "200 float fibres, series suite " << rep.cases.size() << " cases";
  });

  all &= run(9, 10, [](Outcome& out) {
    StandardTableau t(SkewShape(Partition{3, 3, 3}), {{1, 2, 5}, {3, 4, 7}, {6, 8, 9}});
    Partition sq{3, 3, 3};
    std::vector<std::vector<std::vector<int>>> want{{{0, 2, 5}, {3, 4, 7}, {6, 8, 9}},
                                                    {{2, 0, 5}, {3, 4, 7}, {6, 8, 9}},
                                                    {{2, 4, 5}, {3, 0, 7}, {6, 8, 9}},
                                                    {{2, 4, 5}, {3, 7, 0}, {6, 8, 9}},
                                                    {{2, 4, 5}, {3, 7, 9}, {6, 8, 0}},
                                                    {{1, 3, 4}, {2, 6, 8}, {5, 7, 9}}};
    std::vector<Filling> frames = promote_trace(t);
    out.require(frames.size() == want.size(), "frame count");
    for (std::size_t i = 0; i < std::min(frames.size(), want.size()); ++i) {
      out.require(frames[i] == Filling(SkewShape(sq), want[i]), "frame " + std::to_string(i));
    }
    out.require(bead_positions(Partition{8, 4, 4, 4, 2, 1}, 6) == std::vector<int>{1, 3, 6, 7, 8, 13}, "beads");

    RibbonTableau wt = make_ribbon_tableau(
        Filling(SkewShape(Partition{5, 4, 4}, Partition{1}), {{2, 3, 4, 4}, {1, 2, 3, 6}, {1, 5, 5, 6}}), 2);
    WeightVector w = weight_vector(wt, AmbientRectangle::make(3, 8), {9, 8, 7, 6, 5, 4},
                                   FillRule{std::vector<Rational>{1}});
    out.require(w.at(Partition{3, 2, 2}) == 18, "w_322");

    RibbonValidation v = validate_ribbon(figure_one(), 5);
    out.require(v.ok, "5-ribbon figure: " + v.diagnostic);

    std::mt19937_64 rng(9);
    Matrix<Rational> a = block_matrix({0, 3, 2}, 11, 3, rng);
    out.require(core_of_spec(spec_vector(a, 3), 5, 11, 3) == Partition{3, 2, 2, 1, 1}, "3-core");
    auto p = plucker_from_basis(a);
    int nonzero = 0;
    for (const auto& x : p.values) nonzero += !is_zero(x);
    out.require(nonzero <= 12 && p.values.size() == 462, "at most 12 of 462");
    out.detail << "w_322=" << w.at(Partition{3, 2, 2}) << ", " << nonzero << " nonzero coordinates";
  });

  return all ? 0 : 1;
}
