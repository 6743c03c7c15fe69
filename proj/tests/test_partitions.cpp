#include <algorithm>
#include <set>

#include "ribbonsieve/partitions.hpp"
#include "ribbonsieve/wronski.hpp"
#include "support.hpp"

using namespace ribbonsieve;
using namespace ribbonsieve::testing;

namespace {

// Every weakly decreasing sequence of at most `rows` parts bounded by `cols`, by brute force.
std::vector<Partition> brute_partitions(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> parts(rows, 0);
  std::function<void(int, int)> rec = [&](int i, int cap) {
    if (i == rows) {
      out.emplace_back(parts);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      parts[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, cols);
  return out;
}

long binomial(int n, int k) {
  long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

TEST_CASE("partition construction trims zeros and rejects increasing parts") {
  CHECK(Partition({3, 1, 0, 0}) == Partition{3, 1});
  CHECK(Partition({3, 1, 0}).size() == 4);
  CHECK_ERROR(ErrorKind::InvalidPartition, Partition({1, 2}));
  CHECK_ERROR(ErrorKind::InvalidPartition, Partition({2, -1}));
  CHECK(Partition{8, 4, 4, 4, 2, 1}.str() == "844421");
  CHECK(Partition{10, 2}.str() == "(10,2)");
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
}

TEST_CASE("contains") {
  CHECK(contains(Partition{}, Partition{2, 1}));
  CHECK(contains(Partition{1}, Partition{2, 1}));
  CHECK_FALSE(contains(Partition{2}, Partition{1, 1}));
  CHECK(meet(Partition{3, 1}, Partition{2, 2}) == Partition{2, 1});
  CHECK(join(Partition{3, 1}, Partition{2, 2}) == Partition{3, 2});
}

TEST_CASE("dual") {
  AmbientRectangle r37 = AmbientRectangle::make(3, 7);
  CHECK(dual(Partition{}, r37) == Partition{4, 4, 4});
  CHECK(dual(Partition{2, 1}, r37) == Partition{4, 3, 2});
  CHECK_ERROR(ErrorKind::ShapeOverflow, dual(Partition{5}, r37));
  CHECK_ERROR(ErrorKind::ShapeOverflow, dual(Partition{1, 1, 1, 1}, r37));
  for (const auto& lambda : partitions_in_rect(r37)) CHECK(dual(dual(lambda, r37), r37) == lambda);
}

TEST_CASE("bead positions") {
  std::vector<int> want{1, 3, 6, 7, 8, 13};
  CHECK(bead_positions(Partition{8, 4, 4, 4, 2, 1}, 6) == want);
  CHECK(bead_positions(Partition{}, 3) == std::vector<int>{0, 1, 2});
  CHECK(bead_positions(Partition{1}, 2) == std::vector<int>{0, 2});
  CHECK_ERROR(ErrorKind::TooManyParts, bead_positions(Partition{1, 1, 1}, 2));

  CHECK(partition_from_beads(std::vector<int>{0, 1, 2}, 3) == Partition{});
  CHECK(partition_from_beads(want, 6) == Partition{8, 4, 4, 4, 2, 1});
  CHECK(partition_from_beads(std::vector<int>{2, 0}, 2) == Partition{1});
  CHECK_ERROR(ErrorKind::MalformedBeadSet, partition_from_beads(std::vector<int>{1, 1}, 2));
  CHECK_ERROR(ErrorKind::MalformedBeadSet, partition_from_beads(std::vector<int>{-1, 2}, 2));
  CHECK_ERROR(ErrorKind::MalformedBeadSet, partition_from_beads(std::vector<int>{0, 1, 2}, 2));
}

TEST_CASE("bead round trip is exhaustive for d <= 4 and parts <= 6") {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& lambda : brute_partitions(d, 6)) {
      std::vector<int> beads = bead_positions(lambda, d);
      CHECK(static_cast<int>(std::set<int>(beads.begin(), beads.end()).size()) == d);
      CHECK(partition_from_beads(beads, d) == lambda);
    }
  }
}

TEST_CASE("q constant") {
  CHECK(q_constant(Partition{5}, 1) == 1);
  CHECK(q_constant(Partition{}, 2) == 1);
  CHECK(q_constant(Partition{1}, 2) == 2);
  CHECK_ERROR(ErrorKind::TooManyParts, q_constant(Partition{1, 1, 1}, 2));
}

TEST_CASE("q constant is the leading coefficient of the monomial Wronskian") {
  // Wr(z^{j_1},...,z^{j_d}) = Π (j_b - j_a) z^{Σ j - d(d-1)/2}, the defining product of q_λ.
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    int d = uniform(rng, 1, 4);
    AmbientRectangle rect = AmbientRectangle::make(d, d + uniform(rng, 1, 4));
    Partition lambda = random_partition_in(rect, rng);
    std::vector<Poly<Rational>> basis;
    for (int j : bead_positions(lambda, d)) basis.push_back(Poly<Rational>::monomial(j));
    Poly<Rational> w = wronskian_det(basis);
    CHECK(w.degree() == lambda.size());
    CHECK(w.mindeg() == lambda.size());
    CHECK(w.coefficient(lambda.size()) == Rational(q_constant(lambda, d)));
    CHECK(q_constant(lambda, d) >= 1);
  }
}

TEST_CASE("hook lengths") {
  auto sorted = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(hook_lengths(Partition{1}) == std::vector<int>{1});
  CHECK(sorted(hook_lengths(Partition{2, 2})) == std::vector<int>{1, 2, 2, 3});
  CHECK(sorted(hook_lengths(Partition{3})) == std::vector<int>{1, 2, 3});
  CHECK(count_syt(Partition{3, 3, 3}) == 42);
  CHECK(count_syt(Partition{4, 4, 4}) == 462);
}

TEST_CASE("interval order") {
  AmbientRectangle r24 = AmbientRectangle::make(2, 4);
  std::vector<Partition> want{{}, {1}, {2}, {1, 1}, {2, 1}, {2, 2}};
  CHECK(interval(Partition{}, Partition{2, 2}, r24) == want);
  CHECK(interval(Partition{2, 1}, Partition{2, 1}, r24) == std::vector<Partition>{{2, 1}});
  CHECK(interval(Partition{}, Partition{1}, r24) == std::vector<Partition>{{}, {1}});
  CHECK_ERROR(ErrorKind::NotNested, interval(Partition{2}, Partition{1, 1}, r24));
}

TEST_CASE("interval of the full rectangle has binomial(n, d) elements") {
  for (int n = 2; n <= 8; ++n) {
    for (int d = 1; d < n; ++d) {
      AmbientRectangle rect = AmbientRectangle::make(d, n);
      std::vector<Partition> all = interval(Partition{}, rect.full(), rect);
      CHECK(static_cast<long>(all.size()) == binomial(n, d));
      // Brute force agrees as a set.
      std::vector<Partition> brute = brute_partitions(d, n - d);
      std::sort(brute.begin(), brute.end());
      std::sort(all.begin(), all.end());
      CHECK(all == brute);
    }
  }
}

TEST_CASE("skew shapes") {
  CHECK_ERROR(ErrorKind::NotNested, SkewShape(Partition{1, 1}, Partition{2}));
  SkewShape s(Partition{3, 2}, Partition{1});
  CHECK(s.size() == 4);
  CHECK(s.boxes().front() == Box{0, 1});
  CHECK(s.str() == "32/1");
}
