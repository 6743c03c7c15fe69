#include "ribbonsieve/abacus.hpp"

#include <algorithm>
#include <set>

namespace ribbonsieve {

namespace {

void check_r(int r) {
  if (r < 1) throw Error(ErrorKind::BadParameter, "r must be positive");
}

int permutation_sign(std::vector<int> values) {
  int sign = 1;
  // Selection sort; each swap is one transposition.
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::size_t m = i;
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[j] < values[m]) m = j;
    }
    if (m != i) {
      std::swap(values[i], values[m]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace

std::vector<int> Abacus::runner_rows(int k) const {
  std::vector<int> rows;
  for (int b : beads) {
    if (b % r == k) rows.push_back(b / r);
  }
  return rows;
}

std::vector<int> Abacus::spec() const {
  std::vector<int> s(r, 0);
  for (int b : beads) ++s[b % r];
  return s;
}

Abacus to_abacus(const Partition& lambda, int d, int r) {
  check_r(r);
  return Abacus{r, d, bead_positions(lambda, d)};
}

Partition r_core(const Partition& lambda, int d, int r) {
  Abacus ab = to_abacus(lambda, d, r);
  std::vector<int> justified;
  std::vector<int> s = ab.spec();
  for (int k = 0; k < r; ++k) {
    for (int c = 0; c < s[k]; ++c) justified.push_back(k + r * c);
  }
  return partition_from_beads(justified, d);
}

std::vector<Partition> r_quotient(const Partition& lambda, int d, int r) {
  Abacus ab = to_abacus(lambda, d, r);
  std::vector<Partition> q;
  q.reserve(r);
  for (int k = 0; k < r; ++k) {
    std::vector<int> rows = ab.runner_rows(k);
    q.push_back(partition_from_beads(rows, static_cast<int>(rows.size())));
  }
  return q;
}

CoreQuotient core_quotient(const Partition& lambda, int d, int r) {
  Abacus ab = to_abacus(lambda, d, r);
  return CoreQuotient{r_core(lambda, d, r), r_quotient(lambda, d, r), ab.spec(), d, r};
}

Partition from_core_quotient(const CoreQuotient& cq) {
  check_r(cq.r);
  if (static_cast<int>(cq.quotient.size()) != cq.r || static_cast<int>(cq.spec.size()) != cq.r) {
    throw Error(ErrorKind::Malformed, "quotient and spec need r entries");
  }
  if (cq.core.length() > cq.d || !is_r_core(cq.core, cq.r)) {
    throw Error(ErrorKind::Malformed, "core is not an r-core with at most d parts");
  }
  if (to_abacus(cq.core, cq.d, cq.r).spec() != cq.spec) {
    throw Error(ErrorKind::Malformed, "spec vector disagrees with the core's abacus");
  }
  std::vector<int> beads;
  for (int k = 0; k < cq.r; ++k) {
    const Partition& q = cq.quotient[k];
    int s = cq.spec[k];
    if (q.length() > s) {
      throw Error(ErrorKind::Malformed, "quotient component exceeds its runner's bead count");
    }
    for (int i = 1; i <= s; ++i) beads.push_back(k + cq.r * (q.part(s - i) + i - 1));
  }
  return partition_from_beads(beads, cq.d);
}

int epsilon_sign(const Partition& lambda, int d, int r) {
  Abacus ab = to_abacus(lambda, d, r);
  std::vector<int> runner_order;
  for (int k = 0; k < r; ++k) {
    for (int c : ab.runner_rows(k)) runner_order.push_back(k + r * c);
  }
  return permutation_sign(std::move(runner_order));
}

std::pair<Partition, Partition> quotient_meet_join(const Partition& nu, const Partition& sigma,
                                                   int d, int r) {
  CoreQuotient a = core_quotient(nu, d, r);
  CoreQuotient b = core_quotient(sigma, d, r);
  if (a.core != b.core) {
    throw Error(ErrorKind::CoreMismatch, nu.str() + " and " + sigma.str() + " have different cores");
  }
  CoreQuotient lo = a;
  CoreQuotient hi = a;
  for (int k = 0; k < r; ++k) {
    lo.quotient[k] = meet(a.quotient[k], b.quotient[k]);
    hi.quotient[k] = join(a.quotient[k], b.quotient[k]);
  }
  return {from_core_quotient(lo), from_core_quotient(hi)};
}

bool is_r_core(const Partition& lambda, int r) {
  check_r(r);
  for (int h : hook_lengths(lambda)) {
    if (h == r) return false;
  }
  return true;
}

std::vector<Partition> remove_ribbons(const Partition& lambda, int r) {
  check_r(r);
  int d = lambda.length();
  std::vector<int> beads = bead_positions(lambda, d);
  std::set<int> occupied(beads.begin(), beads.end());
  std::vector<Partition> out;
  for (int b : beads) {
    if (b - r >= 0 && !occupied.count(b - r)) {
      std::vector<int> moved = beads;
      *std::find(moved.begin(), moved.end(), b) = b - r;
      out.push_back(partition_from_beads(moved, d));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> add_ribbons(const Partition& lambda, int r, const Partition& bound) {
  check_r(r);
  int d = std::max(lambda.length(), bound.length());
  std::vector<int> beads = bead_positions(lambda, d);
  std::set<int> occupied(beads.begin(), beads.end());
  std::vector<Partition> out;
  for (int b : beads) {
    if (!occupied.count(b + r)) {
      std::vector<int> moved = beads;
      *std::find(moved.begin(), moved.end(), b) = b + r;
      Partition next = partition_from_beads(moved, d);
      if (contains(next, bound)) out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ribbonsieve
