#pragma once

#include <utility>
#include <vector>

#include "ribbonsieve/partitions.hpp"

namespace ribbonsieve {

struct Abacus {
  int r = 1;
  int d = 0;
  std::vector<int> beads;  // ascending

  int runner(int bead) const { return bead % r; }
  // Rows c (bead = k + r c) occupied on runner k, ascending.
  std::vector<int> runner_rows(int k) const;
  std::vector<int> spec() const;
};

struct CoreQuotient {
  Partition core;
  std::vector<Partition> quotient;
  std::vector<int> spec;
  int d = 0;
  int r = 1;
  bool operator==(const CoreQuotient&) const = default;
};

Abacus to_abacus(const Partition& lambda, int d, int r);
Partition r_core(const Partition& lambda, int d, int r);
std::vector<Partition> r_quotient(const Partition& lambda, int d, int r);
CoreQuotient core_quotient(const Partition& lambda, int d, int r);
// Throws Malformed when spec disagrees with the core's abacus or a quotient overflows its runner.
Partition from_core_quotient(const CoreQuotient& cq);
int epsilon_sign(const Partition& lambda, int d, int r);
// (ν ∧ σ, ν ∨ σ) through componentwise quotient intersection/union.
std::pair<Partition, Partition> quotient_meet_join(const Partition& nu, const Partition& sigma,
                                                   int d, int r);

// No hook length equal to r (equivalently none divisible by r).
bool is_r_core(const Partition& lambda, int r);

// Partitions obtained by removing one r-ribbon (rim hook), ascending by partition order.
std::vector<Partition> remove_ribbons(const Partition& lambda, int r);
// Partitions obtained by adding one r-ribbon, restricted to lie inside bound.
std::vector<Partition> add_ribbons(const Partition& lambda, int r, const Partition& bound);

}  // namespace ribbonsieve
