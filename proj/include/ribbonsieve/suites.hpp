#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ribbonsieve/io.hpp"

namespace ribbonsieve {

struct CaseResult {
  std::string name;
  Json detail;
  bool ok = false;
};

struct VerificationReport {
  std::string suite;
  Json params;
  std::vector<CaseResult> cases;
  double wall_seconds = 0;

  bool ok() const;
  // Omits wall time so equal inputs give byte-identical reports.
  Json to_json() const;
};

// Independent per-case streams derived from one root seed.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index);

Matrix<Rational> random_basis(int d, int n, std::mt19937_64& rng, int bound = 5);
// Rows are C_r eigenvectors sorted by eigenspace, with a random spec vector.
Matrix<Rational> random_block_basis(int d, int n, int r, std::mt19937_64& rng, int bound = 5);
Mobius<Rational> random_mobius(std::mt19937_64& rng, int bound = 4);

struct RectangleFilter {
  int max_n = 16;
  std::optional<int> d;
  std::optional<int> n;
  std::optional<int> r;
};

VerificationReport run_csp_suite(const RectangleFilter& filter);
VerificationReport run_dihedral_suite(const RectangleFilter& filter);
// Every skew shape inside rows x cols and every r dividing its size.
VerificationReport run_llt_suite(int rows, int cols, std::optional<int> r = std::nullopt);

struct WronskiParams {
  std::vector<std::pair<int, int>> shapes{{2, 4}, {2, 5}, {3, 6}, {3, 7}};
  int cases = 1000;
  int block_cases = 500;
  std::uint64_t seed = 1;
  std::optional<int> r;
};
VerificationReport run_wronski_suite(const WronskiParams& params);

VerificationReport run_puiseux_suite(int truncation_order = kDefaultTruncationOrder,
                                     std::uint64_t seed = 1, int float_cases = 200);

}  // namespace ribbonsieve
