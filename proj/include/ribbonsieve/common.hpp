#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ribbonsieve {

using Integer = mpz_class;
using Rational = mpq_class;

enum class ErrorKind {
  ShapeOverflow,
  TooManyParts,
  MalformedBeadSet,
  NotNested,
  InvalidPartition,
  InvalidShape,
  InvalidTableau,
  Malformed,
  CoreMismatch,
  HoleNotInnerCorner,
  OutOfRange,
  SizeMismatch,
  ShapeNotCompatible,
  NonAdjacentCrossing,
  OddLength,
  ConditionViolated,
  NondivisibleSize,
  InternalMismatch,
  InternalNondivisibility,
  DependentBasis,
  RankDeficient,
  DegreeOverflow,
  NotFixed,
  InvalidSpec,
  IllPosed,
  ZeroPolynomial,
  DegenerateDiscriminant,
  DivideByZeroSeries,
  LeadingCoefficientNotSquare,
  NoUniqueMinimum,
  NonDistinctValuations,
  InsufficientPrecision,
  BadParameter,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// "p/q" with q omitted when it is 1.
std::string to_string(const Rational& x);
Rational parse_rational(const std::string& text);

// True iff x = y*y for some rational y; writes y >= 0 when root is non-null.
bool rational_sqrt(const Rational& x, Rational* root);

}  // namespace ribbonsieve
