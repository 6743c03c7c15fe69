#include "ribbonsieve/common.hpp"

namespace ribbonsieve {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ShapeOverflow: return "shape-overflow";
    case ErrorKind::TooManyParts: return "too-many-parts";
    case ErrorKind::MalformedBeadSet: return "malformed-bead-set";
    case ErrorKind::NotNested: return "not-nested";
    case ErrorKind::InvalidPartition: return "invalid-partition";
    case ErrorKind::InvalidShape: return "invalid-shape";
    case ErrorKind::InvalidTableau: return "invalid-tableau";
    case ErrorKind::Malformed: return "malformed";
    case ErrorKind::CoreMismatch: return "core-mismatch";
    case ErrorKind::HoleNotInnerCorner: return "hole-not-inner-corner";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::SizeMismatch: return "size-mismatch";
    case ErrorKind::ShapeNotCompatible: return "shape-not-self-complementary-compatible";
    case ErrorKind::NonAdjacentCrossing: return "non-adjacent-crossing";
    case ErrorKind::OddLength: return "odd-length";
    case ErrorKind::ConditionViolated: return "condition-violated";
    case ErrorKind::NondivisibleSize: return "nondivisible-size";
    case ErrorKind::InternalMismatch: return "internal-mismatch";
    case ErrorKind::InternalNondivisibility: return "internal-nondivisibility";
    case ErrorKind::DependentBasis: return "dependent-basis";
    case ErrorKind::RankDeficient: return "rank-deficient";
    case ErrorKind::DegreeOverflow: return "degree-overflow";
    case ErrorKind::NotFixed: return "not-fixed";
    case ErrorKind::InvalidSpec: return "invalid-spec";
    case ErrorKind::IllPosed: return "ill-posed";
    case ErrorKind::ZeroPolynomial: return "zero-polynomial";
    case ErrorKind::DegenerateDiscriminant: return "degenerate-discriminant";
    case ErrorKind::DivideByZeroSeries: return "divide-by-zero-series";
    case ErrorKind::LeadingCoefficientNotSquare: return "leading-coefficient-not-square";
    case ErrorKind::NoUniqueMinimum: return "no-unique-minimum";
    case ErrorKind::NonDistinctValuations: return "non-distinct-valuations";
    case ErrorKind::InsufficientPrecision: return "insufficient-precision";
    case ErrorKind::BadParameter: return "bad-parameter";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational value;
  if (text.empty() || value.set_str(text, 10) != 0 || value.get_den() == 0) {
    throw Error(ErrorKind::Malformed, "not a rational: '" + text + "'");
  }
  value.canonicalize();
  return value;
}

bool rational_sqrt(const Rational& x, Rational* root) {
  if (sgn(x) < 0) return false;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) {
    return false;
  }
  if (root != nullptr) {
    Integer num = sqrt(Integer(x.get_num()));
    Integer den = sqrt(Integer(x.get_den()));
    *root = Rational(num, den);
    root->canonicalize();
  }
  return true;
}

}  // namespace ribbonsieve
