#include "cyclo/rational.hpp"

#include <limits>

#include "cyclo/error.hpp"

namespace cyclo {

Integer numerator_of(const Rational& r) {
  return Integer(boost::multiprecision::numerator(r));
}

Integer denominator_of(const Rational& r) {
  return Integer(boost::multiprecision::denominator(r));
}

std::string to_string(const Rational& r) {
  const Integer num = numerator_of(r);
  const Integer den = denominator_of(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal(const Rational& r, int digits) {
  Integer num = numerator_of(r);
  const Integer den = denominator_of(r);
  const bool negative = num < 0;
  if (negative) num = -num;
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Integer scaled = (num * scale * 2 + den) / (den * 2);
  const Integer whole = scaled / scale;
  Integer frac = scaled % scale;
  std::string out = whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') +
           f;
  }
  if (negative && scaled != 0) out = "-" + out;
  return out;
}

std::optional<std::pair<std::int64_t, std::int64_t>> to_int64_pair(
    const Rational& r) {
  const Integer num = numerator_of(r);
  const Integer den = denominator_of(r);
  const Integer lo = std::numeric_limits<std::int64_t>::min();
  const Integer hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) return std::nullopt;
  return std::make_pair(num.convert_to<std::int64_t>(),
                        den.convert_to<std::int64_t>());
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kInvalidTable: return "InvalidTable";
    case ErrorCode::kTrivialFreeProductFactor: return "TrivialFreeProductFactor";
    case ErrorCode::kBackendMismatch: return "BackendMismatch";
    case ErrorCode::kUnknownSymbol: return "UnknownSymbol";
    case ErrorCode::kIdentityGenerator: return "IdentityGenerator";
    case ErrorCode::kBallTooLarge: return "BallTooLarge";
    case ErrorCode::kEmptySelection: return "EmptySelection";
    case ErrorCode::kTrivialSubgraph: return "TrivialSubgraph";
    case ErrorCode::kCapacityOverflow: return "CapacityOverflow";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kImagesDoNotGenerate: return "ImagesDoNotGenerate";
    case ErrorCode::kUnsupported: return "Unsupported";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace cyclo
