#pragma once

#include <stdexcept>
#include <string>

namespace cyclo {

enum class ErrorCode {
  kInvalidSpec = 1,
  kInvalidTable,
  kTrivialFreeProductFactor,
  kBackendMismatch,
  kUnknownSymbol,
  kIdentityGenerator,
  kBallTooLarge,
  kEmptySelection,
  kTrivialSubgraph,
  kCapacityOverflow,
  kTooLarge,
  kDivisionByZero,
  kImagesDoNotGenerate,
  kUnsupported,
  kInvalidArgument,
};

const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cyclo
