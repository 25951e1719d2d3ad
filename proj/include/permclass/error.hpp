#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace permclass {

enum class Errc {
  InvalidSequence,
  InvalidPointSet,
  InvalidInflation,
  EmptyInput,
  UseSegStatUnbounded,
  InvalidIndex,
  NotATree,
  UseSeedVector,
  NeedMoreTerms,
  Unsupported,
  NoRootAboveOne,
  Undefined,
};

std::string_view errc_name(Errc code) noexcept;

/// Domain error raised by every operation in the library. The code names the
/// violated precondition; what() carries a one-line human-readable diagnostic.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace permclass
