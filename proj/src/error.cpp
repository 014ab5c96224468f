#include "stegodct/error.hpp"

#include <utility>

namespace stegodct {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::MalformedHex: return "malformed-hex";
    case ErrorKind::InvalidPadding: return "invalid-padding";
    case ErrorKind::LengthMismatch: return "length-mismatch";
    case ErrorKind::CharsetViolation: return "charset-violation";
    case ErrorKind::DimensionNotMultipleOf8: return "dimension-not-multiple-of-8";
    case ErrorKind::NonFiniteCoefficient: return "non-finite-coefficient";
    case ErrorKind::InsufficientCapacity: return "insufficient-capacity";
    case ErrorKind::PlanPlaneMismatch: return "plan-plane-mismatch";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::NotFound: return "not-found";
    case ErrorKind::BadMagic: return "bad-magic";
    case ErrorKind::MaxvalNot255: return "maxval-not-255";
    case ErrorKind::TruncatedData: return "truncated-data";
    case ErrorKind::TooSmall: return "too-small";
    case ErrorKind::IoFailure: return "io-failure";
    case ErrorKind::KeyfileMalformed: return "keyfile-malformed";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, std::string message)
    : kind_(kind), message_(std::move(message)) {
  rebuild_what();
}

void Error::set_stage(std::string_view stage) {
  if (!stage_.empty()) return;
  stage_ = stage;
  rebuild_what();
}

void Error::rebuild_what() {
  what_.clear();
  if (!stage_.empty()) {
    what_ += stage_;
    what_ += ": ";
  }
  what_ += to_string(kind_);
  what_ += ": ";
  what_ += message_;
}

void raise(ErrorKind kind, std::string message) {
  throw Error(kind, std::move(message));
}

}  // namespace stegodct
