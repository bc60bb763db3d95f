#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace nipcube {

/// Failure categories surfaced by the library. CLI maps these onto its
/// exit-code contract (usage vs computation errors).
enum class Errc {
  InvalidSpec,
  NonPowerOfTwo,
  OddWindow,
  Disconnected,
  Underflow,
  PathExplosion,
  UnsupportedFamily,
  IndivisibleBlock,
  NonPowerOfTwoGrid,
  IndexOutOfRange,
  BadMagic,
  VersionMismatch,
  CorruptPayload,
  AsymmetryDetected,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::NonPowerOfTwo: return "NonPowerOfTwo";
    case Errc::OddWindow: return "OddWindow";
    case Errc::Disconnected: return "Disconnected";
    case Errc::Underflow: return "Underflow";
    case Errc::PathExplosion: return "PathExplosion";
    case Errc::UnsupportedFamily: return "UnsupportedFamily";
    case Errc::IndivisibleBlock: return "IndivisibleBlock";
    case Errc::NonPowerOfTwoGrid: return "NonPowerOfTwoGrid";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::BadMagic: return "BadMagic";
    case Errc::VersionMismatch: return "VersionMismatch";
    case Errc::CorruptPayload: return "CorruptPayload";
    case Errc::AsymmetryDetected: return "AsymmetryDetected";
  }
  return "Unknown";
}

/// True for errors caused by arguments that can never work (as opposed to
/// failures of a particular computation, e.g. a disconnected random sample).
inline bool errc_is_usage(Errc c) {
  switch (c) {
    case Errc::InvalidSpec:
    case Errc::NonPowerOfTwo:
    case Errc::OddWindow:
    case Errc::UnsupportedFamily:
    case Errc::IndivisibleBlock:
    case Errc::NonPowerOfTwoGrid:
    case Errc::IndexOutOfRange:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool ok, Errc code, const std::string& message) {
  if (!ok) fail(code, message);
}

}  // namespace nipcube
