#include "starspec/error.hpp"

namespace starspec {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kNotATree: return "NotATree";
    case Errc::kMultipleBranchVertices: return "MultipleBranchVertices";
    case Errc::kInvalidShape: return "InvalidShape";
    case Errc::kNonPositiveT: return "NonPositiveT";
    case Errc::kRootCountMismatch: return "RootCountMismatch";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kTTooSmall: return "TTooSmall";
    case Errc::kTooLarge: return "TooLarge";
    case Errc::kCrossCheckMismatch: return "CrossCheckMismatch";
    case Errc::kParse: return "Parse";
  }
  return "Unknown";
}

}  // namespace starspec
