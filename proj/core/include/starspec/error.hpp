#pragma once

#include <stdexcept>
#include <string>

namespace starspec {

enum class Errc {
  kNotATree,
  kMultipleBranchVertices,
  kInvalidShape,
  kNonPositiveT,
  kRootCountMismatch,
  kDimensionMismatch,
  kTTooSmall,
  kTooLarge,
  kCrossCheckMismatch,
  kParse,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace starspec
