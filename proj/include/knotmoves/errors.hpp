#pragma once

#include <stdexcept>
#include <string>

namespace knotmoves {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct NotRealizable : std::runtime_error {
  explicit NotRealizable(const std::string& what) : std::runtime_error(what) {}
};

struct InapplicableMove : std::runtime_error {
  explicit InapplicableMove(const std::string& what) : std::runtime_error(what) {}
};

struct ReductionFailed : std::runtime_error {
  explicit ReductionFailed(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace knotmoves
