#ifndef ZC1_ERRORS_HPP
#define ZC1_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zc1 {

// Structural problems: malformed JSON, missing fields, ragged rows, bad
// rationals. Distinct from semantic validation failures so the CLI can
// map them to different exit codes.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Constraint machinery failures (incoherent profile, missing prior order,
// unbounded system, inadmissible order).
struct EngineError : std::runtime_error {
  explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zc1

#endif
