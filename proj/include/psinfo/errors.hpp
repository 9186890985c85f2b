#ifndef PSINFO_ERRORS_HPP
#define PSINFO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace psinfo {

// A computed quantity broke a mathematical invariant (normalization, positivity,
// cross-check agreement). Distinct from bad input, which raises std::invalid_argument.
class InvariantViolation : public std::runtime_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace psinfo

#endif  // PSINFO_ERRORS_HPP
