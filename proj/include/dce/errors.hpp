#ifndef DCE_ERRORS_HPP
#define DCE_ERRORS_HPP

/// @file errors.hpp
/// Error categories shared between the configuration layer and the CLI.

#include <stdexcept>
#include <string>

namespace dce {

/// A configuration problem the user can fix: unknown key, malformed value,
/// or a physics parameter outside its allowed range. Messages name the
/// offending "section.key" or parameter. The CLI maps this to exit code 2.
class config_error : public std::runtime_error {
  public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A reference-value table failed its own integrity checks (corrupt or
/// incomplete). The CLI maps this to exit code 2 as an internal error.
class golden_error : public std::runtime_error {
  public:
    explicit golden_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dce

#endif  // DCE_ERRORS_HPP
