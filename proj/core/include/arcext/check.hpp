#pragma once

#include <stdexcept>
#include <string>

namespace arcext {

// Internal consistency violations. These guard invariants that the theory
// guarantees; if one fires, the engine (not the input) is wrong.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Bad user input (mismatched block sizes, empty domain, unparsable weight).
class domain_error : public std::invalid_argument {
 public:
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace arcext

#define ARCEXT_CHECK(cond, msg)                                              \
  do {                                                                       \
    if (!(cond))                                                             \
      throw ::arcext::internal_error(std::string(msg) + " (" + __FILE__ +    \
                                     ":" + std::to_string(__LINE__) + ")");  \
  } while (0)
