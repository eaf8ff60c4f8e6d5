#pragma once

#include <stdexcept>

namespace unionbounds {

// An input file or JSON document is structurally malformed.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The given summary or decomposition cannot be realized by any event family.
struct InfeasibleError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace unionbounds
