#pragma once

#include <stdexcept>
#include <string>

namespace downsets {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// poset-core
struct CycleError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct CapacityError : Error { using Error::Error; };
struct NotADownSet : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// downset-engine
struct TraceMismatch : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };

// boolean-lattice
struct DomainError : Error { using Error::Error; };
struct MissingInput : Error { using Error::Error; };

// dedekind-methods
struct ShapeError : Error { using Error::Error; };
struct StructureError : Error { using Error::Error; };

}  // namespace downsets
