#pragma once

#include <stdexcept>
#include <string>

namespace torinv {

// Base for all library errors. Subclasses identify the failed precondition;
// what() carries a human-readable certificate of the failure.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct NotSaturated : Error { using Error::Error; };
struct NotASublattice : Error { using Error::Error; };
struct NotAntisymmetric : Error { using Error::Error; };
struct NotInSpan : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };
struct NotCofull : Error { using Error::Error; };          // P-basis does not span N
struct Condition5aViolated : Error { using Error::Error; };
struct NotAHomomorphism : Error { using Error::Error; };
struct SplittingAbsent : Error { using Error::Error; };
struct OracleMissing : Error { using Error::Error; };
struct SingularChart : Error { using Error::Error; };
struct UnboundedPolytope : Error { using Error::Error; };
struct EmptyPolytope : Error { using Error::Error; };
struct NotAPolytope : Error { using Error::Error; };

} // namespace torinv
