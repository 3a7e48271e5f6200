#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qlie {

// Base of all library errors. The CLI maps InputError to exit code 2 and
// CheckError to exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rejected input: malformed files, invalid quivers, bad parameters.
struct InputError : Error {
  using Error::Error;
};

// A mathematical identity that must hold did not. Any of these firing on a
// valid input means the implementation is wrong, not the input.
struct CheckError : Error {
  using Error::Error;
};

// Invariant asserted by the implementation about itself.
struct InternalError : CheckError {
  using CheckError::CheckError;
};

namespace detail {
std::string join_names(const std::vector<std::string>& names);
}

struct CycleFound : InputError {
  std::vector<std::string> cycle;  // witness, as arrow names
  explicit CycleFound(std::vector<std::string> witness)
      : InputError("cycle found: " + detail::join_names(witness)),
        cycle(std::move(witness)) {}
};

struct DuplicateIdentifier : InputError {
  using InputError::InputError;
};

struct DanglingEndpoint : InputError {
  using InputError::InputError;
};

struct EmptyQuiver : InputError {
  using InputError::InputError;
};

struct LengthOne : InputError {
  using InputError::InputError;
};

struct NotComposable : InputError {
  using InputError::InputError;
};

struct SyntaxError : InputError {
  int line;
  SyntaxError(int line_no, const std::string& reason)
      : InputError("line " + std::to_string(line_no) + ": " + reason),
        line(line_no) {}
};

struct DuplicateArrowName : InputError {
  int line;
  DuplicateArrowName(int line_no, const std::string& name)
      : InputError("line " + std::to_string(line_no) +
                   ": duplicate arrow name '" + name + "'"),
        line(line_no) {}
};

struct DuplicateVertexDeclaration : InputError {
  int line;
  DuplicateVertexDeclaration(int line_no, const std::string& name)
      : InputError("line " + std::to_string(line_no) +
                   ": duplicate vertex declaration '" + name + "'"),
        line(line_no) {}
};

struct DimensionMismatch : InputError {
  using InputError::InputError;
};

struct NonPositiveNorm : InputError {
  using InputError::InputError;
};

struct BothProductsNonzero : CheckError {
  using CheckError::CheckError;
};

struct GradedBracketFailure : CheckError {
  int grade_i, grade_j;
  GradedBracketFailure(int i, int j, const std::string& witness)
      : CheckError("graded bracket [n^" + std::to_string(i) + ", n^" +
                   std::to_string(j) + "] failed: " + witness),
        grade_i(i),
        grade_j(j) {}
};

struct NiceBasisViolation : CheckError {
  using CheckError::CheckError;
};

struct HypothesisViolated : CheckError {
  using CheckError::CheckError;
};

struct NormMismatch : CheckError {
  using CheckError::CheckError;
};

struct DecompositionFailure : CheckError {
  int case_no;
  DecompositionFailure(int which, const std::string& path,
                       const std::string& lhs, const std::string& rhs)
      : CheckError("Ricci decomposition case (" + std::to_string(which) +
                   ") failed on path " + path + ": " + lhs + " != " + rhs),
        case_no(which) {}
};

struct NonDiagonalRicci : CheckError {
  using CheckError::CheckError;
};

struct CrossCheckMismatch : CheckError {
  using CheckError::CheckError;
};

}  // namespace qlie
