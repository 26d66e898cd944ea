#pragma once

#include <stdexcept>
#include <string>

namespace hopfkit {

enum class ErrorCode {
  ZeroInverse,
  DimMismatch,
  BadPermutation,
  Singular,
  FieldMismatch,
  UnsupportedDimension,
  NotGroupLike,
  ConstructionInvalid,
  Unverified,
  CounitNotOne,
  NotCocommutative,
  NotCommutative,
  NotIdempotent,
  NotHeapEndo,
  NoCircUnit,
  NotCommutativeAlgebra,
  NotAlgebraMap,
  AntipodeCommutationFails,
  FixedPointFails,
  NotAutomorphism,
  CounitCondFails,
  ImageNotGroupLike,
  NotSurjective,
  NoAntipode,
  ParseError,
  DanglingReference,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hopfkit
