#include "hopfkit/error.hpp"

namespace hopfkit {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::BadPermutation: return "BadPermutation";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::NotGroupLike: return "NotGroupLike";
    case ErrorCode::ConstructionInvalid: return "ConstructionInvalid";
    case ErrorCode::Unverified: return "Unverified";
    case ErrorCode::CounitNotOne: return "CounitNotOne";
    case ErrorCode::NotCocommutative: return "NotCocommutative";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotHeapEndo: return "NotHeapEndo";
    case ErrorCode::NoCircUnit: return "NoCircUnit";
    case ErrorCode::NotCommutativeAlgebra: return "NotCommutativeAlgebra";
    case ErrorCode::NotAlgebraMap: return "NotAlgebraMap";
    case ErrorCode::AntipodeCommutationFails: return "AntipodeCommutationFails";
    case ErrorCode::FixedPointFails: return "FixedPointFails";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::CounitCondFails: return "CounitCondFails";
    case ErrorCode::ImageNotGroupLike: return "ImageNotGroupLike";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::NoAntipode: return "NoAntipode";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DanglingReference: return "DanglingReference";
  }
  return "Unknown";
}

}  // namespace hopfkit
