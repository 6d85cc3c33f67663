#include "dtcell/error.hpp"

namespace dtcell {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NonReducedWord: return "NonReducedWord";
    case ErrorKind::InapplicableMove: return "InapplicableMove";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotGaussianDecomposable: return "NotGaussianDecomposable";
    case ErrorKind::ZeroFunction: return "ZeroFunction";
    case ErrorKind::ZeroFaceValue: return "ZeroFaceValue";
    case ErrorKind::NonGenericPoint: return "NonGenericPoint";
    case ErrorKind::FrozenVertex: return "FrozenVertex";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NotSeedIsomorphism: return "NotSeedIsomorphism";
    case ErrorKind::SeedMismatch: return "SeedMismatch";
    case ErrorKind::NotGreedyWord: return "NotGreedyWord";
    case ErrorKind::PlanVerificationFailed: return "PlanVerificationFailed";
  }
  return "Unknown";
}

}  // namespace dtcell
