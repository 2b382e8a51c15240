#include "normtori/errors.hpp"

namespace normtori {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::IncompatibleModulus: return "IncompatibleModulus";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ResidueNotOne: return "ResidueNotOne";
    case ErrorKind::WildCharacteristic: return "WildCharacteristic";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NormNotOne: return "NormNotOne";
    case ErrorKind::NotAField: return "NotAField";
    case ErrorKind::TowerMismatch: return "TowerMismatch";
    case ErrorKind::DependentGenerators: return "DependentGenerators";
    case ErrorKind::UnsupportedShape: return "UnsupportedShape";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::UnknownComponent: return "UnknownComponent";
    case ErrorKind::EmptyModel: return "EmptyModel";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::MissingEdgeValue: return "MissingEdgeValue";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EvidenceFailed: return "EvidenceFailed";
    case ErrorKind::VerificationMismatch: return "VerificationMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace normtori
