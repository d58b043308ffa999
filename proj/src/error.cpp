#include "xmodcat/error.hpp"

namespace xmodcat {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::MatrixShapeMismatch: return "MatrixShapeMismatch";
    case ErrorKind::QuotientNotAbelian: return "QuotientNotAbelian";
    case ErrorKind::NotGammaStable: return "NotGammaStable";
    case ErrorKind::NotValidated: return "NotValidated";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::BadChoice: return "BadChoice";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotCoherent: return "NotCoherent";
    case ErrorKind::FNotConstantOnCosets: return "FNotConstantOnCosets";
    case ErrorKind::NotStrict: return "NotStrict";
    case ErrorKind::NotRegularFactorSet: return "NotRegularFactorSet";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::WrongType: return "WrongType";
    case ErrorKind::BadSection: return "BadSection";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

}  // namespace xmodcat
