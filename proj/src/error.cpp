#include "tw/error.hpp"

namespace tw {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::IdOutOfRange: return "IdOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::InconsistentOrder: return "InconsistentOrder";
    case ErrorCode::BadDiameter: return "BadDiameter";
    case ErrorCode::BadLeafCount: return "BadLeafCount";
    case ErrorCode::BadArg: return "BadArg";
    case ErrorCode::InfeasibleShape: return "InfeasibleShape";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::BadPos: return "BadPos";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::BadId: return "BadId";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::EmptyClass: return "EmptyClass";
    case ErrorCode::NotCaterpillar: return "NotCaterpillar";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::RangeTooLarge: return "RangeTooLarge";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace tw
