#include "tight/error.hpp"

namespace tight {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Error";
}

}  // namespace tight
