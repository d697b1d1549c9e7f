#include "lgkit/error.hpp"

namespace lgkit {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse: return "parse_error";
    case ErrorKind::NotInvertible: return "not_invertible";
    case ErrorKind::BoundExceeded: return "bound_exceeded";
    case ErrorKind::Consistency: return "consistency_failure";
    case ErrorKind::InvalidArgument: return "invalid_argument";
    }
    return "unknown";
}

} // namespace lgkit
