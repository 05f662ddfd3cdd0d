#include "einstein_cyl/error.hpp"

namespace ecyl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSample: return "invalid-sample";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Usage: return "usage";
    case ErrorKind::OutsideDomain: return "outside-domain";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::Invalid: return "invalid";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::NoBoundary: return "no-boundary";
    case ErrorKind::SingularConfiguration: return "singular-configuration";
    case ErrorKind::InvalidInterval: return "invalid-interval";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace ecyl
