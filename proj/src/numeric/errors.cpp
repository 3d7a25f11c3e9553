#include "li/error.hpp"

namespace li {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::validation: return "validation";
    case ErrorKind::domain: return "domain";
    case ErrorKind::pole: return "pole";
    case ErrorKind::precision: return "precision";
    case ErrorKind::convention: return "convention";
    case ErrorKind::coverage: return "coverage";
    case ErrorKind::format: return "format";
    case ErrorKind::checksum: return "checksum";
    case ErrorKind::io: return "io";
    case ErrorKind::resource: return "resource";
    case ErrorKind::verification: return "verification";
  }
  return "unknown";
}

}  // namespace li
