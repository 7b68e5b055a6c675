#include "scg/errors.hpp"

#include <string>

namespace scg {

ParseError::ParseError(const std::string& message, std::string field, int line)
    : Error([&] {
        std::string m = message;
        if (!field.empty()) m += " (field " + field + ")";
        if (line > 0) m += " at line " + std::to_string(line);
        return m;
      }()),
      field_(std::move(field)),
      line_(line) {}

CapExceeded::CapExceeded(double estimate, std::uint64_t cap)
    : Error("enumeration of ~" + std::to_string(static_cast<long double>(estimate)) +
            " outcomes exceeds the cap of " + std::to_string(cap)),
      estimate_(estimate) {}

}  // namespace scg
