#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

// Thrown when a computation would need coefficients beyond the known
// truncation window. Mapped to exit code 2 by the CLI.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qseries
