#pragma once

#include <stdexcept>
#include <string>

namespace riskstrat {

/// Raised for malformed or inconsistent input data (bad rows, impossible
/// configurations, contract violations discovered while processing files).
/// The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace riskstrat
