#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace riskstrat {

/// RFC 4180-style CSV reader: quoted fields may contain commas, doubled
/// quotes, and embedded newlines. Tolerates CRLF line endings.
class CsvReader {
public:
    explicit CsvReader(std::istream& in) : in_(in) {}

    /// Next record, or nullopt at end of input. `line` receives the
    /// 1-based line number on which the record started.
    std::optional<std::vector<std::string>> next(std::size_t* line = nullptr);

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void write_row(const std::vector<std::string>& fields);

private:
    std::ostream& out_;
};

/// Quotes a single field if it contains a delimiter, quote, or newline.
std::string csv_escape(const std::string& field);

}  // namespace riskstrat
