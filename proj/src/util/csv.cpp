#include "riskstrat/util/csv.hpp"

namespace riskstrat {

std::optional<std::vector<std::string>> CsvReader::next(std::size_t* line) {
    int c = in_.get();
    if (c == EOF) return std::nullopt;

    ++line_;
    if (line) *line = line_;

    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;

    auto push_field = [&] {
        fields.push_back(std::move(field));
        field.clear();
    };

    while (true) {
        if (c == EOF) {
            push_field();
            return fields;
        }
        const char ch = static_cast<char>(c);
        if (quoted) {
            if (ch == '"') {
                const int peek = in_.peek();
                if (peek == '"') {
                    in_.get();
                    field.push_back('"');
                } else {
                    quoted = false;
                }
            } else {
                if (ch == '\n') ++line_;
                field.push_back(ch);
            }
        } else if (ch == '"' && field.empty()) {
            quoted = true;
        } else if (ch == ',') {
            push_field();
        } else if (ch == '\r') {
            // swallow; the following '\n' terminates the record
        } else if (ch == '\n') {
            push_field();
            return fields;
        } else {
            field.push_back(ch);
        }
        c = in_.get();
    }
}

std::string csv_escape(const std::string& field) {
    const bool needs_quotes = field.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out.push_back('"');
        out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

void CsvWriter::write_row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out_.put(',');
        out_ << csv_escape(fields[i]);
    }
    out_.put('\n');
}

}  // namespace riskstrat
