#include <fstream>
#include <functional>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "riskstrat/corpus/corpus.hpp"
#include "riskstrat/util/csv.hpp"
#include "riskstrat/util/errors.hpp"

namespace riskstrat {

namespace {

using nlohmann::json;

struct RowError {
    std::string message;
};

void report_row_problem(const std::filesystem::path& path, std::size_t line,
                        const std::string& message, bool strict, LoadStats* stats) {
    std::ostringstream os;
    os << path.filename().string() << ":" << line << ": " << message;
    if (strict) throw DataError(os.str());
    if (stats != nullptr) {
        ++stats->rows_skipped;
        stats->messages.push_back(os.str());
    }
}

std::optional<int> parse_int(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
        if (s.size() == 1) return std::nullopt;
    }
    long long v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return std::nullopt;
        v = v * 10 + (s[i] - '0');
        if (v > 1000000000LL) return std::nullopt;
    }
    return static_cast<int>(neg ? -v : v);
}

std::optional<bool> parse_bool01(const std::string& s) {
    if (s == "0") return false;
    if (s == "1") return true;
    return std::nullopt;
}

// Column lookup for CSV headers; returns -1 when absent.
int find_column(const std::vector<std::string>& header, const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return static_cast<int>(i);
    }
    return -1;
}

bool has_extension(const std::filesystem::path& path, const char* ext) {
    return path.extension() == ext;
}

// Parses one report row from named string fields; returns error text on failure.
std::optional<std::string> parse_report_fields(const std::string& report_id,
                                               const std::string& patient_id,
                                               const std::string& date_text,
                                               const std::string& text,
                                               const std::string& injury_text,
                                               ReportRecord& out) {
    if (report_id.empty()) return "missing report_id";
    if (patient_id.empty()) return "missing patient_id";
    const auto date = parse_date(date_text);
    if (!date) return "bad report_date '" + date_text + "' (want YYYY-MM-DD)";
    out.report_id = report_id;
    out.patient_id = patient_id;
    out.report_date = *date;
    out.raw_text = text;
    out.injury_label.reset();
    if (!injury_text.empty()) {
        const auto flag = parse_bool01(injury_text);
        if (!flag) return "bad injury_label '" + injury_text + "' (want 0, 1, or empty)";
        out.injury_label = *flag;
    }
    return std::nullopt;
}

std::optional<std::string> parse_patient_fields(const std::string& patient_id,
                                                const std::string& ipv_text,
                                                const std::string& entry_text,
                                                const std::string& age_text,
                                                const std::string& gender_text,
                                                const std::string& races_text,
                                                const std::string& marital_text,
                                                PatientRecord& out) {
    if (patient_id.empty()) return "missing patient_id";
    const auto ipv = parse_bool01(ipv_text);
    if (!ipv) return "bad ipv_label '" + ipv_text + "' (want 0 or 1)";
    const auto age = parse_int(age_text);
    if (!age || *age < 0) return "bad age '" + age_text + "'";
    const auto gender = gender_from_string(gender_text);
    if (!gender) return "bad gender '" + gender_text + "'";
    const auto marital = marital_from_string(marital_text);
    if (!marital) return "bad marital '" + marital_text + "'";

    out.patient_id = patient_id;
    out.ipv_label = *ipv;
    out.age_years = *age;
    out.gender = *gender;
    out.marital = *marital;

    out.program_entry_date.reset();
    if (!entry_text.empty()) {
        const auto entry = parse_date(entry_text);
        if (!entry) return "bad program_entry_date '" + entry_text + "'";
        if (!out.ipv_label) return "control patient must not carry a program_entry_date";
        out.program_entry_date = *entry;
    }

    out.races.clear();
    std::stringstream ss(races_text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        if (part.empty()) continue;
        const auto race = race_from_string(part);
        if (!race) return "bad race '" + part + "'";
        out.races.insert(*race);
    }
    if (out.races.empty()) out.races.insert(Race::other);
    return std::nullopt;
}

std::string json_string_or_empty(const json& j, const char* key) {
    if (!j.contains(key) || j[key].is_null()) return "";
    if (j[key].is_string()) return j[key].get<std::string>();
    if (j[key].is_number_integer()) return std::to_string(j[key].get<long long>());
    if (j[key].is_boolean()) return j[key].get<bool>() ? "1" : "0";
    return j[key].dump();
}

}  // namespace

std::vector<ReportRecord> load_reports(const std::filesystem::path& path, bool strict,
                                       LoadStats* stats) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open reports file: " + path.string());

    std::vector<ReportRecord> reports;
    std::unordered_set<std::string> seen_ids;

    auto accept = [&](ReportRecord&& rec, std::size_t line) -> bool {
        if (!seen_ids.insert(rec.report_id).second) {
            report_row_problem(path, line, "duplicate report_id '" + rec.report_id + "'", strict, stats);
            return false;
        }
        reports.push_back(std::move(rec));
        if (stats != nullptr) ++stats->rows_ok;
        return true;
    };

    if (has_extension(path, ".jsonl")) {
        std::string line_text;
        std::size_t line = 0;
        while (std::getline(in, line_text)) {
            ++line;
            if (line_text.empty()) continue;
            json j = json::parse(line_text, nullptr, false);
            if (j.is_discarded() || !j.is_object()) {
                report_row_problem(path, line, "invalid JSON object", strict, stats);
                continue;
            }
            ReportRecord rec;
            const auto err = parse_report_fields(
                json_string_or_empty(j, "report_id"), json_string_or_empty(j, "patient_id"),
                json_string_or_empty(j, "report_date"), json_string_or_empty(j, "text"),
                json_string_or_empty(j, "injury_label"), rec);
            if (err) {
                report_row_problem(path, line, *err, strict, stats);
                continue;
            }
            accept(std::move(rec), line);
        }
        return reports;
    }

    CsvReader reader(in);
    std::size_t line = 0;
    const auto header = reader.next(&line);
    if (!header) throw DataError(path.string() + ": empty file (header row required)");
    const int c_report = find_column(*header, "report_id");
    const int c_patient = find_column(*header, "patient_id");
    const int c_date = find_column(*header, "report_date");
    const int c_text = find_column(*header, "text");
    const int c_injury = find_column(*header, "injury_label");
    if (c_report < 0 || c_patient < 0 || c_date < 0 || c_text < 0) {
        throw DataError(path.string() +
                        ": header must name report_id, patient_id, report_date, text");
    }
    while (auto row = reader.next(&line)) {
        auto field = [&](int col) -> std::string {
            return (col >= 0 && col < static_cast<int>(row->size())) ? (*row)[static_cast<std::size_t>(col)] : "";
        };
        ReportRecord rec;
        const auto err = parse_report_fields(field(c_report), field(c_patient), field(c_date),
                                             field(c_text), field(c_injury), rec);
        if (err) {
            report_row_problem(path, line, *err, strict, stats);
            continue;
        }
        accept(std::move(rec), line);
    }
    return reports;
}

std::vector<PatientRecord> load_patients(const std::filesystem::path& path, bool strict,
                                         LoadStats* stats) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open patients file: " + path.string());

    std::vector<PatientRecord> patients;
    std::unordered_set<std::string> seen_ids;

    auto accept = [&](PatientRecord&& rec, std::size_t line) {
        if (!seen_ids.insert(rec.patient_id).second) {
            report_row_problem(path, line, "duplicate patient_id '" + rec.patient_id + "'", strict, stats);
            return;
        }
        patients.push_back(std::move(rec));
        if (stats != nullptr) ++stats->rows_ok;
    };

    if (has_extension(path, ".jsonl")) {
        std::string line_text;
        std::size_t line = 0;
        while (std::getline(in, line_text)) {
            ++line;
            if (line_text.empty()) continue;
            json j = json::parse(line_text, nullptr, false);
            if (j.is_discarded() || !j.is_object()) {
                report_row_problem(path, line, "invalid JSON object", strict, stats);
                continue;
            }
            std::string races = json_string_or_empty(j, "races");
            if (j.contains("races") && j["races"].is_array()) {
                races.clear();
                for (const auto& r : j["races"]) {
                    if (!races.empty()) races.push_back(';');
                    races += r.is_string() ? r.get<std::string>() : r.dump();
                }
            }
            PatientRecord rec;
            const auto err = parse_patient_fields(
                json_string_or_empty(j, "patient_id"), json_string_or_empty(j, "ipv_label"),
                json_string_or_empty(j, "program_entry_date"), json_string_or_empty(j, "age"),
                json_string_or_empty(j, "gender"), races, json_string_or_empty(j, "marital"), rec);
            if (err) {
                report_row_problem(path, line, *err, strict, stats);
                continue;
            }
            accept(std::move(rec), line);
        }
        return patients;
    }

    CsvReader reader(in);
    std::size_t line = 0;
    const auto header = reader.next(&line);
    if (!header) throw DataError(path.string() + ": empty file (header row required)");
    const int c_id = find_column(*header, "patient_id");
    const int c_ipv = find_column(*header, "ipv_label");
    const int c_entry = find_column(*header, "program_entry_date");
    const int c_age = find_column(*header, "age");
    const int c_gender = find_column(*header, "gender");
    const int c_races = find_column(*header, "races");
    const int c_marital = find_column(*header, "marital");
    if (c_id < 0 || c_ipv < 0 || c_age < 0 || c_gender < 0 || c_races < 0 || c_marital < 0) {
        throw DataError(path.string() +
                        ": header must name patient_id, ipv_label, age, gender, races, marital");
    }
    while (auto row = reader.next(&line)) {
        auto field = [&](int col) -> std::string {
            return (col >= 0 && col < static_cast<int>(row->size())) ? (*row)[static_cast<std::size_t>(col)] : "";
        };
        PatientRecord rec;
        const auto err = parse_patient_fields(field(c_id), field(c_ipv), field(c_entry),
                                              field(c_age), field(c_gender), field(c_races),
                                              field(c_marital), rec);
        if (err) {
            report_row_problem(path, line, *err, strict, stats);
            continue;
        }
        accept(std::move(rec), line);
    }
    return patients;
}

void write_reports_csv(const std::filesystem::path& path, const std::vector<ReportRecord>& reports) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write reports file: " + path.string());
    CsvWriter writer(out);
    writer.write_row({"report_id", "patient_id", "report_date", "text", "injury_label"});
    for (const auto& r : reports) {
        writer.write_row({r.report_id, r.patient_id, format_date(r.report_date), r.raw_text,
                          r.injury_label ? (*r.injury_label ? "1" : "0") : ""});
    }
}

void write_patients_csv(const std::filesystem::path& path, const std::vector<PatientRecord>& patients) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write patients file: " + path.string());
    CsvWriter writer(out);
    writer.write_row({"patient_id", "ipv_label", "program_entry_date", "age", "gender", "races",
                      "marital"});
    for (const auto& p : patients) {
        std::string races;
        for (Race r : p.races) {
            if (!races.empty()) races.push_back(';');
            races += to_string(r);
        }
        writer.write_row({p.patient_id, p.ipv_label ? "1" : "0",
                          p.program_entry_date ? format_date(*p.program_entry_date) : "",
                          std::to_string(p.age_years), to_string(p.gender), races,
                          to_string(p.marital)});
    }
}

}  // namespace riskstrat
