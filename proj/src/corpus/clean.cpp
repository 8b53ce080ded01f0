#include <algorithm>
#include <cctype>

#include "riskstrat/corpus/corpus.hpp"
#include "riskstrat/util/errors.hpp"

namespace riskstrat {

namespace {

// [start, end) region of `raw` that survives header/footer stripping.
std::pair<std::size_t, std::size_t> body_range(const std::string& raw,
                                               const std::vector<std::string>& header_markers,
                                               const std::vector<std::string>& footer_markers) {
    std::size_t start = 0;
    for (const auto& marker : header_markers) {
        if (marker.empty()) continue;
        const std::size_t pos = raw.rfind(marker);
        if (pos != std::string::npos) {
            start = std::max(start, pos + marker.size());
        }
    }
    std::size_t end = raw.size();
    for (const auto& marker : footer_markers) {
        if (marker.empty()) continue;
        const std::size_t pos = raw.find(marker, start);
        if (pos != std::string::npos) {
            end = std::min(end, pos);
        }
    }
    return {start, std::max(start, end)};
}

}  // namespace

std::vector<std::string> clean_text(const std::string& raw,
                                    const std::vector<std::string>& header_markers,
                                    const std::vector<std::string>& footer_markers) {
    const auto [start, end] = body_range(raw, header_markers, footer_markers);

    std::vector<std::string> tokens;
    std::string current;
    for (std::size_t i = start; i < end; ++i) {
        const unsigned char c = static_cast<unsigned char>(raw[i]);
        if (std::isalnum(c) && c < 0x80) {
            current.push_back(static_cast<char>(std::tolower(c)));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

void clean_corpus(Corpus& corpus, const std::vector<std::string>& header_markers,
                  const std::vector<std::string>& footer_markers) {
    for (auto& report : corpus.reports) {
        report.tokens = clean_text(report.raw_text, header_markers, footer_markers);
    }
}

PruneStats prune_corpus(Corpus& corpus, int min_tokens) {
    PruneStats stats;
    std::vector<ReportRecord> kept_reports;
    kept_reports.reserve(corpus.reports.size());
    std::set<std::string> patients_with_reports;
    for (auto& report : corpus.reports) {
        if (static_cast<int>(report.tokens.size()) >= min_tokens) {
            patients_with_reports.insert(report.patient_id);
            kept_reports.push_back(std::move(report));
        } else {
            ++stats.reports_removed;
        }
    }
    std::vector<PatientRecord> kept_patients;
    kept_patients.reserve(corpus.patients.size());
    bool has_pos = false, has_neg = false;
    for (auto& patient : corpus.patients) {
        if (patients_with_reports.count(patient.patient_id) > 0) {
            (patient.ipv_label ? has_pos : has_neg) = true;
            kept_patients.push_back(std::move(patient));
        } else {
            ++stats.patients_removed;
        }
    }
    if (!has_pos || !has_neg) {
        throw DataError("pruning left zero patients in one label class (min_tokens=" +
                        std::to_string(min_tokens) + ")");
    }
    corpus.reports = std::move(kept_reports);
    corpus.patients = std::move(kept_patients);
    return stats;
}

}  // namespace riskstrat
