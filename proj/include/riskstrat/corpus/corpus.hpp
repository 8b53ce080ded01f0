#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "riskstrat/corpus/records.hpp"

namespace riskstrat {

/// Tokenize one report body. Text after the last header marker and before
/// the first footer marker is kept; every character outside [A-Za-z0-9] and
/// whitespace is treated as punctuation and replaced by a space; the result
/// is lowercased and split on whitespace runs. Digits survive (measurement
/// strings are meaningful in this domain).
std::vector<std::string> clean_text(const std::string& raw,
                                    const std::vector<std::string>& header_markers = {},
                                    const std::vector<std::string>& footer_markers = {});

struct Corpus {
    std::vector<ReportRecord> reports;
    std::vector<PatientRecord> patients;
};

/// Runs clean_text over every report in place.
void clean_corpus(Corpus& corpus,
                  const std::vector<std::string>& header_markers = {},
                  const std::vector<std::string>& footer_markers = {});

struct PruneStats {
    std::size_t reports_removed = 0;
    std::size_t patients_removed = 0;
};

/// Drops reports with fewer than `min_tokens` tokens, then patients left
/// with no reports. Fails if either label class would end up empty.
PruneStats prune_corpus(Corpus& corpus, int min_tokens);

struct SplitFractions {
    double train = 0.6;
    double validation = 0.2;
    double test = 0.2;
};

/// Deterministic patient-level splits: for each trial the patient list is
/// shuffled by a generator seeded with mix(master_seed, trial_index), then
/// cut by floor(fraction * n) with the remainder going to train.
std::vector<TrialSplit> make_trial_splits(const std::vector<PatientRecord>& patients,
                                          SplitFractions fractions, int n_trials,
                                          std::uint64_t master_seed);

// ---------------------------------------------------------------------------
// File ingestion. CSV needs a header row; JSONL uses the same field names as
// keys. Malformed rows are reported with their line number; strict mode
// aborts on the first one, lenient mode skips and counts.
// ---------------------------------------------------------------------------

struct LoadStats {
    std::size_t rows_ok = 0;
    std::size_t rows_skipped = 0;
    std::vector<std::string> messages;  // one per malformed row (lenient mode)
};

std::vector<ReportRecord> load_reports(const std::filesystem::path& path, bool strict,
                                       LoadStats* stats = nullptr);

std::vector<PatientRecord> load_patients(const std::filesystem::path& path, bool strict,
                                         LoadStats* stats = nullptr);

void write_reports_csv(const std::filesystem::path& path, const std::vector<ReportRecord>& reports);

void write_patients_csv(const std::filesystem::path& path, const std::vector<PatientRecord>& patients);

}  // namespace riskstrat
