#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "riskstrat/util/dates.hpp"

namespace riskstrat {

enum class Gender { female, male };

enum class Race { black, hispanic, white, other };

enum class Marital { single, married, other };

enum class AgeBin { under30, b30_50, b51_65, b66plus };

enum class SplitPart { train, validation, test };

/// One radiology report. `tokens` is empty until cleaning has run.
struct ReportRecord {
    std::string report_id;
    std::string patient_id;
    Date report_date;
    std::string raw_text;
    std::vector<std::string> tokens;
    std::optional<bool> injury_label;
};

struct PatientRecord {
    std::string patient_id;
    bool ipv_label = false;
    std::optional<Date> program_entry_date;
    int age_years = 0;
    Gender gender = Gender::female;
    std::set<Race> races;  // non-empty; multi-membership allowed
    Marital marital = Marital::other;
};

/// Patient-level train/validation/test assignment for one shuffled trial.
/// Reports never get their own assignment; they inherit the patient's.
struct TrialSplit {
    int trial_index = 0;
    std::uint64_t seed = 0;
    std::unordered_map<std::string, SplitPart> assignment;
};

std::string to_string(Gender g);
std::string to_string(Race r);
std::string to_string(Marital m);
std::string to_string(AgeBin b);
std::string to_string(SplitPart s);

std::optional<Gender> gender_from_string(const std::string& s);
std::optional<Race> race_from_string(const std::string& s);
std::optional<Marital> marital_from_string(const std::string& s);

/// Age discretization; bins are <30, 30-50, 51-65, 66+ with inclusive upper
/// boundaries (50 is in 30-50, 65 in 51-65). Negative ages are rejected.
AgeBin bin_age(int age_years);

}  // namespace riskstrat
