#include "riskstrat/corpus/records.hpp"

#include "riskstrat/util/errors.hpp"

namespace riskstrat {

std::string to_string(Gender g) {
    return g == Gender::female ? "female" : "male";
}

std::string to_string(Race r) {
    switch (r) {
        case Race::black: return "black";
        case Race::hispanic: return "hispanic";
        case Race::white: return "white";
        case Race::other: return "other";
    }
    return "other";
}

std::string to_string(Marital m) {
    switch (m) {
        case Marital::single: return "single";
        case Marital::married: return "married";
        case Marital::other: return "other";
    }
    return "other";
}

std::string to_string(AgeBin b) {
    switch (b) {
        case AgeBin::under30: return "<30";
        case AgeBin::b30_50: return "30-50";
        case AgeBin::b51_65: return "51-65";
        case AgeBin::b66plus: return "66+";
    }
    return "?";
}

std::string to_string(SplitPart s) {
    switch (s) {
        case SplitPart::train: return "train";
        case SplitPart::validation: return "validation";
        case SplitPart::test: return "test";
    }
    return "?";
}

std::optional<Gender> gender_from_string(const std::string& s) {
    if (s == "female") return Gender::female;
    if (s == "male") return Gender::male;
    return std::nullopt;
}

std::optional<Race> race_from_string(const std::string& s) {
    if (s == "black") return Race::black;
    if (s == "hispanic") return Race::hispanic;
    if (s == "white") return Race::white;
    if (s == "other") return Race::other;
    return std::nullopt;
}

std::optional<Marital> marital_from_string(const std::string& s) {
    if (s == "single") return Marital::single;
    if (s == "married") return Marital::married;
    if (s == "other") return Marital::other;
    return std::nullopt;
}

AgeBin bin_age(int age_years) {
    if (age_years < 0) throw DataError("negative age: " + std::to_string(age_years));
    if (age_years < 30) return AgeBin::under30;
    if (age_years <= 50) return AgeBin::b30_50;
    if (age_years <= 65) return AgeBin::b51_65;
    return AgeBin::b66plus;
}

}  // namespace riskstrat
