#include <cmath>

#include "riskstrat/corpus/corpus.hpp"
#include "riskstrat/util/errors.hpp"
#include "riskstrat/util/rng.hpp"

namespace riskstrat {

std::vector<TrialSplit> make_trial_splits(const std::vector<PatientRecord>& patients,
                                          SplitFractions fractions, int n_trials,
                                          std::uint64_t master_seed) {
    const std::size_t n = patients.size();
    if (n < 5) {
        throw DataError("need at least 5 patients to split, have " + std::to_string(n));
    }
    const double total = fractions.train + fractions.validation + fractions.test;
    if (std::fabs(total - 1.0) > 1e-9) {
        throw DataError("split fractions must sum to 1");
    }

    const std::size_t n_val = static_cast<std::size_t>(std::floor(fractions.validation * static_cast<double>(n)));
    const std::size_t n_test = static_cast<std::size_t>(std::floor(fractions.test * static_cast<double>(n)));
    const std::size_t n_train_floor = static_cast<std::size_t>(std::floor(fractions.train * static_cast<double>(n)));
    const std::size_t n_train = n_train_floor + (n - n_train_floor - n_val - n_test);  // remainder to train

    if (n_train == 0 || n_val == 0 || n_test == 0) {
        throw DataError("split produced an empty part (n=" + std::to_string(n) + ")");
    }

    std::vector<TrialSplit> splits;
    splits.reserve(static_cast<std::size_t>(n_trials));
    for (int trial = 0; trial < n_trials; ++trial) {
        const std::uint64_t seed = Rng::mix(master_seed, static_cast<std::uint64_t>(trial));
        Rng rng(seed);
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        rng.shuffle(order);

        TrialSplit split;
        split.trial_index = trial;
        split.seed = seed;
        split.assignment.reserve(n);
        bool test_has_pos = false, test_has_neg = false;
        for (std::size_t i = 0; i < n; ++i) {
            const PatientRecord& p = patients[order[i]];
            SplitPart part;
            if (i < n_train) {
                part = SplitPart::train;
            } else if (i < n_train + n_val) {
                part = SplitPart::validation;
            } else {
                part = SplitPart::test;
                (p.ipv_label ? test_has_pos : test_has_neg) = true;
            }
            split.assignment.emplace(p.patient_id, part);
        }
        if (!test_has_pos || !test_has_neg) {
            throw DataError("trial " + std::to_string(trial) + " test split has a single class");
        }
        splits.push_back(std::move(split));
    }
    return splits;
}

}  // namespace riskstrat
