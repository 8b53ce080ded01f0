#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "riskstrat/corpus/records.hpp"

namespace riskstrat {

/// Term list with stable column ids, built exclusively from train-split
/// reports: terms seen in at least `min_doc_freq` distinct reports, ordered
/// by descending document frequency (ties broken lexicographically) and
/// truncated to `max_size`.
struct Vocabulary {
    std::vector<std::string> terms;
    std::unordered_map<std::string, int> index;
    int min_doc_freq = 2;
    int max_size = 20000;
    std::string built_from;  // e.g. "trial3/train"

    int dimension() const { return static_cast<int>(terms.size()); }

    nlohmann::json to_json() const;
    static Vocabulary from_json(const nlohmann::json& j);
};

Vocabulary build_vocabulary(const std::vector<ReportRecord>& train_reports, int min_doc_freq,
                            int max_size, std::string built_from = "");

/// Term counts over a vocabulary; entries sorted by column id, counts >= 1.
struct SparseCountVector {
    int dimension = 0;
    std::vector<std::pair<int, int>> entries;  // (column, count)

    int total_count() const {
        int total = 0;
        for (const auto& [col, count] : entries) total += count;
        return total;
    }
};

struct VectorizeOptions {
    bool binary = false;  // presence/absence instead of raw counts
};

SparseCountVector vectorize(const ReportRecord& report, const Vocabulary& vocab,
                            VectorizeOptions options = {});

/// Precomputed per-report dense vectors, ingested from CSV rows of
/// report_id followed by `dim` floats.
struct EmbeddingTable {
    int dim = 0;
    std::unordered_map<std::string, std::vector<double>> vectors;
};

EmbeddingTable load_embeddings(const std::filesystem::path& path,
                               const std::set<std::string>& expected_ids);

void write_embeddings_csv(const std::filesystem::path& path, const EmbeddingTable& table,
                          const std::vector<std::string>& id_order);

}  // namespace riskstrat
