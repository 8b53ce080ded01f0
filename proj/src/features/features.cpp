#include "riskstrat/features/features.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "riskstrat/util/csv.hpp"
#include "riskstrat/util/errors.hpp"
#include "riskstrat/util/io.hpp"

namespace riskstrat {

nlohmann::json Vocabulary::to_json() const {
    return nlohmann::json{{"terms", terms},
                          {"min_doc_freq", min_doc_freq},
                          {"max_size", max_size},
                          {"built_from", built_from}};
}

Vocabulary Vocabulary::from_json(const nlohmann::json& j) {
    Vocabulary v;
    v.terms = j.at("terms").get<std::vector<std::string>>();
    v.min_doc_freq = j.at("min_doc_freq").get<int>();
    v.max_size = j.at("max_size").get<int>();
    v.built_from = j.value("built_from", "");
    v.index.reserve(v.terms.size());
    for (std::size_t i = 0; i < v.terms.size(); ++i) {
        v.index.emplace(v.terms[i], static_cast<int>(i));
    }
    return v;
}

Vocabulary build_vocabulary(const std::vector<ReportRecord>& train_reports, int min_doc_freq,
                            int max_size, std::string built_from) {
    if (min_doc_freq < 1) throw DataError("min_doc_freq must be >= 1");

    std::unordered_map<std::string, int> doc_freq;
    std::set<std::string> seen_in_report;
    for (const auto& report : train_reports) {
        seen_in_report.clear();
        for (const auto& token : report.tokens) seen_in_report.insert(token);
        for (const auto& token : seen_in_report) ++doc_freq[token];
    }

    std::vector<std::pair<std::string, int>> ranked;
    ranked.reserve(doc_freq.size());
    for (auto& [term, freq] : doc_freq) {
        if (freq >= min_doc_freq) ranked.emplace_back(term, freq);
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (max_size >= 0 && static_cast<int>(ranked.size()) > max_size) {
        ranked.resize(static_cast<std::size_t>(max_size));
    }
    if (ranked.empty()) {
        throw DataError("vocabulary is empty (min_doc_freq=" + std::to_string(min_doc_freq) + ")");
    }

    Vocabulary vocab;
    vocab.min_doc_freq = min_doc_freq;
    vocab.max_size = max_size;
    vocab.built_from = std::move(built_from);
    vocab.terms.reserve(ranked.size());
    vocab.index.reserve(ranked.size());
    for (auto& [term, freq] : ranked) {
        vocab.index.emplace(term, static_cast<int>(vocab.terms.size()));
        vocab.terms.push_back(std::move(term));
    }
    return vocab;
}

SparseCountVector vectorize(const ReportRecord& report, const Vocabulary& vocab,
                            VectorizeOptions options) {
    std::unordered_map<int, int> counts;
    for (const auto& token : report.tokens) {
        const auto it = vocab.index.find(token);
        if (it != vocab.index.end()) ++counts[it->second];
    }
    SparseCountVector vec;
    vec.dimension = vocab.dimension();
    vec.entries.reserve(counts.size());
    for (const auto& [col, count] : counts) {
        vec.entries.emplace_back(col, options.binary ? 1 : count);
    }
    std::sort(vec.entries.begin(), vec.entries.end());
    return vec;
}

EmbeddingTable load_embeddings(const std::filesystem::path& path,
                               const std::set<std::string>& expected_ids) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open embeddings file: " + path.string());

    EmbeddingTable table;
    CsvReader reader(in);
    std::size_t line = 0;
    while (auto row = reader.next(&line)) {
        if (row->size() < 2) {
            throw DataError(path.filename().string() + ":" + std::to_string(line) +
                            ": need report_id plus at least one value");
        }
        const std::string& id = (*row)[0];
        const int dim = static_cast<int>(row->size()) - 1;
        if (table.dim == 0) {
            table.dim = dim;
        } else if (dim != table.dim) {
            throw DataError(path.filename().string() + ":" + std::to_string(line) +
                            ": embedding dimension " + std::to_string(dim) + " != expected " +
                            std::to_string(table.dim));
        }
        std::vector<double> vec(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) {
            const std::string& cell = (*row)[static_cast<std::size_t>(i + 1)];
            const char* first = cell.data();
            const char* last = first + cell.size();
            double value = 0.0;
            const auto result = std::from_chars(first, last, value);
            if (result.ec != std::errc() || result.ptr != last) {
                throw DataError(path.filename().string() + ":" + std::to_string(line) +
                                ": bad numeric value '" + cell + "'");
            }
            vec[static_cast<std::size_t>(i)] = value;
        }
        table.vectors[id] = std::move(vec);
    }

    std::vector<std::string> missing;
    for (const auto& id : expected_ids) {
        if (table.vectors.find(id) == table.vectors.end()) missing.push_back(id);
    }
    if (!missing.empty()) {
        std::ostringstream os;
        os << path.filename().string() << ": missing embeddings for " << missing.size()
           << " report(s):";
        const std::size_t show = std::min<std::size_t>(missing.size(), 10);
        for (std::size_t i = 0; i < show; ++i) os << ' ' << missing[i];
        if (missing.size() > show) os << " (and " << missing.size() - show << " more)";
        throw DataError(os.str());
    }
    return table;
}

void write_embeddings_csv(const std::filesystem::path& path, const EmbeddingTable& table,
                          const std::vector<std::string>& id_order) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write embeddings file: " + path.string());
    CsvWriter writer(out);
    for (const auto& id : id_order) {
        const auto it = table.vectors.find(id);
        if (it == table.vectors.end()) throw DataError("no embedding for report " + id);
        std::vector<std::string> row;
        row.reserve(it->second.size() + 1);
        row.push_back(id);
        for (double v : it->second) row.push_back(format_double_exact(v));
        writer.write_row(row);
    }
}

}  // namespace riskstrat
