#pragma once

// Line-delimited JSON result records: one record per line, append-only,
// keyed by (claim, lhs, rhs, params) so that re-running a batch skips
// instances already on disk.

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

namespace awgraph {

struct ResultRecord {
    std::string claim;
    std::string lhs;  // graph6
    std::string rhs;  // graph6, empty for single-graph claims
    nlohmann::json params = nlohmann::json::object();
    std::string outcome;  // "passed", "failed", "skipped", "data", ...
    nlohmann::json payload = nlohmann::json::object();

    using Key = std::tuple<std::string, std::string, std::string, std::string>;
    Key key() const { return {claim, lhs, rhs, params.dump()}; }

    bool operator==(const ResultRecord&) const = default;
};

void to_json(nlohmann::json& j, const ResultRecord& r);
void from_json(const nlohmann::json& j, ResultRecord& r);

struct LoadError {
    std::size_t line = 0;
    std::string message;
};

struct LoadedResults {
    std::vector<ResultRecord> records;
    std::vector<LoadError> errors;
};

/// Reads every well-formed record. Malformed lines are reported with their
/// 1-based line number and skipped. A missing file yields no records.
LoadedResults load_results(const std::filesystem::path& path);

/// Appends records whose key is not already in the file (or earlier in
/// `records`). Returns how many were written. Throws std::runtime_error on
/// I/O failure.
std::size_t persist_results(const std::filesystem::path& path, const std::vector<ResultRecord>& records);

/// Single-writer handle for resumable batches.
class ResultStore {
public:
    explicit ResultStore(std::filesystem::path path);

    bool contains(const ResultRecord::Key& key) const { return keys_.count(key) != 0; }
    /// False (and nothing written) if the key is already stored.
    bool append(const ResultRecord& record);

    const std::vector<LoadError>& load_errors() const noexcept { return load_errors_; }
    std::size_t size() const noexcept { return keys_.size(); }

private:
    std::filesystem::path path_;
    std::set<ResultRecord::Key> keys_;
    std::vector<LoadError> load_errors_;
};

}  // namespace awgraph
