#include "awgraph/results.hpp"

#include <fstream>
#include <stdexcept>

namespace awgraph {

void to_json(nlohmann::json& j, const ResultRecord& r) {
    j = nlohmann::json{{"claim", r.claim}, {"lhs", r.lhs},         {"rhs", r.rhs},
                       {"params", r.params}, {"outcome", r.outcome}, {"payload", r.payload}};
}

void from_json(const nlohmann::json& j, ResultRecord& r) {
    j.at("claim").get_to(r.claim);
    j.at("lhs").get_to(r.lhs);
    r.rhs = j.value("rhs", std::string{});
    r.params = j.value("params", nlohmann::json::object());
    j.at("outcome").get_to(r.outcome);
    r.payload = j.value("payload", nlohmann::json::object());
}

LoadedResults load_results(const std::filesystem::path& path) {
    LoadedResults out;
    std::ifstream in(path);
    if (!in) return out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.records.push_back(nlohmann::json::parse(line).get<ResultRecord>());
        } catch (const nlohmann::json::exception& e) {
            out.errors.push_back({line_no, e.what()});
        }
    }
    return out;
}

std::size_t persist_results(const std::filesystem::path& path, const std::vector<ResultRecord>& records) {
    ResultStore store(path);
    std::size_t written = 0;
    for (const auto& r : records) written += store.append(r) ? 1 : 0;
    return written;
}

ResultStore::ResultStore(std::filesystem::path path) : path_(std::move(path)) {
    auto loaded = load_results(path_);
    for (const auto& r : loaded.records) keys_.insert(r.key());
    load_errors_ = std::move(loaded.errors);
}

bool ResultStore::append(const ResultRecord& record) {
    auto key = record.key();
    if (keys_.count(key)) return false;
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot open " + path_.string() + " for appending");
    out << nlohmann::json(record).dump() << '\n';
    if (!out) throw std::runtime_error("write to " + path_.string() + " failed");
    keys_.insert(std::move(key));
    return true;
}

}  // namespace awgraph
