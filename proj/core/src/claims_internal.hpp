#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "awgraph/ap.hpp"
#include "awgraph/graph.hpp"
#include "awgraph/verifier.hpp"

namespace awgraph::detail {

struct InstanceResult {
    std::string outcome;  // "passed", "failed", "skipped", "data"
    std::string tier;     // e.g. "coloring", "full-search"; empty if single-tier
    std::string lhs;
    std::string rhs;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json payload = nlohmann::json::object();
};

/// One instance: its identifying fields (lhs, rhs, params, tier) are known
/// up front so that stored results can be reused without running `run`.
struct Task {
    InstanceResult header;
    std::function<InstanceResult(InstanceResult)> run;
};

/// Shared state across claims in one verification run: memoised aw values
/// keyed by (lhs graph6, rhs graph6, k).
class Session {
public:
    explicit Session(int threads) : threads_(threads) {}

    AwResult product_aw(const Graph& left, const Graph& right, int k);
    int threads() const noexcept { return threads_; }

private:
    int threads_;
    std::mutex mutex_;
    std::map<std::string, AwResult> cache_;
};

/// Runs the tasks not marked in `skip` on `threads` workers; results come
/// back in task order (skipped slots hold the bare header). A task that
/// throws becomes a failed instance carrying the exception message.
std::vector<InstanceResult> run_tasks(const std::vector<Task>& tasks, const std::vector<bool>& skip, int threads);

using FamilyBuilder = std::function<std::vector<Task>(const Bounds&, Session&)>;

/// id -> builder for every registered claim.
const std::map<std::string, FamilyBuilder>& claim_families();

}  // namespace awgraph::detail
