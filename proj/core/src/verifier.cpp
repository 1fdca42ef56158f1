#include "awgraph/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <stdexcept>
#include <thread>

#include "awgraph/catalog.hpp"
#include "awgraph/graph6.hpp"
#include "claims_internal.hpp"

namespace awgraph {

namespace detail {

AwResult Session::product_aw(const Graph& left, const Graph& right, int k) {
    const std::string key = encode_graph6(left) + "|" + encode_graph6(right) + "|" + std::to_string(k);
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    AwResult result = aw(cartesian_product(left, right).composite(), k);
    std::lock_guard lock(mutex_);
    return cache_.try_emplace(key, std::move(result)).first->second;
}

std::vector<InstanceResult> run_tasks(const std::vector<Task>& tasks, const std::vector<bool>& skip, int threads) {
    std::vector<InstanceResult> results(tasks.size());
    auto run_one = [&](std::size_t i) {
        if (skip[i]) {
            results[i] = tasks[i].header;
            return;
        }
        try {
            results[i] = tasks[i].run(tasks[i].header);
        } catch (const std::exception& e) {
            results[i] = tasks[i].header;
            results[i].outcome = "failed";
            results[i].payload = {{"error", e.what()}};
        }
    };
    const int workers = std::clamp(threads, 1, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
    if (workers == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < tasks.size(); i = next++) run_one(i);
        });
    }
    pool.clear();
    return results;
}

}  // namespace detail

Bounds quick_profile() {
    Bounds b;
    b.metric_graph_n = 4;
    b.path_samples = 200;
    b.diam2_graph_n = 4;
    b.product_graph_n = 3;
    b.max_m = 5;
    b.max_n = 5;
    b.product_tree_n = 5;
    b.spine_tree_n = 7;
    b.lemma_tree_n = 8;
    b.path_tree_n = 7;
    b.pnt_max_path = 4;
    b.full_search_max_vertices = 20;
    b.conj_tree_n = 6;
    b.conj_graph_n = 2;
    return b;
}

Bounds full_profile() { return Bounds{}; }

void check_bounds(const Bounds& b) {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("bounds exceed safety limits: ") + what);
    };
    require(b.metric_graph_n >= 1 && b.metric_graph_n <= kMaxGraphOrder, "metric graph order in 1..7");
    require(b.path_samples >= 0 && b.path_samples <= 100000, "path samples in 0..100000");
    require(b.path_max_n >= 3 && b.path_max_n <= 40, "random graph order in 3..40");
    require(b.diam2_graph_n >= 1 && b.diam2_graph_n <= 6, "diameter-2 graph order in 1..6");
    require(b.product_graph_n >= 2 && b.product_graph_n <= 6, "product graph order in 2..6");
    require(b.max_m >= 2 && b.max_n >= 2 && b.max_m * b.max_n <= 64, "path product within 64 vertices");
    require(b.product_tree_n >= 1 && b.product_tree_n <= 8, "product tree order in 1..8");
    require(b.spine_tree_n >= 1 && b.spine_tree_n <= kMaxTreeOrder, "spine tree order in 1..12");
    require(b.lemma_tree_n >= 1 && b.lemma_tree_n <= kMaxTreeOrder, "lemma tree order in 1..12");
    require(b.path_tree_n >= 1 && b.path_tree_n <= 10, "path-product tree order in 1..10");
    require(b.pnt_max_path >= 2 && b.pnt_max_path * b.path_tree_n <= 64, "P_n x T within 64 vertices");
    require(b.full_search_max_vertices >= 0 && b.full_search_max_vertices <= 64, "full search within 64 vertices");
    require(b.conj_k >= 3 && b.conj_k <= 6, "conjecture k in 3..6");
    require(b.conj_tree_n >= 1 && b.conj_tree_n <= 8, "conjecture tree order in 1..8");
    require(b.conj_graph_n >= 2 && b.conj_graph_n <= 4, "conjecture graph order in 2..4");
    require(b.threads >= 1 && b.threads <= 256, "threads in 1..256");
}

const std::vector<ClaimInfo>& claim_registry() {
    static const std::vector<ClaimInfo> registry = {
        {"PROP_DIST", "d(v_{i,j}, v_{h,k}) = d_G(u_i, u_h) + d_H(w_j, w_k) in G x H", false},
        {"OBS_DIAM", "diam(G x H) = diam(G) + diam(H)", false},
        {"COR_ISO_SUBPROD", "isometric G' in G and H' in H give an isometric G' x H' in G x H", false},
        {"LEM_PATH_OR_C3", "an exact r-colouring (r >= 3) of a connected graph has a tricoloured isometric path or C3", false},
        {"THM_DIAM2_PROD", "diam(G) <= 2 and aw(P3 x H, 3) = 3 imply aw(G x H, 3) = 3", false},
        {"LEM_UNION_2", "rainbow-free exact r >= 3 colourings: adjacent copies G_i, G_j carry <= 2 colours together", false},
        {"LEM_COPY_2", "rainbow-free exact r >= 3 colourings: every copy G_i carries <= 2 colours", false},
        {"LEM_DIFF_1", "rainbow-free exact colourings: |c(G_j) \\ c(G_i)| <= 1", false},
        {"THM_AW_LE_4", "3 <= aw(G x H, 3) <= 4 for connected G, H with at least 2 vertices", false},
        {"THM_PMPN", "aw(P_m x P_n, 3) = 3 iff m = 2 and n even, or m = 3 and n odd (up to swapping); else 4", false},
        {"LEM_SPINE_EQUI", "u off the spine, v outside u's branch: some spine vertex u' has d(u', v) = d(u, v)", false},
        {"COR_DPLUS1", "u not peripheral in a tree: some w has d(w, v) = d(u, v) + 1", false},
        {"LEM_3PER_EVEN", "3-peripheral trees have even diameter and a vertex equidistant from any diametral triple", false},
        {"LEM_P2T", "aw(P2 x T, 3) = 3 for 3-peripheral trees T", false},
        {"LEM_PNT", "aw(P_n x T, 3) = 3 for 3-peripheral trees T and n >= 2", false},
        {"THM_3PER_G", "aw(T x G, 3) = 3 for 3-peripheral trees T and connected G with |G| >= 2", false},
        {"LEM_PROD_NOT3PER", "products of non-3-peripheral graphs are not 3-peripheral", false},
        {"LEM_TREEDIAM", "non-3-peripheral trees: d(u_x, u_j) = d(u_i, u_y) = diam for a diametral pair (u_i, u_j) forces d(u_x, u_y) = diam", false},
        {"THM_ODD_4", "aw(T x T', 3) = 4 for non-3-peripheral trees with odd diam(T x T')", false},
        {"FIG2_REPRO", "the even-diameter generalised colouring is choice-dependent on S(2,1,1) x P4 and always rainbow on the 6-vertex tree x P4", false},
        {"CONJ_KPER", "exploration: aw(T x G, k) = k for k-peripheral trees T", true},
    };
    return registry;
}

bool is_registered_claim(const std::string& id) {
    const auto& r = claim_registry();
    return std::any_of(r.begin(), r.end(), [&](const ClaimInfo& c) { return c.id == id; });
}

namespace {

const ClaimInfo& claim_info(const std::string& id) {
    for (const auto& c : claim_registry()) {
        if (c.id == id) return c;
    }
    throw std::invalid_argument("unknown claim \"" + id + "\"");
}

VerificationReport run_claim(const std::string& id, const Bounds& bounds, detail::Session& session,
                             const std::vector<ResultRecord>* resume) {
    const ClaimInfo& info = claim_info(id);
    const auto start = std::chrono::steady_clock::now();
    const auto tasks = detail::claim_families().at(id)(bounds, session);

    std::map<ResultRecord::Key, const ResultRecord*> stored;
    if (resume) {
        for (const auto& rec : *resume) {
            if (rec.claim == id) stored.emplace(rec.key(), &rec);
        }
    }
    std::vector<bool> reuse(tasks.size(), false);
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const auto& h = tasks[i].header;
        reuse[i] = stored.count(ResultRecord::Key{id, h.lhs, h.rhs, h.params.dump()}) != 0;
    }
    auto results = detail::run_tasks(tasks, reuse, bounds.threads);
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!reuse[i]) continue;
        auto& r = results[i];
        const auto* rec = stored.at(ResultRecord::Key{id, r.lhs, r.rhs, r.params.dump()});
        r.outcome = rec->outcome;
        r.payload = rec->payload;
        r.payload.erase("tier");
    }

    VerificationReport report;
    report.claim = id;
    report.exploratory = info.exploratory;
    report.resumed = static_cast<std::size_t>(std::count(reuse.begin(), reuse.end(), true));
    for (const auto& r : results) {
        ++report.attempted;
        if (r.outcome == "passed") {
            ++report.passed;
        } else if (r.outcome == "skipped") {
            ++report.skipped;
        } else if (r.outcome == "data") {
            ++report.data;
        } else {
            ++report.failed;
            report.failures.push_back({{"lhs", r.lhs}, {"rhs", r.rhs}, {"params", r.params}, {"payload", r.payload}});
        }
        if (!r.tier.empty()) ++report.tiers[r.tier];
        ResultRecord record{id, r.lhs, r.rhs, r.params, r.outcome, r.payload};
        if (r.outcome != "passed" && r.outcome != "skipped" && r.outcome != "data") record.outcome = "failed";
        if (!r.tier.empty()) record.payload["tier"] = r.tier;
        report.records.push_back(std::move(record));
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace

VerificationReport verify_claim(const std::string& id, const Bounds& bounds,
                                const std::vector<ResultRecord>* resume) {
    check_bounds(bounds);
    claim_info(id);
    detail::Session session(bounds.threads);
    return run_claim(id, bounds, session, resume);
}

std::vector<VerificationReport> verify_all(const Bounds& bounds, const std::vector<ResultRecord>* resume) {
    check_bounds(bounds);
    detail::Session session(bounds.threads);
    std::vector<VerificationReport> out;
    for (const auto& info : claim_registry()) {
        if (info.exploratory) continue;
        out.push_back(run_claim(info.id, bounds, session, resume));
    }
    return out;
}

nlohmann::json report_summary(const VerificationReport& r) {
    return {{"claim", r.claim},     {"exploratory", r.exploratory}, {"attempted", r.attempted},
            {"passed", r.passed},   {"failed", r.failed},           {"skipped", r.skipped},
            {"data", r.data},       {"tiers", r.tiers}};
}

int pmpn_formula(int m, int n) {
    auto three = [](int a, int b) { return (a == 2 && b % 2 == 0) || (a == 3 && b % 2 == 1); };
    return three(m, n) || three(n, m) ? 3 : 4;
}

}  // namespace awgraph
