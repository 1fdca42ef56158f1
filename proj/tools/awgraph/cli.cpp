#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "awgraph/ap.hpp"
#include "awgraph/catalog.hpp"
#include "awgraph/colorings.hpp"
#include "awgraph/graph.hpp"
#include "awgraph/graph6.hpp"
#include "awgraph/results.hpp"
#include "awgraph/tree.hpp"
#include "awgraph/verifier.hpp"

namespace awgraph::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------ graph input

struct GraphInput {
    std::string graph6;
    std::string input;
    std::string left;
    std::string right;
};

void add_graph_options(CLI::App* sub, GraphInput& in, bool single, bool product) {
    if (single) {
        auto* g6 = sub->add_option("--graph6", in.graph6, "Graph as an inline graph6 string");
        auto* path = sub->add_option("--input", in.input, "File with graph6 lines or an edge list ('-' for stdin)");
        g6->excludes(path);
    }
    if (product) {
        sub->add_option("--left", in.left, "Left factor G: file path or P<n>, C<n>, K<n>, S<n>");
        sub->add_option("--right", in.right, "Right factor H: file path or P<n>, C<n>, K<n>, S<n>");
    }
}

std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream f(path);
    if (!f) throw InputError("cannot read " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// P<n>, C<n>, K<n> and S<n> (the star K_{1,n}) are accepted where no file
// of that name exists.
std::optional<Graph> named_graph(const std::string& name) {
    static const std::regex pattern(R"(([PCKS])([0-9]{1,2}))");
    std::smatch m;
    if (!std::regex_match(name, m, pattern)) return std::nullopt;
    const int n = std::stoi(m[2]);
    switch (m[1].str()[0]) {
        case 'P': if (n >= 1) return path_graph(n); break;
        case 'C': if (n >= 3) return cycle_graph(n); break;
        case 'K': if (n >= 1) return complete_graph(n); break;
        case 'S': if (n >= 1) return star_graph(n); break;
    }
    throw InputError("bad size in " + name);
}

Graph load_side(const std::string& name) {
    if (!std::filesystem::exists(name)) {
        if (auto g = named_graph(name)) return *g;
    }
    auto graphs = read_graphs(read_text(name));
    if (graphs.size() != 1) throw InputError(name + ": expected exactly one graph, found " + std::to_string(graphs.size()));
    return graphs.front();
}

bool has_product(const GraphInput& in) { return !in.left.empty() || !in.right.empty(); }

std::optional<ProductGraph> product_input(const GraphInput& in) {
    if (!has_product(in)) return std::nullopt;
    if (in.left.empty() || in.right.empty()) throw UsageError("--left and --right must be given together");
    if (!in.graph6.empty() || !in.input.empty()) throw UsageError("--left/--right cannot be combined with --graph6 or --input");
    return cartesian_product(load_side(in.left), load_side(in.right));
}

std::vector<Graph> single_inputs(const GraphInput& in) {
    if (!in.graph6.empty()) return {parse_graph6(in.graph6)};
    if (!in.input.empty()) {
        auto graphs = read_graphs(read_text(in.input));
        if (graphs.empty()) throw InputError(in.input + ": no graphs");
        return graphs;
    }
    throw UsageError("no graph given (use --graph6, --input or --left/--right)");
}

// graph6 where it fits, otherwise the edge list.
std::string graph_id(const Graph& g) {
    return g.order() <= kGraph6MaxOrder ? encode_graph6(g) : format_edge_list(g);
}

std::string join(const std::vector<int>& xs, const char* sep = " ") {
    std::ostringstream s;
    for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? sep : "") << xs[i];
    return s.str();
}

// --------------------------------------------------------------- output

class JsonLines {
public:
    explicit JsonLines(const std::string& path) {
        if (path.empty()) return;
        file_.emplace(path, std::ios::trunc);
        if (!*file_) throw InputError("cannot write " + path);
    }
    void write(const json& j) {
        if (file_) *file_ << j.dump() << '\n';
    }

private:
    std::optional<std::ofstream> file_;
};

int threads_from(int flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("AWGRAPH_THREADS"); env && *env) {
        try {
            std::size_t used = 0;
            const int n = std::stoi(env, &used);
            if (used == std::string(env).size() && n >= 1) return n;
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("AWGRAPH_THREADS must be a positive integer, got \"") + env + "\"");
    }
    return 1;
}

// ---------------------------------------------------------------- aw

struct AwArgs {
    GraphInput in;
    int k = 3;
    std::uint64_t node_limit = 0;
    bool grid = false;
    std::string out;
};

void print_aw(std::ostream& out, const Graph& g, int k, const AwResult& a) {
    out << "aw(G, " << k << ") = " << a.aw << "  [n=" << g.order() << ", m=" << g.size()
        << ", diameter " << g.diameter() << "]\n";
    if (a.certificate.size() > 0) {
        out << "certificate (rainbow-free exact " << a.max_rainbow_free << "-colouring): "
            << join(a.certificate.colors()) << '\n';
    }
    out << "search nodes: " << a.stats.nodes << ", " << k << "-APs: " << a.stats.ap_count << '\n';
}

json aw_record(const Graph& g, int k, const AwResult& a) {
    return {{"graph", graph_id(g)},
            {"k", k},
            {"aw", a.aw},
            {"certificate", a.certificate.colors()},
            {"stats", {{"nodes", a.stats.nodes}, {"aps", a.stats.ap_count}}}};
}

int cmd_aw(const AwArgs& args, std::ostream& out) {
    if (args.k < 2) throw UsageError("--k must be at least 2");
    JsonLines jl(args.out);
    const SearchOptions opts{args.node_limit};
    if (auto p = product_input(args.in)) {
        const auto a = aw(p->composite(), args.k, opts);
        out << "G = " << graph_id(p->left()) << ", H = " << graph_id(p->right()) << '\n';
        print_aw(out, p->composite(), args.k, a);
        if (args.grid && a.certificate.size() > 0) out << render_grid(*p, a.certificate);
        auto rec = aw_record(p->composite(), args.k, a);
        rec["lhs"] = graph_id(p->left());
        rec["rhs"] = graph_id(p->right());
        jl.write(rec);
        return kExitOk;
    }
    if (args.grid) throw UsageError("--grid needs a product (--left/--right)");
    for (const auto& g : single_inputs(args.in)) {
        const auto a = aw(g, args.k, opts);
        out << "graph " << graph_id(g) << '\n';
        print_aw(out, g, args.k, a);
        jl.write(aw_record(g, args.k, a));
    }
    return kExitOk;
}

// ------------------------------------------------------------- product

struct ProductArgs {
    GraphInput in;
    std::string format = "graph6";
    std::string out;
};

int cmd_product(const ProductArgs& args, std::ostream& out) {
    auto p = product_input(args.in);
    if (!p) throw UsageError("product needs --left and --right");
    const auto& g = p->composite();
    if (args.format == "graph6") {
        out << encode_graph6(g) << '\n';
    } else {
        out << format_edge_list(g);
    }
    JsonLines jl(args.out);
    jl.write({{"lhs", graph_id(p->left())},
              {"rhs", graph_id(p->right())},
              {"graph", graph_id(g)},
              {"n", g.order()},
              {"m", g.size()},
              {"diameter", g.diameter()}});
    return kExitOk;
}

// ------------------------------------------------------------- analyze

struct AnalyzeArgs {
    GraphInput in;
    int k = 3;
    std::string out;
};

json analyze_graph(const Graph& g, int k) {
    const auto ecc = eccentricities(g);
    const auto kper = is_k_peripheral(g, k);
    const auto [parts, odd] = bipartition(g);
    json j = {{"graph", graph_id(g)},
              {"n", g.order()},
              {"m", g.size()},
              {"diameter", ecc.diameter},
              {"eccentricity", ecc.eccentricity},
              {"peripheral", ecc.peripheral},
              {"tree", is_tree(g)},
              {"k", k},
              {"k_peripheral", kper.found},
              {"bipartite", parts.has_value()}};
    if (kper.found) j["k_peripheral_witness"] = kper.vertices;
    if (odd) j["odd_cycle"] = odd->cycle;
    if (is_tree(g)) {
        const auto s = spine(g);
        const auto ts = branch_decomposition(g, s);
        j["spine"] = s;
        j["branches"] = ts.branches;
    }
    return j;
}

void print_analysis(std::ostream& out, const json& j) {
    out << "graph " << j["graph"].get<std::string>() << ": n=" << j["n"] << ", m=" << j["m"]
        << ", diameter " << j["diameter"] << '\n';
    out << "  eccentricities: " << join(j["eccentricity"].get<std::vector<int>>()) << '\n';
    out << "  peripheral: " << join(j["peripheral"].get<std::vector<int>>()) << '\n';
    out << "  tree: " << (j["tree"].get<bool>() ? "yes" : "no") << '\n';
    out << "  " << j["k"] << "-peripheral: ";
    if (j["k_peripheral"].get<bool>()) {
        out << "yes (" << join(j["k_peripheral_witness"].get<std::vector<int>>()) << ")\n";
    } else {
        out << "no\n";
    }
    out << "  bipartite: ";
    if (j["bipartite"].get<bool>()) {
        out << "yes\n";
    } else {
        out << "no (odd cycle " << join(j["odd_cycle"].get<std::vector<int>>()) << ")\n";
    }
    if (j.contains("spine")) {
        const auto s = j["spine"].get<std::vector<int>>();
        out << "  spine: " << join(s) << '\n';
        const auto branches = j["branches"].get<std::vector<std::vector<int>>>();
        for (std::size_t i = 0; i < s.size(); ++i) {
            out << "  branch of " << s[i] << ": " << join(branches[i]) << '\n';
        }
    }
}

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out) {
    if (args.k < 2) throw UsageError("--k must be at least 2");
    JsonLines jl(args.out);
    if (auto p = product_input(args.in)) {
        auto j = analyze_graph(p->composite(), args.k);
        j["lhs"] = graph_id(p->left());
        j["rhs"] = graph_id(p->right());
        out << "G = " << graph_id(p->left()) << ", H = " << graph_id(p->right()) << '\n';
        print_analysis(out, j);
        jl.write(j);
        return kExitOk;
    }
    for (const auto& g : single_inputs(args.in)) {
        const auto j = analyze_graph(g, args.k);
        print_analysis(out, j);
        jl.write(j);
    }
    return kExitOk;
}

// ------------------------------------------------------------- catalogs

struct CatalogArgs {
    int n = 0;
    int min_n = 0;
    int max_n = 0;
    std::vector<std::string> filters;
    bool count = false;
    std::string out;
};

int cmd_catalog(const CatalogArgs& args, bool trees_only, std::ostream& out) {
    int lo = args.min_n, hi = args.max_n;
    if (args.n > 0) {
        if (lo || hi) throw UsageError("--n excludes --min-n/--max-n");
        lo = hi = args.n;
    }
    if (lo == 0 && hi == 0) throw UsageError("give --n or --max-n");
    if (lo == 0) lo = 1;
    if (hi == 0) hi = lo;
    if (lo > hi) throw UsageError("--min-n exceeds --max-n");
    const auto entries = filter_catalog(trees_only ? trees_between(lo, hi) : graphs_between(lo, hi), args.filters);
    JsonLines jl(args.out);
    if (args.count) out << entries.size() << '\n';
    for (const auto& e : entries) {
        if (!args.count) out << e.graph6 << '\n';
        jl.write({{"graph6", e.graph6},
                  {"n", e.n},
                  {"is_tree", e.is_tree},
                  {"is_3_peripheral", e.is_3_peripheral},
                  {"diameter", e.diameter},
                  {"peripheral_count", e.peripheral_count}});
    }
    return kExitOk;
}

// --------------------------------------------------------------- color

struct ColorArgs {
    GraphInput in;
    std::string scheme;
    std::string pair = "auto";
    int k = 3;
    bool check = false;
    bool grid = false;
    std::string out;
};

std::string format_ap(const ProductGraph& p, const ArithmeticProgression& ap) {
    std::ostringstream s;
    for (std::size_t i = 0; i < ap.vertices.size(); ++i) {
        auto [a, b] = p.coords(ap.vertices[i]);
        s << (i ? " " : "") << "v(" << a << ',' << b << ')';
    }
    s << " (d=" << ap.difference << ')';
    return s.str();
}

int cmd_color(const ColorArgs& args, std::ostream& out) {
    if (args.k < 2) throw UsageError("--k must be at least 2");
    std::optional<ProductGraph> p;
    if (args.scheme == "example-p3c6") {
        if (has_product(args.in)) throw UsageError("example-p3c6 uses its own product; drop --left/--right");
        if (args.pair != "auto") throw UsageError("example-p3c6 takes no --pair");
        p = p3c6_product();
    } else {
        p = product_input(args.in);
        if (!p) throw UsageError("color needs --left and --right");
    }

    struct Item {
        std::optional<DiametralPairChoice> choice;
        Coloring coloring;
        std::vector<Vertex> overlaps;
    };
    std::vector<Item> items;
    if (args.scheme == "example-p3c6") {
        items.push_back({std::nullopt, example_p3c6_coloring(), {}});
    } else {
        std::vector<DiametralPairChoice> choices;
        if (args.pair == "auto") {
            choices.push_back(default_diametral_choice(*p));
        } else if (args.pair == "all") {
            choices = enumerate_diametral_choices(*p);
        } else {
            choices.push_back(parse_pair_choice(*p, args.pair));
        }
        for (const auto& c : choices) {
            if (args.scheme == "odd-diametral") {
                try {
                    items.push_back({c, odd_diameter_coloring(*p, c), {}});
                } catch (const std::logic_error& e) {
                    out << "pair " << format_pair_choice(*p, c) << ": construction failed: " << e.what() << '\n';
                    return kExitCheckFailed;
                }
            } else {
                auto cc = generalized_even_coloring(*p, c);
                items.push_back({c, std::move(cc.coloring), std::move(cc.overlaps)});
            }
        }
    }

    JsonLines jl(args.out);
    bool all_good = true;
    for (const auto& item : items) {
        const auto v = validate_coloring(p->composite(), item.coloring, args.k);
        const bool good = v.exact && v.rainbow_free();
        all_good = all_good && good;
        if (item.choice) out << "pair " << format_pair_choice(*p, *item.choice) << ": ";
        if (v.rainbow_free()) {
            out << "rainbow-free";
        } else {
            out << "rainbow " << args.k << "-AP " << format_ap(*p, *v.rainbow_witness);
        }
        out << ", " << (v.exact ? "exact " : "not exact, ") << v.colors_used << (v.exact ? "" : " colours") << '\n';
        if (args.grid) out << render_grid(*p, item.coloring);
        json rec = {{"lhs", graph_id(p->left())},
                    {"rhs", graph_id(p->right())},
                    {"scheme", args.scheme},
                    {"k", args.k},
                    {"coloring", item.coloring.colors()},
                    {"colors", v.colors_used},
                    {"exact", v.exact},
                    {"rainbow_free", v.rainbow_free()}};
        if (item.choice) rec["pair"] = format_pair_choice(*p, *item.choice);
        if (!item.overlaps.empty()) rec["overlaps"] = item.overlaps;
        if (v.rainbow_witness) rec["witness"] = {{"vertices", v.rainbow_witness->vertices}, {"difference", v.rainbow_witness->difference}};
        jl.write(rec);
    }
    if (args.pair == "all") out << items.size() << " diametral choices\n";
    return args.check && !all_good ? kExitCheckFailed : kExitOk;
}

// -------------------------------------------------------------- verify

struct BoundOverrides {
    std::string profile = "quick";
    std::optional<int> metric_graph_n, path_samples, path_max_n, diam2_graph_n, product_graph_n, max_m, max_n,
        product_tree_n, spine_tree_n, lemma_tree_n, path_tree_n, pnt_max_path, full_search_max_vertices;
    std::optional<std::uint64_t> seed;
    bool mutate = false;
    int threads = 0;
};

void add_bound_options(CLI::App* sub, BoundOverrides& b) {
    sub->add_option("--profile", b.profile, "Bound profile")->check(CLI::IsMember({"quick", "full"}));
    sub->add_option("--metric-graph-n", b.metric_graph_n, "Graph order for the distance claims");
    sub->add_option("--path-samples", b.path_samples, "Random instances for the tricoloured path lemma");
    sub->add_option("--path-max-n", b.path_max_n, "Largest random graph for the tricoloured path lemma");
    sub->add_option("--seed", b.seed, "Seed for random instances");
    sub->add_option("--diam2-graph-n", b.diam2_graph_n, "Largest diameter-2 factor");
    sub->add_option("--product-graph-n", b.product_graph_n, "Largest connected factor in aw product claims");
    sub->add_option("--max-m", b.max_m, "Largest m in P_m x P_n");
    sub->add_option("--max-n", b.max_n, "Largest n in P_m x P_n");
    sub->add_option("--product-tree-n", b.product_tree_n, "Largest tree factor in tree products");
    sub->add_option("--spine-tree-n", b.spine_tree_n, "Largest tree for the spine lemmas");
    sub->add_option("--lemma-tree-n", b.lemma_tree_n, "Largest tree for the peripheral lemmas");
    sub->add_option("--path-tree-n", b.path_tree_n, "Largest tree in P_n x T");
    sub->add_option("--pnt-max-path", b.pnt_max_path, "Largest n in P_n x T");
    sub->add_option("--full-search-max-vertices", b.full_search_max_vertices, "Full aw search size cap");
    sub->add_flag("--mutate-drop-edge", b.mutate, "Drop one product edge before THM_PMPN (sanity check)");
    sub->add_option("--threads", b.threads, "Worker threads (overrides AWGRAPH_THREADS; default 1)")
        ->check(CLI::PositiveNumber);
}

Bounds make_bounds(const BoundOverrides& o) {
    Bounds b = o.profile == "full" ? full_profile() : quick_profile();
    auto set = [](auto& field, const auto& value) {
        if (value) field = *value;
    };
    set(b.metric_graph_n, o.metric_graph_n);
    set(b.path_samples, o.path_samples);
    set(b.path_max_n, o.path_max_n);
    set(b.seed, o.seed);
    set(b.diam2_graph_n, o.diam2_graph_n);
    set(b.product_graph_n, o.product_graph_n);
    set(b.max_m, o.max_m);
    set(b.max_n, o.max_n);
    set(b.product_tree_n, o.product_tree_n);
    set(b.spine_tree_n, o.spine_tree_n);
    set(b.lemma_tree_n, o.lemma_tree_n);
    set(b.path_tree_n, o.path_tree_n);
    set(b.pnt_max_path, o.pnt_max_path);
    set(b.full_search_max_vertices, o.full_search_max_vertices);
    b.mutate_drop_edge = o.mutate;
    b.threads = threads_from(o.threads);
    try {
        check_bounds(b);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return b;
}

struct VerifyArgs {
    BoundOverrides bounds;
    std::vector<std::string> claims;
    bool all = false;
    bool list = false;
    bool timing = false;
    std::string out;
};

void print_table(std::ostream& out, const std::vector<VerificationReport>& reports, bool timing) {
    char line[200];
    std::snprintf(line, sizeof line, "%-17s %9s %7s %7s %8s %6s", "claim", "attempted", "passed", "failed",
                  "skipped", "data");
    out << line << (timing ? "  seconds" : "") << "  tiers\n";
    for (const auto& r : reports) {
        std::snprintf(line, sizeof line, "%-17s %9zu %7zu %7zu %8zu %6zu", r.claim.c_str(), r.attempted, r.passed,
                      r.failed, r.skipped, r.data);
        out << line;
        if (timing) {
            std::snprintf(line, sizeof line, "  %7.2f", r.seconds);
            out << line;
        }
        if (!r.tiers.empty()) out << ' ';
        for (const auto& [tier, count] : r.tiers) out << ' ' << tier << '=' << count;
        out << '\n';
    }
}

void print_failures(std::ostream& out, const VerificationReport& r) {
    constexpr std::size_t kShown = 5;
    for (std::size_t i = 0; i < r.failures.size() && i < kShown; ++i) {
        out << "  " << r.claim << " failure: " << r.failures[i].dump() << '\n';
    }
    if (r.failures.size() > kShown) out << "  ... " << r.failures.size() - kShown << " more\n";
}

std::vector<VerificationReport> run_reports(const std::vector<std::string>& ids, bool all, const Bounds& b,
                                            const std::string& out_path) {
    std::optional<ResultStore> store;
    std::vector<ResultRecord> prior;
    if (!out_path.empty()) {
        prior = load_results(out_path).records;
        store.emplace(out_path);
    }
    const auto* resume = out_path.empty() ? nullptr : &prior;
    std::vector<VerificationReport> reports;
    if (all) {
        reports = verify_all(b, resume);
    } else {
        for (const auto& id : ids) reports.push_back(verify_claim(id, b, resume));
    }
    if (store) {
        for (const auto& r : reports) {
            for (const auto& rec : r.records) store->append(rec);
        }
    }
    return reports;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
    if (args.list) {
        for (const auto& c : claim_registry()) {
            out << c.id << (c.exploratory ? " (exploratory)" : "") << ": " << c.statement << '\n';
        }
        return kExitOk;
    }
    if (args.all == !args.claims.empty()) throw UsageError("give either --all or at least one --claim");
    for (const auto& id : args.claims) {
        if (!is_registered_claim(id)) throw UsageError("unknown claim \"" + id + "\" (see verify --list)");
    }
    const Bounds b = make_bounds(args.bounds);
    const auto reports = run_reports(args.claims, args.all, b, args.out);
    print_table(out, reports, args.timing);
    std::size_t failed_claims = 0;
    for (const auto& r : reports) {
        if (r.ok()) continue;
        ++failed_claims;
        print_failures(out, r);
    }
    if (failed_claims == 0) {
        out << "all " << reports.size() << " claims passed\n";
        return kExitOk;
    }
    out << failed_claims << " of " << reports.size() << " claims FAILED\n";
    return kExitCheckFailed;
}

// ---------------------------------------------------------- conjecture

struct ConjectureArgs {
    int k = 4;
    int tree_n = 7;
    int graph_n = 3;
    std::uint64_t node_limit = 5'000'000;
    int threads = 0;
    std::string out;
};

int cmd_conjecture(const ConjectureArgs& args, std::ostream& out) {
    Bounds b = full_profile();
    b.conj_k = args.k;
    b.conj_tree_n = args.tree_n;
    b.conj_graph_n = args.graph_n;
    b.conj_node_limit = args.node_limit;
    b.threads = threads_from(args.threads);
    try {
        check_bounds(b);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto r = verify_claim("CONJ_KPER", b);
    std::size_t equal = 0, differ = 0, unknown = 0;
    JsonLines jl(args.out);
    for (const auto& rec : r.records) {
        jl.write(rec);
        if (rec.outcome != "data") continue;
        out << "T=" << rec.lhs << " G=" << rec.rhs << ": ";
        if (rec.payload.contains("aw")) {
            const int a = rec.payload["aw"].get<int>();
            out << "aw = " << a << (a == args.k ? "" : "  (differs from k)") << '\n';
            (a == args.k ? equal : differ) += 1;
        } else {
            out << "node budget exceeded\n";
            ++unknown;
        }
    }
    out << "k=" << args.k << ": " << r.data << " products of " << args.k << "-peripheral trees, " << equal
        << " with aw = k, " << differ << " with aw != k, " << unknown << " undecided (exploratory, not asserted)\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Anti-van der Waerden numbers of graphs and graph products", "awgraph"};
    app.set_version_flag("--version", std::string("awgraph ") + AWGRAPH_VERSION + " (results schema " +
                                          std::to_string(kSchemaVersion) + ")");
    app.require_subcommand(1);

    AwArgs aw_args;
    auto* aw_cmd = app.add_subcommand("aw", "Compute aw(G, k) with a certificate colouring");
    add_graph_options(aw_cmd, aw_args.in, true, true);
    aw_cmd->add_option("--k", aw_args.k, "Progression length");
    aw_cmd->add_option("--node-limit", aw_args.node_limit, "Abort the search after this many nodes (0 = none)");
    aw_cmd->add_flag("--grid", aw_args.grid, "Render the certificate as a grid (products only)");
    aw_cmd->add_option("--out", aw_args.out, "Write JSON lines here");

    ProductArgs product_args;
    auto* product_cmd = app.add_subcommand("product", "Print the Cartesian product of two graphs");
    add_graph_options(product_cmd, product_args.in, false, true);
    product_cmd->add_option("--format", product_args.format, "Output format")
        ->check(CLI::IsMember({"graph6", "edges"}));
    product_cmd->add_option("--out", product_args.out, "Write JSON lines here");

    AnalyzeArgs analyze_args;
    auto* analyze_cmd = app.add_subcommand("analyze", "Distances, periphery, spine and branches of a graph");
    add_graph_options(analyze_cmd, analyze_args.in, true, true);
    analyze_cmd->add_option("--k", analyze_args.k, "Test k-peripherality for this k");
    analyze_cmd->add_option("--out", analyze_args.out, "Write JSON lines here");

    CatalogArgs trees_args, graphs_args;
    CLI::App* catalog_cmds[2];
    CatalogArgs* catalog_args[2] = {&trees_args, &graphs_args};
    catalog_cmds[0] = app.add_subcommand("trees", "List free trees up to isomorphism (graph6 per line)");
    catalog_cmds[1] = app.add_subcommand("graphs", "List connected graphs up to isomorphism (graph6 per line)");
    for (int i = 0; i < 2; ++i) {
        auto* c = catalog_cmds[i];
        auto& a = *catalog_args[i];
        c->add_option("--n", a.n, "Exact order")->check(CLI::PositiveNumber);
        c->add_option("--min-n", a.min_n, "Smallest order")->check(CLI::PositiveNumber);
        c->add_option("--max-n", a.max_n, "Largest order")->check(CLI::PositiveNumber);
        c->add_option("--filter", a.filters,
                      "3-peripheral, not-3-peripheral, diam-even, diam-odd, tree, min-n=N, max-n=N");
        c->add_flag("--count", a.count, "Print only the number of entries");
        c->add_option("--out", a.out, "Write catalog entries as JSON lines here");
    }

    ColorArgs color_args;
    auto* color_cmd = app.add_subcommand("color", "Build and validate a constructed 3-colouring of a product");
    add_graph_options(color_cmd, color_args.in, false, true);
    color_cmd->add_option("--scheme", color_args.scheme, "Colouring scheme")
        ->required()
        ->check(CLI::IsMember({"odd-diametral", "even-generalized", "example-p3c6"}));
    color_cmd->add_option("--pair", color_args.pair, "Diametral pair: auto, all or \"i,h;j,k\"");
    color_cmd->add_option("--k", color_args.k, "Progression length for validation");
    color_cmd->add_flag("--check", color_args.check, "Exit 1 unless every colouring is exact and rainbow-free");
    color_cmd->add_flag("--grid", color_args.grid, "Render each colouring as a grid (rows are copies of H)");
    color_cmd->add_option("--out", color_args.out, "Write JSON lines here");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Check claims over bounded instance families");
    verify_cmd->add_option("--claim", verify_args.claims, "Claim id (repeatable)");
    verify_cmd->add_flag("--all", verify_args.all, "Every non-exploratory claim");
    verify_cmd->add_flag("--list", verify_args.list, "List the registered claims");
    verify_cmd->add_flag("--timing", verify_args.timing, "Show wall time per claim");
    verify_cmd->add_option("--out", verify_args.out, "Append result records here; stored instances are reused");
    add_bound_options(verify_cmd, verify_args.bounds);

    ConjectureArgs conj_args;
    auto* conj_cmd = app.add_subcommand("conjecture", "Explore aw(T x G, k) for k-peripheral trees T");
    conj_cmd->add_option("--k", conj_args.k, "Progression length")->check(CLI::Range(3, 6));
    conj_cmd->add_option("--tree-n", conj_args.tree_n, "Largest tree")->check(CLI::Range(1, 8));
    conj_cmd->add_option("--graph-n", conj_args.graph_n, "Largest connected factor")->check(CLI::Range(2, 4));
    conj_cmd->add_option("--node-limit", conj_args.node_limit, "Search node budget per product");
    conj_cmd->add_option("--threads", conj_args.threads, "Worker threads")->check(CLI::PositiveNumber);
    conj_cmd->add_option("--out", conj_args.out, "Write JSON lines here");

    auto usage = [&](const std::string& message) {
        err << "error: " << message << "\n\n";
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return kExitUsage;
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        return usage(e.what());
    }

    try {
        if (*aw_cmd) return cmd_aw(aw_args, out);
        if (*product_cmd) return cmd_product(product_args, out);
        if (*analyze_cmd) return cmd_analyze(analyze_args, out);
        if (*catalog_cmds[0]) return cmd_catalog(trees_args, true, out);
        if (*catalog_cmds[1]) return cmd_catalog(graphs_args, false, out);
        if (*color_cmd) return cmd_color(color_args, out);
        if (*verify_cmd) return cmd_verify(verify_args, out);
        if (*conj_cmd) return cmd_conjecture(conj_args, out);
    } catch (const UsageError& e) {
        return usage(e.what());
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SearchBudgetExceeded& e) {
        err << "search budget exceeded: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return usage("no subcommand");
}

}  // namespace awgraph::cli
