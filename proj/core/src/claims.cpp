// Instance families and checkers for every registered claim. Each checker
// re-derives its hypotheses from the raw graphs; catalog flags only order
// the families.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "awgraph/ap.hpp"
#include "awgraph/catalog.hpp"
#include "awgraph/colorings.hpp"
#include "awgraph/graph.hpp"
#include "awgraph/graph6.hpp"
#include "awgraph/structure.hpp"
#include "awgraph/tree.hpp"
#include "claims_internal.hpp"

namespace awgraph::detail {

namespace {

using nlohmann::json;

std::vector<Graph> decode(const std::vector<CatalogEntry>& entries) {
    std::vector<Graph> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(parse_graph6(e.graph6));
    return out;
}

std::vector<Graph> connected_graphs(int min_n, int max_n) { return decode(graphs_between(min_n, max_n)); }
std::vector<Graph> trees(int min_n, int max_n) { return decode(trees_between(min_n, max_n)); }

InstanceResult make_result(const Graph& lhs, const Graph* rhs, json params, std::string tier = {}) {
    InstanceResult r;
    r.tier = std::move(tier);
    r.lhs = encode_graph6(lhs);
    if (rhs) r.rhs = encode_graph6(*rhs);
    r.params = std::move(params);
    return r;
}

InstanceResult skip(InstanceResult r, const std::string& why) {
    r.outcome = "skipped";
    r.payload["reason"] = why;
    return r;
}

InstanceResult verdict(InstanceResult r, bool ok) {
    r.outcome = ok ? "passed" : "failed";
    return r;
}

bool three_peripheral(const Graph& g) { return is_k_peripheral(g, 3).found; }

json coloring_json(const Coloring& c) { return c.colors(); }

json ap_json(const ArithmeticProgression& ap) {
    return {{"vertices", ap.vertices}, {"difference", ap.difference}};
}

// ---------------------------------------------------------------- metric

std::vector<Task> prop_dist(const Bounds& b, Session&) {
    std::vector<Task> tasks;
    const auto pool = connected_graphs(1, b.metric_graph_n);
    for (const auto& g : pool) {
        for (const auto& h : pool) {
            tasks.emplace_back(make_result(g, &h, json::object()), [g, h](InstanceResult r) {
                const auto p = cartesian_product(g, h);
                const auto d = all_pairs_distances(p.composite());
                const int n = p.composite().order();
                for (Vertex a = 1; a <= n; ++a) {
                    for (Vertex c = 1; c <= n; ++c) {
                        auto [i, j] = p.coords(a);
                        auto [x, y] = p.coords(c);
                        const int expected = g.distance(i, x) + h.distance(j, y);
                        if (d(a, c) != expected) {
                            r.payload = {{"pair", {a, c}}, {"product", d(a, c)}, {"sum", expected}};
                            return verdict(std::move(r), false);
                        }
                    }
                }
                r.payload["pairs"] = n * n;
                return verdict(std::move(r), true);
            });
        }
    }
    return tasks;
}

std::vector<Task> obs_diam(const Bounds& b, Session&) {
    std::vector<Task> tasks;
    const auto pool = connected_graphs(1, b.metric_graph_n);
    for (const auto& g : pool) {
        for (const auto& h : pool) {
            tasks.emplace_back(make_result(g, &h, json::object()), [g, h](InstanceResult r) {
                const int product = eccentricities(cartesian_product(g, h).composite()).diameter;
                const int sum = eccentricities(g).diameter + eccentricities(h).diameter;
                r.payload = {{"product", product}, {"sum", sum}};
                return verdict(std::move(r), product == sum);
            });
        }
    }
    return tasks;
}

// Isometric subgraphs of g to try: g itself and one geodesic per vertex
// pair at maximal distance, each with its vertex map into g.
struct Isometric {
    Graph graph;
    std::vector<Vertex> map;
};

std::vector<Isometric> isometric_pieces(const Graph& g) {
    std::vector<Isometric> out;
    std::vector<Vertex> identity(static_cast<std::size_t>(g.order()));
    for (int v = 1; v <= g.order(); ++v) identity[v - 1] = v;
    out.push_back({g, identity});
    for (Vertex u = 1; u <= g.order(); ++u) {
        for (Vertex v = u + 1; v <= g.order(); ++v) {
            if (g.distance(u, v) != g.diameter()) continue;
            auto path = g.geodesic(u, v);
            out.push_back({path_graph(static_cast<int>(path.size())), path});
        }
    }
    return out;
}

std::vector<Task> cor_iso_subprod(const Bounds& b, Session&) {
    std::vector<Task> tasks;
    const auto pool = connected_graphs(1, b.metric_graph_n);
    for (const auto& g : pool) {
        for (const auto& h : pool) {
            tasks.emplace_back(make_result(g, &h, json::object()), [g, h](InstanceResult r) {
                const auto host = cartesian_product(g, h);
                int checked = 0;
                for (const auto& gs : isometric_pieces(g)) {
                    if (!is_isometric_embedding(gs.graph, g, gs.map)) return skip(std::move(r), "piece not isometric");
                    for (const auto& hs : isometric_pieces(h)) {
                        const auto sub = cartesian_product(gs.graph, hs.graph);
                        std::vector<Vertex> map(static_cast<std::size_t>(sub.composite().order()));
                        for (Vertex v = 1; v <= sub.composite().order(); ++v) {
                            auto [i, j] = sub.coords(v);
                            map[v - 1] = host.id(gs.map[i - 1], hs.map[j - 1]);
                        }
                        ++checked;
                        if (!is_isometric_embedding(sub.composite(), host.composite(), map)) {
                            r.payload = {{"left_map", gs.map}, {"right_map", hs.map}};
                            return verdict(std::move(r), false);
                        }
                    }
                }
                r.payload["subproducts"] = checked;
                return verdict(std::move(r), true);
            });
        }
    }
    return tasks;
}

// ------------------------------------------------------ tricoloured path

struct RandomInstance {
    Graph graph;
    Coloring coloring;
};

RandomInstance random_instance(std::mt19937_64& rng, int max_n) {
    auto below = [&](std::uint64_t bound) { return static_cast<int>(rng() % bound); };
    const int n = 3 + below(static_cast<std::uint64_t>(max_n - 2));
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[below(static_cast<std::uint64_t>(i) + 1)]);

    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(perm[i], perm[below(static_cast<std::uint64_t>(i))]);
    const int density = 1 + below(5);  // extra edge probability density/10
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (below(10) < density) edges.emplace_back(u, v);
        }
    }
    Graph g(n, edges);

    const int r = 3 + below(static_cast<std::uint64_t>(n - 2));
    std::vector<int> colors(static_cast<std::size_t>(n));
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[below(static_cast<std::uint64_t>(i) + 1)]);
    for (int i = 0; i < n; ++i) colors[perm[i] - 1] = i < r ? i + 1 : 1 + below(static_cast<std::uint64_t>(r));
    return {std::move(g), Coloring(std::move(colors))};
}

bool check_tricolored(const Graph& g, const Coloring& c, const TricoloredSubgraph& t, std::string& why) {
    const auto& vs = t.vertices;
    std::set<int> colors;
    for (Vertex v : vs) colors.insert(c(v));
    if (colors.size() < 3) {
        why = "fewer than three colours";
        return false;
    }
    if (std::set<Vertex>(vs.begin(), vs.end()).size() != vs.size()) {
        why = "repeated vertex";
        return false;
    }
    if (t.kind == TricoloredSubgraph::Kind::Triangle) {
        if (vs.size() != 3 || !g.adjacent(vs[0], vs[1]) || !g.adjacent(vs[1], vs[2]) || !g.adjacent(vs[0], vs[2])) {
            why = "not a triangle";
            return false;
        }
        return true;
    }
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        if (!g.adjacent(vs[i], vs[i + 1])) {
            why = "not a path";
            return false;
        }
    }
    if (g.distance(vs.front(), vs.back()) + 1 != static_cast<int>(vs.size())) {
        why = "path not isometric";
        return false;
    }
    return true;
}

std::vector<Task> lem_path_or_c3(const Bounds& b, Session&) {
    std::vector<Task> tasks;
    std::mt19937_64 rng(b.seed);
    for (int s = 0; s < b.path_samples; ++s) {
        auto inst = random_instance(rng, b.path_max_n);
        auto header = make_result(inst.graph, nullptr, {{"seed", b.seed}, {"sample", s}});
        tasks.emplace_back(std::move(header), [inst = std::move(inst)](InstanceResult r) {
            r.payload["coloring"] = coloring_json(inst.coloring);
            const auto t = find_tricolored_geodesic_or_triangle(inst.graph, inst.coloring);
            std::string why;
            const bool ok = check_tricolored(inst.graph, inst.coloring, t, why);
            r.payload["kind"] = t.kind == TricoloredSubgraph::Kind::Triangle ? "triangle" : "path";
            r.payload["vertices"] = t.vertices;
            if (!ok) r.payload["error"] = why;
            return verdict(std::move(r), ok);
        });
    }
    return tasks;
}

// ------------------------------------------------------------- aw claims

json aw_payload(const AwResult& a) {
    return {{"aw", a.aw}, {"certificate", coloring_json(a.certificate)}, {"nodes", a.stats.nodes}};
}

std::vector<Graph> diam2_h_pool() {
    auto spider = Graph(7, {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}, {6, 7}});  // S(2,2,2)
    return {path_graph(3), path_graph(5), cycle_graph(3), cycle_graph(4),
            cycle_graph(5), cycle_graph(8), star_graph(3), spider};
}

std::vector<Task> thm_diam2_prod(const Bounds& b, Session& session) {
    std::vector<Task> tasks;
    const auto hs = diam2_h_pool();
    for (const auto& g : connected_graphs(3, b.diam2_graph_n)) {
        for (const auto& h : hs) {
            tasks.emplace_back(make_result(g, &h, {{"k", 3}}), [g, h, &session](InstanceResult r) {
                if (g.order() < 3 || eccentricities(g).diameter > 2) return skip(std::move(r), "diam(G) > 2");
                const auto base = session.product_aw(path_graph(3), h, 3);
                r.payload["p3_aw"] = base.aw;
                if (base.aw != 3) return skip(std::move(r), "aw(P3 x H, 3) != 3");
                const auto a = session.product_aw(g, h, 3);
                r.payload.update(aw_payload(a));
                return verdict(std::move(r), a.aw == 3);
            });
        }
    }
    return tasks;
}

std::vector<std::pair<Graph, Graph>> unordered_pairs(const std::vector<Graph>& pool) {
    std::vector<std::pair<Graph, Graph>> out;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i; j < pool.size(); ++j) out.emplace_back(pool[i], pool[j]);
    }
    return out;
}

std::vector<std::pair<Graph, Graph>> aw_le_4_pairs(const Bounds& b) {
    return unordered_pairs(connected_graphs(2, b.product_graph_n));
}

std::vector<Task> thm_aw_le_4(const Bounds& b, Session& session) {
    std::vector<Task> tasks;
    for (const auto& [g, h] : aw_le_4_pairs(b)) {
        tasks.emplace_back(make_result(g, &h, {{"k", 3}}), [g, h, &session](InstanceResult r) {
            if (g.order() < 2 || h.order() < 2) return skip(std::move(r), "a factor has fewer than 2 vertices");
            const auto a = session.product_aw(g, h, 3);
            r.payload = aw_payload(a);
            return verdict(std::move(r), a.aw == 3 || a.aw == 4);
        });
    }
    return tasks;
}

Graph drop_first_edge(const Graph& g) {
    auto edges = g.edges();
    edges.erase(edges.begin());
    return Graph(g.order(), edges);
}

std::vector<Task> thm_pmpn(const Bounds& b, Session& session) {
    std::vector<Task> tasks;
    for (int m = 2; m <= b.max_m; ++m) {
        for (int n = 2; n <= b.max_n; ++n) {
            const auto pm = path_graph(m);
            const auto pn = path_graph(n);
            json params = {{"k", 3}, {"m", m}, {"n", n}};
            if (b.mutate_drop_edge) params["mutant"] = "drop-edge";
            tasks.emplace_back(make_result(pm, &pn, params), [m, n, pm, pn, mutate = b.mutate_drop_edge,
                                                               &session](InstanceResult r) {
                const AwResult a = mutate ? aw(drop_first_edge(cartesian_product(pm, pn).composite()), 3)
                                          : session.product_aw(pm, pn, 3);
                r.payload = aw_payload(a);
                r.payload["formula"] = pmpn_formula(m, n);
                return verdict(std::move(r), a.aw == pmpn_formula(m, n));
            });
        }
    }
    return tasks;
}

bool odd_product_pair(const Graph& t, const Graph& u) {
    return is_tree(t) && is_tree(u) && t.order() >= 2 && u.order() >= 2 && !three_peripheral(t) &&
           !three_peripheral(u) && (eccentricities(t).diameter + eccentricities(u).diameter) % 2 == 1;
}

std::vector<std::pair<Graph, Graph>> odd4_aw_pairs(const Bounds& b) {
    std::vector<std::pair<Graph, Graph>> out;
    for (auto& [t, u] : unordered_pairs(trees(2, b.product_tree_n))) {
        if (t.order() * u.order() <= b.full_search_max_vertices) out.emplace_back(std::move(t), std::move(u));
    }
    return out;
}

std::vector<std::pair<Graph, Graph>> pmpn_pairs(const Bounds& b) {
    std::vector<std::pair<Graph, Graph>> out;
    for (int m = 2; m <= b.max_m; ++m) {
        for (int n = 2; n <= b.max_n; ++n) out.emplace_back(path_graph(m), path_graph(n));
    }
    return out;
}

std::vector<Task> thm_odd_4(const Bounds& b, Session& session) {
    std::vector<Task> tasks;
    const auto pool = trees(2, b.product_tree_n);
    for (const auto& t : pool) {
        for (const auto& u : pool) {
            tasks.emplace_back(make_result(t, &u, {{"k", 3}, {"tier", "coloring"}}, "coloring"), [t, u](InstanceResult r) {
                if (!odd_product_pair(t, u)) return skip(std::move(r), "hypothesis fails");
                const auto p = cartesian_product(t, u);
                const auto choices = enumerate_diametral_choices(p);
                for (const auto& choice : choices) {
                    const auto c = odd_diameter_coloring(p, choice);
                    const auto v = validate_coloring(p.composite(), c, 3);
                    if (!v.exact || v.colors_used != 3 || !v.rainbow_free()) {
                        r.payload = {{"pair", format_pair_choice(p, choice)},
                                     {"coloring", coloring_json(c)},
                                     {"exact", v.exact},
                                     {"colors", v.colors_used}};
                        if (v.rainbow_witness) r.payload["rainbow"] = ap_json(*v.rainbow_witness);
                        return verdict(std::move(r), false);
                    }
                }
                r.payload["choices"] = choices.size();
                return verdict(std::move(r), true);
            });
        }
    }
    for (const auto& [t, u] : odd4_aw_pairs(b)) {
        tasks.emplace_back(make_result(t, &u, {{"k", 3}, {"tier", "full-search"}}, "full-search"), [t, u, &session](InstanceResult r) {
            if (!odd_product_pair(t, u)) return skip(std::move(r), "hypothesis fails");
            const auto a = session.product_aw(t, u, 3);
            r.payload = aw_payload(a);
            return verdict(std::move(r), a.aw == 4);
        });
    }
    return tasks;
}

// ------------------------------------------------------------ tree lemmas

std::vector<Task> lem_spine_equi(const Bounds& b, Session&) {
    std::vector<Task> tasks;
    for (const auto& t : trees(1, b.spine_tree_n)) {
        tasks.emplace_back(make_result(t, nullptr, json::object()), [t](InstanceResult r) {
            if (!is_tree(t)) return skip(std::move(r), "not a tree");
            std::size_t checked = 0;
            for (const auto& s : all_spines(t)) {
                const auto ts = branch_decomposition(t, s);
                for (Vertex u = 1; u <= t.order(); ++u) {
                    if (ts.on_spine(u)) continue;
                    const auto& branch = ts.branch_of(ts.root[u - 1]);
                    for (Vertex v = 1; v <= t.order(); ++v) {
                        if (std::binary_search(branch.begin(), branch.end(), v)) continue;
                        ++checked;
                        const auto w = equidistant_spine_vertex(ts, u, v);
                        if (!w || !ts.on_spine(*w) || t.distance(*w, v) != t.distance(u, v)) {
                            r.payload = {{"spine", s}, {"u", u}, {"v", v}};
                            return verdict(std::move(r), false);
                        }
                    }
                }
            }
            if (checked == 0) return skip(std::move(r), "no off-spine vertex");
            r.payload["pairs"] = checked;
            return verdict(std::move(r), true);
        });
    }
    return tasks;
}

std::vector<Task> cor_dplus1(const Bounds& b, Session&) {
    std::vector<Task> tasks;
    for (const auto& t : trees(1, b.spine_tree_n)) {
        tasks.emplace_back(make_result(t, nullptr, json::object()), [t](InstanceResult r) {
            if (!is_tree(t)) return skip(std::move(r), "not a tree");
            const auto ecc = eccentricities(t);
            std::size_t checked = 0;
            for (Vertex u = 1; u <= t.order(); ++u) {
                if (ecc.eccentricity[u - 1] == ecc.diameter) continue;
                for (Vertex v = 1; v <= t.order(); ++v) {
                    ++checked;
                    const auto w = extend_distance_vertex(t, u, v);
                    if (!w || t.distance(*w, v) != t.distance(u, v) + 1) {
                        r.payload = {{"u", u}, {"v", v}};
                        return verdict(std::move(r), false);
                    }
                }
            }
            if (checked == 0) return skip(std::move(r), "every vertex is peripheral");
            r.payload["pairs"] = checked;
            return verdict(std::move(r), true);
        });
    }
    return tasks;
}

std::vector<Task> lem_3per_even(const Bounds& b, Session&) {
    std::vector<Task> tasks;
    for (const auto& t : trees(1, b.lemma_tree_n)) {
        tasks.emplace_back(make_result(t, nullptr, json::object()), [t](InstanceResult r) {
            if (!is_tree(t) || !three_peripheral(t)) return skip(std::move(r), "not a 3-peripheral tree");
            const int diam = t.diameter();
            if (diam % 2 != 0) {
                r.payload["diameter"] = diam;
                return verdict(std::move(r), false);
            }
            const auto per = eccentricities(t).peripheral;
            std::size_t triples = 0;
            for (std::size_t a = 0; a < per.size(); ++a) {
                for (std::size_t bb = a + 1; bb < per.size(); ++bb) {
                    if (t.distance(per[a], per[bb]) != diam) continue;
                    for (std::size_t c = bb + 1; c < per.size(); ++c) {
                        const Vertex x = per[a], y = per[bb], z = per[c];
                        if (t.distance(x, z) != diam || t.distance(y, z) != diam) continue;
                        ++triples;
                        const auto centre = peripheral_center(t, x, y, z);
                        if (!centre || t.distance(*centre, x) != diam / 2 || t.distance(*centre, y) != diam / 2 ||
                            t.distance(*centre, z) != diam / 2) {
                            r.payload = {{"triple", {x, y, z}}};
                            return verdict(std::move(r), false);
                        }
                    }
                }
            }
            r.payload = {{"diameter", diam}, {"triples", triples}};
            return verdict(std::move(r), triples > 0);
        });
    }
    return tasks;
}

std::vector<Task> lem_treediam(const Bounds& b, Session&) {
    std::vector<Task> tasks;
    for (const auto& t : trees(1, b.lemma_tree_n)) {
        tasks.emplace_back(make_result(t, nullptr, json::object()), [t](InstanceResult r) {
            if (!is_tree(t) || three_peripheral(t)) return skip(std::move(r), "not a non-3-peripheral tree");
            const int diam = t.diameter();
            const int n = t.order();
            std::size_t checked = 0;
            for (Vertex i = 1; i <= n; ++i) {
                for (Vertex j = 1; j <= n; ++j) {
                    if (i == j || t.distance(i, j) != diam) continue;
                    for (Vertex x = 1; x <= n; ++x) {
                        if (t.distance(x, j) != diam) continue;
                        for (Vertex y = 1; y <= n; ++y) {
                            if (t.distance(i, y) != diam) continue;
                            ++checked;
                            if (t.distance(x, y) != diam) {
                                r.payload = {{"i", i}, {"j", j}, {"x", x}, {"y", y}};
                                return verdict(std::move(r), false);
                            }
                        }
                    }
                }
            }
            if (checked == 0) return skip(std::move(r), "no diametral pair");
            r.payload["quadruples"] = checked;
            return verdict(std::move(r), true);
        });
    }
    return tasks;
}

std::vector<Task> lem_prod_not3per(const Bounds& b, Session&) {
    std::vector<Task> tasks;
    for (const auto& [t, u] : unordered_pairs(trees(1, b.product_tree_n))) {
        tasks.emplace_back(make_result(t, &u, json::object()), [t, u](InstanceResult r) {
            if (three_peripheral(t) || three_peripheral(u)) return skip(std::move(r), "a factor is 3-peripheral");
            const auto w = is_k_peripheral(cartesian_product(t, u).composite(), 3);
            if (w.found) r.payload["witness"] = w.vertices;
            return verdict(std::move(r), !w.found);
        });
    }
    return tasks;
}

// --------------------------------------------- 3-peripheral tree products

std::vector<Task> path_times_tree(const Bounds& b, Session& session, int min_path, int max_path) {
    std::vector<Task> tasks;
    for (const auto& t : trees(1, b.path_tree_n)) {
        for (int n = min_path; n <= max_path; ++n) {
            const auto pn = path_graph(n);
            tasks.emplace_back(make_result(pn, &t, {{"k", 3}}), [t, pn, &session](InstanceResult r) {
                if (!is_tree(t) || !three_peripheral(t)) return skip(std::move(r), "not a 3-peripheral tree");
                const auto a = session.product_aw(pn, t, 3);
                r.payload = aw_payload(a);
                return verdict(std::move(r), a.aw == 3);
            });
        }
    }
    return tasks;
}

std::vector<Task> lem_p2t(const Bounds& b, Session& session) { return path_times_tree(b, session, 2, 2); }
std::vector<Task> lem_pnt(const Bounds& b, Session& session) {
    return path_times_tree(b, session, 2, b.pnt_max_path);
}

std::vector<Task> thm_3per_g(const Bounds& b, Session& session) {
    std::vector<Task> tasks;
    const auto gs = connected_graphs(2, b.product_graph_n);
    for (const auto& t : trees(1, b.product_tree_n)) {
        for (const auto& g : gs) {
            tasks.emplace_back(make_result(t, &g, {{"k", 3}}), [t, g, &session](InstanceResult r) {
                if (!is_tree(t) || !three_peripheral(t)) return skip(std::move(r), "not a 3-peripheral tree");
                const auto a = session.product_aw(t, g, 3);
                r.payload = aw_payload(a);
                return verdict(std::move(r), a.aw == 3);
            });
        }
    }
    return tasks;
}

// -------------------------------------------------- structural lemmas

// Rainbow-free colourings whose copies the structural lemmas constrain:
// search certificates from the aw families plus the constructed colourings.
struct PoolItem {
    Graph left;
    Graph right;
    std::string source;
};

std::vector<PoolItem> certificate_pool(const Bounds& b) {
    std::vector<PoolItem> pool;
    pool.push_back({path_graph(3), cycle_graph(6), "example"});
    for (auto& [g, h] : pmpn_pairs(b)) pool.push_back({std::move(g), std::move(h), "THM_PMPN"});
    for (auto& [g, h] : aw_le_4_pairs(b)) pool.push_back({std::move(g), std::move(h), "THM_AW_LE_4"});
    for (auto& [g, h] : odd4_aw_pairs(b)) pool.push_back({std::move(g), std::move(h), "THM_ODD_4"});
    return pool;
}

std::vector<Task> structural(const std::string& lemma, const Bounds& b, Session& session) {
    std::vector<Task> tasks;
    auto check = [lemma](InstanceResult r, const ProductGraph& p, const Coloring& c) {
        r.payload["coloring"] = coloring_json(c);
        if (c.num_colors() < 3) return skip(std::move(r), "fewer than 3 colours");
        // Every pooled colouring is supposed to be rainbow-free.
        if (!validate_coloring(p.composite(), c, 3).rainbow_free()) {
            r.payload["error"] = "colouring is not rainbow-free";
            return verdict(std::move(r), false);
        }
        for (const auto& lc : check_structural_lemmas(p, c).checks) {
            if (lc.lemma != lemma) continue;
            if (!lc.note.empty()) r.payload["note"] = lc.note;
            if (!lc.witness_copies.empty()) r.payload["copies"] = lc.witness_copies;
            if (lc.outcome == LemmaOutcome::Skipped) return skip(std::move(r), lc.note);
            return verdict(std::move(r), lc.outcome == LemmaOutcome::Passed);
        }
        throw std::logic_error("lemma " + lemma + " missing from structural report");
    };
    for (const auto& item : certificate_pool(b)) {
        tasks.emplace_back(make_result(item.left, &item.right, {{"k", 3}, {"source", item.source}}, "search-certificate"), [item, check, &session](InstanceResult r) {
            const auto p = cartesian_product(item.left, item.right);
            Coloring c = item.source == "example" ? example_p3c6_coloring()
                                                  : session.product_aw(item.left, item.right, 3).certificate;
            return check(std::move(r), p, c);
        });
    }
    // Constructed diametral colourings of odd-diameter tree products.
    const auto ts = trees(2, b.product_tree_n);
    for (const auto& t : ts) {
        for (const auto& u : ts) {
            tasks.emplace_back(make_result(t, &u, {{"k", 3}, {"source", "odd-diametral"}}, "construction"), [t, u, check](InstanceResult r) {
                if (!odd_product_pair(t, u)) return skip(std::move(r), "no odd-diametral colouring");
                const auto p = cartesian_product(t, u);
                return check(std::move(r), p, odd_diameter_coloring(p, default_diametral_choice(p)));
            });
        }
    }
    return tasks;
}

// ------------------------------------------------- choice-dependent colouring

InstanceResult choice_dependence_instance(InstanceResult r, const Graph& tree, bool expect_mixed) {
    const auto p4 = path_graph(4);
    const auto p = cartesian_product(tree, p4);
    std::size_t free_count = 0, rainbow_count = 0;
    json choices = json::array();
    for (const auto& choice : enumerate_diametral_choices(p)) {
        const auto cc = generalized_even_coloring(p, choice);
        const auto v = validate_coloring(p.composite(), cc.coloring, 3);
        (v.rainbow_free() ? free_count : rainbow_count) += 1;
        json entry = {{"pair", format_pair_choice(p, choice)}, {"exact", v.exact}, {"rainbow_free", v.rainbow_free()}};
        if (v.rainbow_witness) entry["rainbow"] = ap_json(*v.rainbow_witness);
        choices.push_back(std::move(entry));
    }
    r.payload = {{"rainbow_free_choices", free_count}, {"rainbow_choices", rainbow_count}, {"choices", choices}};
    const bool ok = expect_mixed ? (free_count > 0 && rainbow_count > 0) : (free_count == 0 && rainbow_count > 0);
    return verdict(std::move(r), ok);
}

std::vector<Task> choice_dependence(const Bounds&, Session&) {
    std::vector<Task> tasks;
    const auto p4 = path_graph(4);
    const std::pair<Graph, bool> pinned[] = {
        {Graph(5, {{1, 2}, {2, 3}, {3, 4}, {3, 5}}), true},
        {Graph(6, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {2, 6}}), false},
    };
    for (const auto& [tree, mixed] : pinned) {
        tasks.emplace_back(make_result(tree, &p4, {{"k", 3}, {"expect", mixed ? "mixed" : "all-rainbow"}}),
                           [tree, mixed](InstanceResult r) { return choice_dependence_instance(std::move(r), tree, mixed); });
    }
    return tasks;
}

// ------------------------------------------------------------ exploration

std::vector<Task> conj_kper(const Bounds& b, Session&) {
    std::vector<Task> tasks;
    const auto gs = connected_graphs(2, b.conj_graph_n);
    for (const auto& t : trees(1, b.conj_tree_n)) {
        for (const auto& g : gs) {
            tasks.emplace_back(make_result(t, &g, {{"k", b.conj_k}}), [t, g, k = b.conj_k, limit = b.conj_node_limit](InstanceResult r) {
                if (!is_tree(t) || !is_k_peripheral(t, k).found) return skip(std::move(r), "not k-peripheral");
                r.outcome = "data";
                try {
                    const auto a = aw(cartesian_product(t, g).composite(), k, SearchOptions{limit});
                    r.payload = aw_payload(a);
                    r.payload["equals_k"] = a.aw == k;
                } catch (const SearchBudgetExceeded&) {
                    r.payload = {{"budget_exceeded", true}, {"node_limit", limit}};
                }
                return r;
            });
        }
    }
    return tasks;
}

}  // namespace

const std::map<std::string, FamilyBuilder>& claim_families() {
    static const std::map<std::string, FamilyBuilder> families = {
        {"PROP_DIST", prop_dist},
        {"OBS_DIAM", obs_diam},
        {"COR_ISO_SUBPROD", cor_iso_subprod},
        {"LEM_PATH_OR_C3", lem_path_or_c3},
        {"THM_DIAM2_PROD", thm_diam2_prod},
        {"LEM_UNION_2", [](const Bounds& b, Session& s) { return structural("LEM_UNION_2", b, s); }},
        {"LEM_COPY_2", [](const Bounds& b, Session& s) { return structural("LEM_COPY_2", b, s); }},
        {"LEM_DIFF_1", [](const Bounds& b, Session& s) { return structural("LEM_DIFF_1", b, s); }},
        {"THM_AW_LE_4", thm_aw_le_4},
        {"THM_PMPN", thm_pmpn},
        {"LEM_SPINE_EQUI", lem_spine_equi},
        {"COR_DPLUS1", cor_dplus1},
        {"LEM_3PER_EVEN", lem_3per_even},
        {"LEM_P2T", lem_p2t},
        {"LEM_PNT", lem_pnt},
        {"THM_3PER_G", thm_3per_g},
        {"LEM_PROD_NOT3PER", lem_prod_not3per},
        {"LEM_TREEDIAM", lem_treediam},
        {"THM_ODD_4", thm_odd_4},
        {"FIG2_REPRO", choice_dependence},
        {"CONJ_KPER", conj_kper},
    };
    return families;
}

}  // namespace awgraph::detail
