#include "awgraph/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "awgraph/graph6.hpp"
#include "awgraph/tree.hpp"

namespace awgraph {

CatalogEntry make_entry(const Graph& g) {
    CatalogEntry e;
    e.graph6 = encode_graph6(g);
    e.n = g.order();
    e.is_tree = is_tree(g);
    e.is_3_peripheral = is_k_peripheral(g, 3).found;
    const auto ecc = eccentricities(g);
    e.diameter = ecc.diameter;
    e.peripheral_count = static_cast<int>(ecc.peripheral.size());
    return e;
}

namespace {

std::string rooted_code(const Graph& t, Vertex v, Vertex parent) {
    std::vector<std::string> children;
    for (Vertex w : t.neighbors(v)) {
        if (w != parent) children.push_back(rooted_code(t, w, v));
    }
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children) out += c;
    out += ")";
    return out;
}

std::vector<Vertex> tree_centers(const Graph& t) {
    const auto ecc = eccentricities(t);
    const int radius = *std::min_element(ecc.eccentricity.begin(), ecc.eccentricity.end());
    std::vector<Vertex> out;
    for (Vertex v = 1; v <= t.order(); ++v) {
        if (ecc.eccentricity[v - 1] == radius) out.push_back(v);
    }
    return out;
}

// Rebuilds a tree from a rooted code, labelling vertices in BFS order.
Graph tree_from_code(const std::string& code) {
    // Parse into a child-list structure first.
    std::vector<std::vector<int>> children(1);
    std::vector<int> stack{0};
    for (std::size_t i = 1; i < code.size(); ++i) {
        if (code[i] == '(') {
            const int id = static_cast<int>(children.size());
            children.emplace_back();
            children[static_cast<std::size_t>(stack.back())].push_back(id);
            stack.push_back(id);
        } else {
            stack.pop_back();
        }
    }
    std::vector<int> label(children.size(), 0);
    std::vector<int> order{0};
    label[0] = 1;
    std::vector<Edge> edges;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const int node = order[head];
        for (int c : children[static_cast<std::size_t>(node)]) {
            label[static_cast<std::size_t>(c)] = static_cast<int>(order.size()) + 1;
            order.push_back(c);
            edges.emplace_back(label[static_cast<std::size_t>(node)], label[static_cast<std::size_t>(c)]);
        }
    }
    return Graph(static_cast<int>(children.size()), edges);
}

}  // namespace

std::string tree_canonical_code(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("tree_canonical_code needs a tree");
    std::string best;
    for (Vertex c : tree_centers(t)) {
        std::string code = rooted_code(t, c, 0);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

std::vector<CatalogEntry> enumerate_trees(int n) {
    if (n < 1 || n > kMaxTreeOrder) throw std::out_of_range("tree order must be in 1..12");
    // Grow level by level: every tree on m + 1 vertices is a tree on m
    // vertices plus a leaf.
    std::set<std::string> level{"()"};
    for (int m = 1; m < n; ++m) {
        std::set<std::string> next;
        for (const auto& code : level) {
            const Graph t = tree_from_code(code);
            auto edges = t.edges();
            for (Vertex v = 1; v <= m; ++v) {
                auto grown = edges;
                grown.emplace_back(v, m + 1);
                next.insert(tree_canonical_code(Graph(m + 1, grown)));
            }
        }
        level = std::move(next);
    }
    std::vector<std::pair<std::pair<int, std::string>, CatalogEntry>> keyed;
    for (const auto& code : level) {
        const Graph t = tree_from_code(code);
        keyed.push_back({{t.diameter(), code}, make_entry(t)});
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<CatalogEntry> out;
    for (auto& [key, entry] : keyed) out.push_back(std::move(entry));
    return out;
}

std::string graph_canonical_code(const Graph& g) {
    const int n = g.order();
    if (n > 10) throw std::invalid_argument("graph_canonical_code supports n <= 10");

    // Colour refinement: repeatedly split classes by the multiset of
    // neighbouring classes until stable.
    std::vector<int> cls(static_cast<std::size_t>(n), 0);
    for (int round = 0; round < n; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> signature_ids;
        std::vector<std::pair<int, std::vector<int>>> sigs(static_cast<std::size_t>(n));
        for (Vertex v = 1; v <= n; ++v) {
            std::vector<int> nb;
            for (Vertex w : g.neighbors(v)) nb.push_back(cls[static_cast<std::size_t>(w - 1)]);
            std::sort(nb.begin(), nb.end());
            sigs[static_cast<std::size_t>(v - 1)] = {cls[static_cast<std::size_t>(v - 1)], std::move(nb)};
        }
        for (const auto& s : sigs) signature_ids.emplace(s, 0);
        int next_id = 0;
        for (auto& [sig, id] : signature_ids) id = next_id++;
        std::vector<int> refined(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) refined[static_cast<std::size_t>(v)] = signature_ids[sigs[static_cast<std::size_t>(v)]];
        const bool stable = std::set<int>(refined.begin(), refined.end()).size() ==
                            std::set<int>(cls.begin(), cls.end()).size();
        cls = std::move(refined);
        if (stable) break;
    }

    // Positions are filled class by class (in class-id order); within a
    // class every arrangement is tried.
    std::vector<std::vector<Vertex>> cells;
    {
        std::map<int, std::vector<Vertex>> by_class;
        for (Vertex v = 1; v <= n; ++v) by_class[cls[static_cast<std::size_t>(v - 1)]].push_back(v);
        for (auto& [c, members] : by_class) cells.push_back(members);
    }

    std::string best;
    std::vector<Vertex> order;  // order[pos] = original vertex
    order.reserve(static_cast<std::size_t>(n));
    std::string code;

    auto encode = [&]() {
        code.clear();
        for (int j = 1; j < n; ++j) {
            for (int i = 0; i < j; ++i) {
                code.push_back(g.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]) ? '1' : '0');
            }
        }
        if (best.empty() || code > best) best = code;
    };

    auto recurse = [&](auto&& self, std::size_t cell) -> void {
        if (cell == cells.size()) {
            encode();
            return;
        }
        auto members = cells[cell];
        std::sort(members.begin(), members.end());
        do {
            const std::size_t mark = order.size();
            order.insert(order.end(), members.begin(), members.end());
            self(self, cell + 1);
            order.resize(mark);
        } while (std::next_permutation(members.begin(), members.end()));
    };
    recurse(recurse, 0);
    // Prefix with the order so codes of different n never collide.
    return std::to_string(n) + ":" + best;
}

namespace {

Graph graph_from_code(int n, const std::string& bits) {
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (bits[k] == '1') edges.emplace_back(i + 1, j + 1);
        }
    }
    return Graph(n, edges);
}

}  // namespace

std::vector<CatalogEntry> enumerate_connected_graphs(int n) {
    if (n < 1 || n > kMaxGraphOrder) throw std::out_of_range("graph order must be in 1..7");
    // Every connected graph on m + 1 vertices has a non-cut vertex, so it
    // arises from a connected graph on m vertices by attaching a new vertex
    // to a nonempty neighbour set.
    std::set<std::string> level{graph_canonical_code(Graph(1, {}))};
    for (int m = 1; m < n; ++m) {
        std::set<std::string> next;
        for (const auto& code : level) {
            const Graph base = graph_from_code(m, code.substr(code.find(':') + 1));
            const auto edges = base.edges();
            for (unsigned mask = 1; mask < (1u << m); ++mask) {
                auto grown = edges;
                for (int v = 0; v < m; ++v) {
                    if (mask >> v & 1u) grown.emplace_back(v + 1, m + 1);
                }
                next.insert(graph_canonical_code(Graph(m + 1, grown)));
            }
        }
        level = std::move(next);
    }
    std::vector<std::pair<std::pair<std::size_t, std::string>, CatalogEntry>> keyed;
    for (const auto& code : level) {
        const Graph g = graph_from_code(n, code.substr(code.find(':') + 1));
        keyed.push_back({{g.size(), code}, make_entry(g)});
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<CatalogEntry> out;
    for (auto& [key, entry] : keyed) out.push_back(std::move(entry));
    return out;
}

std::vector<CatalogEntry> filter_catalog(const std::vector<CatalogEntry>& entries,
                                         const std::vector<std::string>& predicates) {
    std::vector<std::function<bool(const CatalogEntry&)>> tests;
    for (const auto& p : predicates) {
        if (p == "3-peripheral") {
            tests.emplace_back([](const CatalogEntry& e) { return e.is_3_peripheral; });
        } else if (p == "not-3-peripheral") {
            tests.emplace_back([](const CatalogEntry& e) { return !e.is_3_peripheral; });
        } else if (p == "diam-even") {
            tests.emplace_back([](const CatalogEntry& e) { return e.diameter % 2 == 0; });
        } else if (p == "diam-odd") {
            tests.emplace_back([](const CatalogEntry& e) { return e.diameter % 2 != 0; });
        } else if (p == "tree") {
            tests.emplace_back([](const CatalogEntry& e) { return e.is_tree; });
        } else if (p.rfind("min-n=", 0) == 0 || p.rfind("max-n=", 0) == 0) {
            int bound = 0;
            try {
                bound = std::stoi(p.substr(6));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad size bound in predicate \"" + p + "\"");
            }
            if (p[1] == 'i') {
                tests.emplace_back([bound](const CatalogEntry& e) { return e.n >= bound; });
            } else {
                tests.emplace_back([bound](const CatalogEntry& e) { return e.n <= bound; });
            }
        } else {
            throw std::invalid_argument("unknown catalog predicate \"" + p + "\"");
        }
    }
    std::vector<CatalogEntry> out;
    std::copy_if(entries.begin(), entries.end(), std::back_inserter(out), [&](const CatalogEntry& e) {
        return std::all_of(tests.begin(), tests.end(), [&](const auto& t) { return t(e); });
    });
    return out;
}

std::vector<CatalogEntry> trees_between(int min_n, int max_n) {
    std::vector<CatalogEntry> out;
    for (int n = std::max(1, min_n); n <= max_n; ++n) {
        auto level = enumerate_trees(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<CatalogEntry> graphs_between(int min_n, int max_n) {
    std::vector<CatalogEntry> out;
    for (int n = std::max(1, min_n); n <= max_n; ++n) {
        auto level = enumerate_connected_graphs(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace awgraph
