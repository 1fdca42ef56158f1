#include "awgraph/tree.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace awgraph {

bool is_tree(const Graph& g) {
    // Graph guarantees connectivity.
    return g.size() == static_cast<std::size_t>(g.order() - 1);
}

namespace {

void require_tree(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("expected a tree");
}

std::vector<Vertex> equidistant_spine_vertices(const TreeStructure& ts, Vertex u, Vertex v) {
    const Graph& t = *ts.tree;
    std::vector<Vertex> out;
    for (Vertex x : ts.spine) {
        if (t.distance(x, v) == t.distance(u, v)) out.push_back(x);
    }
    return out;
}

}  // namespace

std::vector<Vertex> spine(const Graph& t) {
    require_tree(t);
    const int diam = t.diameter();
    for (Vertex a = 1; a <= t.order(); ++a) {
        for (Vertex b = a + 1; b <= t.order(); ++b) {
            if (t.distance(a, b) == diam) return t.geodesic(a, b);
        }
    }
    return {1};  // K1
}

std::vector<std::vector<Vertex>> all_spines(const Graph& t) {
    require_tree(t);
    if (t.order() == 1) return {{1}};
    std::vector<std::vector<Vertex>> out;
    for (Vertex a = 1; a <= t.order(); ++a) {
        for (Vertex b = a + 1; b <= t.order(); ++b) {
            if (t.distance(a, b) == t.diameter()) out.push_back(t.geodesic(a, b));
        }
    }
    return out;
}

TreeStructure branch_decomposition(const Graph& t, const std::vector<Vertex>& s) {
    require_tree(t);
    if (s.empty() || static_cast<int>(s.size()) != t.diameter() + 1) {
        throw std::invalid_argument("spine length must equal diam + 1 vertices");
    }
    for (std::size_t p = 0; p + 1 < s.size(); ++p) {
        if (s[p] < 1 || s[p] > t.order() || s[p + 1] < 1 || s[p + 1] > t.order() ||
            !t.adjacent(s[p], s[p + 1])) {
            throw std::invalid_argument("spine is not a path in the tree");
        }
    }
    if (t.distance(s.front(), s.back()) != t.diameter()) {
        throw std::invalid_argument("spine does not realise the diameter");
    }

    TreeStructure ts;
    ts.tree = &t;
    ts.spine = s;
    ts.spine_position.assign(static_cast<std::size_t>(t.order()), -1);
    for (std::size_t p = 0; p < s.size(); ++p) ts.spine_position[s[p] - 1] = static_cast<int>(p);

    ts.root.resize(static_cast<std::size_t>(t.order()));
    ts.branches.resize(s.size());
    for (Vertex v = 1; v <= t.order(); ++v) {
        // In a tree the nearest spine vertex is unique.
        Vertex best = s.front();
        for (Vertex x : s) {
            if (t.distance(x, v) < t.distance(best, v)) best = x;
        }
        ts.root[v - 1] = best;
        ts.branches[static_cast<std::size_t>(ts.spine_position[best - 1])].push_back(v);
    }
    return ts;
}

PeripheralWitness is_k_peripheral(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("k-peripherality needs k >= 2");
    const auto ecc = eccentricities(g);
    const auto& candidates = ecc.peripheral;
    const int diam = ecc.diameter;
    PeripheralWitness out;
    if (diam == 0) return out;  // K1 has no two distinct vertices

    std::vector<Vertex> chosen;
    std::function<bool(std::size_t)> extend = [&](std::size_t from) -> bool {
        if (static_cast<int>(chosen.size()) == k) return true;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            const Vertex c = candidates[i];
            if (std::all_of(chosen.begin(), chosen.end(),
                            [&](Vertex x) { return g.distance(x, c) == diam; })) {
                chosen.push_back(c);
                if (extend(i + 1)) return true;
                chosen.pop_back();
            }
        }
        return false;
    };
    if (extend(0)) {
        out.found = true;
        out.vertices = chosen;
    }
    return out;
}

std::optional<Vertex> peripheral_center(const Graph& t, Vertex x, Vertex y, Vertex z) {
    require_tree(t);
    const int diam = t.diameter();
    if (x == y || y == z || x == z || t.distance(x, y) != diam || t.distance(y, z) != diam ||
        t.distance(x, z) != diam) {
        throw std::invalid_argument("peripheral_center needs three pairwise diametral vertices");
    }
    if (diam % 2 != 0) return std::nullopt;
    const auto path = t.geodesic(x, y);
    const Vertex mid = path[static_cast<std::size_t>(diam / 2)];
    if (t.distance(mid, z) != diam / 2) return std::nullopt;
    return mid;
}

std::optional<Vertex> equidistant_spine_vertex(const TreeStructure& ts, Vertex u, Vertex v) {
    if (ts.on_spine(u)) throw std::invalid_argument("u must lie off the spine");
    const auto& branch = ts.branch_of(ts.root[u - 1]);
    if (std::binary_search(branch.begin(), branch.end(), v)) {
        throw std::invalid_argument("v must lie outside the branch containing u");
    }
    auto found = equidistant_spine_vertices(ts, u, v);
    if (found.empty()) return std::nullopt;
    return found.front();
}

std::optional<Vertex> extend_distance_vertex(const Graph& t, Vertex u, Vertex v) {
    require_tree(t);
    const auto ecc = eccentricities(t);
    if (ecc.eccentricity[u - 1] == ecc.diameter) {
        throw std::invalid_argument("u must not be a peripheral vertex");
    }
    const TreeStructure ts = branch_decomposition(t, spine(t));
    const auto& s = ts.spine;
    const int target = t.distance(u, v) + 1;

    auto step_outward = [&](Vertex x) -> std::optional<Vertex> {
        const int p = ts.spine_position[x - 1];
        for (int q : {p - 1, p + 1}) {
            if (q < 0 || q >= static_cast<int>(s.size())) continue;
            if (t.distance(s[static_cast<std::size_t>(q)], v) == target) return s[static_cast<std::size_t>(q)];
        }
        return std::nullopt;
    };

    if (ts.on_spine(u)) return step_outward(u);

    const auto& branch = ts.branch_of(ts.root[u - 1]);
    if (std::binary_search(branch.begin(), branch.end(), v)) {
        // u and v share a branch. The spine start is strictly farther from
        // v than u is, so the x_1-v path passes distance d(u, v) + 1.
        for (Vertex w : t.geodesic(s.front(), v)) {
            if (t.distance(w, v) == target) return w;
        }
        return std::nullopt;
    }

    // Move u onto the spine, preferring an interior spine vertex so that a
    // step in both directions is available.
    for (Vertex x : equidistant_spine_vertices(ts, u, v)) {
        if (x == s.front() || x == s.back()) continue;
        if (auto w = step_outward(x)) return w;
    }
    return std::nullopt;
}

}  // namespace awgraph
