#include "awgraph/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace awgraph {

DisconnectedGraphError::DisconnectedGraphError(Vertex from, Vertex unreachable)
    : InputError("graph is disconnected: vertex " + std::to_string(unreachable) +
                 " is unreachable from vertex " + std::to_string(from)),
      from_(from),
      unreachable_(unreachable) {}

DistanceMatrix bfs_distances(const std::vector<std::vector<Vertex>>& adjacency) {
    const int n = static_cast<int>(adjacency.size());
    DistanceMatrix dist(n);
    std::vector<Vertex> queue(static_cast<std::size_t>(n));
    for (Vertex s = 1; s <= n; ++s) {
        std::size_t head = 0;
        std::size_t tail = 0;
        queue[tail++] = s;
        dist.at(s, s) = 0;
        while (head < tail) {
            const Vertex u = queue[head++];
            const int du = dist(s, u);
            for (Vertex w : adjacency[u - 1]) {
                if (dist(s, w) < 0) {
                    dist.at(s, w) = du + 1;
                    queue[tail++] = w;
                }
            }
        }
    }
    return dist;
}

Graph::Graph(int n, std::span<const Edge> edges)
    : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))),
      adj_matrix_(static_cast<std::size_t>(std::max(n, 0)) * std::max(n, 0), 0) {
    if (n < 1) throw InputError("graph must have at least one vertex");
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n) {
            throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                             " has a label outside 1.." + std::to_string(n));
        }
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        auto& cell = adj_matrix_[static_cast<std::size_t>(u - 1) * n + (v - 1)];
        if (cell) continue;
        cell = 1;
        adj_matrix_[static_cast<std::size_t>(v - 1) * n + (u - 1)] = 1;
        adj_[u - 1].push_back(v);
        adj_[v - 1].push_back(u);
        ++edge_count_;
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());

    dist_ = bfs_distances(adj_);
    for (Vertex v = 1; v <= n; ++v) {
        if (dist_(1, v) < 0) throw DisconnectedGraphError(1, v);
    }
    for (Vertex u = 1; u <= n; ++u) {
        for (int d : dist_.row(u)) diameter_ = std::max(diameter_, d);
    }
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 1; u <= n_; ++u) {
        for (Vertex v : adj_[u - 1]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<Vertex> Graph::geodesic(Vertex u, Vertex v) const {
    std::vector<Vertex> path{u};
    Vertex cur = u;
    while (cur != v) {
        for (Vertex w : neighbors(cur)) {
            if (distance(w, v) == distance(cur, v) - 1) {
                cur = w;
                break;
            }
        }
        path.push_back(cur);
    }
    return path;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && adj_matrix_ == other.adj_matrix_;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(g.order()));
    for (Vertex v = 1; v <= g.order(); ++v) {
        auto nb = g.neighbors(v);
        adjacency[v - 1].assign(nb.begin(), nb.end());
    }
    DistanceMatrix d = bfs_distances(adjacency);
    for (Vertex v = 1; v <= g.order(); ++v) {
        if (d(1, v) < 0) throw DisconnectedGraphError(1, v);
    }
    return d;
}

Eccentricities eccentricities(const Graph& g) {
    Eccentricities out;
    out.eccentricity.resize(static_cast<std::size_t>(g.order()));
    for (Vertex v = 1; v <= g.order(); ++v) {
        auto row = g.distances().row(v);
        out.eccentricity[v - 1] = *std::max_element(row.begin(), row.end());
        out.diameter = std::max(out.diameter, out.eccentricity[v - 1]);
    }
    for (Vertex v = 1; v <= g.order(); ++v) {
        if (out.eccentricity[v - 1] == out.diameter) out.peripheral.push_back(v);
    }
    return out;
}

bool is_isometric_embedding(const Graph& sub, const Graph& host, std::span<const Vertex> map) {
    const int n = sub.order();
    if (static_cast<int>(map.size()) != n) {
        throw std::invalid_argument("embedding map must have one entry per vertex");
    }
    std::vector<char> seen(static_cast<std::size_t>(host.order()) + 1, 0);
    for (Vertex image : map) {
        if (image < 1 || image > host.order()) {
            throw std::invalid_argument("embedding maps outside the host graph");
        }
        if (seen[image]) throw std::invalid_argument("embedding map is not injective");
        seen[image] = 1;
    }
    for (auto [u, v] : sub.edges()) {
        if (!host.adjacent(map[u - 1], map[v - 1])) {
            throw std::invalid_argument("embedding map does not preserve edge " + std::to_string(u) +
                                        "-" + std::to_string(v));
        }
    }
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
            if (sub.distance(u, v) != host.distance(map[u - 1], map[v - 1])) return false;
        }
    }
    return true;
}

std::pair<std::optional<Bipartition>, std::optional<OddCycle>> bipartition(const Graph& g) {
    const int n = g.order();
    std::vector<int> side(static_cast<std::size_t>(n) + 1, -1);
    std::vector<Vertex> parent(static_cast<std::size_t>(n) + 1, 0);
    std::queue<Vertex> queue;
    side[1] = 0;
    queue.push(1);
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(u)) {
            if (side[w] < 0) {
                side[w] = 1 - side[u];
                parent[w] = u;
                queue.push(w);
            } else if (side[w] == side[u]) {
                // Both endpoints sit at the same BFS depth parity; walk the
                // two tree paths up to their meeting point.
                std::vector<Vertex> up_u{u};
                std::vector<Vertex> up_w{w};
                while (up_u.back() != up_w.back()) {
                    const Vertex a = up_u.back();
                    const Vertex b = up_w.back();
                    if (g.distance(1, a) >= g.distance(1, b)) {
                        up_u.push_back(parent[a]);
                    } else {
                        up_w.push_back(parent[b]);
                    }
                }
                OddCycle cycle;
                cycle.cycle = up_u;
                for (auto it = up_w.rbegin() + 1; it != up_w.rend(); ++it) cycle.cycle.push_back(*it);
                return {std::nullopt, cycle};
            }
        }
    }
    Bipartition parts;
    for (Vertex v = 1; v <= n; ++v) (side[v] == 0 ? parts.part_a : parts.part_b).push_back(v);
    return {parts, std::nullopt};
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycles need at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(n, 1);
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

Graph star_graph(int leaves) {
    std::vector<Edge> edges;
    for (Vertex v = 2; v <= leaves + 1; ++v) edges.emplace_back(1, v);
    return Graph(leaves + 1, edges);
}

namespace {

Graph build_product(const Graph& g, const Graph& h) {
    const int ng = g.order();
    const int nh = h.order();
    auto id = [nh](int i, int j) { return (i - 1) * nh + j; };
    std::vector<Edge> edges;
    edges.reserve(ng * h.size() + nh * g.size());
    for (int i = 1; i <= ng; ++i) {
        for (auto [a, b] : h.edges()) edges.emplace_back(id(i, a), id(i, b));
    }
    for (int j = 1; j <= nh; ++j) {
        for (auto [a, b] : g.edges()) edges.emplace_back(id(a, j), id(b, j));
    }
    return Graph(ng * nh, edges);
}

}  // namespace

ProductGraph::ProductGraph(Graph left, Graph right)
    : left_(std::move(left)), right_(std::move(right)), composite_(build_product(left_, right_)) {}

std::vector<Vertex> ProductGraph::left_copy(int j) const {
    std::vector<Vertex> out;
    for (int i = 1; i <= left_.order(); ++i) out.push_back(id(i, j));
    return out;
}

std::vector<Vertex> ProductGraph::right_copy(int i) const {
    std::vector<Vertex> out;
    for (int j = 1; j <= right_.order(); ++j) out.push_back(id(i, j));
    return out;
}

ProductGraph cartesian_product(const Graph& g, const Graph& h) { return ProductGraph(g, h); }

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Edge> edges;
    int n = 0;
    int line_no = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<long> values;
        long x = 0;
        while (fields >> x) values.push_back(x);
        if (!fields.eof()) {
            throw InputError("edge list line " + std::to_string(line_no) + ": expected integers");
        }
        if (values.empty()) continue;
        if (first && values.size() == 1) {
            n = static_cast<int>(values[0]);
        } else if (values.size() == 2) {
            edges.emplace_back(static_cast<Vertex>(values[0]), static_cast<Vertex>(values[1]));
            n = std::max<int>(n, static_cast<int>(std::max(values[0], values[1])));
        } else {
            throw InputError("edge list line " + std::to_string(line_no) + ": expected \"u v\"");
        }
        first = false;
    }
    if (n < 1) throw InputError("edge list is empty");
    return Graph(n, edges);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace awgraph
