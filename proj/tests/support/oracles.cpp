#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace oracle {

Matrix floyd_warshall(int n, const EdgeList& edges) {
    Matrix d(n, std::vector<int>(n, kInf));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (auto [u, v] : edges) d[u - 1][v - 1] = d[v - 1][u - 1] = 1;
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
    return d;
}

bool connected(int n, const EdgeList& edges) {
    const auto d = floyd_warshall(n, edges);
    for (int j = 0; j < n; ++j)
        if (d[0][j] >= kInf) return false;
    return true;
}

std::set<std::vector<int>> naive_aps(const Matrix& d, int k) {
    const int n = static_cast<int>(d.size());
    std::set<std::vector<int>> out;
    std::vector<int> seq;
    std::function<void(int)> extend = [&](int diff) {
        if (static_cast<int>(seq.size()) == k) {
            auto s = seq;
            std::sort(s.begin(), s.end());
            for (auto& v : s) ++v;
            out.insert(s);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (std::find(seq.begin(), seq.end(), v) != seq.end()) continue;
            if (d[seq.back()][v] != diff) continue;
            seq.push_back(v);
            extend(diff);
            seq.pop_back();
        }
    };
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            seq = {a, b};
            extend(d[a][b]);
        }
    }
    return out;
}

bool rainbow_free(const std::set<std::vector<int>>& aps, const std::vector<int>& colors) {
    for (const auto& ap : aps) {
        std::set<int> cs;
        for (int v : ap) cs.insert(colors[v - 1]);
        if (cs.size() == ap.size()) return false;
    }
    return true;
}

int naive_aw(const Matrix& d, int k) {
    const int n = static_cast<int>(d.size());
    const auto aps = naive_aps(d, k);
    std::vector<bool> feasible(n + 2, false);
    std::vector<int> colors(n, 0);
    // Restricted growth strings enumerate each set partition once.
    std::function<void(int, int)> rec = [&](int v, int used) {
        if (v == n) {
            if (!feasible[used] && rainbow_free(aps, colors)) feasible[used] = true;
            return;
        }
        for (int c = 1; c <= used + 1; ++c) {
            colors[v] = c;
            rec(v + 1, std::max(used, c));
        }
    };
    rec(0, 0);
    for (int r = 1; r <= n; ++r)
        if (!feasible[r]) return r;
    return n + 1;
}

namespace {

std::vector<std::vector<char>> adjacency(int n, const EdgeList& e) {
    std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
    for (auto [u, v] : e) a[u - 1][v - 1] = a[v - 1][u - 1] = 1;
    return a;
}

std::vector<int> degrees(const std::vector<std::vector<char>>& a) {
    std::vector<int> deg;
    for (const auto& row : a) deg.push_back(static_cast<int>(std::count(row.begin(), row.end(), 1)));
    return deg;
}

// Sorted degrees plus sorted distance profiles: an isomorphism invariant.
std::vector<int> invariant(int n, const EdgeList& e) {
    const auto d = floyd_warshall(n, e);
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < n; ++i) {
        auto r = d[i];
        std::sort(r.begin(), r.end());
        rows.push_back(r);
    }
    std::sort(rows.begin(), rows.end());
    std::vector<int> out{static_cast<int>(e.size())};
    for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
    return out;
}

int count_classes(int n, const std::vector<EdgeList>& graphs) {
    std::map<std::vector<int>, std::vector<EdgeList>> buckets;
    int classes = 0;
    for (const auto& g : graphs) {
        auto& reps = buckets[invariant(n, g)];
        bool seen = false;
        for (const auto& r : reps) {
            if (isomorphic(n, r, g)) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            reps.push_back(g);
            ++classes;
        }
    }
    return classes;
}

}  // namespace

bool isomorphic(int n, const EdgeList& ea, const EdgeList& eb) {
    if (ea.size() != eb.size()) return false;
    const auto a = adjacency(n, ea);
    const auto b = adjacency(n, eb);
    const auto da = degrees(a);
    const auto db = degrees(b);
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> rec = [&](int v) {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || da[v] != db[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) ok = a[v][u] == b[w][map[u]];
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            if (rec(v + 1)) return true;
            used[w] = false;
        }
        return false;
    };
    return rec(0);
}

int count_trees_pruefer(int n) {
    if (n <= 2) return 1;
    std::vector<EdgeList> trees;
    std::vector<int> seq(n - 2, 1);
    while (true) {
        std::vector<int> degree(n + 1, 1);
        for (int x : seq) ++degree[x];
        EdgeList edges;
        for (int x : seq) {
            int leaf = 1;
            while (degree[leaf] != 1) ++leaf;
            edges.emplace_back(leaf, x);
            --degree[leaf];
            --degree[x];
        }
        int u = 0, v = 0;
        for (int i = 1; i <= n; ++i) {
            if (degree[i] == 1) (u == 0 ? u : v) = i;
        }
        edges.emplace_back(u, v);
        trees.push_back(edges);
        int i = n - 3;
        while (i >= 0 && seq[i] == n) seq[i--] = 1;
        if (i < 0) break;
        ++seq[i];
    }
    return count_classes(n, trees);
}

int count_connected_graphs(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
    std::vector<EdgeList> graphs;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        EdgeList e;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1) e.push_back(slots[i]);
        if (connected(n, e)) graphs.push_back(std::move(e));
    }
    return count_classes(n, graphs);
}

EdgeList random_connected(std::mt19937_64& rng, int n, double extra) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    EdgeList e;
    for (int v = 2; v <= n; ++v) {
        std::uniform_int_distribution<int> parent(1, v - 1);
        e.emplace_back(parent(rng), v);
    }
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng) < extra) e.emplace_back(u, v);
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return e;
}

}  // namespace oracle
