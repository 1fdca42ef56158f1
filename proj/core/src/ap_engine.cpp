#include "awgraph/ap.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <set>

namespace awgraph {

int Coloring::num_colors() const {
    return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
}

bool Coloring::is_exact() const {
    const int r = num_colors();
    std::vector<char> seen(static_cast<std::size_t>(r) + 1, 0);
    for (int c : colors_) {
        if (c < 1) return false;
        seen[static_cast<std::size_t>(c)] = 1;
    }
    return std::all_of(seen.begin() + 1, seen.end(), [](char s) { return s != 0; });
}

Coloring Coloring::canonical() const {
    std::map<int, int> relabel;
    std::vector<int> out;
    out.reserve(colors_.size());
    for (int c : colors_) {
        auto [it, inserted] = relabel.try_emplace(c, static_cast<int>(relabel.size()) + 1);
        out.push_back(it->second);
    }
    return Coloring(std::move(out));
}

std::vector<ArithmeticProgression> enumerate_k_aps(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("APs need k >= 2");
    const int n = g.order();
    std::map<std::vector<Vertex>, ArithmeticProgression> by_set;
    std::vector<Vertex> seq;
    seq.reserve(static_cast<std::size_t>(k));

    auto record = [&](int d) {
        if (seq.front() > seq.back()) return;
        std::vector<Vertex> key = seq;
        std::sort(key.begin(), key.end());
        ArithmeticProgression ap{seq, d};
        auto it = by_set.find(key);
        if (it == by_set.end()) {
            by_set.emplace(std::move(key), std::move(ap));
        } else if (std::tie(d, seq) < std::tie(it->second.difference, it->second.vertices)) {
            it->second = std::move(ap);
        }
    };

    // Depth-first extension of v_1, ..., v_k at fixed difference d.
    auto extend = [&](auto&& self, int d) -> void {
        if (static_cast<int>(seq.size()) == k) {
            record(d);
            return;
        }
        const auto row = g.distances().row(seq.back());
        for (Vertex w = 1; w <= n; ++w) {
            if (row[w - 1] != d) continue;
            if (std::find(seq.begin(), seq.end(), w) != seq.end()) continue;
            seq.push_back(w);
            self(self, d);
            seq.pop_back();
        }
    };

    for (Vertex start = 1; start <= n; ++start) {
        for (int d = 1; d <= g.diameter(); ++d) {
            seq.assign(1, start);
            extend(extend, d);
        }
    }

    std::vector<ArithmeticProgression> out;
    out.reserve(by_set.size());
    for (auto& [key, ap] : by_set) out.push_back(std::move(ap));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_rainbow(std::span<const Vertex> vertices, const Coloring& c) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (c(vertices[i]) == c(vertices[j])) return false;
        }
    }
    return true;
}

bool is_rainbow(const ArithmeticProgression& ap, const Coloring& c) { return is_rainbow(ap.vertices, c); }

namespace {

constexpr int kMaxSearchOrder = 64;

// Colour-class search. Colours are 0-based bits here. A domain is the set
// of colours a vertex may still take; restrictions only ever come from APs
// with k - 1 distinctly coloured members, so every restricted domain is a
// subset of the colours already in use. Unused colours are therefore
// interchangeable and a vertex tries at most one of them (the next id).
class ColoringSearch {
public:
    ColoringSearch(int n, std::span<const ArithmeticProgression> aps, int k, int r, SearchStats* stats,
                   const SearchOptions& options)
        : n_(n), k_(k), r_(r), stats_(stats), options_(options), aps_of_(static_cast<std::size_t>(n)) {
        full_ = r >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
        members_.reserve(aps.size() * static_cast<std::size_t>(k));
        for (std::size_t a = 0; a < aps.size(); ++a) {
            for (Vertex v : aps[a].vertices) {
                members_.push_back(v - 1);
                aps_of_[static_cast<std::size_t>(v - 1)].push_back(static_cast<int>(a));
            }
        }
    }

    std::optional<Coloring> run() {
        State s;
        s.color.fill(-1);
        s.domain.fill(full_);
        if (r_ > n_) return std::nullopt;
        if (!solve(s)) return std::nullopt;
        std::vector<int> colors(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) colors[static_cast<std::size_t>(v)] = s.color[static_cast<std::size_t>(v)] + 1;
        return Coloring(std::move(colors)).canonical();
    }

private:
    struct State {
        std::array<int, kMaxSearchOrder> color;
        std::array<std::uint64_t, kMaxSearchOrder> domain;
        int used = 0;
        int assigned = 0;
    };

    std::uint64_t used_mask(const State& s) const {
        return s.used >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s.used) - 1;
    }

    bool can_open_new(const State& s, int v) const {
        return s.used < r_ && (s.domain[static_cast<std::size_t>(v)] & ~used_mask(s) & full_) != 0;
    }

    int options(const State& s, int v) const {
        return std::popcount(s.domain[static_cast<std::size_t>(v)] & used_mask(s)) + (can_open_new(s, v) ? 1 : 0);
    }

    // Assigns v := c and propagates forced colours. False on a rainbow AP or
    // an emptied domain.
    bool assign(State& s, int v, int c) {
        std::array<int, kMaxSearchOrder> queue;
        int head = 0;
        int tail = 0;
        s.color[static_cast<std::size_t>(v)] = c;
        ++s.assigned;
        if (c == s.used) ++s.used;
        queue[static_cast<std::size_t>(tail++)] = v;

        while (head < tail) {
            const int x = queue[static_cast<std::size_t>(head++)];
            for (int a : aps_of_[static_cast<std::size_t>(x)]) {
                const int* m = &members_[static_cast<std::size_t>(a) * k_];
                int free_vertex = -1;
                int unassigned = 0;
                int assigned = 0;
                std::uint64_t seen = 0;
                for (int i = 0; i < k_; ++i) {
                    const int col = s.color[static_cast<std::size_t>(m[i])];
                    if (col < 0) {
                        ++unassigned;
                        free_vertex = m[i];
                    } else {
                        ++assigned;
                        seen |= std::uint64_t{1} << col;
                    }
                }
                if (std::popcount(seen) != assigned) continue;  // already repeats a colour
                if (unassigned == 0) return false;               // rainbow
                if (unassigned != 1) continue;

                auto& dom = s.domain[static_cast<std::size_t>(free_vertex)];
                const std::uint64_t restricted = dom & seen;
                if (restricted == dom) continue;
                dom = restricted;
                if (restricted == 0) return false;
                if (std::popcount(restricted) == 1) {
                    s.color[static_cast<std::size_t>(free_vertex)] = std::countr_zero(restricted);
                    ++s.assigned;
                    queue[static_cast<std::size_t>(tail++)] = free_vertex;
                }
            }
        }
        return true;
    }

    bool solve(State& s) {
        if (stats_) ++stats_->nodes;
        ++nodes_;
        if (options_.node_limit != 0 && nodes_ > options_.node_limit) {
            throw SearchBudgetExceeded("rainbow-free colouring search exceeded its node budget");
        }
        if (s.assigned == n_) return s.used == r_;

        // Exactness: enough unassigned vertices must still be able to open
        // the colours not yet used.
        int openers = 0;
        int best = -1;
        int best_options = 0;
        for (int v = 0; v < n_; ++v) {
            if (s.color[static_cast<std::size_t>(v)] >= 0) continue;
            if (can_open_new(s, v)) ++openers;
            const int opts = options(s, v);
            if (opts == 0) return false;
            if (best < 0 || opts < best_options ||
                (opts == best_options && aps_of_[static_cast<std::size_t>(v)].size() >
                                             aps_of_[static_cast<std::size_t>(best)].size())) {
                best = v;
                best_options = opts;
            }
        }
        if (openers < r_ - s.used) return false;

        const std::uint64_t dom = s.domain[static_cast<std::size_t>(best)];
        for (int c = 0; c < s.used; ++c) {
            if (!(dom >> c & 1)) continue;
            State next = s;
            if (assign(next, best, c) && solve(next)) {
                s = next;
                return true;
            }
        }
        if (can_open_new(s, best)) {
            State next = s;
            if (assign(next, best, s.used) && solve(next)) {
                s = next;
                return true;
            }
        }
        return false;
    }

    int n_;
    int k_;
    int r_;
    SearchStats* stats_;
    SearchOptions options_;
    std::uint64_t full_ = 0;
    std::uint64_t nodes_ = 0;
    std::vector<int> members_;
    std::vector<std::vector<int>> aps_of_;
};

}  // namespace

std::optional<Coloring> find_rainbow_free_coloring(const Graph& g, std::span<const ArithmeticProgression> aps,
                                                   int k, int r, SearchStats* stats,
                                                   const SearchOptions& options) {
    if (g.order() > kMaxSearchOrder) {
        throw std::invalid_argument("colouring search supports at most 64 vertices");
    }
    if (r < 1 || r > g.order()) throw std::invalid_argument("need 1 <= r <= n");
    if (stats) stats->ap_count = aps.size();
    ColoringSearch search(g.order(), aps, k, r, stats, options);
    return search.run();
}

std::optional<Coloring> find_rainbow_free_coloring(const Graph& g, int k, int r, SearchStats* stats,
                                                   const SearchOptions& options) {
    const auto aps = enumerate_k_aps(g, k);
    return find_rainbow_free_coloring(g, aps, k, r, stats, options);
}

AwResult aw(const Graph& g, int k, const SearchOptions& options) {
    if (k < 2) throw std::invalid_argument("aw needs k >= 2");
    const int n = g.order();
    const auto aps = enumerate_k_aps(g, k);
    AwResult result;
    result.stats.ap_count = aps.size();

    const int start = std::max(k - 1, 1);
    if (start > n) {
        // Fewer than k - 1 vertices: no k-AP exists at all.
        std::vector<int> distinct(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) distinct[static_cast<std::size_t>(v)] = v + 1;
        result.aw = n + 1;
        result.max_rainbow_free = n;
        result.certificate = Coloring(std::move(distinct));
        return result;
    }
    for (int r = start; r <= n; ++r) {
        auto found = find_rainbow_free_coloring(g, aps, k, r, &result.stats, options);
        if (!found) {
            result.aw = r;
            return result;
        }
        result.certificate = std::move(*found);
        result.max_rainbow_free = r;
    }
    result.aw = n + 1;
    return result;
}

TricoloredSubgraph find_tricolored_geodesic_or_triangle(const Graph& g, const Coloring& c) {
    const int n = g.order();
    if (n < 3) throw std::invalid_argument("need at least three vertices");
    if (c.size() != n) throw std::invalid_argument("colouring does not cover the graph");
    if (std::set<int>(c.colors().begin(), c.colors().end()).size() < 3) {
        throw std::invalid_argument("colouring uses fewer than three colours");
    }
    // A shortest tricoloured subpath of any tricoloured geodesic has
    // distinct end colours and a third colour inside, so scanning endpoint
    // pairs with a third-coloured interval vertex is complete.
    for (int d = 2; d <= g.diameter(); ++d) {
        for (Vertex u = 1; u <= n; ++u) {
            for (Vertex v = u + 1; v <= n; ++v) {
                if (g.distance(u, v) != d || c(u) == c(v)) continue;
                for (Vertex w = 1; w <= n; ++w) {
                    if (g.distance(u, w) + g.distance(w, v) != d) continue;
                    if (c(w) == c(u) || c(w) == c(v)) continue;
                    auto path = g.geodesic(u, w);
                    auto tail = g.geodesic(w, v);
                    path.insert(path.end(), tail.begin() + 1, tail.end());
                    return {TricoloredSubgraph::Kind::IsometricPath, std::move(path)};
                }
            }
        }
    }
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
            if (!g.adjacent(u, v) || c(u) == c(v)) continue;
            for (Vertex w = v + 1; w <= n; ++w) {
                if (g.adjacent(u, w) && g.adjacent(v, w) && c(w) != c(u) && c(w) != c(v)) {
                    return {TricoloredSubgraph::Kind::Triangle, {u, v, w}};
                }
            }
        }
    }
    throw std::logic_error("no tricoloured geodesic or triangle found");
}

}  // namespace awgraph
