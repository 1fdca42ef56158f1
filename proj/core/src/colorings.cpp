#include "awgraph/colorings.hpp"

#include <algorithm>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace awgraph {

const char* color_name(int color) {
    switch (color) {
        case kRed: return "red";
        case kBlue: return "blue";
        case kGreen: return "green";
        default: return "other";
    }
}

namespace {

void require_diametral(const ProductGraph& p, const DiametralPairChoice& choice) {
    const Graph& g = p.composite();
    const auto in_range = [&](Vertex v) { return v >= 1 && v <= g.order(); };
    if (!in_range(choice.source) || !in_range(choice.sink) ||
        g.distance(choice.source, choice.sink) != g.diameter()) {
        throw std::invalid_argument("pair choice is not a diametral pair of the product");
    }
}

}  // namespace

DiametralPairChoice parse_pair_choice(const ProductGraph& p, const std::string& text) {
    static const std::regex pattern(R"(\s*(\d+)\s*,\s*(\d+)\s*;\s*(\d+)\s*,\s*(\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) {
        throw InputError("pair choice must look like \"i,h;j,k\", got \"" + text + "\"");
    }
    const int i = std::stoi(m[1]);
    const int h = std::stoi(m[2]);
    const int j = std::stoi(m[3]);
    const int k = std::stoi(m[4]);
    const int ng = p.left().order();
    const int nh = p.right().order();
    if (i < 1 || i > ng || j < 1 || j > ng || h < 1 || h > nh || k < 1 || k > nh) {
        throw InputError("pair choice coordinates out of range");
    }
    DiametralPairChoice choice{p.id(i, h), p.id(j, k)};
    try {
        require_diametral(p, choice);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return choice;
}

std::string format_pair_choice(const ProductGraph& p, const DiametralPairChoice& choice) {
    auto [i, h] = p.coords(choice.source);
    auto [j, k] = p.coords(choice.sink);
    std::ostringstream out;
    out << i << ',' << h << ';' << j << ',' << k;
    return out.str();
}

std::vector<DiametralPairChoice> enumerate_diametral_choices(const ProductGraph& p) {
    const Graph& g = p.composite();
    std::vector<DiametralPairChoice> out;
    for (Vertex a = 1; a <= g.order(); ++a) {
        for (Vertex b = a + 1; b <= g.order(); ++b) {
            if (g.distance(a, b) == g.diameter()) {
                out.push_back({a, b});
                out.push_back({b, a});
            }
        }
    }
    return out;
}

DiametralPairChoice default_diametral_choice(const ProductGraph& p) {
    auto all = enumerate_diametral_choices(p);
    if (all.empty()) throw std::invalid_argument("product has no diametral pair");
    return all.front();
}

Coloring odd_diameter_coloring(const ProductGraph& p, const DiametralPairChoice& choice) {
    require_diametral(p, choice);
    const Graph& g = p.composite();
    const int diam = g.diameter();
    std::vector<int> colors(static_cast<std::size_t>(g.order()), kGreen);
    for (Vertex v = 1; v <= g.order(); ++v) {
        const bool red = g.distance(v, choice.sink) == diam;
        const bool blue = g.distance(v, choice.source) == diam;
        if (red && blue) {
            throw std::logic_error("vertex " + std::to_string(v) +
                                   " is diametral to both ends of the pair; the product is 3-peripheral");
        }
        if (red) colors[static_cast<std::size_t>(v - 1)] = kRed;
        if (blue) colors[static_cast<std::size_t>(v - 1)] = kBlue;
    }
    return Coloring(std::move(colors));
}

ConstructedColoring generalized_even_coloring(const ProductGraph& p, const DiametralPairChoice& choice) {
    require_diametral(p, choice);
    const Graph& g = p.composite();
    const int diam = g.diameter();
    ConstructedColoring out;
    std::vector<int> colors(static_cast<std::size_t>(g.order()), kGreen);
    for (Vertex v = 1; v <= g.order(); ++v) {
        const bool red = g.distance(v, choice.sink) == diam;
        const bool blue = g.distance(v, choice.source) == diam - 1;
        if (red && blue) out.overlaps.push_back(v);
        if (red) {
            colors[static_cast<std::size_t>(v - 1)] = kRed;
        } else if (blue) {
            colors[static_cast<std::size_t>(v - 1)] = kBlue;
        }
    }
    out.coloring = Coloring(std::move(colors));
    return out;
}

ProductGraph p3c6_product() { return cartesian_product(path_graph(3), cycle_graph(6)); }

Coloring example_p3c6_coloring() {
    const ProductGraph p = p3c6_product();
    std::vector<int> colors(static_cast<std::size_t>(p.composite().order()), kGreen);
    colors[static_cast<std::size_t>(p.id(1, 1) - 1)] = kRed;
    colors[static_cast<std::size_t>(p.id(3, 4) - 1)] = kBlue;
    return Coloring(std::move(colors));
}

ValidationReport validate_coloring(const Graph& g, const Coloring& c, int k) {
    if (c.size() != g.order()) {
        throw std::invalid_argument("colouring has " + std::to_string(c.size()) + " entries for " +
                                    std::to_string(g.order()) + " vertices");
    }
    if (std::any_of(c.colors().begin(), c.colors().end(), [](int col) { return col < 1; })) {
        throw std::invalid_argument("colouring leaves a vertex uncoloured");
    }
    ValidationReport report;
    report.colors_used = c.num_colors();
    report.exact = c.is_exact();
    for (auto& ap : enumerate_k_aps(g, k)) {
        ++report.aps_checked;
        if (is_rainbow(ap, c)) {
            report.rainbow_witness = std::move(ap);
            break;
        }
    }
    return report;
}

std::string render_grid(const ProductGraph& p, const Coloring& c) {
    std::ostringstream out;
    for (int i = 1; i <= p.left().order(); ++i) {
        for (int j = 1; j <= p.right().order(); ++j) {
            if (j > 1) out << ' ';
            const int col = c(p.id(i, j));
            switch (col) {
                case kRed: out << 'R'; break;
                case kBlue: out << 'B'; break;
                case kGreen: out << 'G'; break;
                default: out << col; break;
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace awgraph
