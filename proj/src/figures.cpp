#include "lgl/figures.hpp"

#include "lgl/action.hpp"

#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace lgl {

namespace {

// Sign patterns as bitmasks: bit l-1 set means coordinate l is negative.
bool realizable(unsigned mask, int n, std::int64_t m) {
    int minus = std::popcount(mask);
    if (minus == 0) return m >= 0;
    if (minus == n) return m <= -n;
    return true;
}

std::string pattern_label(unsigned mask, int n) {
    std::string out = "(";
    for (int l = 1; l <= n; ++l) {
        if (l > 1) out += ", ";
        out += (mask & (1u << (l - 1))) ? '-' : '+';
    }
    return out + ")";
}

std::vector<unsigned> pattern_order(int n, std::int64_t m) {
    // Fewest minuses first, then by mask value; keeps output deterministic.
    std::vector<unsigned> out;
    for (int minus = 0; minus <= n; ++minus)
        for (unsigned mask = 0; mask < (1u << n); ++mask)
            if (std::popcount(mask) == minus && realizable(mask, n, m)) out.push_back(mask);
    return out;
}

} // namespace

std::string sign_region_figure(int n, std::int64_t m, fig_format format) {
    if (n < 1) throw std::invalid_argument("sign_region_figure: n must be positive");
    std::vector<unsigned> nodes = pattern_order(n, m);
    std::vector<std::pair<unsigned, unsigned>> edges;
    for (unsigned mask : nodes)
        for (int l = 1; l <= n; ++l)
            if (mask & (1u << (l - 1))) {
                unsigned target = mask & ~(1u << (l - 1));
                if (realizable(target, n, m)) edges.emplace_back(mask, target);
            }

    std::ostringstream os;
    if (format == fig_format::dot) {
        os << "digraph sign_regions {\n";
        os << "  rankdir=BT;\n";
        os << "  node [shape=ellipse];\n";
        for (unsigned mask : nodes) os << "  \"" << pattern_label(mask, n) << "\";\n";
        for (const auto& [from, to] : edges)
            os << "  \"" << pattern_label(from, n) << "\" -> \"" << pattern_label(to, n)
               << "\" [color=red];\n";
        os << "}\n";
        return os.str();
    }

    // TikZ: layers by number of negative coordinates, top layer all-plus.
    std::map<unsigned, std::pair<double, double>> at;
    std::map<int, int> layer_count, layer_seen;
    for (unsigned mask : nodes) layer_count[std::popcount(mask)]++;
    for (unsigned mask : nodes) {
        int layer = std::popcount(mask);
        int i = layer_seen[layer]++;
        double x = (i - (layer_count[layer] - 1) / 2.0) * 3.0;
        at[mask] = {x, -1.8 * layer};
    }
    os << "\\begin{tikzpicture}\n";
    for (unsigned mask : nodes)
        os << "  \\node (p" << mask << ") at (" << at[mask].first << "," << at[mask].second
           << ") {$" << pattern_label(mask, n) << "$};\n";
    for (const auto& [from, to] : edges)
        os << "  \\draw[->, red, line width=0.4mm] (p" << from << ") -- (p" << to << ");\n";
    os << "\\end{tikzpicture}\n";
    return os.str();
}

std::string action_lattice_figure(int n, std::int64_t m, std::int64_t bound,
                                  const alpha_param& alpha, fig_format format) {
    check_var_count(n, alpha.size(), "action_lattice_figure");
    if (format == fig_format::tikz && n != 2)
        throw std::invalid_argument("action_lattice_figure: tikz output needs n = 2");
    std::vector<exponent> nodes = degree_window(n, m, bound);

    struct edge {
        exponent from, to;
        int a, b;
    };
    std::vector<edge> edges;
    for (const exponent& k : nodes) {
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                if (a == b) continue;
                if (gaussian_rational(k.at(b)) + alpha.at(b) == gaussian_rational(0)) continue;
                exponent q = k;
                q.set(a, q.at(a) + 1);
                q.set(b, q.at(b) - 1);
                bool inside = true;
                for (std::int64_t v : q.entries())
                    if (v < -bound || v > bound) inside = false;
                if (inside) edges.push_back({k, q, a, b});
            }
    }

    std::ostringstream os;
    if (format == fig_format::dot) {
        os << "digraph action_lattice {\n";
        os << "  node [shape=point, width=0.08];\n";
        for (const exponent& k : nodes)
            os << "  \"" << k.str() << "\" [xlabel=\"" << k.str() << "\"];\n";
        for (const edge& e : edges)
            os << "  \"" << e.from.str() << "\" -> \"" << e.to.str() << "\" [color=red, label=\"E"
               << e.a << e.b << "\"];\n";
        os << "}\n";
        return os.str();
    }

    os << "\\begin{tikzpicture}[scale=1.0]\n";
    for (const exponent& k : nodes)
        os << "  \\node[circle, fill=black, inner sep=1.5pt, label=below:{\\tiny $" << k.str()
           << "$}] (m" << k.at(1) << "_" << k.at(2) << ") at (" << k.at(1) << "," << k.at(2)
           << ") {};\n";
    for (const edge& e : edges)
        os << "  \\draw[->, red] (m" << e.from.at(1) << "_" << e.from.at(2) << ") -- (m"
           << e.to.at(1) << "_" << e.to.at(2) << ");\n";
    os << "\\end{tikzpicture}\n";
    return os.str();
}

} // namespace lgl
