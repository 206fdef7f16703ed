#include "nilcone/hasse.hpp"

#include <sstream>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "nilcone/enhanced.hpp"
#include "nilcone/errors.hpp"
#include "nilcone/sheets.hpp"

namespace nilcone {

HasseDiagram hasse_from_order(std::vector<std::string> labels, std::vector<long> dims,
                              const std::function<bool(std::size_t, std::size_t)>& leq) {
    const std::size_t m = labels.size();
    std::vector<boost::dynamic_bitset<>> above(m, boost::dynamic_bitset<>(m)), below(m, boost::dynamic_bitset<>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b || !leq(a, b)) continue;
            if (leq(b, a)) throw std::logic_error("order is not antisymmetric on " + labels[a] + ", " + labels[b]);
            above[a].set(b);
            below[b].set(a);
        }
    HasseDiagram h{std::move(labels), std::move(dims), {}};
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = above[a].find_first(); b != boost::dynamic_bitset<>::npos; b = above[a].find_next(b))
            if (!above[a].intersects(below[b])) h.edges.emplace_back(a, b);
    return h;
}

HasseDiagram orbit_hasse(int n, TextStyle style) {
    if (n > 10) throw BudgetExceeded("orbit Hasse diagram budget is n ≤ 10");
    const auto orbits = enumerate_bipartitions(n);
    std::vector<std::string> labels;
    std::vector<long> dims;
    for (const auto& b : orbits) {
        labels.push_back(b.to_string(style));
        dims.push_back(orbit_dim(b));
    }
    return hasse_from_order(std::move(labels), std::move(dims),
                            [&](std::size_t a, std::size_t b) { return closure_leq(orbits[a], orbits[b]); });
}

HasseDiagram class_hasse(int n, TextStyle style) {
    if (n > 6) throw BudgetExceeded("class Hasse diagram budget is n ≤ 6");
    const auto classes = enumerate_classes(n);
    std::vector<std::string> labels;
    std::vector<long> dims;
    for (const auto& c : classes) {
        labels.push_back(c.to_string(style));
        dims.push_back(class_dim_enhanced(c));
    }
    return hasse_from_order(std::move(labels), std::move(dims),
                            [&](std::size_t a, std::size_t b) { return class_closure_leq(classes[a], classes[b]); });
}

HasseDiagram sheet_hasse(int n) {
    HasseDiagram h;
    for (const auto& s : enumerate_sheets(n)) {
        h.labels.push_back(s.to_string());
        h.dims.push_back(sheet_dim_enhanced(s));
    }
    return h;
}

std::vector<std::vector<bool>> reachability(const HasseDiagram& h) {
    const std::size_t m = h.labels.size();
    std::vector<std::vector<bool>> r(m, std::vector<bool>(m, false));
    std::vector<std::vector<std::size_t>> up(m);
    for (const auto& [a, b] : h.edges) up[a].push_back(b);
    for (std::size_t s = 0; s < m; ++s) {
        std::vector<std::size_t> stack{s};
        r[s][s] = true;
        while (!stack.empty()) {
            const std::size_t a = stack.back();
            stack.pop_back();
            for (std::size_t b : up[a])
                if (!r[s][b]) {
                    r[s][b] = true;
                    stack.push_back(b);
                }
        }
    }
    return r;
}

std::string to_dot(const HasseDiagram& h, std::string_view graph_name) {
    std::ostringstream out;
    out << "digraph " << graph_name << " {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < h.labels.size(); ++i)
        out << "  n" << i << " [label=\"" << h.labels[i] << "\\n" << h.dims[i] << "\"];\n";
    for (const auto& [a, b] : h.edges) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace nilcone
