#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilcone/partitions.hpp"

namespace nilcone {

/// Nodes with dimensions and the covering relation of a finite partial order.
struct HasseDiagram {
    std::vector<std::string> labels;
    std::vector<long> dims;
    /// (lower, upper) covering pairs.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Transitive reduction of the strict order derived from `leq`. The relation
/// must be a partial order; throws std::logic_error on a 2-cycle.
HasseDiagram hasse_from_order(std::vector<std::string> labels, std::vector<long> dims,
                              const std::function<bool(std::size_t, std::size_t)>& leq);

/// Orbits of the enhanced nilcone (budget n ≤ 10).
HasseDiagram orbit_hasse(int n, TextStyle style = TextStyle::compact);
/// Jordan classes under the class closure order (budget n ≤ 6).
HasseDiagram class_hasse(int n, TextStyle style = TextStyle::compact);
/// Sheets, listed without edges.
HasseDiagram sheet_hasse(int n);

/// Reachability (reflexive) recomputed from the covering edges.
std::vector<std::vector<bool>> reachability(const HasseDiagram& h);

/// DOT digraph drawn bottom-up; node labels are "label\ndim".
std::string to_dot(const HasseDiagram& h, std::string_view graph_name = "hasse");

}  // namespace nilcone
