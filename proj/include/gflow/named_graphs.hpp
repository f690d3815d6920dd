#pragma once

#include <string>
#include <vector>

#include "gflow/multigraph.hpp"

namespace gflow {

namespace detail {
inline std::vector<std::string> number_names(int n, const std::string& prefix = "v") {
    std::vector<std::string> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}
}  // namespace detail

inline Multigraph path_graph(int n) {
    std::vector<Multigraph::EdgeSpec> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back({"e" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(i + 1)});
    return Multigraph(detail::number_names(n), edges);
}

inline Multigraph cycle_graph(int n) {
    std::vector<Multigraph::EdgeSpec> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({"e" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string((i + 1) % n)});
    return Multigraph(detail::number_names(n), edges);
}

inline Multigraph complete_graph(int n) {
    std::vector<Multigraph::EdgeSpec> edges;
    int id = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.push_back({"e" + std::to_string(id++), "v" + std::to_string(i), "v" + std::to_string(j)});
    return Multigraph(detail::number_names(n), edges);
}

inline Multigraph complete_bipartite(int a, int b) {
    std::vector<std::string> names;
    for (int i = 0; i < a; ++i) names.push_back("a" + std::to_string(i));
    for (int j = 0; j < b; ++j) names.push_back("b" + std::to_string(j));
    std::vector<Multigraph::EdgeSpec> edges;
    int id = 0;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            edges.push_back({"e" + std::to_string(id++), "a" + std::to_string(i), "b" + std::to_string(j)});
    return Multigraph(names, edges);
}

// Outer 5-cycle v0..v4, inner pentagram w0..w4, spokes vi-wi.
inline Multigraph petersen_graph() {
    std::vector<std::string> names;
    for (int i = 0; i < 5; ++i) names.push_back("v" + std::to_string(i));
    for (int i = 0; i < 5; ++i) names.push_back("w" + std::to_string(i));
    std::vector<Multigraph::EdgeSpec> edges;
    for (int i = 0; i < 5; ++i)
        edges.push_back({"o" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string((i + 1) % 5)});
    for (int i = 0; i < 5; ++i)
        edges.push_back({"s" + std::to_string(i), "v" + std::to_string(i), "w" + std::to_string(i)});
    for (int i = 0; i < 5; ++i)
        edges.push_back({"i" + std::to_string(i), "w" + std::to_string(i), "w" + std::to_string((i + 2) % 5)});
    return Multigraph(names, edges);
}

// Wheel: hub h joined to an n-cycle.
inline Multigraph wheel_graph(int n) {
    std::vector<std::string> names{"h"};
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<Multigraph::EdgeSpec> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({"r" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string((i + 1) % n)});
    for (int i = 0; i < n; ++i) edges.push_back({"s" + std::to_string(i), "h", "v" + std::to_string(i)});
    return Multigraph(names, edges);
}

// Two vertices joined by m parallel edges.
inline Multigraph theta_graph(int m = 3) {
    std::vector<Multigraph::EdgeSpec> edges;
    for (int i = 0; i < m; ++i) edges.push_back({"e" + std::to_string(i), "u", "v"});
    return Multigraph({"u", "v"}, edges);
}

inline Multigraph star_graph(int leaves) {
    std::vector<std::string> names{"c"};
    for (int i = 0; i < leaves; ++i) names.push_back("l" + std::to_string(i));
    std::vector<Multigraph::EdgeSpec> edges;
    for (int i = 0; i < leaves; ++i)
        edges.push_back({"e" + std::to_string(i), "c", "l" + std::to_string(i)});
    return Multigraph(names, edges);
}

inline Multigraph triangle_graph() { return cycle_graph(3); }

inline Multigraph single_edge_graph() { return path_graph(2); }

inline Multigraph loop_vertex_graph(int loops = 1) {
    std::vector<Multigraph::EdgeSpec> edges;
    for (int i = 0; i < loops; ++i) edges.push_back({"l" + std::to_string(i), "v0", "v0"});
    return Multigraph({"v0"}, edges);
}

}  // namespace gflow
