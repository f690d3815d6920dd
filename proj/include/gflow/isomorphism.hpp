#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "gflow/multigraph.hpp"

namespace gflow {

namespace detail {

// Edge multiplicity matrix with loop counts on the diagonal (a loop counts
// once there).
inline std::vector<int> multiplicity_matrix(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<int> m(static_cast<size_t>(n) * n, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        int u = g.edge(e).u, v = g.edge(e).v;
        if (u == v) {
            ++m[static_cast<size_t>(u) * n + u];
        } else {
            ++m[static_cast<size_t>(u) * n + v];
            ++m[static_cast<size_t>(v) * n + u];
        }
    }
    return m;
}

}  // namespace detail

// Backtracking multigraph isomorphism for desk-scale graphs. Returns a vertex
// mapping g -> h (index based) if one exists.
inline std::optional<std::vector<int>> find_isomorphism(const Multigraph& g, const Multigraph& h) {
    int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
    if (n == 0) return std::vector<int>{};

    auto mg = detail::multiplicity_matrix(g);
    auto mh = detail::multiplicity_matrix(h);

    auto signature = [n](const std::vector<int>& m, int v) {
        std::vector<int> row;
        row.reserve(n + 1);
        row.push_back(m[static_cast<size_t>(v) * n + v]);
        std::vector<int> deg;
        for (int w = 0; w < n; ++w)
            if (w != v && m[static_cast<size_t>(v) * n + w]) deg.push_back(m[static_cast<size_t>(v) * n + w]);
        std::sort(deg.begin(), deg.end());
        row.insert(row.end(), deg.begin(), deg.end());
        return row;
    };
    std::vector<std::vector<int>> sg(n), sh(n);
    for (int v = 0; v < n; ++v) {
        sg[v] = signature(mg, v);
        sh[v] = signature(mh, v);
    }
    {
        auto a = sg, b = sh;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }

    std::vector<int> map(n, -1), used(n, 0);
    auto consistent = [&](int v, int w) {
        if (sg[v] != sh[w]) return false;
        for (int u = 0; u < n; ++u) {
            if (map[u] < 0) continue;
            if (mg[static_cast<size_t>(v) * n + u] != mh[static_cast<size_t>(w) * n + map[u]]) return false;
        }
        return true;
    };
    // order vertices by rarity of signature to fail fast
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sg[a] < sg[b]; });

    std::function<bool(int)> place = [&](int idx) {
        if (idx == n) return true;
        int v = order[idx];
        for (int w = 0; w < n; ++w) {
            if (used[w] || !consistent(v, w)) continue;
            map[v] = w;
            used[w] = 1;
            if (place(idx + 1)) return true;
            map[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    return map;
}

inline bool isomorphic(const Multigraph& g, const Multigraph& h) {
    return find_isomorphism(g, h).has_value();
}

}  // namespace gflow
