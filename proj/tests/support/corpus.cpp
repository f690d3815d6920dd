#include "corpus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "gflow/cuts.hpp"

namespace gflow::testing {

Multigraph SmallGraph::to_multigraph() const {
    std::vector<std::string> vertices;
    for (int v = 0; v < n; ++v) vertices.push_back("v" + std::to_string(v));
    std::vector<Multigraph::EdgeSpec> edges_spec;
    for (size_t e = 0; e < edges.size(); ++e)
        edges_spec.push_back({"e" + std::to_string(e), "v" + std::to_string(edges[e].first),
                              "v" + std::to_string(edges[e].second)});
    return Multigraph(vertices, edges_spec);
}

namespace {

uint64_t mix(uint64_t h, uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h * 0xbf58476d1ce4e5b9ULL ^ (h >> 31);
}

struct Adjacency {
    int n;
    std::vector<int> mult;   // n*n multiplicity, loops once on the diagonal
    std::vector<int> loops;  // per vertex
    std::vector<int> deg;    // non-loop degree

    explicit Adjacency(const SmallGraph& g) : n(g.n) {
        mult.assign(static_cast<size_t>(n) * n, 0);
        loops.assign(n, 0);
        deg.assign(n, 0);
        for (auto [u, v] : g.edges) {
            if (u == v) {
                ++mult[static_cast<size_t>(u) * n + u];
                ++loops[u];
            } else {
                ++mult[static_cast<size_t>(u) * n + v];
                ++mult[static_cast<size_t>(v) * n + u];
                ++deg[u];
                ++deg[v];
            }
        }
    }
};

uint64_t wl_fingerprint(const SmallGraph& g) {
    Adjacency a(g);
    int n = g.n;
    std::vector<uint64_t> color(n);
    for (int v = 0; v < n; ++v) color[v] = mix(mix(14695981039346656037ULL, a.deg[v]), a.loops[v]);
    for (int round = 0; round < 3; ++round) {
        std::vector<uint64_t> next(n);
        for (int v = 0; v < n; ++v) {
            std::vector<uint64_t> sig;
            for (int w = 0; w < n; ++w) {
                int m = a.mult[static_cast<size_t>(v) * n + w];
                if (w != v && m > 0) sig.push_back(mix(color[w], m));
            }
            std::sort(sig.begin(), sig.end());
            uint64_t h = mix(color[v], 0x5bd1e995);
            for (uint64_t s : sig) h = mix(h, s);
            next[v] = h;
        }
        color = std::move(next);
    }
    std::sort(color.begin(), color.end());
    uint64_t h = mix(mix(0x2545F4914F6CDD1DULL, g.n), g.edges.size());
    for (uint64_t c : color) h = mix(h, c);
    return h;
}

bool connected(const SmallGraph& g) {
    if (g.n == 0) return true;
    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.edges)
        if (u != v) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    std::vector<bool> seen(g.n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == g.n;
}

}  // namespace

bool small_graphs_isomorphic(const SmallGraph& ga, const SmallGraph& gb) {
    if (ga.n != gb.n || ga.edges.size() != gb.edges.size()) return false;
    Adjacency a(ga), b(gb);
    int n = ga.n;
    auto signature = [n](const Adjacency& x, int v) {
        std::vector<int> row;
        row.push_back(x.loops[v]);
        std::vector<int> ms;
        for (int w = 0; w < n; ++w)
            if (w != v && x.mult[static_cast<size_t>(v) * n + w] > 0)
                ms.push_back(x.mult[static_cast<size_t>(v) * n + w]);
        std::sort(ms.begin(), ms.end());
        row.insert(row.end(), ms.begin(), ms.end());
        return row;
    };
    std::vector<std::vector<int>> sa(n), sb(n);
    for (int v = 0; v < n; ++v) {
        sa[v] = signature(a, v);
        sb[v] = signature(b, v);
    }
    {
        auto ca = sa, cb = sb;
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (ca != cb) return false;
    }
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return sa[x] < sa[y]; });
    std::function<bool(int)> place = [&](int idx) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        for (int w = 0; w < n; ++w) {
            if (used[w] || sa[v] != sb[w]) continue;
            bool ok = a.loops[v] == b.loops[w];
            for (int u = 0; ok && u < n; ++u) {
                if (map[u] < 0 || u == v) continue;
                ok = a.mult[static_cast<size_t>(v) * n + u] == b.mult[static_cast<size_t>(w) * n + map[u]];
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            if (place(idx + 1)) return true;
            map[v] = -1;
            used[w] = false;
        }
        return false;
    };
    return place(0);
}

std::vector<SmallGraph> connected_multigraph_corpus(int max_edges) {
    std::vector<SmallGraph> all;
    std::unordered_map<uint64_t, std::vector<int>> buckets;  // fingerprint -> indices into all

    auto try_insert = [&](SmallGraph g) {
        std::sort(g.edges.begin(), g.edges.end());
        uint64_t fp = wl_fingerprint(g);
        auto& bucket = buckets[fp];
        for (int idx : bucket)
            if (small_graphs_isomorphic(all[idx], g)) return;
        bucket.push_back(static_cast<int>(all.size()));
        all.push_back(std::move(g));
    };

    SmallGraph k1;
    k1.n = 1;
    try_insert(k1);

    size_t level_begin = 0;
    for (int m = 1; m <= max_edges; ++m) {
        size_t level_end = all.size();
        for (size_t i = level_begin; i < level_end; ++i) {
            SmallGraph parent = all[i];  // copy: all may reallocate
            for (int u = 0; u < parent.n; ++u)
                for (int v = u; v < parent.n; ++v) {
                    SmallGraph child = parent;
                    child.edges.push_back({u, v});
                    try_insert(std::move(child));
                }
            for (int u = 0; u < parent.n; ++u) {
                SmallGraph child = parent;
                child.edges.push_back({u, parent.n});
                child.n = parent.n + 1;
                try_insert(std::move(child));
            }
        }
        level_begin = level_end;
    }

    // growth preserves connectivity, but keep the claim checked
    for (const auto& g : all)
        if (!connected(g)) throw Error("corpus generator produced a disconnected graph");
    return all;
}

// ---------------------------------------------------------------------------
// oracles
// ---------------------------------------------------------------------------

bool cut_parity_cycle_member(const Multigraph& g, const EdgeSubset& f) {
    if (g.vertex_count() < 2) return true;  // no cuts to violate
    for (const auto& cut : enumerate_cuts(g)) {
        int count = 0;
        for (int e : cut.crossing) count += f.contains(e) ? 1 : 0;
        if (count % 2 != 0) return false;
    }
    return true;
}

namespace {

// Straight recursion over edges in input order; when the last edge at a
// vertex gets a value, that vertex's signed sum is checked.
struct BruteFlow {
    const Multigraph& g;
    const FlowAlphabet& a;
    bool integer;
    std::vector<long long> ivals;
    std::vector<GroupElement> gvals;
    std::vector<int> last_edge_at;  // per vertex

    explicit BruteFlow(const Multigraph& g_, const FlowAlphabet& a_)
        : g(g_), a(a_), integer(a_.kind() == FlowAlphabet::Kind::integer_k) {
        ivals.assign(g.edge_count(), 0);
        gvals.assign(g.edge_count(), integer ? GroupElement{} : a.group().zero());
        last_edge_at.assign(g.vertex_count(), -1);
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int e : g.incident(v))
                if (!g.is_loop(e)) last_edge_at[v] = std::max(last_edge_at[v], e);
    }

    bool vertex_balanced(int v) const {
        if (integer) {
            long long s = 0;
            for (int e : g.incident(v)) {
                if (g.is_loop(e)) continue;
                s += g.canonical_head(e) == v ? ivals[e] : -ivals[e];
            }
            return s == 0;
        }
        const auto& grp = a.group();
        GroupElement s = grp.zero();
        for (int e : g.incident(v)) {
            if (g.is_loop(e)) continue;
            s = grp.add(s, g.canonical_head(e) == v ? gvals[e] : grp.neg(gvals[e]));
        }
        return s.is_zero();
    }

    unsigned long long run(int e, bool stop_at_first) {
        if (e == g.edge_count()) return 1;
        if (g.is_loop(e)) return run(e + 1, stop_at_first);  // loops fixed, factor one
        unsigned long long total = 0;
        auto descend = [&]() -> unsigned long long {
            const auto& ed = g.edge(e);
            if (last_edge_at[ed.u] == e && !vertex_balanced(ed.u)) return 0;
            if (last_edge_at[ed.v] == e && ed.v != ed.u && !vertex_balanced(ed.v)) return 0;
            return run(e + 1, stop_at_first);
        };
        if (integer) {
            for (long long v : a.integer_values()) {
                ivals[e] = v;
                total += descend();
                if (stop_at_first && total) return total;
            }
        } else {
            for (const auto& v : a.elements()) {
                gvals[e] = v;
                total += descend();
                if (stop_at_first && total) return total;
            }
        }
        return total;
    }
};

}  // namespace

bool brute_flow_exists(const Multigraph& g, const FlowAlphabet& a) {
    BruteFlow b(g, a);
    return b.run(0, true) > 0;
}

unsigned long long brute_flow_count(const Multigraph& g, const FlowAlphabet& a) {
    BruteFlow b(g, a);
    return b.run(0, false);
}

bool proper_edge_coloring_exists(const Multigraph& g, int k) {
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e)) return false;  // a loop is self-adjacent
    std::vector<int> color(g.edge_count(), 0);
    std::function<bool(int)> place = [&](int e) -> bool {
        if (e == g.edge_count()) return true;
        for (int c = 1; c <= k; ++c) {
            bool ok = true;
            for (int v : {g.edge(e).u, g.edge(e).v}) {
                for (int other : g.incident(v))
                    if (other != e && color[other] == c) ok = false;
            }
            if (!ok) continue;
            color[e] = c;
            if (place(e + 1)) return true;
            color[e] = 0;
        }
        return false;
    };
    return place(0);
}

}  // namespace gflow::testing
