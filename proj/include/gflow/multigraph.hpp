#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace gflow {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite undirected multigraph with opaque string ids for vertices and edges.
// Loops and parallel edges are allowed. The order in which vertices and edges
// were given is preserved and fixes every deterministic iteration order in
// this library (cut enumeration, search variable order, canonical
// orientations).
class Multigraph {
public:
    struct Edge {
        std::string id;
        int u = 0, v = 0;  // endpoint indices, as given on input
    };

    using EdgeSpec = std::tuple<std::string, std::string, std::string>;  // id, u, v

    Multigraph() = default;

    Multigraph(const std::vector<std::string>& vertices, const std::vector<EdgeSpec>& edges) {
        vertices_.reserve(vertices.size());
        for (const auto& id : vertices) {
            if (vertex_lookup_.count(id))
                throw Error("duplicate vertex id: " + id);
            vertex_lookup_.emplace(id, static_cast<int>(vertices_.size()));
            vertices_.push_back(id);
        }
        incident_.assign(vertices_.size(), {});
        edges_.reserve(edges.size());
        for (const auto& [id, us, vs] : edges) {
            if (edge_lookup_.count(id))
                throw Error("duplicate edge id: " + id);
            Edge e;
            e.id = id;
            e.u = vertex_index(us);
            e.v = vertex_index(vs);
            int idx = static_cast<int>(edges_.size());
            edge_lookup_.emplace(id, idx);
            edges_.push_back(e);
            incident_[e.u].push_back(idx);
            if (e.v != e.u) incident_[e.v].push_back(idx);
        }
    }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& vertex_id(int v) const { return vertices_.at(v); }
    const std::vector<std::string>& vertex_ids() const { return vertices_; }
    const Edge& edge(int e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(const std::string& id) const { return vertex_lookup_.count(id) != 0; }
    bool has_edge_id(const std::string& id) const { return edge_lookup_.count(id) != 0; }

    int vertex_index(const std::string& id) const {
        auto it = vertex_lookup_.find(id);
        if (it == vertex_lookup_.end()) throw Error("unknown vertex id: " + id);
        return it->second;
    }

    int edge_index(const std::string& id) const {
        auto it = edge_lookup_.find(id);
        if (it == edge_lookup_.end()) throw Error("unknown edge id: " + id);
        return it->second;
    }

    bool is_loop(int e) const { return edges_[e].u == edges_[e].v; }

    // Canonical orientation: tail is the endpoint earlier in vertex input
    // order. A loop is its own degenerate orientation.
    int canonical_tail(int e) const { return std::min(edges_[e].u, edges_[e].v); }
    int canonical_head(int e) const { return std::max(edges_[e].u, edges_[e].v); }

    int other_end(int e, int v) const {
        const Edge& ed = edges_[e];
        return ed.u == v ? ed.v : ed.u;
    }

    // Incident edge indices in edge input order; a loop appears once.
    const std::vector<int>& incident(int v) const { return incident_.at(v); }

    // Degree with loops counted twice.
    int degree(int v) const {
        int d = 0;
        for (int e : incident_[v]) d += is_loop(e) ? 2 : 1;
        return d;
    }

    int loop_count(int v) const {
        int c = 0;
        for (int e : incident_[v]) c += is_loop(e) ? 1 : 0;
        return c;
    }

    // Component index per vertex, numbered by first occurrence.
    std::vector<int> components() const {
        std::vector<int> comp(vertex_count(), -1);
        int next = 0;
        std::vector<int> stack;
        for (int s = 0; s < vertex_count(); ++s) {
            if (comp[s] >= 0) continue;
            comp[s] = next;
            stack.assign(1, s);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int e : incident_[v]) {
                    int w = other_end(e, v);
                    if (comp[w] < 0) {
                        comp[w] = next;
                        stack.push_back(w);
                    }
                }
            }
            ++next;
        }
        return comp;
    }

    bool is_connected() const {
        if (vertex_count() == 0) return true;
        auto comp = components();
        return *std::max_element(comp.begin(), comp.end()) == 0;
    }

    // Names one vertex from each of two distinct components, for error
    // messages; requires a disconnected graph.
    std::pair<std::string, std::string> two_component_witnesses() const {
        auto comp = components();
        std::string a, b;
        for (int v = 0; v < vertex_count(); ++v) {
            if (comp[v] == 0 && a.empty()) a = vertices_[v];
            if (comp[v] == 1 && b.empty()) b = vertices_[v];
        }
        return {a, b};
    }

    void require_connected(const std::string& op) const {
        if (is_connected()) return;
        auto [a, b] = two_component_witnesses();
        throw Error(op + ": graph is disconnected (no path between '" + a + "' and '" + b + "')");
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
    std::unordered_map<std::string, int> vertex_lookup_;
    std::unordered_map<std::string, int> edge_lookup_;
};

// A subset of the edges of a host graph, as a membership mask over edge
// indices.
struct EdgeSubset {
    std::vector<bool> member;

    EdgeSubset() = default;
    explicit EdgeSubset(int edge_count) : member(edge_count, false) {}

    static EdgeSubset of_ids(const Multigraph& g, const std::vector<std::string>& ids) {
        EdgeSubset s(g.edge_count());
        for (const auto& id : ids) s.member[g.edge_index(id)] = true;
        return s;
    }

    static EdgeSubset full(const Multigraph& g) {
        EdgeSubset s(g.edge_count());
        s.member.assign(g.edge_count(), true);
        return s;
    }

    bool contains(int e) const { return member[e]; }
    void insert(int e) { member[e] = true; }

    int size() const { return static_cast<int>(std::count(member.begin(), member.end(), true)); }

    std::vector<std::string> ids(const Multigraph& g) const {
        std::vector<std::string> out;
        for (int e = 0; e < static_cast<int>(member.size()); ++e)
            if (member[e]) out.push_back(g.edge(e).id);
        return out;
    }

    bool operator==(const EdgeSubset& o) const { return member == o.member; }
};

}  // namespace gflow
