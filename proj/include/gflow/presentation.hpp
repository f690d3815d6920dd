#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gflow/multigraph.hpp"

namespace gflow {

// A locally finite infinite multigraph presented by a repeating cell: an
// optional finite prefix, a cell fragment replicated per integer index, and
// glue edges joining consecutive cells. One-way presentations index cells
// 0, 1, 2, ...; two-way presentations index them over all integers. A
// presentation with an empty cell is just its finite prefix.
class PeriodicPresentation {
public:
    enum class Direction { one_way, two_way };

    struct Fragment {
        std::vector<std::string> vertices;
        std::vector<Multigraph::EdgeSpec> edges;  // endpoints are fragment vertex names
    };

    // An edge between consecutive cells (or between the prefix and cell 0).
    // Endpoint references are "cell.NAME" / "next.NAME", or "prefix.NAME" in
    // the prefix glue list. The id is instantiated with the lower cell index.
    struct GlueEdge {
        std::string from;
        std::string to;
        std::string id;
    };

    Direction direction = Direction::two_way;
    Fragment prefix;
    Fragment cell;
    std::vector<GlueEdge> glue;
    std::vector<GlueEdge> prefix_glue;

    bool finite() const { return cell.vertices.empty(); }

    // Cell enumeration order: one-way 0,1,2,...; two-way 0,1,-1,2,-2,...
    int cell_at(int k) const {
        if (direction == Direction::one_way) return k;
        if (k == 0) return 0;
        return k % 2 ? (k + 1) / 2 : -k / 2;
    }

    // The materialized interval after taking the first `count` cells.
    std::pair<int, int> cell_interval(int count) const {
        if (count <= 0 || finite()) return {0, -1};
        if (direction == Direction::one_way) return {0, count - 1};
        int lo = 0, hi = 0;
        for (int k = 1; k < count; ++k) {
            int c = cell_at(k);
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        return {lo, hi};
    }

    static std::string instantiate(const std::string& name, int cell_index) {
        return name + "[" + std::to_string(cell_index) + "]";
    }

    void validate() const {
        auto has_cell_vertex = [&](const std::string& v) {
            return std::find(cell.vertices.begin(), cell.vertices.end(), v) != cell.vertices.end();
        };
        auto has_prefix_vertex = [&](const std::string& v) {
            return std::find(prefix.vertices.begin(), prefix.vertices.end(), v) != prefix.vertices.end();
        };
        for (const auto& [id, u, v] : cell.edges)
            if (!has_cell_vertex(u) || !has_cell_vertex(v))
                throw Error("cell edge " + id + " references an unknown cell vertex");
        for (const auto& [id, u, v] : prefix.edges)
            if (!has_prefix_vertex(u) || !has_prefix_vertex(v))
                throw Error("prefix edge " + id + " references an unknown prefix vertex");
        auto check_ref = [&](const std::string& ref, bool allow_prefix) {
            auto dot = ref.find('.');
            if (dot == std::string::npos) throw Error("malformed glue endpoint: " + ref);
            std::string scope = ref.substr(0, dot), name = ref.substr(dot + 1);
            if (scope == "cell" || scope == "next") {
                if (!has_cell_vertex(name)) throw Error("glue endpoint references unknown cell vertex: " + ref);
            } else if (scope == "prefix" && allow_prefix) {
                if (!has_prefix_vertex(name)) throw Error("glue endpoint references unknown prefix vertex: " + ref);
            } else {
                throw Error("malformed glue endpoint: " + ref);
            }
        };
        for (const auto& ge : glue) {
            check_ref(ge.from, false);
            check_ref(ge.to, false);
            if (ge.from.substr(0, ge.from.find('.')) == ge.to.substr(0, ge.to.find('.')))
                throw Error("glue edge " + ge.id + " must join cell and next");
        }
        for (const auto& ge : prefix_glue) {
            check_ref(ge.from, true);
            check_ref(ge.to, true);
        }
        if (direction == Direction::two_way && !prefix.vertices.empty())
            throw Error("two-way presentations do not take a prefix");
        if (!prefix_glue.empty() && direction == Direction::two_way)
            throw Error("two-way presentations do not take prefix glue");
    }
};

// A finite window of a presentation: the prefix plus the first n+1 cells,
// with dangling glue edges reported as ports rather than edges.
struct Materialized {
    Multigraph graph;
    struct Port {
        std::string edge_id;         // instantiated glue edge id
        std::string inside_vertex;   // materialized endpoint
        std::string outside_vertex;  // template name of the missing endpoint
        int outside_cell = 0;        // its cell index
    };
    std::vector<Port> ports;
    int lo_cell = 0, hi_cell = -1;  // empty interval when the cell is empty

    // Cell index per graph vertex; prefix vertices sit below every cell.
    static constexpr int prefix_cell = std::numeric_limits<int>::min();
    std::vector<int> cell_of_vertex;
};

namespace detail {

struct GlueEndpoint {
    std::string name;
    int offset;  // 0 = lower cell, 1 = upper cell
};

inline GlueEndpoint parse_glue_ref(const std::string& ref) {
    auto dot = ref.find('.');
    std::string scope = ref.substr(0, dot), name = ref.substr(dot + 1);
    return {name, scope == "next" ? 1 : 0};
}

}  // namespace detail

inline Materialized materialize(const PeriodicPresentation& p, int n) {
    if (n < 0) throw Error("materialize: depth must be nonnegative");
    p.validate();
    Materialized out;
    std::vector<std::string> vertices = p.prefix.vertices;
    std::vector<Multigraph::EdgeSpec> edges = p.prefix.edges;
    out.cell_of_vertex.assign(vertices.size(), Materialized::prefix_cell);

    if (!p.finite()) {
        auto [lo, hi] = p.cell_interval(n + 1);
        out.lo_cell = lo;
        out.hi_cell = hi;
        // the first n+1 cells of the enumeration form the interval [lo, hi];
        // build it as a left-to-right sweep so that search variable order
        // follows the band
        for (int c = lo; c <= hi; ++c) {
            for (const auto& vname : p.cell.vertices) {
                vertices.push_back(PeriodicPresentation::instantiate(vname, c));
                out.cell_of_vertex.push_back(c);
            }
            if (c > lo) {
                for (const auto& ge : p.glue) {
                    auto a = detail::parse_glue_ref(ge.from);
                    auto b = detail::parse_glue_ref(ge.to);
                    int lower = c - 1;
                    edges.push_back({PeriodicPresentation::instantiate(ge.id, lower),
                                     PeriodicPresentation::instantiate(a.name, lower + a.offset),
                                     PeriodicPresentation::instantiate(b.name, lower + b.offset)});
                }
            }
            for (const auto& [id, u, v] : p.cell.edges)
                edges.push_back({PeriodicPresentation::instantiate(id, c),
                                 PeriodicPresentation::instantiate(u, c),
                                 PeriodicPresentation::instantiate(v, c)});
            if (c == 0) {
                for (const auto& ge : p.prefix_glue) {
                    auto expand = [&](const std::string& ref) {
                        auto dot = ref.find('.');
                        std::string scope = ref.substr(0, dot), name = ref.substr(dot + 1);
                        return scope == "prefix" ? name : PeriodicPresentation::instantiate(name, 0);
                    };
                    edges.push_back({ge.id, expand(ge.from), expand(ge.to)});
                }
            }
        }
        // dangling glue = ports
        for (int side : {-1, +1}) {
            if (side < 0 && p.direction == PeriodicPresentation::Direction::one_way) continue;
            int lower = side < 0 ? lo - 1 : hi;  // glue joins cells lower and lower+1
            for (const auto& ge : p.glue) {
                auto a = detail::parse_glue_ref(ge.from);
                auto b = detail::parse_glue_ref(ge.to);
                int ca = lower + a.offset, cb = lower + b.offset;
                bool a_in = ca >= lo && ca <= hi, b_in = cb >= lo && cb <= hi;
                if (a_in == b_in) continue;
                Materialized::Port port;
                port.edge_id = PeriodicPresentation::instantiate(ge.id, lower);
                if (a_in) {
                    port.inside_vertex = PeriodicPresentation::instantiate(a.name, ca);
                    port.outside_vertex = b.name;
                    port.outside_cell = cb;
                } else {
                    port.inside_vertex = PeriodicPresentation::instantiate(b.name, cb);
                    port.outside_vertex = a.name;
                    port.outside_cell = ca;
                }
                out.ports.push_back(port);
            }
        }
    }
    out.graph = Multigraph(vertices, edges);
    return out;
}

// Partition of the cell template vertices by connectivity in the half-band of
// cells extending away from the window (side +1 = increasing indices,
// side -1 = decreasing). Classes are numbered by first template vertex; every
// tail component of a connected presentation meets its boundary layer, so
// these classes are exactly the components of the removed tail.
inline std::vector<int> tail_classes(const PeriodicPresentation& p, int side) {
    int vc = static_cast<int>(p.cell.vertices.size());
    std::unordered_map<std::string, int> tmpl_index;
    for (int i = 0; i < vc; ++i) tmpl_index.emplace(p.cell.vertices[i], i);

    auto classes_for_width = [&](int width) {
        // union-find over (layer, template vertex), layers 0..width-1; layer
        // 0 is the boundary layer of the tail
        std::vector<int> parent(static_cast<size_t>(width) * vc);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        auto node = [&](int layer, const std::string& name) { return layer * vc + tmpl_index.at(name); };
        for (int layer = 0; layer < width; ++layer)
            for (const auto& [id, u, v] : p.cell.edges) unite(node(layer, u), node(layer, v));
        for (int layer = 0; layer + 1 < width; ++layer)
            for (const auto& ge : p.glue) {
                auto a = detail::parse_glue_ref(ge.from);
                auto b = detail::parse_glue_ref(ge.to);
                // within the tail, moving away from the window: for side +1
                // the "next" cell is one layer deeper; for side -1 the roles
                // flip
                int la = side > 0 ? layer + a.offset : layer + (1 - a.offset);
                int lb = side > 0 ? layer + b.offset : layer + (1 - b.offset);
                if (la < width && lb < width) unite(node(la, a.name), node(lb, b.name));
            }
        std::vector<int> cls(vc);
        std::unordered_map<int, int> renumber;
        for (int i = 0; i < vc; ++i) {
            int root = find(i);
            auto it = renumber.find(root);
            if (it == renumber.end()) it = renumber.emplace(root, static_cast<int>(renumber.size())).first;
            cls[i] = it->second;
        }
        return cls;
    };

    // connectivity between boundary-layer vertices stabilizes well within
    // 2*vc layers; compute past that bound and confirm on one more layer
    int width = std::min(64, std::max(3, 2 * vc + 8));
    std::vector<int> cls = classes_for_width(width);
    if (classes_for_width(width + 1) != cls) throw Error("tail component structure did not stabilize");
    return cls;
}

// The exhaustion quotient G_n: window vertices stay, each component of the
// removed tail contracts to one dummy vertex, loops are deleted, multi-edges
// are kept. Edge ids are inherited, so flows on the quotient lift by id.
struct ExhaustionQuotient {
    Multigraph graph;
    std::vector<std::string> window_vertices;
    std::vector<std::string> dummies;
    int depth = 0;
};

inline ExhaustionQuotient exhaustion_quotient(const PeriodicPresentation& p, int n) {
    Materialized window = materialize(p, n);
    ExhaustionQuotient out;
    out.depth = n;
    out.window_vertices = window.graph.vertex_ids();

    std::vector<std::string> vertices = window.graph.vertex_ids();
    std::unordered_map<std::string, int> tmpl_index;
    for (int i = 0; i < static_cast<int>(p.cell.vertices.size()); ++i)
        tmpl_index.emplace(p.cell.vertices[i], i);

    std::vector<int> left_cls, right_cls;
    auto dummy_name = [&](int side, int cls) {
        return std::string("#") + (side < 0 ? "L" : "R") + std::to_string(cls);
    };
    if (!p.finite()) {
        right_cls = tail_classes(p, +1);
        if (p.direction == PeriodicPresentation::Direction::two_way) left_cls = tail_classes(p, -1);
        auto add_dummies = [&](const std::vector<int>& cls, int side) {
            if (cls.empty()) return;
            int count = *std::max_element(cls.begin(), cls.end()) + 1;
            for (int c = 0; c < count; ++c) {
                std::string name = dummy_name(side, c);
                if (window.graph.has_vertex(name)) throw Error("presentation uses reserved vertex id " + name);
                vertices.push_back(name);
                out.dummies.push_back(name);
            }
        };
        add_dummies(left_cls, -1);
        add_dummies(right_cls, +1);
    }

    // edge order sweeps the band: left tail stubs, window edges, right stubs
    std::vector<Multigraph::EdgeSpec> edges;
    auto add_ports = [&](int side) {
        const auto& cls = side < 0 ? left_cls : right_cls;
        for (const auto& port : window.ports) {
            int port_side = port.outside_cell < window.lo_cell ? -1 : +1;
            if (port_side != side) continue;
            edges.push_back({port.edge_id, port.inside_vertex,
                             dummy_name(side, cls.at(tmpl_index.at(port.outside_vertex)))});
        }
    };
    add_ports(-1);
    for (int e = 0; e < window.graph.edge_count(); ++e) {
        if (window.graph.is_loop(e)) continue;  // G_n convention
        const auto& ed = window.graph.edge(e);
        edges.push_back({ed.id, window.graph.vertex_id(ed.u), window.graph.vertex_id(ed.v)});
    }
    add_ports(+1);

    out.graph = Multigraph(vertices, edges);
    return out;
}

}  // namespace gflow
