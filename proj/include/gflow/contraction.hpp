#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gflow/cuts.hpp"
#include "gflow/multigraph.hpp"
#include "gflow/presentation.hpp"

namespace gflow {

// A finite family of cuts of one host graph.
struct CutFamily {
    std::vector<OrientedCut> cuts;

    int size() const { return static_cast<int>(cuts.size()); }
};

// The quotient obtained by contracting with respect to a cut family. Vertex
// ids are side words over {A, B}, one letter per cut (the empty word is
// written "-"). Edge ids are inherited from the host; edges whose endpoints
// share a word become loops and are kept but flagged.
struct ContractedGraph {
    Multigraph quotient;
    std::vector<bool> loop_flag;  // per quotient edge index
};

// Host vertex -> word, plus the identity edge correspondence.
struct ContractionMap {
    std::vector<std::string> word_of_vertex;  // per host vertex index

    const std::string& word(int host_vertex) const { return word_of_vertex.at(host_vertex); }
};

namespace detail {

inline std::string side_word(const std::vector<OrientedCut>& cuts, int v) {
    if (cuts.empty()) return "-";
    std::string w;
    w.reserve(cuts.size());
    for (const auto& c : cuts) w.push_back(c.side_a[v] ? 'A' : 'B');
    return w;
}

}  // namespace detail

// Contraction with respect to a finite cut family: quotient vertices are the
// realized side words, and every host edge induces one quotient edge between
// the words of its endpoints. Every cut must be presented with its exact
// crossing set.
inline std::pair<ContractedGraph, ContractionMap> contract(const Multigraph& host,
                                                           const CutFamily& m) {
    for (const auto& cut : m.cuts)
        if (!is_valid_cut(host, cut)) throw Error("contract: not a cut");

    ContractionMap map;
    map.word_of_vertex.resize(host.vertex_count());
    std::vector<std::string> words;  // in order of first occurrence
    std::unordered_map<std::string, int> word_index;
    for (int v = 0; v < host.vertex_count(); ++v) {
        std::string w = detail::side_word(m.cuts, v);
        map.word_of_vertex[v] = w;
        if (!word_index.count(w)) {
            word_index.emplace(w, static_cast<int>(words.size()));
            words.push_back(w);
        }
    }

    std::vector<Multigraph::EdgeSpec> edges;
    edges.reserve(host.edge_count());
    std::vector<bool> loop_flag;
    loop_flag.reserve(host.edge_count());
    for (int e = 0; e < host.edge_count(); ++e) {
        const auto& ed = host.edge(e);
        const std::string& wu = map.word_of_vertex[ed.u];
        const std::string& wv = map.word_of_vertex[ed.v];
        edges.push_back({ed.id, wu, wv});
        loop_flag.push_back(wu == wv);
    }

    ContractedGraph out;
    out.quotient = Multigraph(words, edges);
    out.loop_flag = std::move(loop_flag);
    return {out, map};
}

// Report for the two inclusions relating a cut family, its quotient's cuts,
// and the host's finite cuts.
struct SandwichReport {
    bool family_cuts_in_quotient = true;        // each family cut induces a cut of the quotient
    bool quotient_cuts_pull_back = true;        // each quotient cut pulls back to a host cut
    std::optional<OrientedCut> offending_cut;   // on the side that failed
    std::string message;

    bool ok() const { return family_cuts_in_quotient && quotient_cuts_pull_back; }
};

// Verifies, for a finite host: (a) every cut of the family reappears as a cut
// of the quotient via its side words, with the same crossing edges; (b) every
// cut of the quotient pulls back through the vertex map to a cut of the host
// with the same crossing edges.
inline SandwichReport verify_cut_sandwich(const Multigraph& host, const CutFamily& m,
                                          const ContractedGraph& q, const ContractionMap& map) {
    SandwichReport report;
    const Multigraph& quot = q.quotient;

    for (size_t i = 0; i < m.cuts.size(); ++i) {
        const auto& cut = m.cuts[i];
        std::vector<bool> qside(quot.vertex_count(), false);
        for (int v = 0; v < host.vertex_count(); ++v)
            if (cut.side_a[v]) qside[quot.vertex_index(map.word(v))] = true;
        // loops of the quotient can never cross; word sides are well defined
        // because each word lies inside one side of the cut
        bool well_defined = true;
        for (int v = 0; v < host.vertex_count(); ++v)
            if (cut.side_a[v] != qside[quot.vertex_index(map.word(v))]) well_defined = false;
        std::vector<int> crossing;
        if (well_defined)
            for (int e = 0; e < quot.edge_count(); ++e) {
                if (quot.is_loop(e)) continue;
                if (qside[quot.edge(e).u] != qside[quot.edge(e).v]) crossing.push_back(e);
            }
        std::vector<int> expected = cut.crossing;  // edge indices coincide: ids inherited in order
        if (!well_defined || crossing != expected) {
            report.family_cuts_in_quotient = false;
            report.offending_cut = cut;
            report.message = "family cut " + std::to_string(i) + " does not induce a quotient cut";
            return report;
        }
    }

    if (quot.vertex_count() >= 2) {
        for (const auto& qcut : enumerate_cuts(quot)) {
            std::vector<bool> host_side(host.vertex_count(), false);
            for (int v = 0; v < host.vertex_count(); ++v)
                host_side[v] = qcut.side_a[quot.vertex_index(map.word(v))];
            OrientedCut pulled = make_cut(host, host_side);
            if (pulled.crossing != qcut.crossing) {
                report.quotient_cuts_pull_back = false;
                report.offending_cut = qcut;
                report.message = "quotient cut does not pull back to the host crossing set";
                return report;
            }
        }
    }
    return report;
}

// A cut of a presented infinite graph, either a prefix cut (side A holds the
// prefix and every cell with index below the given bound) or an explicit
// finite side A of materialized vertex ids.
struct PresentationCut {
    enum class Kind { prefix, finite_side } kind = Kind::prefix;
    int prefix = 0;
    std::vector<std::string> side_a;
};

struct PresentationQuotient {
    ContractedGraph contracted;        // words, with loops among materialized edges flagged
    ContractionMap window_map;         // word per materialized window vertex
    std::vector<std::string> window;   // materialized vertex ids
    bool dropped_tail_loops = false;   // the tails carry infinitely many loops, not materialized
};

// Contraction of a presented infinite graph with respect to finitely many
// prefix or finite-side cuts. The quotient is finite: beyond a large enough
// window each tail sits on one fixed side of every cut, so it contributes a
// single word whose internal edges are loops (dropped, flagged). Flow
// existence is unaffected by dropped loops.
inline PresentationQuotient contract_presentation(const PeriodicPresentation& p,
                                                  const std::vector<PresentationCut>& cuts) {
    p.validate();
    // widen the window until every referenced vertex and prefix boundary has
    // two cells of margin
    int depth = 4;
    Materialized window;
    auto ready = [&]() {
        for (const auto& c : cuts) {
            if (c.kind == PresentationCut::Kind::prefix) {
                if (p.finite()) throw Error("prefix cuts need a repeating cell");
                if (window.lo_cell > c.prefix - 2 &&
                    p.direction == PeriodicPresentation::Direction::two_way)
                    return false;
                if (window.hi_cell < c.prefix + 1) return false;
            } else {
                for (const auto& id : c.side_a)
                    if (!window.graph.has_vertex(id)) return false;
            }
        }
        return true;
    };
    for (;; depth += 4) {
        window = materialize(p, depth);
        if (ready()) break;
        if (p.finite())
            throw Error("contract_presentation: a cut references vertices outside the finite prefix");
        if (depth > 256) throw Error("contract_presentation: cuts reference cells too deep");
    }
    if (!p.finite()) window = materialize(p, depth + 2 * static_cast<int>(p.cell.vertices.size()) + 2);

    const Multigraph& wg = window.graph;
    auto side_of = [&](int cut_index, int cell, const std::string& vertex_id) {
        const auto& c = cuts[cut_index];
        if (c.kind == PresentationCut::Kind::prefix) return cell < c.prefix;
        return std::find(c.side_a.begin(), c.side_a.end(), vertex_id) != c.side_a.end();
    };
    auto word_for = [&](int cell, const std::string& vertex_id) {
        if (cuts.empty()) return std::string("-");
        std::string w;
        for (size_t i = 0; i < cuts.size(); ++i) w.push_back(side_of(static_cast<int>(i), cell, vertex_id) ? 'A' : 'B');
        return w;
    };

    PresentationQuotient out;
    out.window = wg.vertex_ids();
    out.window_map.word_of_vertex.resize(wg.vertex_count());
    std::vector<std::string> words;
    std::unordered_map<std::string, int> word_index;
    auto intern = [&](const std::string& w) {
        if (!word_index.count(w)) {
            word_index.emplace(w, static_cast<int>(words.size()));
            words.push_back(w);
        }
    };
    for (int v = 0; v < wg.vertex_count(); ++v) {
        std::string w = word_for(window.cell_of_vertex[v], wg.vertex_id(v));
        out.window_map.word_of_vertex[v] = w;
        intern(w);
    }
    std::string left_word, right_word;
    if (!p.finite()) {
        // tails: the left tail lies below every prefix bound, the right tail
        // above; neither contains any finite side
        int lo = window.lo_cell, hi = window.hi_cell;
        for (const auto& c : cuts) {
            if (c.kind != PresentationCut::Kind::finite_side) continue;
            for (const auto& id : c.side_a)
                if (!wg.has_vertex(id)) throw Error("finite-side cut references unknown vertex " + id);
        }
        right_word = word_for(hi + 1, "");
        intern(right_word);
        if (p.direction == PeriodicPresentation::Direction::two_way) {
            left_word = word_for(lo - 1, "");
            intern(left_word);
        }
        out.dropped_tail_loops = !p.cell.edges.empty() || !p.glue.empty();
    }

    // loops at a tail word stand for an infinite family and are dropped with
    // the rest of that family; loops at interior words are kept and flagged
    auto tail_loop = [&](const std::string& w) { return w == left_word || w == right_word; };
    std::vector<Multigraph::EdgeSpec> edges;
    std::vector<bool> loop_flag;
    for (int e = 0; e < wg.edge_count(); ++e) {
        const auto& ed = wg.edge(e);
        const std::string& wu = out.window_map.word_of_vertex[ed.u];
        const std::string& wv = out.window_map.word_of_vertex[ed.v];
        if (wu == wv && !p.finite() && tail_loop(wu)) {
            out.dropped_tail_loops = true;
            continue;
        }
        edges.push_back({ed.id, wu, wv});
        loop_flag.push_back(wu == wv);
    }
    for (const auto& port : window.ports) {
        const std::string& tail_word = port.outside_cell < window.lo_cell ? left_word : right_word;
        int inside = wg.vertex_index(port.inside_vertex);
        const std::string& wu = out.window_map.word_of_vertex[inside];
        if (wu == tail_word) {
            out.dropped_tail_loops = true;
            continue;
        }
        edges.push_back({port.edge_id, wu, tail_word});
        loop_flag.push_back(false);
    }
    out.contracted.quotient = Multigraph(words, edges);
    out.contracted.loop_flag = std::move(loop_flag);
    return out;
}

// Strips flagged loops; useful when comparing a quotient against a loop-free
// reference graph.
inline Multigraph without_loops(const Multigraph& g) {
    std::vector<Multigraph::EdgeSpec> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.is_loop(e)) continue;
        const auto& ed = g.edge(e);
        edges.push_back({ed.id, g.vertex_id(ed.u), g.vertex_id(ed.v)});
    }
    return Multigraph(g.vertex_ids(), edges);
}

}  // namespace gflow
