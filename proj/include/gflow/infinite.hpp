#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gflow/contraction.hpp"
#include "gflow/flow.hpp"
#include "gflow/isomorphism.hpp"
#include "gflow/named_graphs.hpp"
#include "gflow/presentation.hpp"

namespace gflow {

// A finite quotient with no A-flow. By flow restriction along contraction,
// its existence proves the presented infinite graph has no A-flow; replaying
// the search on the stored quotient reproduces the absence.
struct ObstructionCertificate {
    int depth = 0;
    Multigraph quotient;
    FlowAlphabet alphabet;
    // The cut family realizing the quotient: one singleton cut per window
    // vertex plus one cut per contracted tail component.
    std::vector<std::string> window_vertices;
    std::vector<std::string> component_dummies;
    std::string transcript;

    ObstructionCertificate() : alphabet(FlowAlphabet::k_flow(2)) {}
};

struct InfiniteCheck {
    enum class Verdict { no, yes_up_to };
    Verdict verdict = Verdict::yes_up_to;
    int depth = -1;  // failing depth, or the max depth that passed
    std::optional<ObstructionCertificate> certificate;

    bool obstructed() const { return verdict == Verdict::no; }
};

// Checks A-flow existence on the exhaustion quotients of increasing depth.
// "No" is sound and comes with a replayable certificate; "YesUpTo" reports
// only that no obstruction was found up to max_depth and is not a proof of
// existence.
inline InfiniteCheck check_infinite(const PeriodicPresentation& p, const FlowAlphabet& a,
                                    int max_depth = 16, int threads = 1) {
    InfiniteCheck result;
    for (int n = 0; n <= max_depth; ++n) {
        ExhaustionQuotient q = exhaustion_quotient(p, n);
        if (!find_flow(q.graph, a, threads)) {
            ObstructionCertificate cert;
            cert.depth = n;
            cert.quotient = q.graph;
            cert.alphabet = a;
            cert.window_vertices = q.window_vertices;
            cert.component_dummies = q.dummies;
            cert.transcript = "no " + a.describe() + " flow on the depth-" + std::to_string(n) +
                              " quotient (" + std::to_string(q.graph.vertex_count()) + " vertices, " +
                              std::to_string(q.graph.edge_count()) + " edges)";
            result.verdict = InfiniteCheck::Verdict::no;
            result.depth = n;
            result.certificate = std::move(cert);
            return result;
        }
        if (p.finite()) break;  // every depth is the same finite graph
    }
    result.verdict = InfiniteCheck::Verdict::yes_up_to;
    result.depth = max_depth;
    return result;
}

// Re-runs the stored search; true when the certificate still witnesses
// absence.
inline bool replay_certificate(const ObstructionCertificate& cert, int threads = 1) {
    return !find_flow(cert.quotient, cert.alphabet, threads).has_value();
}

// ---------------------------------------------------------------------------
// Bundled presentations.
// ---------------------------------------------------------------------------

// Two-way infinite path: one vertex per cell.
inline PeriodicPresentation double_ray_presentation() {
    PeriodicPresentation p;
    p.direction = PeriodicPresentation::Direction::two_way;
    p.cell.vertices = {"v"};
    p.glue = {{"cell.v", "next.v", "e"}};
    return p;
}

// Two rails with a rung per cell.
inline PeriodicPresentation infinite_ladder_presentation() {
    PeriodicPresentation p;
    p.direction = PeriodicPresentation::Direction::two_way;
    p.cell.vertices = {"t", "b"};
    p.cell.edges = {{"rung", "t", "b"}};
    p.glue = {{"cell.t", "next.t", "railt"}, {"cell.b", "next.b", "railb"}};
    return p;
}

// Cubic bipartite graph on three rails: rungs alternate between the top and
// bottom pair, and a crossing edge ties each top column to the next bottom
// column. Period two columns per cell.
inline PeriodicPresentation triple_rail_ladder_presentation() {
    PeriodicPresentation p;
    p.direction = PeriodicPresentation::Direction::two_way;
    p.cell.vertices = {"t0", "m0", "b0", "t1", "m1", "b1"};
    p.cell.edges = {
        {"ht", "t0", "t1"}, {"hm", "m0", "m1"}, {"hb", "b0", "b1"},
        {"rtm", "t1", "m1"}, {"rmb", "m0", "b0"}, {"cx", "t0", "b1"},
    };
    p.glue = {{"cell.t1", "next.t0", "gt"}, {"cell.m1", "next.m0", "gm"}, {"cell.b1", "next.b0", "gb"}};
    return p;
}

// Chain of blocks, each of which becomes a Petersen graph once the rest of
// the chain is contracted onto its two boundary vertices.
inline PeriodicPresentation petersen_chain_presentation() {
    PeriodicPresentation p;
    p.direction = PeriodicPresentation::Direction::two_way;
    p.cell.vertices = {"Lt", "Lb", "T", "P", "Q", "R", "X", "Y", "U", "W"};
    p.cell.edges = {
        {"e1", "Lt", "Lb"}, {"e2", "Lt", "T"}, {"e4", "Lb", "U"}, {"e5", "U", "W"},
        {"e8", "Q", "X"},  {"e9", "X", "R"},  {"e10", "R", "P"}, {"e11", "Y", "P"},
        {"e12", "Y", "Q"}, {"e13", "Q", "T"}, {"e14", "X", "U"}, {"e15", "Y", "W"},
    };
    p.glue = {{"cell.R", "next.P", "gRP"}, {"cell.W", "next.Lb", "gWL"}, {"next.Lt", "cell.T", "gLT"}};
    return p;
}

// ---------------------------------------------------------------------------
// Petersen chain regression: the depth-0 quotient of the chain admits no
// nonzero Z4-flow, and contracting its left dummy together with the two left
// boundary vertices yields the Petersen graph.
// ---------------------------------------------------------------------------

struct PetersenChainWitness {
    ObstructionCertificate certificate;   // depth-0 quotient, Z4 alphabet
    CutFamily contraction_family;         // singleton cuts separating all but the merged block
    ContractedGraph petersen_quotient;    // the contraction, Petersen after loop removal
    ContractionMap words;
    std::vector<std::pair<std::string, std::string>> isomorphism;  // quotient word -> Petersen vertex
};

inline PetersenChainWitness petersen_chain_z4_obstruction(int threads = 1) {
    PeriodicPresentation chain = petersen_chain_presentation();
    FlowAlphabet z4 = alphabet_nonzero(FiniteAbelianGroup::cyclic(4));
    ExhaustionQuotient q0 = exhaustion_quotient(chain, 0);
    if (find_flow(q0.graph, z4, threads))
        throw Error("petersen chain regression: depth-0 quotient unexpectedly has a Z4-flow");

    PetersenChainWitness w;
    w.certificate.depth = 0;
    w.certificate.quotient = q0.graph;
    w.certificate.alphabet = z4;
    w.certificate.window_vertices = q0.window_vertices;
    w.certificate.component_dummies = q0.dummies;
    w.certificate.transcript = "no nonzero Z4-flow on the depth-0 quotient of the Petersen chain";

    // merge the left dummy with the two left boundary vertices; keep every
    // other vertex separate via its singleton cut
    std::vector<std::string> merged = {"#L0", "Lt[0]", "Lb[0]"};
    CutFamily family;
    for (int v = 0; v < q0.graph.vertex_count(); ++v) {
        const std::string& id = q0.graph.vertex_id(v);
        if (std::find(merged.begin(), merged.end(), id) != merged.end()) continue;
        family.cuts.push_back(single_vertex_cut(q0.graph, v));
    }
    auto [contracted, map] = contract(q0.graph, family);
    Multigraph candidate = without_loops(contracted.quotient);
    Multigraph petersen = petersen_graph();
    auto iso = find_isomorphism(candidate, petersen);
    if (!iso) throw Error("petersen chain regression: contraction is not the Petersen graph");
    for (int v = 0; v < candidate.vertex_count(); ++v)
        w.isomorphism.push_back({candidate.vertex_id(v), petersen.vertex_id((*iso)[v])});
    w.contraction_family = std::move(family);
    w.petersen_quotient = std::move(contracted);
    w.words = std::move(map);
    return w;
}

}  // namespace gflow
