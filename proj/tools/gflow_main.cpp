// gflow: group-valued flows, tensions and colorings on finite multigraphs and
// finitely presented infinite graphs.
//
// Exit codes: 0 = positive verdict, 1 = negative verdict (absent / no),
// 2 = usage or input error. A machine-readable report is printed on stdout
// (canonical JSON, sorted keys); a one-line human summary goes to stderr
// unless --quiet is given.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gflow/contraction.hpp"
#include "gflow/coloring.hpp"
#include "gflow/eulerian.hpp"
#include "gflow/expansion.hpp"
#include "gflow/flow.hpp"
#include "gflow/infinite.hpp"
#include "gflow/json_io.hpp"
#include "gflow/tension.hpp"

namespace {

using gflow::json;

struct Common {
    bool quiet = false;
    bool timing = false;
    int threads = 1;
    std::optional<long long> seed;
    std::vector<std::string> argv_echo;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

int emit(const Common& c, const std::string& verdict, json witness, const std::string& human,
         int exit_code) {
    json report;
    report["command"] = c.argv_echo;
    report["seed"] = c.seed ? json(*c.seed) : json(nullptr);
    if (c.timing) {
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - c.start);
        report["timing_ms"] = static_cast<long long>(ms.count());
    }
    report["verdict"] = verdict;
    report["witness"] = std::move(witness);
    std::cout << report.dump(2) << "\n";
    if (!c.quiet) std::cerr << human << "\n";
    return exit_code;
}

gflow::FlowAlphabet resolve_alphabet(const gflow::FiniteAbelianGroup& grp, bool nonelusive,
                                     const std::string& elements_json) {
    if (!elements_json.empty()) {
        json arr = json::parse(elements_json);
        std::vector<gflow::GroupElement> elems;
        for (const auto& coords : arr) elems.push_back(grp.make(coords.get<std::vector<int>>()));
        return gflow::FlowAlphabet::of(grp, elems);
    }
    if (nonelusive) return gflow::alphabet_nonzero(grp);
    std::vector<gflow::GroupElement> all;
    for (long long i = 0; i < grp.order(); ++i) all.push_back(grp.element_at(i));
    return gflow::FlowAlphabet::of(grp, all);
}

std::vector<gflow::PresentationCut> presentation_cuts(const std::vector<gflow::CutSpec>& specs) {
    std::vector<gflow::PresentationCut> cuts;
    for (const auto& s : specs) {
        gflow::PresentationCut c;
        if (s.kind == gflow::CutSpec::Kind::prefix) {
            c.kind = gflow::PresentationCut::Kind::prefix;
            c.prefix = s.prefix;
        } else {
            c.kind = gflow::PresentationCut::Kind::finite_side;
            c.side_a = s.side_a;
        }
        cuts.push_back(std::move(c));
    }
    return cuts;
}

json flow_witness(const gflow::Multigraph& g, const gflow::EdgeAssignment& f,
                  const gflow::FlowAlphabet& a) {
    json w = gflow::to_json(g, f);
    w["alphabet"] = gflow::to_json(a);
    return w;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"group-valued flows on finite and finitely presented infinite multigraphs"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Common common;
    common.argv_echo.push_back("gflow");
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        // execution tuning does not change the query; keep the echo (and the
        // report bytes) independent of it
        if (a == "--threads" || a == "--timing") {
            if (a == "--threads" && i + 1 < argc) ++i;
            continue;
        }
        if (a.rfind("--threads=", 0) == 0 || a == "--quiet") continue;
        common.argv_echo.push_back(a);
    }

    app.add_flag("--quiet", common.quiet, "suppress the human summary on stderr");
    app.add_flag("--timing", common.timing, "include timing_ms in the report");
    app.add_option("--threads", common.threads, "worker threads for the searches")->default_val(1);
    long long seed_value = 0;
    auto* seed_opt = app.add_option("--seed", seed_value, "reserved; searches are deterministic");

    // ------------------------------------------------------------- find
    auto* find = app.add_subcommand("find", "search for an A-flow");
    std::string find_graph, find_group, find_elements;
    bool find_nonelusive = false;
    find->add_option("--graph", find_graph)->required();
    find->add_option("--group", find_group)->required();
    find->add_flag("--nonelusive", find_nonelusive, "alphabet = all nonzero elements");
    find->add_option("--elements", find_elements, "alphabet as a JSON list of coordinate arrays");

    // ------------------------------------------------------------- verify
    auto* verify = app.add_subcommand("verify", "verify an assignment as an A-flow");
    std::string verify_graph, verify_flow_path, verify_cuts, verify_elements;
    bool verify_nonelusive = false;
    verify->add_option("--graph", verify_graph)->required();
    verify->add_option("--flow", verify_flow_path)->required();
    verify->add_option("--cuts", verify_cuts, "check only the cuts in this file");
    verify->add_flag("--nonelusive", verify_nonelusive);
    verify->add_option("--elements", verify_elements);

    // ------------------------------------------------------------- count
    auto* count = app.add_subcommand("count", "exhaustively count A-flows");
    std::string count_graph, count_group, count_elements;
    bool count_nonelusive = false;
    int count_max_edges = 12;
    count->add_option("--graph", count_graph)->required();
    count->add_option("--group", count_group)->required();
    count->add_flag("--nonelusive", count_nonelusive);
    count->add_option("--elements", count_elements);
    count->add_option("--max-edges", count_max_edges, "exhaustive guard")->default_val(12);

    // ------------------------------------------------------------- kflow
    auto* kflow = app.add_subcommand("kflow", "search for an integer k-flow");
    std::string kflow_graph;
    int kflow_k = 0;
    kflow->add_option("--graph", kflow_graph)->required();
    kflow->add_option("--k", kflow_k)->required();

    // ------------------------------------------------------------- contract
    auto* contract_cmd = app.add_subcommand("contract", "contract with respect to a cut family");
    std::string contract_graph, contract_presentation_path, contract_cuts, contract_out;
    contract_cmd->add_option("--graph", contract_graph, "finite host graph");
    contract_cmd->add_option("--presentation", contract_presentation_path, "infinite host presentation");
    contract_cmd->add_option("--cuts", contract_cuts)->required();
    contract_cmd->add_option("--out", contract_out, "write the quotient graph JSON here");

    // ------------------------------------------------------------- infinite
    auto* infinite = app.add_subcommand("infinite", "flow existence on a presented infinite graph");
    infinite->require_subcommand(1);
    auto* icheck = infinite->add_subcommand("check", "exhaustion semi-decision");
    std::string icheck_presentation, icheck_group, icheck_elements;
    bool icheck_nonelusive = false;
    int icheck_max_depth = 16;
    icheck->add_option("--presentation", icheck_presentation)->required();
    icheck->add_option("--group", icheck_group)->required();
    icheck->add_flag("--nonelusive", icheck_nonelusive);
    icheck->add_option("--elements", icheck_elements);
    icheck->add_option("--max-depth", icheck_max_depth)->default_val(16);
    auto* ireplay = infinite->add_subcommand("replay", "re-run a stored obstruction certificate");
    std::string ireplay_certificate;
    ireplay->add_option("--certificate", ireplay_certificate)->required();

    // ------------------------------------------------------------- color
    auto* color = app.add_subcommand("color", "search for a semi-k-edge-coloring");
    std::string color_graph;
    int color_k = 0;
    color->add_option("--graph", color_graph)->required();
    color->add_option("--k", color_k)->required();

    // ------------------------------------------------------------- expand-cubic
    auto* excubic = app.add_subcommand("expand-cubic", "realize the graph as a contraction of a cubic graph with the same flow");
    std::string excubic_graph, excubic_flow, excubic_out;
    excubic->add_option("--graph", excubic_graph)->required();
    excubic->add_option("--flow", excubic_flow)->required();
    excubic->add_option("--out", excubic_out, "write the cubic graph JSON here");

    // ------------------------------------------------------------- expand-regular
    auto* exreg = app.add_subcommand("expand-regular", "realize the graph as a contraction of a k-regular properly colored graph");
    std::string exreg_graph, exreg_coloring, exreg_out;
    exreg->add_option("--graph", exreg_graph)->required();
    exreg->add_option("--coloring", exreg_coloring)->required();
    exreg->add_option("--out", exreg_out, "write the regular graph JSON here");

    // ------------------------------------------------------------- supereulerian
    auto* super = app.add_subcommand("supereulerian", "find a spanning Eulerian subgraph and its Klein-group flow");
    std::string super_graph;
    int super_max_edges = 16;
    super->add_option("--graph", super_graph)->required();
    super->add_option("--max-edges", super_max_edges, "exhaustive guard")->default_val(16);

    // ------------------------------------------------------------- hamilton-flow
    auto* hamilton = app.add_subcommand("hamilton-flow", "Klein-group flows from a circle template under exhaustion");
    std::string hamilton_presentation, hamilton_circle;
    int hamilton_max_depth = 16;
    hamilton->add_option("--presentation", hamilton_presentation)->required();
    hamilton->add_option("--circle", hamilton_circle)->required();
    hamilton->add_option("--max-depth", hamilton_max_depth)->default_val(16);

    // ------------------------------------------------------------- tension
    auto* tension = app.add_subcommand("tension", "group-valued tensions");
    tension->require_subcommand(1);
    auto* tfind = tension->add_subcommand("find", "search for an A-tension");
    std::string tfind_graph, tfind_group, tfind_elements;
    bool tfind_nonelusive = false;
    tfind->add_option("--graph", tfind_graph)->required();
    tfind->add_option("--group", tfind_group)->required();
    tfind->add_flag("--nonelusive", tfind_nonelusive);
    tfind->add_option("--elements", tfind_elements);
    auto* tcheck = tension->add_subcommand("check-infinite", "tension semi-decision on windows");
    std::string tcheck_presentation, tcheck_group, tcheck_elements;
    bool tcheck_nonelusive = false;
    int tcheck_max_depth = 16;
    tcheck->add_option("--presentation", tcheck_presentation)->required();
    tcheck->add_option("--group", tcheck_group)->required();
    tcheck->add_flag("--nonelusive", tcheck_nonelusive);
    tcheck->add_option("--elements", tcheck_elements);
    tcheck->add_option("--max-depth", tcheck_max_depth)->default_val(16);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    if (seed_opt->count()) common.seed = seed_value;

    try {
        if (*find) {
            auto g = gflow::multigraph_from_json(gflow::load_json_file(find_graph));
            auto a = resolve_alphabet(gflow::parse_group_spec(find_group), find_nonelusive, find_elements);
            auto f = gflow::find_flow(g, a, common.threads);
            if (!f) return emit(common, "absent", nullptr, "no flow over " + a.describe(), 1);
            return emit(common, "found", flow_witness(g, *f, a), "flow found over " + a.describe(), 0);
        }
        if (*verify) {
            auto g = gflow::multigraph_from_json(gflow::load_json_file(verify_graph));
            json fj = gflow::load_json_file(verify_flow_path);
            if (fj.is_object() && fj.contains("flow")) fj = fj.at("flow");  // accept a find witness
            auto f = gflow::assignment_from_json(g, fj);
            gflow::FlowAlphabet a = gflow::FlowAlphabet::k_flow(2);
            if (f.integer_domain()) {
                a = gflow::FlowAlphabet::k_flow(f.k());
            } else if (!verify_elements.empty() || verify_nonelusive) {
                a = resolve_alphabet(f.group(), verify_nonelusive, verify_elements);
            } else if (fj.contains("alphabet")) {
                a = gflow::alphabet_from_json(fj.at("alphabet"));
            } else {
                a = resolve_alphabet(f.group(), false, "");
            }
            std::optional<std::vector<gflow::OrientedCut>> cuts;
            if (!verify_cuts.empty()) {
                std::vector<gflow::OrientedCut> list;
                for (const auto& spec : gflow::cut_specs_from_json(gflow::load_json_file(verify_cuts))) {
                    if (spec.kind != gflow::CutSpec::Kind::vertex_set)
                        throw gflow::Error("verify: cuts must be vertex sets for finite graphs");
                    list.push_back(gflow::make_cut_ids(g, spec.side_a));
                }
                cuts = std::move(list);
            }
            auto chk = gflow::verify_flow(g, f, a, cuts ? &*cuts : nullptr);
            if (chk.ok) return emit(common, "valid", nullptr, "assignment is a flow over " + a.describe(), 0);
            json w;
            w["reason"] = chk.message;
            if (chk.violated_cut) w["violated_cut"] = gflow::to_json(g, *chk.violated_cut);
            if (chk.offending_edge) w["offending_edge"] = *chk.offending_edge;
            return emit(common, "invalid", w, "not a flow: " + chk.message, 1);
        }
        if (*count) {
            auto g = gflow::multigraph_from_json(gflow::load_json_file(count_graph));
            auto a = resolve_alphabet(gflow::parse_group_spec(count_group), count_nonelusive, count_elements);
            auto n = gflow::count_flows(g, a, count_max_edges);
            json w;
            w["count"] = n;
            return emit(common, n > 0 ? "found" : "absent", w,
                        std::to_string(n) + " flows over " + a.describe(), n > 0 ? 0 : 1);
        }
        if (*kflow) {
            auto g = gflow::multigraph_from_json(gflow::load_json_file(kflow_graph));
            auto a = gflow::alphabet_k_flow(kflow_k);
            auto f = gflow::find_k_flow(g, kflow_k, common.threads);
            if (!f) return emit(common, "absent", nullptr, "no " + std::to_string(kflow_k) + "-flow", 1);
            return emit(common, "found", flow_witness(g, *f, a), std::to_string(kflow_k) + "-flow found", 0);
        }
        if (*contract_cmd) {
            auto specs = gflow::cut_specs_from_json(gflow::load_json_file(contract_cuts));
            if (!contract_graph.empty() && !contract_presentation_path.empty())
                throw gflow::Error("contract: give either --graph or --presentation, not both");
            json w;
            if (!contract_graph.empty()) {
                auto g = gflow::multigraph_from_json(gflow::load_json_file(contract_graph));
                gflow::CutFamily family;
                for (const auto& spec : specs) {
                    if (spec.kind != gflow::CutSpec::Kind::vertex_set)
                        throw gflow::Error("contract: prefix cuts need --presentation");
                    family.cuts.push_back(gflow::make_cut_ids(g, spec.side_a));
                }
                auto [cg, cmap] = gflow::contract(g, family);
                auto sandwich = gflow::verify_cut_sandwich(g, family, cg, cmap);
                w["quotient"] = gflow::to_json(cg.quotient);
                json words = json::object();
                for (int v = 0; v < g.vertex_count(); ++v) words[g.vertex_id(v)] = cmap.word(v);
                w["words"] = words;
                json loops = json::array();
                for (int e = 0; e < cg.quotient.edge_count(); ++e)
                    if (cg.loop_flag[e]) loops.push_back(cg.quotient.edge(e).id);
                w["loops"] = loops;
                w["cut_inclusions_hold"] = sandwich.ok();
                if (!contract_out.empty()) gflow::save_json_file(contract_out, gflow::to_json(cg.quotient));
            } else if (!contract_presentation_path.empty()) {
                auto p = gflow::presentation_from_json(gflow::load_json_file(contract_presentation_path));
                auto q = gflow::contract_presentation(p, presentation_cuts(specs));
                w["quotient"] = gflow::to_json(q.contracted.quotient);
                w["dropped_tail_loops"] = q.dropped_tail_loops;
                json words = json::object();
                for (size_t v = 0; v < q.window.size(); ++v) words[q.window[v]] = q.window_map.word_of_vertex[v];
                w["words"] = words;
                if (!contract_out.empty())
                    gflow::save_json_file(contract_out, gflow::to_json(q.contracted.quotient));
            } else {
                throw gflow::Error("contract: --graph or --presentation required");
            }
            return emit(common, "valid", w, "contraction built", 0);
        }
        if (*icheck) {
            auto p = gflow::presentation_from_json(gflow::load_json_file(icheck_presentation));
            auto a = resolve_alphabet(gflow::parse_group_spec(icheck_group), icheck_nonelusive, icheck_elements);
            auto r = gflow::check_infinite(p, a, icheck_max_depth, common.threads);
            if (r.obstructed()) {
                json w = gflow::to_json(*r.certificate);
                return emit(common, "no-with-certificate", w,
                            "obstruction at depth " + std::to_string(r.depth), 1);
            }
            json w;
            w["checked_depth"] = r.depth;
            w["note"] = "no obstruction found up to the depth bound; this is not a proof of existence";
            return emit(common, "yes-up-to", w, "no obstruction up to depth " + std::to_string(r.depth), 0);
        }
        if (*ireplay) {
            auto cert = gflow::certificate_from_json(gflow::load_json_file(ireplay_certificate));
            bool reproduced = gflow::replay_certificate(cert, common.threads);
            json w;
            w["depth"] = cert.depth;
            w["reproduced"] = reproduced;
            return emit(common, reproduced ? "valid" : "invalid", w,
                        reproduced ? "absence reproduced" : "certificate did not replay", reproduced ? 0 : 1);
        }
        if (*color) {
            auto g = gflow::multigraph_from_json(gflow::load_json_file(color_graph));
            auto c = gflow::find_semi_coloring(g, color_k);
            if (!c)
                return emit(common, "absent", nullptr,
                            "no semi-" + std::to_string(color_k) + "-edge-coloring", 1);
            return emit(common, "found", gflow::to_json(g, *c),
                        "semi-" + std::to_string(color_k) + "-edge-coloring found", 0);
        }
        if (*excubic) {
            auto g = gflow::multigraph_from_json(gflow::load_json_file(excubic_graph));
            json fj = gflow::load_json_file(excubic_flow);
            if (fj.is_object() && fj.contains("flow")) fj = fj.at("flow");
            auto f = gflow::assignment_from_json(g, fj);
            auto r = gflow::expand_to_cubic(g, f);
            json w;
            w["cubic"] = gflow::to_json(r.cubic);
            w["flow"] = gflow::to_json(r.cubic, r.flow);
            json cuts = json::array();
            for (const auto& cut : r.family.cuts) cuts.push_back(cut.side_a_ids(r.cubic));
            w["cuts"] = cuts;
            json corr = json::object();
            for (const auto& [v, word] : r.correspondence) corr[v] = word;
            w["correspondence"] = corr;
            if (!excubic_out.empty()) gflow::save_json_file(excubic_out, gflow::to_json(r.cubic));
            return emit(common, "found", w, "cubic expansion built and verified", 0);
        }
        if (*exreg) {
            auto g = gflow::multigraph_from_json(gflow::load_json_file(exreg_graph));
            auto c = gflow::coloring_from_json(g, gflow::load_json_file(exreg_coloring));
            auto r = gflow::expand_to_regular(g, c);
            json w;
            w["regular"] = gflow::to_json(r.regular);
            w["coloring"] = gflow::to_json(r.regular, r.coloring);
            json cuts = json::array();
            for (const auto& cut : r.family.cuts) cuts.push_back(cut.side_a_ids(r.regular));
            w["cuts"] = cuts;
            json corr = json::object();
            for (const auto& [v, word] : r.correspondence) corr[v] = word;
            w["correspondence"] = corr;
            if (!exreg_out.empty()) gflow::save_json_file(exreg_out, gflow::to_json(r.regular));
            return emit(common, "found", w, "regular expansion built and verified", 0);
        }
        if (*super) {
            auto g = gflow::multigraph_from_json(gflow::load_json_file(super_graph));
            auto c = gflow::find_spanning_eulerian(g, super_max_edges);
            if (!c) return emit(common, "absent", nullptr, "not supereulerian", 1);
            auto f = gflow::supereulerian_flow(g, *c);
            json w;
            w["subgraph"] = gflow::to_json(g, *c);
            w["flow"] = flow_witness(g, f, gflow::alphabet_nonzero(gflow::FiniteAbelianGroup({2, 2})));
            return emit(common, "found", w, "spanning Eulerian subgraph and flow found", 0);
        }
        if (*hamilton) {
            auto p = gflow::presentation_from_json(gflow::load_json_file(hamilton_presentation));
            auto circle = gflow::circle_from_json(gflow::load_json_file(hamilton_circle));
            auto r = gflow::hamilton_shadow_flow(p, circle, hamilton_max_depth);
            if (!r.ok) {
                json w;
                w["depth"] = r.depth;
                w["message"] = r.message;
                if (r.failing_quotient) w["quotient"] = gflow::to_json(*r.failing_quotient);
                return emit(common, "no-with-certificate", w, r.message, 1);
            }
            json w;
            w["checked_depth"] = r.depth;
            w["quotient"] = gflow::to_json(*r.last_quotient);
            w["shadow"] = gflow::to_json(*r.last_quotient, *r.last_shadow);
            w["flow"] = flow_witness(*r.last_quotient, *r.last_flow,
                                     gflow::alphabet_nonzero(gflow::FiniteAbelianGroup({2, 2})));
            return emit(common, "yes-up-to", w, r.message, 0);
        }
        if (*tfind) {
            auto g = gflow::multigraph_from_json(gflow::load_json_file(tfind_graph));
            auto a = resolve_alphabet(gflow::parse_group_spec(tfind_group), tfind_nonelusive, tfind_elements);
            auto f = gflow::find_tension(g, a, common.threads);
            if (!f) return emit(common, "absent", nullptr, "no tension over " + a.describe(), 1);
            return emit(common, "found", flow_witness(g, *f, a), "tension found over " + a.describe(), 0);
        }
        if (*tcheck) {
            auto p = gflow::presentation_from_json(gflow::load_json_file(tcheck_presentation));
            auto a = resolve_alphabet(gflow::parse_group_spec(tcheck_group), tcheck_nonelusive, tcheck_elements);
            auto r = gflow::check_infinite_tension(p, a, tcheck_max_depth, common.threads);
            if (r.obstructed()) {
                json w;
                w["depth"] = r.depth;
                w["window"] = gflow::to_json(*r.failing_window);
                w["alphabet"] = gflow::to_json(a);
                return emit(common, "no-with-certificate", w,
                            "tension obstruction at depth " + std::to_string(r.depth), 1);
            }
            json w;
            w["checked_depth"] = r.depth;
            w["note"] = "no obstruction found up to the depth bound; this is not a proof of existence";
            return emit(common, "yes-up-to", w, "no tension obstruction up to depth " + std::to_string(r.depth), 0);
        }
    } catch (const gflow::Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    std::cerr << "no subcommand\n";
    return 2;
}
