// Command-line front end: generate corpus graphs, run individual checks or
// verification suites, export DOT/JSON reports.
//
// Exit codes: 0 = pass/success, 1 = check failure, 2 = input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "reslab/reslab.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace reslab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) fail(errc::bad_input, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) fail(errc::bad_input, "cannot open '" + path + "' for writing");
    out << text;
}

json report_header() {
    json j;
    j["version"] = kVersion;
    j["edge_guard"] = edge_guard();
    return j;
}

PlaneGraph load_graph(const std::string& path) { return plane_from_json_text(read_input(path)); }

json generate_graph(const std::string& family, const std::vector<int>& p,
                    const std::string& turns) {
    auto need = [&](std::size_t k) {
        require(p.size() == k, errc::bad_parameter,
                family + " takes " + std::to_string(k) + " integer parameter(s)");
    };
    auto tree = [&](const Graph& t) { return to_json(embed_tree_or_cycle(t)); };
    if (family == "hexagon") {
        need(0);
        return to_json(gen_hexagon().graph);
    }
    if (family == "naphthalene") {
        need(0);
        return to_json(gen_naphthalene().graph);
    }
    if (family == "fibonaccene") {
        need(1);
        return to_json(gen_fibonaccene(p[0]).graph);
    }
    if (family == "hexchain") {
        need(1);
        return to_json(gen_hex_chain(p[0], turns).graph);
    }
    if (family == "coronene") {
        need(0);
        return to_json(gen_coronene().graph);
    }
    if (family == "coronene-arc") {
        need(0);
        return to_json(gen_coronene_arc().graph);
    }
    if (family == "bridged-hexpair") {
        need(0);
        return to_json(gen_bridged_hexpair());
    }
    if (family == "hexagon-tail") {
        need(0);
        return to_json(gen_hexagon_tail());
    }
    if (family == "gear") {
        need(0);
        return to_json(gen_gear_plane());
    }
    if (family == "path") {
        need(1);
        return tree(gen_path(p[0]));
    }
    if (family == "cycle") {
        need(1);
        return tree(gen_cycle(p[0]));
    }
    if (family == "star") {
        need(1);
        return tree(gen_star(p[0]));
    }
    if (family == "bistar") {
        need(2);
        return tree(gen_bistar(p[0], p[1]));
    }
    if (family == "s3") {
        need(2);
        return tree(gen_s3(p[0], p[1]));
    }
    if (family == "s4") {
        need(2);
        return tree(gen_s4(p[0], p[1]));
    }
    if (family == "s3pqr") {
        need(3);
        return tree(gen_s3pqr(p[0], p[1], p[2]));
    }
    fail(errc::bad_parameter, "unknown family '" + family + "'");
}

struct CheckOutcome {
    bool ok = false;
    std::string message;
};

CheckOutcome run_check(const PlaneGraph& g, const std::string& what) {
    if (what == "elementary") {
        bool ok = is_elementary(g);
        return {ok, ok ? "elementary" : "not elementary"};
    }
    if (what == "weakly-elementary") {
        bool ok = is_weakly_elementary(g);
        return {ok, ok ? "weakly elementary" : "not weakly elementary"};
    }
    if (what == "p2c") {
        P2CResult r = is_peripherally_2_colorable(g);
        return {r.ok, r.ok ? "peripherally 2-colorable" : r.refutation};
    }
    if (what == "forcing-outer") {
        bool ok = is_forcing_face(g, g.outer_face());
        return {ok, ok ? "outer face forcing" : "outer face not forcing"};
    }
    if (what == "daisy") {
        DaisyResult r = is_daisy_cube(g.skeleton());
        return {r.is_daisy, r.is_daisy ? "daisy cube" : r.refutation};
    }
    if (what == "median") {
        MedianResult r = is_median_graph(g.skeleton());
        std::ostringstream msg;
        if (r.is_median)
            msg << "median graph";
        else
            msg << "not a median graph; witness " << r.witness[0] << "," << r.witness[1] << ","
                << r.witness[2];
        return {r.is_median, msg.str()};
    }
    fail(errc::bad_parameter, "unknown check '" + what + "'");
}

// ---- verify suites ----------------------------------------------------------

struct SuiteLine {
    std::string file;
    std::string status;  // PASS / FAIL / SKIP
    std::string detail;
};

SuiteLine run_suite_on(const std::string& suite, const std::string& file, const PlaneGraph& g) {
    SuiteLine line{file, "PASS", ""};
    auto skip = [&](const std::string& why) {
        line.status = "SKIP";
        line.detail = why;
        return line;
    };
    auto result = [&](bool passed, const std::string& detail) {
        line.status = passed ? "PASS" : "FAIL";
        line.detail = detail;
        return line;
    };

    std::vector<Matching> ms = enumerate_perfect_matchings(g);
    if (ms.empty()) return skip("no perfect matching");

    if (suite == "connectivity") {
        ConnectivityReport r = check_connectivity_theorem(g);
        return result(r.passed, std::string("connected=") + (r.resonance_connected ? "1" : "0") +
                                    " weakly_elementary=" + (r.weakly_elementary ? "1" : "0"));
    }
    if (suite == "product") {
        if (!is_weakly_elementary(g, ms)) return skip("not weakly elementary");
        ProductReport r = check_product_structure(g);
        std::ostringstream d;
        d << "|V(R)|=" << r.resonance_vertices << " factors=" << r.factor_vertices.size();
        return result(r.passed, d.str());
    }
    if (suite == "theorem35") {
        if (!is_elementary(g, ms) || g.n <= 2) return skip("not elementary or K2");
        if (!is_forcing_face(g, g.outer_face())) return skip("outer face not forcing");
        Theorem35Report r = verify_theorem_35(g);
        std::ostringstream d;
        d << r.maximal_resonant.size() << " maximal resonant sets, cube dims";
        for (int k : r.maximal_cube_dims) d << " " << k;
        return result(r.passed, d.str());
    }
    if (suite == "corollary37") {
        if (g.n <= 2 || !is_elementary(g, ms) || !is_peripherally_2_colorable(g, ms).ok)
            return skip("not peripherally 2-colorable");
        Corollary37Report r = verify_corollary_37(g);
        std::ostringstream d;
        d << r.maximal_hypercubes << " maximal hypercubes vs " << r.maximal_independent_sets
          << " dual MIS";
        return result(r.passed, d.str());
    }
    if (suite == "corollary46") {
        if (!is_weakly_elementary(g, ms)) return skip("not weakly elementary");
        for (const SubPlane& comp : elementary_components(g, ms))
            if (comp.graph.n > 2 && !is_peripherally_2_colorable(comp.graph).ok)
                return skip("a nontrivial elementary component is not peripherally 2-colorable");
        Corollary46Report r = verify_matchings_equal_independent_sets(g);
        std::ostringstream d;
        d << r.matchings << " matchings vs " << r.independent_sets << " independent sets";
        return result(r.passed, d.str());
    }
    fail(errc::bad_parameter, "unknown suite '" + suite + "'");
}

int cmd_verify(const std::string& suite, const std::string& corpus_dir, bool as_json) {
    std::vector<std::string> suites;
    if (suite == "all")
        suites = {"connectivity", "product", "theorem35", "corollary37", "corollary46"};
    else
        suites = {suite};

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(corpus_dir))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    require(!files.empty(), errc::bad_input, "no .json files in '" + corpus_dir + "'");

    bool all_pass = true;
    json out = report_header();
    out["lines"] = json::array();
    for (const std::string& s : suites)
        for (const fs::path& f : files) {
            PlaneGraph g = plane_from_json_text(read_input(f.string()));
            SuiteLine line = run_suite_on(s, f.filename().string(), g);
            if (line.status == "FAIL") all_pass = false;
            if (as_json) {
                out["lines"].push_back(
                    {{"suite", s}, {"file", line.file}, {"status", line.status},
                     {"detail", line.detail}});
            } else {
                std::cout << "[" << line.status << "] " << s << " " << line.file
                          << (line.detail.empty() ? "" : ": " + line.detail) << "\n";
            }
        }
    if (as_json) std::cout << out.dump(2) << "\n";
    return all_pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reslab: resonance graphs, resonant sets and daisy cubes"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough();  // let --json appear after the subcommand
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    // generate
    auto* cmd_gen = app.add_subcommand("generate", "emit a named graph as JSON");
    std::string family, turns, out_path;
    std::vector<int> params;
    cmd_gen->add_option("family", family,
                        "hexagon|naphthalene|fibonaccene|hexchain|coronene|coronene-arc|"
                        "bridged-hexpair|hexagon-tail|gear|path|cycle|star|bistar|s3|s4|s3pqr")
        ->required();
    cmd_gen->add_option("params", params, "integer parameters");
    cmd_gen->add_option("--turns", turns, "turn string over {L,R,S} for hexchain");
    cmd_gen->add_option("-o,--output", out_path, "output file (default stdout)");

    // check
    auto* cmd_check = app.add_subcommand("check", "run a single predicate on a graph");
    std::string check_file;
    cmd_check->add_option("file", check_file, "graph JSON ('-' for stdin)")->required();
    std::map<std::string, bool> check_flags;
    for (const char* name :
         {"elementary", "weakly-elementary", "p2c", "forcing-outer", "daisy", "median"}) {
        check_flags[name] = false;
        cmd_check->add_flag("--" + std::string(name), check_flags[name]);
    }

    // resonance
    auto* cmd_res = app.add_subcommand("resonance", "build the resonance graph");
    std::string res_file, res_dot;
    cmd_res->add_option("file", res_file)->required();
    cmd_res->add_option("--dot", res_dot, "also write DOT to this file");

    // resonant-sets
    auto* cmd_rs = app.add_subcommand("resonant-sets", "enumerate resonant sets");
    std::string rs_file;
    cmd_rs->add_option("file", rs_file)->required();

    // mis
    auto* cmd_mis = app.add_subcommand("mis", "maximal independent sets of the graph");
    std::string mis_file;
    cmd_mis->add_option("file", mis_file)->required();

    // classify-tree
    auto* cmd_cls = app.add_subcommand("classify-tree", "classify a tree by its MIS count");
    std::string cls_file;
    cmd_cls->add_option("file", cls_file)->required();

    // verify
    auto* cmd_ver = app.add_subcommand("verify", "run a verification suite over a corpus");
    std::string suite, corpus_dir = "corpus";
    cmd_ver->add_option("suite", suite, "connectivity|product|theorem35|corollary37|corollary46|all")
        ->required();
    cmd_ver->add_option("--corpus", corpus_dir, "corpus directory (default ./corpus)");

    // export-dot
    auto* cmd_dot = app.add_subcommand("export-dot", "DOT with face ids as edge comments");
    std::string dot_file, dot_out;
    cmd_dot->add_option("file", dot_file)->required();
    cmd_dot->add_option("-o,--output", dot_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_gen) {
            json j = generate_graph(family, params, turns);
            write_output(out_path, j.dump(2) + "\n");
            return kExitPass;
        }
        if (*cmd_check) {
            std::vector<std::string> chosen;
            for (const auto& [name, on] : check_flags)
                if (on) chosen.push_back(name);
            require(chosen.size() == 1, errc::bad_parameter, "choose exactly one check flag");
            PlaneGraph g = load_graph(check_file);
            CheckOutcome r = run_check(g, chosen[0]);
            if (as_json) {
                json j = report_header();
                j["check"] = chosen[0];
                j["ok"] = r.ok;
                j["message"] = r.message;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << r.message << "\n";
            }
            return r.ok ? kExitPass : kExitFail;
        }
        if (*cmd_res) {
            PlaneGraph g = load_graph(res_file);
            ResonanceGraph rg = build_resonance_graph(g);
            if (!res_dot.empty()) write_output(res_dot, to_dot(rg));
            json j = report_header();
            j.update(resonance_to_json(rg));
            if (as_json)
                std::cout << j.dump(2) << "\n";
            else
                std::cout << "resonance graph: " << rg.graph.n << " vertices, "
                          << rg.graph.edge_count() << " edges, " << rg.n_faces
                          << " finite faces\n";
            return kExitPass;
        }
        if (*cmd_rs) {
            PlaneGraph g = load_graph(rs_file);
            auto sets = enumerate_resonant_sets(g);
            json j = report_header();
            j["resonant_sets"] = json::array();
            for (const FaceSet& s : sets)
                j["resonant_sets"].push_back({{"faces", s},
                                              {"maximal", is_maximal_resonant(g, s)},
                                              {"canonical", is_canonical_resonant(g, s)}});
            if (as_json) {
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& entry : j["resonant_sets"]) {
                    std::cout << "{";
                    for (std::size_t i = 0; i < entry["faces"].size(); ++i)
                        std::cout << (i ? "," : "") << "s" << entry["faces"][i].get<int>();
                    std::cout << "}" << (entry["maximal"].get<bool>() ? " maximal" : "")
                              << (entry["canonical"].get<bool>() ? " canonical" : "") << "\n";
                }
            }
            return kExitPass;
        }
        if (*cmd_mis) {
            PlaneGraph g = load_graph(mis_file);
            auto mis = enumerate_mis(g.skeleton());
            if (as_json) {
                json j = report_header();
                j["maximal_independent_sets"] = mis;
                std::cout << j.dump(2) << "\n";
            } else {
                for (const IndepSet& s : mis) {
                    for (std::size_t i = 0; i < s.size(); ++i)
                        std::cout << (i ? " " : "") << s[i];
                    std::cout << "\n";
                }
                std::cout << mis.size() << " maximal independent sets\n";
            }
            return kExitPass;
        }
        if (*cmd_cls) {
            PlaneGraph g = load_graph(cls_file);
            Graph t = g.skeleton();
            TreeClass c = classify_tree(t);
            json j;
            j["tree"] = t.n;
            j["class"] = tree_class_name(c.tag);
            j["params"] = c.params;
            j["mis_predicted"] = c.predicted_mis;
            j["mis_actual"] = static_cast<long>(enumerate_mis(t).size());
            std::cout << j.dump() << "\n";
            return j["mis_predicted"] == j["mis_actual"] ? kExitPass : kExitFail;
        }
        if (*cmd_ver) return cmd_verify(suite, corpus_dir, as_json);
        if (*cmd_dot) {
            PlaneGraph g = load_graph(dot_file);
            write_output(dot_out, to_dot(g));
            return kExitPass;
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case errc::bad_input:
            case errc::bad_rotation:
            case errc::not_bipartite:
            case errc::non_planar_embedding:
            case errc::bad_parameter:
            case errc::invalid_chain_spec:
                return kExitInput;
            default:
                return kExitFail;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
