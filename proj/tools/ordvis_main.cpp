// ordvis: command-line front end. Every command prints one JSON document
// (or a graph/polygon in text form for `gen` and `visgraph`).
//
// Exit codes: 0 ok, 1 a requested property fails, 2 bad input or usage,
// 3 precondition violated (witness attached), 4 internal invariant broken.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ordvis/capped_chroma.hpp"
#include "ordvis/capped_partition.hpp"
#include "ordvis/crossing_reach.hpp"
#include "ordvis/error.hpp"
#include "ordvis/geometry.hpp"
#include "ordvis/json_io.hpp"
#include "ordvis/obstructions.hpp"
#include "ordvis/oracles.hpp"

namespace {

using namespace ordvis;

enum Exit { kOk = 0, kPropertyFails = 1, kInputError = 2, kPrecondition = 3, kInternal = 4 };

struct Outcome {
    int code = kOk;
    Json body;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

OrderedGraph load_graph(const std::string& path) { return parse_graph_string(slurp(path)).graph; }

Json load_json(const std::string& path) {
    try {
        return Json::parse(slurp(path));
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

// Runs `body`, translating the library's exceptions into exit codes.
template <class F>
Outcome guarded(F&& body) {
    try {
        return body();
    } catch (const NotHFreeError& e) {
        return {kPrecondition, Json{{"error", "precondition"},
                                    {"message", e.what()},
                                    {"kind", "h_obstruction"},
                                    {"witness", to_json(e.witness())}}};
    } catch (const NotCappedError& e) {
        return {kPrecondition, Json{{"error", "precondition"},
                                    {"message", e.what()},
                                    {"kind", "capped_violation"},
                                    {"witness", to_json(e.witness())}}};
    } catch (const PreconditionError& e) {
        return {kPrecondition, Json{{"error", "precondition"}, {"message", e.what()}}};
    } catch (const GuardExceeded& e) {
        return {kInputError, Json{{"error", "guard_exceeded"}, {"message", e.what()}}};
    } catch (const InputError& e) {
        return {kInputError, Json{{"error", "input"}, {"message", e.what()}}};
    } catch (const InternalContradiction& e) {
        return {kInternal, Json{{"error", "internal"}, {"message", e.what()}}};
    }
}

// Applies `one` to every input; several inputs give a JSON array in input
// order and the largest exit code.
template <class F>
Outcome over_inputs(const std::vector<std::string>& inputs, int jobs, F one) {
    if (inputs.size() == 1) {
        return guarded([&] { return one(inputs[0]); });
    }
    if (std::count(inputs.begin(), inputs.end(), "-") > 0) {
        return {kInputError, Json{{"error", "input"},
                                  {"message", "stdin cannot be combined with other inputs"}}};
    }
    std::vector<Outcome> results(inputs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < inputs.size(); i = next++) {
            results[i] = guarded([&] { return one(inputs[i]); });
        }
    };
    const int threads = std::clamp(jobs, 1, static_cast<int>(inputs.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& th : pool) {
        th.join();
    }
    Outcome all{kOk, Json::array()};
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        Json entry{{"input", inputs[i]}, {"exit", results[i].code}, {"result", results[i].body}};
        all.body.push_back(entry);
        all.code = std::max(all.code, results[i].code);
    }
    return all;
}

Json colouring_check(const OrderedGraph& g, const ColouringResult& r, bool verify) {
    Json out = to_json(r);
    if (verify) {
        const auto check = oracle::verify_colouring(g, r.colours);
        out["proper"] = check.proper && check.num_colours == r.num_colours;
        out["within_bound"] = static_cast<std::uint64_t>(r.num_colours) <= r.bound;
    } else {
        out["verified"] = false;
    }
    return out;
}

bool certified(const Json& j) {
    return !j.contains("proper") || (j["proper"].get<bool>() && j["within_bound"].get<bool>());
}

struct Requirements {
    bool h_free = false;
    bool hole_free = false;
    bool capped = false;
};

Requirements parse_requirements(const std::vector<std::string>& names) {
    Requirements req;
    for (const auto& name : names) {
        if (name == "h_free") {
            req.h_free = true;
        } else if (name == "hole_free" || name == "ordered_hole_free") {
            req.hole_free = true;
        } else if (name == "capped") {
            req.capped = true;
        } else {
            throw InputError("unknown property '" + name + "' (expected h_free, hole_free, capped)");
        }
    }
    return req;
}

Outcome check_graph(const OrderedGraph& g, const Requirements& req) {
    Json out;
    const auto h = find_h_obstruction(g);
    const auto hole = find_ordered_hole(g);
    const auto cv = find_capped_violation(g);
    out["n"] = g.num_vertices();
    out["m"] = g.num_edges();
    out["h_free"] = !h;
    out["ordered_hole_free"] = !hole;
    out["capped"] = !cv;
    Json witnesses = Json::object();
    if (h) {
        witnesses["h_obstruction"] = to_json(*h);
    }
    if (hole) {
        witnesses["ordered_hole"] = to_json(*hole);
    }
    if (cv) {
        witnesses["capped_violation"] = to_json(*cv);
    }
    out["witnesses"] = witnesses;
    const bool ok = (!req.h_free || !h) && (!req.hole_free || !hole) && (!req.capped || !cv);
    return {ok ? kOk : kPropertyFails, out};
}

Outcome verify_file(const std::string& graph_path, const std::string& colours_path) {
    return guarded([&]() -> Outcome {
        const OrderedGraph g = load_graph(graph_path);
        const auto colours = colours_from_json(load_json(colours_path));
        const auto check = oracle::verify_colouring(g, colours);
        return {check.proper ? kOk : kPropertyFails,
                Json{{"proper", check.proper}, {"num_colours", check.num_colours}}};
    });
}

void emit(const Json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ordered-graph obstructions, capped partitions and visibility-graph colourings"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    bool no_verify = false;
    int jobs = 1;
    app.add_flag("--pretty", pretty, "Indent JSON output");
    app.add_option("--jobs", jobs, "Worker threads when several inputs are given")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> inputs;
    std::string single;
    std::string second;

    auto* check = app.add_subcommand("check", "Test H-freeness, ordered-hole-freeness and cappedness");
    std::vector<std::string> require{"h_free", "hole_free"};
    check->add_option("inputs", inputs, "Graph files (.og) or - for stdin")->required();
    check->add_option("--require", require, "Properties that decide the exit code")
        ->delimiter(',');

    auto* clique = app.add_subcommand("clique", "Clique number of an H-free graph");
    clique->add_option("inputs", inputs, "Graph files or -")->required();

    auto* color = app.add_subcommand("color", "Colour a capped or H-free graph within the proven bound");
    std::string mode = "hfree";
    color->add_option("inputs", inputs, "Graph files or -")->required();
    color->add_option("--mode", mode, "capped or hfree")->check(CLI::IsMember({"capped", "hfree"}));
    color->add_flag("--no-verify", no_verify, "Skip the independent verification");

    auto* partition = app.add_subcommand("partition", "Split an H-free graph into three capped graphs");
    partition->add_option("inputs", inputs, "Graph files or -")->required();
    partition->add_flag("--no-verify", no_verify, "Skip the independent verification");

    auto* gen = app.add_subcommand("gen", "Generate instances");
    gen->require_subcommand(1);
    auto* gen_polygon = gen->add_subcommand("polygon", "Random simple polygon (.poly on stdout)");
    int gen_n = 10;
    std::uint64_t gen_seed = 0;
    std::int64_t gen_span = 1000;
    gen_polygon->add_option("--n", gen_n, "Vertex count")->required();
    gen_polygon->add_option("--seed", gen_seed, "Seed");
    gen_polygon->add_option("--span", gen_span, "Coordinates lie in [0, span]");

    auto* visgraph = app.add_subcommand("visgraph", "Visibility graph of a polygon (.og on stdout)");
    visgraph->add_option("input", single, "Polygon file (.poly) or -")->required();

    auto* verify = app.add_subcommand("verify", "Check a colouring against a graph");
    verify->add_option("graph", single, "Graph file or -")->required();
    verify->add_option("colours", second, "JSON colouring file")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference computations");
    oracle_cmd->require_subcommand(1);
    oracle::Guards guards;
    auto add_guards = [&](CLI::App* sub) {
        sub->add_option("--max-vertices", guards.clique_max_vertices, "Clique oracle vertex guard");
    };
    auto* o_clique = oracle_cmd->add_subcommand("clique", "Exact clique number");
    o_clique->add_option("input", single)->required();
    add_guards(o_clique);
    auto* o_chromatic = oracle_cmd->add_subcommand("chromatic", "Exact chromatic number");
    o_chromatic->add_option("input", single)->required();
    auto* o_capped = oracle_cmd->add_subcommand("capped", "Quadruple scan for a missing cap");
    o_capped->add_option("input", single)->required();
    auto* o_holes = oracle_cmd->add_subcommand("holes", "Subset scan for an ordered hole");
    o_holes->add_option("input", single)->required();
    auto* o_xseq = oracle_cmd->add_subcommand("xseq", "Crossing sequence by exhaustive search");
    Vertex from = 0;
    Vertex to = 0;
    o_xseq->add_option("input", single)->required();
    o_xseq->add_option("--from", from)->required();
    o_xseq->add_option("--to", to)->required();
    auto* o_verify = oracle_cmd->add_subcommand("verify", "Check a colouring against a graph");
    o_verify->add_option("graph", single)->required();
    o_verify->add_option("colours", second)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit(Json{{"error", "usage"}, {"message", e.what()}}, pretty);
        return kInputError;
    }

    Outcome result;
    if (*check) {
        Requirements req;
        try {
            req = parse_requirements(require);
        } catch (const InputError& e) {
            emit(Json{{"error", "input"}, {"message", e.what()}}, pretty);
            return kInputError;
        }
        result = over_inputs(inputs, jobs, [&](const std::string& path) {
            return check_graph(load_graph(path), req);
        });
    } else if (*clique) {
        result = over_inputs(inputs, jobs, [&](const std::string& path) {
            const int omega = clique_number_hfree(load_graph(path));
            return Outcome{kOk, Json{{"omega", omega}, {"method", "decomposition"}}};
        });
    } else if (*color) {
        result = over_inputs(inputs, jobs, [&](const std::string& path) {
            const OrderedGraph g = load_graph(path);
            const ColouringResult r = mode == "capped" ? colour_capped(g) : colour_hfree(g);
            Json out = colouring_check(g, r, !no_verify);
            return Outcome{certified(out) ? kOk : kInternal, out};
        });
    } else if (*partition) {
        result = over_inputs(inputs, jobs, [&](const std::string& path) {
            const OrderedGraph g = load_graph(path);
            const CappedPartition p = partition_three_capped(g);
            Json out = to_json(p);
            if (no_verify) {
                out["verified"] = false;
                return Outcome{kOk, out};
            }
            bool all_capped = true;
            for (const auto& part : p.parts) {
                all_capped = all_capped && !find_capped_violation(induced(g, part).graph);
            }
            out["capped_certificates"] = all_capped;
            return Outcome{all_capped ? kOk : kInternal, out};
        });
    } else if (*gen) {
        result = guarded([&]() -> Outcome {
            std::cout << geom::serialize_polygon(geom::random_simple_polygon(gen_n, gen_seed, gen_span));
            return {kOk, nullptr};
        });
    } else if (*visgraph) {
        result = guarded([&]() -> Outcome {
            std::cout << serialize_graph(geom::visibility_graph(geom::parse_polygon_string(slurp(single))));
            return {kOk, nullptr};
        });
    } else if (*verify) {
        result = verify_file(single, second);
    } else if (*o_clique) {
        result = guarded([&]() -> Outcome {
            const int omega = oracle::bf_clique(load_graph(single), guards);
            return {kOk, Json{{"omega", omega}, {"method", "brute_force"}}};
        });
    } else if (*o_chromatic) {
        result = guarded([&]() -> Outcome {
            return {kOk, Json{{"chi", oracle::bf_chromatic(load_graph(single), guards)}}};
        });
    } else if (*o_capped) {
        result = guarded([&]() -> Outcome {
            const auto w = oracle::bf_capped(load_graph(single), guards);
            Json out{{"capped", !w}};
            if (w) {
                out["witness"] = *w;
            }
            return {w ? kPropertyFails : kOk, out};
        });
    } else if (*o_holes) {
        result = guarded([&]() -> Outcome {
            const auto w = oracle::bf_holes(load_graph(single), guards);
            Json out{{"ordered_hole_free", !w}};
            if (w) {
                out["witness"] = *w;
            }
            return {w ? kPropertyFails : kOk, out};
        });
    } else if (*o_xseq) {
        result = guarded([&]() -> Outcome {
            const bool found = oracle::bf_crossing_sequence(load_graph(single), from, to, guards);
            return {found ? kOk : kPropertyFails,
                    Json{{"from", from}, {"to", to}, {"crossing_sequence", found}}};
        });
    } else if (*o_verify) {
        result = verify_file(single, second);
    }

    if (!result.body.is_null()) {
        emit(result.body, pretty);
    }
    return result.code;
}
