// strata: stratification, coordinate chain complex, circuit matroid and taut
// homeomorphism invariant of simplicial complexes.
//
// Exit codes: 0 success, 1 parse or I/O error, 2 unsupported input (dimension,
// cap, not taut), 3 internal consistency failure.

#include "strata/io.hpp"
#include "strata/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using strata::json;

struct Common {
    std::string out;
    std::string format = "json";
    std::size_t max_ground = strata::kDefaultGroundCap;
    std::vector<std::string> builtins;
    bool timing = false;
};

// Inputs come from positional paths first, then --builtin names.
std::vector<strata::SimplicialComplex> load_inputs(const std::vector<std::string>& paths,
                                                   const std::vector<std::string>& builtins) {
    std::vector<strata::SimplicialComplex> out;
    for (const auto& p : paths) out.push_back(strata::load_complex(p));
    for (const auto& b : builtins) {
        try {
            out.push_back(strata::builtin_complex(b));
        } catch (const strata::ArgumentError& e) {
            throw strata::ParseError(e.what());
        }
    }
    return out;
}

void emit(const json& report, const Common& opts) {
    const std::string text =
        opts.format == "text" ? strata::render_text(report) : report.dump(2) + "\n";
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opts.out);
    if (!f) throw strata::ParseError("cannot write " + opts.out);
    f << text;
}

void add_common(CLI::App* cmd, Common& opts) {
    cmd->add_option("--out", opts.out, "Write the report to FILE instead of stdout");
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--max-ground", opts.max_ground,
                    "Largest ground set for circuit enumeration and reorientation scans");
    cmd->add_option("--builtin", opts.builtins, "Use a built-in triangulation instead of a file");
}

int run_analyze(const std::vector<std::string>& paths, const Common& opts) {
    auto inputs = load_inputs(paths, opts.builtins);
    if (inputs.size() != 1) throw strata::ParseError("analyze takes exactly one input");
    strata::AnalyzeOptions a;
    a.max_ground = opts.max_ground;
    a.timing = opts.timing;
    emit(strata::analyze(inputs[0], a), opts);
    return 0;
}

int run_matroid(const std::vector<std::string>& paths, const Common& opts) {
    auto inputs = load_inputs(paths, opts.builtins);
    if (inputs.size() != 1) throw strata::ParseError("matroid takes exactly one input");
    const auto m = strata::top_cycle_matroid(inputs[0], opts.max_ground);
    json report{{"input", inputs[0].name()}, {"matroid", strata::matroid_report(m)}};
    emit(report, opts);
    return 0;
}

int run_compare(const std::vector<std::string>& paths, const Common& opts) {
    auto inputs = load_inputs(paths, opts.builtins);
    if (inputs.size() != 2) throw strata::ParseError("compare takes exactly two inputs");
    std::vector<strata::TautInvariant> invariants;
    json failures = json::array();
    for (const auto& k : inputs) {
        if (k.dimension() > 2) {
            failures.push_back({{"input", k.name()}, {"error", "dimension > 2"}});
            continue;
        }
        const strata::Stratification strat(k);
        const auto check = strata::check_taut(strat);
        if (!check.taut) {
            failures.push_back({{"input", k.name()},
                                {"error", "not taut"},
                                {"offending", strata::offending_report(check.offending)}});
            continue;
        }
        invariants.push_back(strata::build_invariant(strat, strata::assemble(strat)));
    }
    if (!failures.empty()) {
        emit(json{{"error", "inputs must be taut complexes of dimension <= 2"}, {"inputs", failures}},
             opts);
        return 2;
    }
    const auto result = strata::homeomorphic(invariants[0], invariants[1]);
    json report{{"a", inputs[0].name()}, {"b", inputs[1].name()}, {"homeomorphic", result.homeomorphic}};
    if (result.certificate) report["certificate"] = strata::certificate_report(*result.certificate);
    emit(report, opts);
    return 0;
}

int run_export(const std::string& name, const Common& opts) {
    strata::SimplicialComplex k;
    try {
        k = strata::builtin_complex(name);
    } catch (const strata::ArgumentError& e) {
        throw strata::ParseError(e.what());
    }
    emit(strata::complex_to_json(k), opts);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Manifold-point stratification and taut 2-complex invariants"};
    app.require_subcommand(1);

    Common opts;
    std::vector<std::string> paths;
    std::string export_name;

    auto* analyze = app.add_subcommand("analyze", "Full pipeline report for one complex");
    analyze->add_option("path", paths, "Input JSON file");
    analyze->add_flag("--timing", opts.timing, "Include wall-clock timings (breaks byte-identity)");
    add_common(analyze, opts);

    auto* compare = app.add_subcommand("compare", "Decide homeomorphism of two taut 2-complexes");
    compare->add_option("paths", paths, "Two input JSON files");
    add_common(compare, opts);

    auto* matroid = app.add_subcommand("matroid", "Circuits of the top cycle matroid");
    matroid->add_option("path", paths, "Input JSON file");
    add_common(matroid, opts);

    auto* exporter = app.add_subcommand("export", "Print a built-in triangulation as input JSON");
    exporter->add_option("name", export_name, "Built-in name")->required();
    add_common(exporter, opts);

    auto* list = app.add_subcommand("list", "List built-in triangulations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*analyze) return run_analyze(paths, opts);
        if (*compare) return run_compare(paths, opts);
        if (*matroid) return run_matroid(paths, opts);
        if (*exporter) return run_export(export_name, opts);
        if (*list) {
            for (const auto& n : strata::builtin_names()) std::cout << n << '\n';
            return 0;
        }
    } catch (const strata::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const strata::UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return 2;
    } catch (const strata::NotTautError& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return 2;
    } catch (const strata::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
