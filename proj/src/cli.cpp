#include "boolconv/cli.hpp"

#include "boolconv/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>

namespace boolconv {

namespace {

int depth_cap_from_env() {
    int cap = ClopenSet::kDepthCap;
    if (const char* env = std::getenv("BOOLCONV_DEPTH_CAP")) {
        int v = std::atoi(env);
        if (v >= 1 && v < cap) cap = v;  // downward only
    }
    return cap;
}

OrderedJson load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return OrderedJson::parse(in);
}

void emit(std::ostream& out, const OrderedJson& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact finite-depth workbench for convergence of Boolean-algebra "
                 "homomorphisms"};
    app.require_subcommand(1);
    int depth_cap = depth_cap_from_env();

    int depth = 12;
    unsigned window = 48;
    uint64_t seed = 0;
    std::string format = "json";
    std::string input;
    bool parallel = false;

    auto add_common = [&](CLI::App* cmd, bool with_depth) {
        if (with_depth) cmd->add_option("--depth", depth, "working depth");
        cmd->add_option("--seed", seed, "seed for randomized sweeps");
        cmd->add_option("--format", format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_flag("--parallel", parallel, "allow data-parallel evaluation");
    };

    // converge
    auto* converge = app.add_subcommand("converge", "classify one family");
    std::string family_kind = "flip";
    add_common(converge, true);
    converge->add_option("--window", window, "family index window [0, W)");
    converge->add_option("--family", input, "family descriptor JSON file");
    converge->add_option("--kind", family_kind,
                         "built-in family when no descriptor file is given")
        ->check(CLI::IsMember({"point_eval", "agree_flip", "flip", "restriction",
                               "pair", "constant"}));

    // hamming
    auto* hamming = app.add_subcommand("hamming", "perfect Hamming codes");
    int m = 3;
    bool verify = false;
    hamming->add_option("--m", m, "parity bits, n = 2^m - 1")->required();
    hamming->add_flag("--verify", verify, "run the packing/covering verifier");
    add_common(hamming, false);

    // badset
    auto* badset = app.add_subcommand("badset", "staged flip-escaping bad set");
    std::string target = "1/2";
    int stages = 3;
    bool emit_clopen = false;
    badset->add_option("--target", target, "measure target t in (0,1), as p/q");
    badset->add_option("--stages", stages, "stage count to attempt");
    badset->add_option("--depth-cap", depth_cap, "stage depth cap (<= global cap)");
    badset->add_flag("--emit-clopen", emit_clopen, "serialize the final bad set");
    add_common(badset, false);

    // fence
    auto* fence = app.add_subcommand("fence", "fence-painting solvers");
    std::string fence_mode;
    int tight_n = 4;
    fence->add_option("mode", fence_mode, "solve | approx | tight | oracle")
        ->required()
        ->check(CLI::IsMember({"solve", "approx", "tight", "oracle"}));
    fence->add_option("--input", input, "instance JSON: [{w, f, g}, ...]");
    fence->add_option("--n,--tight-n", tight_n, "tight instance size (even)");
    add_common(fence, false);

    // distinguish
    auto* distinguish_cmd = app.add_subcommand(
        "distinguish", "extract a separating clopen from two point maps");
    int flip_coord = -1;
    distinguish_cmd->add_option("--input", input,
                                "JSON {sourceDepth, targetDepth, phi, psi}");
    distinguish_cmd->add_option("--flip", flip_coord,
                                "demo pair: identity vs flip of this coordinate");
    add_common(distinguish_cmd, true);

    // diagram
    auto* diagram = app.add_subcommand("diagram", "classify all five families");
    add_common(diagram, true);
    diagram->add_option("--window", window, "family index window [0, W)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (depth < 1 || depth > depth_cap)
            throw std::invalid_argument("depth outside [1, cap " +
                                        std::to_string(depth_cap) + "]");
        ClassifyConfig cfg;
        cfg.window = {0, window};
        cfg.seed = seed;

        if (converge->parsed()) {
            HomFamily fam = input.empty()
                                ? HomFamily::from_descriptor(
                                      {{"kind", family_kind},
                                       {"params", OrderedJson::object()},
                                       {"workingDepth", depth}})
                                : HomFamily::from_descriptor(load_json(input));
            if (fam.working_depth > depth_cap)
                throw std::invalid_argument("family depth above cap");
            if (format == "csv") out << convergence_report_csv(fam, cfg);
            else emit(out, convergence_report_json(classify(fam, cfg)));
        } else if (hamming->parsed()) {
            emit(out, hamming_report(m, verify));
        } else if (badset->parsed()) {
            if (badset->count("--depth-cap") && depth_cap > depth_cap_from_env())
                throw std::invalid_argument("depth cap may only be lowered");
            BadSetConstruction c = build_stages(Rational::parse(target), stages, depth_cap);
            emit(out, badset_report(c, emit_clopen));
        } else if (fence->parsed()) {
            if (fence_mode == "tight") {
                emit(out, tight_instance_report(tight_report(tight_n)));
            } else {
                if (input.empty())
                    throw std::invalid_argument("fence " + fence_mode +
                                                " needs --input");
                FenceInstance inst = fence_instance_from_json(load_json(input));
                FenceSolution sol = fence_mode == "solve"    ? solve_exact(inst)
                                    : fence_mode == "approx" ? solve_guarantee(inst)
                                                             : brute_force_oracle(inst);
                emit(out, fence_solution_report(inst, sol));
            }
        } else if (distinguish_cmd->parsed()) {
            MapPair maps;
            if (!input.empty()) {
                maps = map_pair_from_json(load_json(input));
            } else if (flip_coord >= 0) {
                maps.phi = PointMap::identity(depth);
                maps.psi = make_flip(flip_coord, depth);
            } else {
                throw std::invalid_argument("distinguish needs --input or --flip");
            }
            emit(out, distinguish_report(distinguish(maps.phi, maps.psi)));
        } else if (diagram->parsed()) {
            emit(out, diagram_report(depth, cfg));
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const OrderedJson::exception& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace boolconv
