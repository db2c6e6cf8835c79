#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "isoell/cli.hpp"

#ifndef ISOELL_DEFAULT_GOLDEN_DIR
#define ISOELL_DEFAULT_GOLDEN_DIR ""
#endif

int main(int argc, char** argv) {
    CLI::App app{"isoell: invariants and classification of isotrivial elliptic surfaces "
                 "from orbit data, with exact verification of the underlying group-scheme "
                 "constructions"};
    app.require_subcommand(1);

    isoell::RunConfig cfg;
    std::string format = "table";

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("-i,--input", cfg.input_path, "input file (\"-\" for stdin)");
        sub->add_option("--json", cfg.inline_json, "inline JSON input");
        sub->add_option("-f,--format", format, "output format: table or json")
            ->check(CLI::IsMember({"table", "json"}));
    };

    CLI::App* classify = app.add_subcommand("classify", "compute the invariant report for a "
                                                        "surface description");
    add_io(classify);

    CLI::App* verify = app.add_subcommand("verify", "run one named verification check");
    verify->add_option("check", cfg.check_name,
                       "e2_law | embed_ordinary | embed_supersingular | fixed_points | calcoli")
        ->required();
    verify->add_option("--q-max", cfg.q_max, "largest field size for point scans");
    verify->add_option("--seed", cfg.seed, "seed for sampled checks");

    CLI::App* ramify = app.add_subcommand("ramify", "local wild-ramification data from "
                                                    "uniformizer series");
    add_io(ramify);
    ramify->add_option("-N,--precision", cfg.precision, "working series precision");

    CLI::App* example = app.add_subcommand("example", "build surface data from a curve family");
    CLI::App* plane = example->add_subcommand("plane", "z^{p^r} = f(x,y) with mu_{p^s} acting");
    plane->add_option("--p", cfg.example_p, "characteristic")->required();
    plane->add_option("--r", cfg.example_r, "z-degree exponent (degree p^r)")->required();
    unsigned s_opt = 0;
    CLI::Option* s_flag = plane->add_option("--s", s_opt, "acting subgroup exponent (default r)");
    plane->add_option("--roots", cfg.example_roots, "roots of f in F_p (comma separated)")
        ->delimiter(',');
    plane->add_flag("--root-at-infinity", cfg.example_root_at_infinity,
                    "include the root [1:0]");
    plane->add_option("--coeffs", cfg.example_coeffs,
                      "binary-form coefficients c_0..c_d of f = sum c_i x^{d-i} y^i "
                      "(alternative to --roots)")
        ->delimiter(',');
    plane->add_flag("--classify", cfg.example_classify, "also print the invariant report");

    CLI::App* space = example->add_subcommand("space", "w^{p^n} = z h(x,z) + y^{p^n} over the "
                                                       "cubic y^2 z = x(x+z)(x-z)");
    space->add_option("--p", cfg.example_p, "characteristic (>= 5)")->required();
    space->add_option("--n", cfg.example_n, "exponent (group mu_{p^n})")->required();
    space->add_option("--ext-degree", cfg.example_ext_degree,
                      "degree k of the coefficient field F_{p^k} (default 2)");
    space->add_option("--a", cfg.example_a,
                      "coefficients a_i as indices in F_{p^k}: sum c_j p^j encodes "
                      "sum c_j g^j")
        ->delimiter(',')
        ->required();
    space->add_flag("--classify", cfg.example_classify, "also print the invariant report");
    example->require_subcommand(1);

    CLI::App* suite = app.add_subcommand("suite", "run the acceptance scoreboard");
    suite->add_option("--seed", cfg.seed, "seed for sampled checks (default 0)");
    suite->add_option("--q-max", cfg.q_max, "largest field size for point scans");
    suite->add_option("--golden-dir", cfg.golden_dir, "directory with golden files");
    suite->add_flag("-v,--verbose", cfg.verbose, "print detail lines for passing criteria");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    cfg.format = format == "json" ? isoell::OutputFormat::json : isoell::OutputFormat::table;
    if (classify->parsed()) cfg.cmd = isoell::Subcommand::classify;
    if (verify->parsed()) cfg.cmd = isoell::Subcommand::verify;
    if (ramify->parsed()) cfg.cmd = isoell::Subcommand::ramify;
    if (example->parsed()) {
        cfg.cmd = isoell::Subcommand::example;
        cfg.example_kind = plane->parsed() ? "plane" : "space";
        if (s_flag->count()) cfg.example_s = s_opt;
    }
    if (suite->parsed()) {
        cfg.cmd = isoell::Subcommand::suite;
        if (cfg.golden_dir.empty()) cfg.golden_dir = ISOELL_DEFAULT_GOLDEN_DIR;
    }

    // read stdin when asked
    if (cfg.input_path == "-") {
        std::string all, line;
        while (std::getline(std::cin, line)) all += line + "\n";
        cfg.inline_json = all;
        cfg.input_path.clear();
    }

    isoell::RunResult res;
    try {
        res = isoell::run_command(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (!res.out.empty()) std::cout << res.out;
    if (!res.err.empty()) std::cerr << res.err;
    return res.exit_code;
}
