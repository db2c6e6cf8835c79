#include "isoell/cli.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "isoell/families.hpp"
#include "isoell/ramification.hpp"
#include "isoell/report_io.hpp"
#include "isoell/suite.hpp"

namespace isoell {

using nlohmann::json;

namespace {

std::string load_input(const RunConfig& cfg) {
    if (!cfg.input_path.empty() && cfg.input_path != "-") {
        std::ifstream in(cfg.input_path, std::ios::binary);
        if (!in) throw Error("cannot open " + cfg.input_path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return cfg.inline_json;
}

RunResult run_classify(const RunConfig& cfg) {
    RunResult res;
    SurfaceData d;
    try {
        d = parse_surface_json(load_input(cfg));
    } catch (const InconsistentData& e) {
        // well-formed JSON describing an impossible surface
        res.exit_code = 2;
        res.err = std::string("inconsistent data: ") + e.what() + "\n";
        return res;
    } catch (const InvalidWeight& e) {
        res.exit_code = 2;
        res.err = std::string("inconsistent data: ") + e.what() + "\n";
        return res;
    } catch (const Error& e) {
        res.exit_code = 1;
        res.err = std::string("input error: ") + e.what() + "\n";
        return res;
    }
    try {
        InvariantReport rep = compute_report(d);
        res.out = cfg.format == OutputFormat::json ? report_to_json(rep) + "\n"
                                                   : report_to_table(rep);
    } catch (const InconsistentData& e) {
        res.exit_code = 2;
        res.err = std::string("inconsistent data: ") + e.what() + "\n";
    } catch (const NotSupported& e) {
        res.exit_code = 2;
        res.err = std::string("not supported: ") + e.what() + "\n";
    }
    return res;
}

RunResult run_verify(const RunConfig& cfg) {
    RunResult res;
    CheckResult check;
    u64 q_max = cfg.q_max ? cfg.q_max : 8;
    if (cfg.check_name == "e2_law")
        check = verify_e2_law();
    else if (cfg.check_name == "embed_ordinary")
        check = verify_embed_ordinary();
    else if (cfg.check_name == "embed_supersingular")
        check = verify_embed_supersingular();
    else if (cfg.check_name == "fixed_points")
        check = verify_fixed_points(q_max);
    else if (cfg.check_name == "calcoli")
        check = verify_calcoli_families(cfg.seed, 25);
    else {
        res.exit_code = 1;
        res.err = "unknown check \"" + cfg.check_name +
                  "\" (expected e2_law, embed_ordinary, embed_supersingular, fixed_points or "
                  "calcoli)\n";
        return res;
    }
    std::ostringstream os;
    os << (check.pass ? "PASS" : "FAIL") << " " << cfg.check_name << "\n";
    for (const std::string& d : check.details) os << d << "\n";
    res.out = os.str();
    res.exit_code = check.pass ? 0 : 1;
    return res;
}

RunResult run_ramify(const RunConfig& cfg) {
    RunResult res;
    json j;
    try {
        j = json::parse(load_input(cfg));
    } catch (const json::exception& e) {
        res.exit_code = 1;
        res.err = std::string("input error: ") + e.what() + "\n";
        return res;
    }
    try {
        if (!j.is_object()) throw Error("ramify input must be a JSON object");
        for (auto it = j.begin(); it != j.end(); ++it) {
            std::string k = it.key();
            if (k != "p" && k != "order" && k != "stab" && k != "series" && k != "gY" &&
                k != "points")
                throw Error("unknown field \"" + k + "\" in ramify input");
        }
        u32 p = j.at("p").get<u32>();
        u64 order = j.at("order").get<u64>();

        struct PointInput {
            u64 stab;
            std::vector<std::vector<i64>> series;
        };
        std::vector<PointInput> points;
        if (j.contains("points")) {
            for (const json& pt : j.at("points"))
                points.push_back({pt.at("stab").get<u64>(),
                                  pt.at("series").get<std::vector<std::vector<i64>>>()});
        } else {
            points.push_back({j.at("stab").get<u64>(),
                              j.at("series").get<std::vector<std::vector<i64>>>()});
        }

        std::ostringstream os;
        std::vector<long long> artin_terms;
        for (size_t pi = 0; pi < points.size(); ++pi) {
            const PointInput& pt = points[pi];
            if (pt.series.empty()) throw Error("each point needs at least a generator series");
            LocalAction act =
                LocalAction::from_polynomial(p, order, pt.stab, pt.series.front(), cfg.precision);
            os << "point " << pi << " (stabilizer order " << pt.stab << "):\n";
            for (u64 g = 1; g < pt.stab; ++g)
                os << "  i(g^" << g << ") = " << local_valuation_jump(act, g) << "\n";
            long long a = artin_term(act);
            artin_terms.push_back(a);
            os << "  a(x) = " << a << "\n";
        }
        if (j.contains("gY")) {
            u64 gy = j.at("gY").get<u64>();
            os << "deg omega_X = " << hurwitz_wild(order, gy, artin_terms) << "\n";
        }
        res.out = os.str();
    } catch (const json::exception& e) {
        res.exit_code = 1;
        res.err = std::string("input error: ") + e.what() + "\n";
    } catch (const PrecisionExhausted& e) {
        res.exit_code = 2;
        res.err = std::string("precision exhausted: ") + e.what() + "\n";
    } catch (const Error& e) {
        res.exit_code = 1;
        res.err = std::string("error: ") + e.what() + "\n";
    }
    return res;
}

RunResult run_example(const RunConfig& cfg) {
    RunResult res;
    try {
        SurfaceData d;
        if (cfg.example_kind == "plane") {
            PlaneCurveFamily fam;
            if (!cfg.example_coeffs.empty()) {
                unsigned deg = static_cast<unsigned>(cfg.example_coeffs.size()) - 1;
                MultiPoly f(cfg.example_p, {"x", "y"});
                for (unsigned i = 0; i <= deg; ++i) {
                    FpElt c = FpElt::from_int(cfg.example_coeffs[i], cfg.example_p);
                    if (!c.is_zero()) f.set_term({deg - i, i}, c);
                }
                fam = make_plane_family(cfg.example_p, cfg.example_r, f, cfg.example_s);
            } else {
                fam = plane_family_from_roots(cfg.example_p, cfg.example_r, cfg.example_roots,
                                              cfg.example_root_at_infinity, cfg.example_s);
            }
            d = plane_family_to_surface(fam);
        } else if (cfg.example_kind == "space") {
            ExtFieldPtr F = ExtField::make(cfg.example_p, cfg.example_ext_degree);
            std::vector<FqElt> a;
            for (u64 idx : cfg.example_a) a.push_back(F->element(idx));
            SpaceCurveFamily fam = make_space_family(cfg.example_p, cfg.example_n, F, a);
            if (!verify_calcoli(fam))
                throw InvalidFamily("singular-point identities fail for this family");
            d = space_family_to_surface(fam);
        } else {
            res.exit_code = 1;
            res.err = "unknown example kind \"" + cfg.example_kind +
                      "\" (expected plane or space)\n";
            return res;
        }
        res.out = surface_to_json(d) + "\n";
        if (cfg.example_classify) res.out += "\n" + report_to_table(compute_report(d));
    } catch (const InvalidFamily& e) {
        res.exit_code = 2;
        res.err = std::string("invalid family: ") + e.what() + "\n";
    } catch (const Error& e) {
        res.exit_code = 1;
        res.err = std::string("error: ") + e.what() + "\n";
    }
    return res;
}

RunResult run_suite(const RunConfig& cfg) {
    RunResult res;
    SuiteConfig sc;
    sc.seed = cfg.seed;
    if (cfg.q_max) {
        sc.q_max_fixed_points = std::min<u64>(cfg.q_max, 64);
        // the singular scan needs at least the family's coefficient field
        sc.q_max_singular = std::max<u64>(cfg.q_max, sc.q_max_singular);
    }
    sc.golden_dir = cfg.golden_dir;
    auto results = run_all_criteria(sc);
    res.out = format_scoreboard(results, sc, cfg.verbose);
    for (const CriterionResult& c : results)
        if (!c.pass) res.exit_code = 1;
    return res;
}

}  // namespace

RunResult run_command(const RunConfig& cfg) {
    switch (cfg.cmd) {
        case Subcommand::classify: return run_classify(cfg);
        case Subcommand::verify: return run_verify(cfg);
        case Subcommand::ramify: return run_ramify(cfg);
        case Subcommand::example: return run_example(cfg);
        case Subcommand::suite: return run_suite(cfg);
    }
    return RunResult{1, "", "unknown subcommand\n"};
}

}  // namespace isoell
