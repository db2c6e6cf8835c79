#ifndef ISOELL_CLI_HPP
#define ISOELL_CLI_HPP

#include <optional>
#include <string>
#include <vector>

#include "isoell/fp.hpp"

namespace isoell {

enum class Subcommand { classify, verify, ramify, example, suite };
enum class OutputFormat { table, json };

struct RunConfig {
    Subcommand cmd = Subcommand::classify;
    OutputFormat format = OutputFormat::table;
    std::string input_path;    // "-" or empty: read inline_json
    std::string inline_json;
    std::string check_name;    // verify
    u64 q_max = 0;             // 0: derive the default (p^3, or 8 for fixed points)
    unsigned precision = 16;
    u64 seed = 0;
    std::string golden_dir;
    bool verbose = false;

    // example subcommand
    std::string example_kind;           // "plane" or "space"
    u32 example_p = 0;
    unsigned example_r = 1;             // plane: z-degree exponent
    std::optional<unsigned> example_s;  // plane: acting subgroup exponent
    unsigned example_n = 1;             // space
    std::vector<i64> example_roots;     // plane roots in F_p
    bool example_root_at_infinity = false;
    std::vector<i64> example_coeffs;    // plane: binary-form coefficients c_0..c_d of
                                        // f = sum c_i x^{d-i} y^i (alternative to roots)
    unsigned example_ext_degree = 2;    // space: coefficient field degree
    std::vector<u64> example_a;         // space: coefficient indices in F_{p^k}
    bool example_classify = false;      // also print the classification
};

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Exit codes: 0 success, 1 parse/usage errors, 2 inconsistent input data.
RunResult run_command(const RunConfig& cfg);

}  // namespace isoell

#endif
