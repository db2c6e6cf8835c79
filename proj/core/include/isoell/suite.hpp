#ifndef ISOELL_SUITE_HPP
#define ISOELL_SUITE_HPP

#include <string>
#include <vector>

#include "isoell/invariants.hpp"
#include "isoell/rng.hpp"

namespace isoell {

struct SuiteConfig {
    u64 seed = 0;
    u64 q_max_fixed_points = 8;
    u64 q_max_singular = 125;
    std::string golden_dir;  // empty: no golden comparisons possible -> those checks fail
};

struct CheckResult {
    bool pass = true;
    std::vector<std::string> details;

    void require(bool ok, const std::string& what);
    void note(const std::string& what) { details.push_back("     " + what); }
};

/// Named verification checks, also exposed through the CLI.
CheckResult verify_e2_law();
CheckResult verify_embed_ordinary();
CheckResult verify_embed_supersingular();
CheckResult verify_fixed_points(u64 q_max);
CheckResult verify_calcoli_families(u64 seed, unsigned samples_per_prime);

/// Random but realizable classification input: diagonalizable group of order
/// <= 25 over p in {2, 3, 5}, base genus <= 3, at most six orbits carrying
/// weights whose spaces all come out non-negative integers.
SurfaceData random_diagonalizable_surface(Rng& rng);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::vector<std::string> details;
};

constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, const SuiteConfig& cfg);
std::vector<CriterionResult> run_all_criteria(const SuiteConfig& cfg);

/// Scoreboard: seed header, one PASS/FAIL line per criterion, summary line.
std::string format_scoreboard(const std::vector<CriterionResult>& results,
                              const SuiteConfig& cfg, bool verbose);

/// Line-by-line comparison used for golden files; returns an empty string on
/// match and a diff otherwise.
std::string golden_diff(const std::string& expected, const std::string& actual);

}  // namespace isoell

#endif
