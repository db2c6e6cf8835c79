#ifndef ISOELL_INVARIANTS_HPP
#define ISOELL_INVARIANTS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "isoell/groupscheme.hpp"

namespace isoell {

/// One non-free orbit of the G-action on the curve X: the order of the
/// (cyclic) stabilizer and, for diagonalizable G, the weight whose
/// restriction generates the stabilizer's character group.
struct OrbitDatum {
    u64 stab_order = 0;
    std::optional<Character> weight;
    std::string label;
};

enum class EType { ordinary, supersingular };

enum class XHint {
    unknown,
    rational_smooth,
    rational_cuspidal,
    elliptic_translations,
    elliptic_other,
    higher,
};

std::string x_hint_str(XHint h);
std::string e_type_str(EType e);

/// Full combinatorial description of a contracted-product surface
/// S = E x^G X fibered over Y = X/G.
struct SurfaceData {
    u32 p = 0;
    GroupSchemeDesc group;
    u64 base_genus = 0;  // g(Y)
    std::vector<OrbitDatum> orbits;
    EType e_type = EType::ordinary;
    XHint x_hint = XHint::unknown;
    u64 hom_rank = 0;  // rank of Hom_gp(Alb(X), E), supplied by the caller
};

/// Structural checks: prime, orbit stabilizer orders dividing |G| and >= 2,
/// weights present and generating for diagonalizable G, at least two orbits
/// for an infinitesimal group over a genus-0 base, hom_rank = 0 for rational
/// X hints. Throws InconsistentData / InvalidWeight with a narrative message.
void validate(const SurfaceData& d);

enum class Kappa { minus_infinity, zero, one };
std::string kappa_str(Kappa k);

/// deg omega_X = (2 g(Y) - 2) |G| + sum over orbits of (|G| - |G|/n).
/// Diagonalizable groups only; constant wild actions go through
/// hurwitz_wild instead.
long long dualizing_degree(const SurfaceData& d);

/// p_a = deg/2 + 1; an odd degree cannot come from consistent orbit data.
long long arithmetic_genus(long long deg_omega);

Kappa kodaira_dimension(const SurfaceData& d);

std::array<long long, 5> betti_numbers(u64 base_genus);

struct ChiIrregularity {
    long long chi = 0;
    long long q = 0;
    long long h0_omega = 0;
    bool pic_reduced = true;
};

/// (0, g(Y)+1, g(Y), reduced) for diagonalizable G.
ChiIrregularity chi_and_irregularity(const SurfaceData& d);

/// dim H^0(omega_X)_lambda: g(Y) for the zero weight, otherwise
/// g(Y) - 1 + sum over orbits of (1 - m/n) with m = m_of(lambda, nu, n).
/// Must come out a non-negative integer; anything else means the weights do
/// not describe a genuine equivariantly-normal curve.
long long weight_space_dim(const Character& lambda, const SurfaceData& d);

struct FiberInfo {
    u64 multiplicity = 0;
    bool tame = true;
    std::string pic0 = "E";
};

/// One entry per orbit; multiplicity n(x), always tame, Pic^0 = E.
std::vector<FiberInfo> fiber_multiplicities(const SurfaceData& d);

long long picard_rank(const SurfaceData& d);

/// Sufficient condition for kappa = 1 when G is infinitesimal diagonalizable
/// mu_{p^r}: base genus >= 2; or genus 1 with a multiple fiber; or P^1 with
/// enough multiple fibers (5, or 4 when p >= 3, or 3 when p >= 5).
bool kappa_one_sufficient(u64 base_genus, u64 fiber_count, u32 p, unsigned r);

/// The P^1-branch lower bound p^{r-1} (p (N - 2) - N) on deg omega_X.
long long kappa_one_p1_bound(u64 fiber_count, u32 p, unsigned r);

struct Classification {
    std::string class_row;  // table row label
    std::string x_class;    // description of X
    std::string aut0;
    std::vector<std::string> flags;
};

Classification classify(const SurfaceData& d);

/// The full record: Hurwitz degree, genus, Kodaira class, Betti vector,
/// chi/irregularity, Picard rank, fibers and the classification row.
struct InvariantReport {
    long long deg_omega = 0;
    long long p_a = 0;
    Kappa kappa = Kappa::zero;
    std::array<long long, 5> betti{};
    long long euler = 0;
    std::optional<ChiIrregularity> chi_q;  // empty when G is not diagonalizable
    long long h0_omega = 0;
    long long rho = 0;
    std::vector<FiberInfo> fibers;
    u64 base_genus = 0;
    std::string class_row;
    std::string x_class;
    std::string aut0;
    std::vector<std::string> flags;
};

InvariantReport compute_report(const SurfaceData& d);

}  // namespace isoell

#endif
