#ifndef ISOELL_FAMILIES_HPP
#define ISOELL_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "isoell/invariants.hpp"
#include "isoell/poly.hpp"

namespace isoell {

/// The plane family X = { z^{p^r} = f(x,y) } in P^2 with mu_{p^s} acting by
/// multiplication on z (s = r unless a smaller subgroup acts, as in the
/// characteristic-2 quartic with mu_2). f is homogeneous of degree p^r in
/// x, y with pairwise distinct roots; the p^r roots are the fixed points.
struct PlaneCurveFamily {
    u32 p = 0;
    unsigned r = 1;
    unsigned s = 1;  // acting subgroup mu_{p^s}, 1 <= s <= r
    MultiPoly f;
};

PlaneCurveFamily make_plane_family(u32 p, unsigned r, const MultiPoly& f,
                                   std::optional<unsigned> s = std::nullopt);

/// Convenience builder: f = prod (x - a y) over the listed roots, times y^e
/// when `root_at_infinity` adds the point [1:0].
PlaneCurveFamily plane_family_from_roots(u32 p, unsigned r, const std::vector<i64>& roots,
                                         bool root_at_infinity = false,
                                         std::optional<unsigned> s = std::nullopt);

SurfaceData plane_family_to_surface(const PlaneCurveFamily& fam,
                                    EType e_type = EType::ordinary, u64 hom_rank = 0);

/// The space family over the elliptic curve Y = { y^2 z = x (x+z) (x-z) }:
///   X = { w^{p^n} = z h(x,z) + y^{p^n} } on Y, with mu_{p^n} scaling w and
///   h(x,z) = prod (a_i x + z) for p^n - 1 distinct a_i outside {0, 1, -1}
///   summing to zero. Requires p >= 5; the a_i live in a small extension
///   of F_p since the prime field is too small to host them all.
struct SpaceCurveFamily {
    u32 p = 0;
    unsigned n = 1;
    ExtFieldPtr F;          // field of the a_i
    std::vector<FqElt> a;   // size p^n - 1
};

SpaceCurveFamily make_space_family(u32 p, unsigned n, const ExtFieldPtr& F,
                                   const std::vector<FqElt>& a);

/// The concrete p = 5, n = 1 family with a = (2, 3, w, -w), w^2 = 2 in F_25.
/// Conjugate-closed, so the curve itself has prime-field coefficients.
SpaceCurveFamily concrete_space_family_p5();

MultiPolyQ space_h(const SpaceCurveFamily& fam);
/// { g, W } = the cubic and the w-equation cutting X out of P^3 (x,y,z,w).
std::vector<MultiPolyQ> space_curve_equations(const SpaceCurveFamily& fam);
/// The base cubic alone, over the family's field.
MultiPolyQ space_base_cubic(const SpaceCurveFamily& fam);

/// The two singular-point identities at (1:0:1:*) and (1:0:-1:*):
///   h_x(1,1) + h(1,1) + h_z(1,1) = 0  and  h_x(1,-1) + h(1,-1) - h_z(1,-1) = 0.
/// Both follow from sum a_i = 0; false signals a bug or a violated constraint.
bool verify_calcoli(const SpaceCurveFamily& fam);

struct SpaceProofChecks {
    FqElt hx_at_01;       // h_x(0,1) = sum a_i: zero exactly for valid families
    FqElt calcoli_first;  // h_x(1,1) + h(1,1) + h_z(1,1)
    FqElt calcoli_second; // h_x(1,-1) + h(1,-1) - h_z(1,-1)
};

/// The targeted symbolic evaluations behind the singular-point analysis,
/// computable even for families that violate the sum-zero constraint
/// (validation is skipped so the failing checks can be observed).
SpaceProofChecks space_proof_checks(u32 p, unsigned n, const ExtFieldPtr& F,
                                    const std::vector<FqElt>& a);

SurfaceData space_family_to_surface(const SpaceCurveFamily& fam, u64 hom_rank = 0);

/// A point of P^N(F_q), normalized so the first nonzero coordinate is 1.
struct ProjPoint {
    u64 q = 0;
    std::vector<std::string> coords;

    std::string str() const;
    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.q == b.q && a.coords == b.coords;
    }
};

/// All F_q-rational points, q <= q_max, where every equation vanishes and the
/// Jacobian of the system drops below full rank (= the number of equations).
/// Prime-field input scans every q = p^k <= q_max; extension-field input
/// scans the coefficient field itself. `coordinate_order` fixes how points
/// are normalized and printed (default: variable names sorted).
std::vector<ProjPoint> singular_scan(const std::vector<MultiPolyQ>& equations, u64 q_max,
                                     const std::vector<std::string>& coordinate_order = {});
std::vector<ProjPoint> singular_scan(const std::vector<MultiPoly>& equations, u64 q_max,
                                     const std::vector<std::string>& coordinate_order = {});

/// The homogeneous coordinate order of the ambient P^3 of the space family.
inline std::vector<std::string> space_coordinate_order() { return {"x", "y", "z", "w"}; }

}  // namespace isoell

#endif
