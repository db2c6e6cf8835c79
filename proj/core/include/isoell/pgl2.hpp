#ifndef ISOELL_PGL2_HPP
#define ISOELL_PGL2_HPP

#include <string>
#include <vector>

#include "isoell/trunc.hpp"

namespace isoell {

/// 2x2 matrix over a truncated algebra, considered up to unit scalars.
/// The determinant must be a unit.
struct ProjMat2 {
    TruncElt a, b, c, d;

    TruncElt det() const { return a * d - b * c; }
    std::string str() const;
};

ProjMat2 make_proj_mat(const TruncElt& a, const TruncElt& b, const TruncElt& c,
                       const TruncElt& d);
ProjMat2 proj_identity(const TruncatedAlgebra& A);

ProjMat2 proj_mul(const ProjMat2& M, const ProjMat2& N);

/// True when M = uN for some unit scalar u of the algebra.
bool proj_equal(const ProjMat2& M, const ProjMat2& N);

/// Scale every entry by u.
ProjMat2 proj_scale(const ProjMat2& M, const TruncElt& u);

/// diag(t,1) * swap^eps for t with t^2 = 1: the image of (eps, t) in
/// Z/2Z x mu_2 under the standard embedding into PGL_2.
ProjMat2 embed_ordinary(int eps, const TruncElt& t);

/// t |-> [[1, t^2], [t, 1 + t^3]] for t with t^4 = 0 in characteristic 2.
ProjMat2 embed_supersingular(const TruncElt& t);

/// The coordinate ring of mu_2 in characteristic 2 written as a truncated
/// algebra: F_2[u]/(u^2) with the group point t = 1 + u, so t^2 = 1.
TruncatedAlgebra mu2_algebra(const std::string& var = "u");
TruncElt mu2_generic_point(const TruncatedAlgebra& A, const std::string& var = "u");

struct P1FixedPoint {
    u64 q = 0;          // field size p^k
    std::string point;  // "[a:1]" with a printed over F_q, or "[1:0]"

    friend bool operator==(const P1FixedPoint& x, const P1FixedPoint& y) {
        return x.q == y.q && x.point == y.point;
    }
};

/// Points [a:b] of P^1(F_q), for every q = p^k <= q_max, fixed by all the
/// matrices simultaneously: the cross product entry of M*(a,b) with (a,b)
/// must vanish exactly in the full truncated algebra. An empty matrix list
/// fixes everything.
std::vector<P1FixedPoint> scan_fixed_points(const std::vector<ProjMat2>& matrices, u64 q_max);

}  // namespace isoell

#endif
