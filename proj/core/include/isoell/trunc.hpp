#ifndef ISOELL_TRUNC_HPP
#define ISOELL_TRUNC_HPP

#include <string>
#include <utility>
#include <vector>

#include "isoell/poly.hpp"

namespace isoell {

struct TruncElt;

/// F_p[u_1,...,u_m] / (u_1^{d_1}, ..., u_m^{d_m}): every generator is
/// nilpotent with the stated order. Reduction drops any monomial whose
/// exponent in u_i reaches d_i.
class TruncatedAlgebra {
  public:
    TruncatedAlgebra() = default;
    TruncatedAlgebra(u32 p, std::vector<std::pair<std::string, unsigned>> generators);

    u32 p() const { return p_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<unsigned>& bounds() const { return bounds_; }

    TruncElt reduce(const MultiPoly& f) const;
    TruncElt zero() const;
    TruncElt one() const;
    TruncElt constant(i64 v) const;
    TruncElt gen(const std::string& name) const;

    /// Same p with extra nilpotent generators adjoined.
    TruncatedAlgebra extended(std::vector<std::pair<std::string, unsigned>> extra) const;

    /// Total nilpotency bound: any product of this many generators vanishes.
    unsigned nilpotency_order() const;

    friend bool operator==(const TruncatedAlgebra& a, const TruncatedAlgebra& b) {
        return a.p_ == b.p_ && a.vars_ == b.vars_ && a.bounds_ == b.bounds_;
    }
    friend bool operator!=(const TruncatedAlgebra& a, const TruncatedAlgebra& b) {
        return !(a == b);
    }

  private:
    u32 p_ = 0;
    std::vector<std::string> vars_;    // sorted
    std::vector<unsigned> bounds_;     // aligned with vars_, each >= 1
};

/// Immutable element of a truncated algebra; the polynomial is always reduced.
struct TruncElt {
    TruncatedAlgebra alg;
    MultiPoly poly;

    bool is_zero() const { return poly.is_zero(); }
    bool is_unit() const { return !poly.constant_term().is_zero(); }
    FpElt constant_term() const { return poly.constant_term(); }

    TruncElt inverse() const;
    TruncElt pow(u64 e) const;
    /// True when this element's e-th power vanishes.
    bool power_vanishes(u64 e) const { return pow(e).is_zero(); }

    std::string str() const { return poly.str(); }
};

void check_same_algebra(const TruncElt& a, const TruncElt& b);

TruncElt operator+(const TruncElt& a, const TruncElt& b);
TruncElt operator-(const TruncElt& a, const TruncElt& b);
TruncElt operator*(const TruncElt& a, const TruncElt& b);
TruncElt operator-(const TruncElt& a);
bool operator==(const TruncElt& a, const TruncElt& b);
inline bool operator!=(const TruncElt& a, const TruncElt& b) { return !(a == b); }

/// Move an element into a larger algebra over the same prime (superset of
/// generators, identical bounds on the shared ones).
TruncElt embed_into(const TruncElt& a, const TruncatedAlgebra& bigger);

}  // namespace isoell

#endif
