#ifndef ISOELL_RAMIFICATION_HPP
#define ISOELL_RAMIFICATION_HPP

#include <functional>
#include <vector>

#include "isoell/series.hpp"

namespace isoell {

/// Produces the generator's action on the local uniformizer at a requested
/// precision, so valuations can always be recomputed with more terms.
using SeriesProducer = std::function<PowerSeries(unsigned precision)>;

/// A constant cyclic group acting on the completed local ring at a fixed
/// point: the stabilizer H = Z/mZ is described by the series g.t for the
/// generator g; the other elements are composition powers.
class LocalAction {
  public:
    static constexpr unsigned kDefaultPrecision = 16;

    LocalAction(u32 p, u64 group_order, u64 stab_order, SeriesProducer generator,
                unsigned precision = kDefaultPrecision);

    /// Generator given by an exact coefficient polynomial (low to high).
    static LocalAction from_polynomial(u32 p, u64 group_order, u64 stab_order,
                                       const std::vector<i64>& generator_coeffs,
                                       unsigned precision = kDefaultPrecision);

    /// Z/pZ translations t -> t + g on the affine line, described at the one
    /// fixed point (infinity) in the uniformizer u = 1/t:
    /// g.u = u/(1 + gu) = u - gu^2 + g^2 u^3 - ...
    static LocalAction translation_at_infinity(u32 p, unsigned precision = kDefaultPrecision);

    /// Z/nZ with gcd(n, p) = 1 acting as t -> zeta t for a primitive n-th
    /// root of unity in F_p (requires n | p - 1).
    static LocalAction tame_rotation(u32 p, u64 order_n, u64 group_order,
                                     unsigned precision = kDefaultPrecision);

    u32 p() const { return p_; }
    u64 group_order() const { return group_order_; }
    u64 stab_order() const { return stab_order_; }
    unsigned precision() const { return precision_; }
    const std::string& var() const { return var_; }

    /// The series g^k . t for k in [1, stab_order).
    const PowerSeries& series(u64 k) const;

    LocalAction at_precision(unsigned precision) const;

  private:
    u32 p_;
    u64 group_order_;
    u64 stab_order_;
    unsigned precision_;
    std::string var_ = "t";
    SeriesProducer generator_;
    std::vector<PowerSeries> elements_;  // index k-1 holds g^k . t
};

/// i_x(g^k) = valuation of g^k.t - t. Throws PrecisionExhausted when the
/// difference vanishes to working precision.
unsigned local_valuation_jump(const LocalAction& act, u64 k);

/// a(x) = [G : H] * sum over nontrivial g of i_x(g). Retries internally with
/// doubled precision when a jump exceeds the current one.
long long artin_term(const LocalAction& act);

/// deg omega_X = |G| (2 g(Y) - 2) + sum of the Artin terms.
long long hurwitz_wild(u64 group_order, u64 base_genus, const std::vector<long long>& artin_terms);

}  // namespace isoell

#endif
