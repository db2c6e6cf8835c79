#include "isoell/ramification.hpp"

#include <numeric>

namespace isoell {

LocalAction::LocalAction(u32 p, u64 group_order, u64 stab_order, SeriesProducer generator,
                         unsigned precision)
    : p_(p), group_order_(group_order), stab_order_(stab_order), precision_(precision),
      generator_(std::move(generator)) {
    require_prime(p);
    if (stab_order_ < 1) throw InvalidLocalAction("stabilizer order must be >= 1");
    if (group_order_ % stab_order_ != 0)
        throw InvalidLocalAction("stabilizer order must divide the group order");
    if (stab_order_ == 1) return;  // free point: no nontrivial elements, empty Artin sum
    PowerSeries gen = generator_(precision_);
    if (gen.p != p_) throw ModulusMismatch("generator series has the wrong characteristic");
    if (!gen.at(0).is_zero())
        throw InvalidLocalAction("the action must fix the point: g.t needs valuation >= 1");
    if (gen.at(1).is_zero())
        throw InvalidLocalAction("g.t needs a unit linear coefficient");
    var_ = gen.var;
    elements_.reserve(stab_order_ - 1);
    elements_.push_back(gen);
    for (u64 k = 2; k < stab_order_; ++k)
        elements_.push_back(series_compose(elements_.back(), gen));
}

const PowerSeries& LocalAction::series(u64 k) const {
    if (k == 0 || k >= stab_order_)
        throw InvalidLocalAction("element index must lie in [1, stabilizer order)");
    return elements_[k - 1];
}

LocalAction LocalAction::at_precision(unsigned precision) const {
    return LocalAction(p_, group_order_, stab_order_, generator_, precision);
}

LocalAction LocalAction::from_polynomial(u32 p, u64 group_order, u64 stab_order,
                                         const std::vector<i64>& generator_coeffs,
                                         unsigned precision) {
    auto coeffs = generator_coeffs;
    return LocalAction(
        p, group_order, stab_order,
        [p, coeffs](unsigned n) { return PowerSeries::from_coeffs(p, "t", n, coeffs); },
        precision);
}

LocalAction LocalAction::translation_at_infinity(u32 p, unsigned precision) {
    // 1.u = u (1 + u)^{-1} = u - u^2 + u^3 - ...
    return LocalAction(
        p, p, p,
        [p](unsigned n) {
            PowerSeries s = PowerSeries::zero(p, "t", n);
            FpElt sign(1, p);
            for (unsigned i = 1; i < n; ++i) {
                s.c[i] = sign;
                sign = -sign;
            }
            return s;
        },
        precision);
}

LocalAction LocalAction::tame_rotation(u32 p, u64 order_n, u64 group_order, unsigned precision) {
    if (order_n < 2 || std::gcd<u64>(order_n, p) != 1)
        throw InvalidLocalAction("rotation order must be >= 2 and coprime to p");
    // find an element of exact multiplicative order n in F_p
    FpElt zeta(0, p);
    bool found = false;
    for (u32 c = 2; c < p && !found; ++c) {
        FpElt cand(c, p);
        if (cand.pow(order_n) != FpElt(1, p)) continue;
        bool exact = true;
        for (u64 d = 1; d < order_n && exact; ++d)
            if (order_n % d == 0 && d > 1 && cand.pow(d) == FpElt(1, p)) exact = false;
        if (order_n > 1 && cand == FpElt(1, p)) exact = false;
        if (exact) {
            zeta = cand;
            found = true;
        }
    }
    if (!found)
        throw NotSupported("F_" + std::to_string(p) + " has no primitive root of unity of order " +
                           std::to_string(order_n) + " (need n | p - 1)");
    u32 z = zeta.value;
    return LocalAction(
        p, group_order, order_n,
        [p, z](unsigned n) {
            PowerSeries s = PowerSeries::zero(p, "t", n);
            if (n > 1) s.c[1] = FpElt(z, p);
            return s;
        },
        precision);
}

unsigned local_valuation_jump(const LocalAction& act, u64 k) {
    const PowerSeries& s = act.series(k);
    PowerSeries diff = s - PowerSeries::identity(act.p(), act.var(), s.precision());
    auto v = diff.valuation();
    if (!v)
        throw PrecisionExhausted("g.t - t vanishes to precision " +
                                 std::to_string(s.precision()) + "; retry with more terms");
    return *v;
}

long long artin_term(const LocalAction& act) {
    LocalAction cur = act;
    for (int attempt = 0; attempt < 10; ++attempt) {
        try {
            long long sum = 0;
            for (u64 k = 1; k < cur.stab_order(); ++k)
                sum += static_cast<long long>(local_valuation_jump(cur, k));
            long long index = static_cast<long long>(cur.group_order() / cur.stab_order());
            return index * sum;
        } catch (const PrecisionExhausted&) {
            cur = cur.at_precision(cur.precision() * 2);
        }
    }
    throw PrecisionExhausted("valuation did not stabilize below precision " +
                             std::to_string(act.precision() * 1024));
}

long long hurwitz_wild(u64 group_order, u64 base_genus,
                       const std::vector<long long>& artin_terms) {
    long long deg = static_cast<long long>(group_order) *
                    (2 * static_cast<long long>(base_genus) - 2);
    for (long long a : artin_terms) deg += a;
    return deg;
}

}  // namespace isoell
