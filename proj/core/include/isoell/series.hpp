#ifndef ISOELL_SERIES_HPP
#define ISOELL_SERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "isoell/fp.hpp"

namespace isoell {

/// Truncated power series over F_p: c[0] + c[1]x + ... + c[N-1]x^{N-1}.
/// N is the working precision; all operations truncate to it.
struct PowerSeries {
    std::string var;
    u32 p = 0;
    std::vector<FpElt> c;

    static PowerSeries zero(u32 p, const std::string& var, unsigned precision);
    static PowerSeries identity(u32 p, const std::string& var, unsigned precision);
    static PowerSeries from_coeffs(u32 p, const std::string& var, unsigned precision,
                                   const std::vector<i64>& coeffs);

    unsigned precision() const { return static_cast<unsigned>(c.size()); }
    bool is_zero() const;
    FpElt at(unsigned i) const { return i < c.size() ? c[i] : FpElt(0, p); }

    PowerSeries truncated(unsigned precision) const;

    /// Smallest index with a nonzero coefficient; empty when the series
    /// vanishes identically to working precision (the infinity sentinel).
    std::optional<unsigned> valuation() const;

    std::string str() const;
};

void check_compatible(const PowerSeries& a, const PowerSeries& b);

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
bool operator==(const PowerSeries& a, const PowerSeries& b);
inline bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

/// Multiplicative inverse mod x^N; requires a unit constant term.
PowerSeries series_invert(const PowerSeries& s);

/// f(g) for g with valuation >= 1.
PowerSeries series_compose(const PowerSeries& f, const PowerSeries& g);

inline std::optional<unsigned> series_valuation(const PowerSeries& s) { return s.valuation(); }

}  // namespace isoell

#endif
