#include "isoell/series.hpp"

#include <algorithm>

namespace isoell {

PowerSeries PowerSeries::zero(u32 p, const std::string& var, unsigned precision) {
    require_prime(p);
    if (precision == 0) throw InvalidDescriptor("precision must be >= 1");
    return PowerSeries{var, p, std::vector<FpElt>(precision, FpElt(0, p))};
}

PowerSeries PowerSeries::identity(u32 p, const std::string& var, unsigned precision) {
    PowerSeries s = zero(p, var, precision);
    if (precision > 1) s.c[1] = FpElt(1, p);
    return s;
}

PowerSeries PowerSeries::from_coeffs(u32 p, const std::string& var, unsigned precision,
                                     const std::vector<i64>& coeffs) {
    PowerSeries s = zero(p, var, precision);
    for (size_t i = 0; i < coeffs.size() && i < precision; ++i)
        s.c[i] = FpElt::from_int(coeffs[i], p);
    return s;
}

bool PowerSeries::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const FpElt& x) { return x.is_zero(); });
}

PowerSeries PowerSeries::truncated(unsigned precision) const {
    PowerSeries s = zero(p, var, precision);
    for (unsigned i = 0; i < precision && i < c.size(); ++i) s.c[i] = c[i];
    return s;
}

std::optional<unsigned> PowerSeries::valuation() const {
    for (unsigned i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) return i;
    return std::nullopt;
}

std::string PowerSeries::str() const {
    std::string out;
    for (unsigned i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += c[i].str();
        } else {
            if (c[i].value != 1) out += c[i].str() + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    if (out.empty()) return "0";
    return out + " + O(" + var + "^" + std::to_string(c.size()) + ")";
}

void check_compatible(const PowerSeries& a, const PowerSeries& b) {
    if (a.p != b.p) throw ModulusMismatch("series over different primes");
    if (a.var != b.var) throw UnknownVariable("series in different variables");
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    check_compatible(a, b);
    unsigned n = std::min(a.precision(), b.precision());
    PowerSeries r = PowerSeries::zero(a.p, a.var, n);
    for (unsigned i = 0; i < n; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    check_compatible(a, b);
    unsigned n = std::min(a.precision(), b.precision());
    PowerSeries r = PowerSeries::zero(a.p, a.var, n);
    for (unsigned i = 0; i < n; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    check_compatible(a, b);
    unsigned n = std::min(a.precision(), b.precision());
    PowerSeries r = PowerSeries::zero(a.p, a.var, n);
    for (unsigned i = 0; i < n; ++i) {
        if (a.c[i].is_zero()) continue;
        for (unsigned j = 0; i + j < n; ++j) {
            if (b.c[j].is_zero()) continue;
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
    }
    return r;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.p == b.p && a.var == b.var && a.c == b.c;
}

PowerSeries series_invert(const PowerSeries& s) {
    if (s.at(0).is_zero()) throw NotAUnit("series has zero constant term");
    unsigned n = s.precision();
    PowerSeries r = PowerSeries::zero(s.p, s.var, n);
    FpElt c0inv = s.c[0].inverse();
    r.c[0] = c0inv;
    // r[k] = -c0^{-1} * sum_{i=1..k} s[i] r[k-i]
    for (unsigned k = 1; k < n; ++k) {
        FpElt acc(0, s.p);
        for (unsigned i = 1; i <= k; ++i) acc = acc + s.c[i] * r.c[k - i];
        r.c[k] = -(c0inv * acc);
    }
    return r;
}

PowerSeries series_compose(const PowerSeries& f, const PowerSeries& g) {
    check_compatible(f, g);
    if (!g.at(0).is_zero())
        throw InvalidLocalAction("composition needs inner series with positive valuation");
    unsigned n = std::min(f.precision(), g.precision());
    PowerSeries acc = PowerSeries::zero(f.p, f.var, n);
    // Horner from the top coefficient down
    for (unsigned i = n; i-- > 0;) {
        acc = acc * g.truncated(n);
        acc.c[0] = acc.c[0] + f.c[i];
    }
    return acc;
}

}  // namespace isoell
