#ifndef ISOELL_FP_HPP
#define ISOELL_FP_HPP

#include <cstdint>
#include <string>

#include "isoell/errors.hpp"

namespace isoell {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime(u64 n);
void require_prime(u64 p);

/// Element of the prime field F_p, kept reduced to [0, p).
struct FpElt {
    u32 value = 0;
    u32 p = 0;

    FpElt() = default;
    FpElt(u64 v, u32 modulus) : value(static_cast<u32>(v % modulus)), p(modulus) {}

    static FpElt from_int(i64 v, u32 p) {
        i64 r = v % static_cast<i64>(p);
        if (r < 0) r += p;
        return FpElt(static_cast<u64>(r), p);
    }

    bool is_zero() const { return value == 0; }

    FpElt inverse() const;
    FpElt pow(u64 e) const;

    std::string str() const { return std::to_string(value); }
};

void check_same_modulus(const FpElt& a, const FpElt& b);

FpElt operator+(const FpElt& a, const FpElt& b);
FpElt operator-(const FpElt& a, const FpElt& b);
FpElt operator*(const FpElt& a, const FpElt& b);
FpElt operator-(const FpElt& a);
bool operator==(const FpElt& a, const FpElt& b);
inline bool operator!=(const FpElt& a, const FpElt& b) { return !(a == b); }

// --- trait shims shared with the extension field, used by the generic polynomial ---

// The "field descriptor" of an FpElt is just the modulus.
inline u32 field_of(const FpElt& a) { return a.p; }
inline bool same_field(u32 a, u32 b) { return a == b; }
inline FpElt k_zero(u32 p) { return FpElt(0, p); }
inline FpElt k_one(u32 p) { return FpElt(1, p); }
inline FpElt k_from_int(u32 p, i64 v) { return FpElt::from_int(v, p); }
inline bool k_is_zero(const FpElt& a) { return a.is_zero(); }
inline std::string k_str(const FpElt& a) { return a.str(); }
inline u32 k_characteristic(u32 p) { return p; }

}  // namespace isoell

#endif
