#include "isoell/fp.hpp"

namespace isoell {

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

void require_prime(u64 p) {
    if (!is_prime(p)) throw InvalidDescriptor("modulus " + std::to_string(p) + " is not prime");
}

void check_same_modulus(const FpElt& a, const FpElt& b) {
    if (a.p != b.p)
        throw ModulusMismatch("mixed moduli " + std::to_string(a.p) + " and " + std::to_string(b.p));
}

FpElt operator+(const FpElt& a, const FpElt& b) {
    check_same_modulus(a, b);
    u32 s = a.value + b.value;
    if (s >= a.p) s -= a.p;
    return FpElt(s, a.p);
}

FpElt operator-(const FpElt& a, const FpElt& b) {
    check_same_modulus(a, b);
    u32 s = a.value >= b.value ? a.value - b.value : a.value + a.p - b.value;
    return FpElt(s, a.p);
}

FpElt operator*(const FpElt& a, const FpElt& b) {
    check_same_modulus(a, b);
    return FpElt(static_cast<u64>(a.value) * b.value % a.p, a.p);
}

FpElt operator-(const FpElt& a) { return FpElt(a.value == 0 ? 0 : a.p - a.value, a.p); }

bool operator==(const FpElt& a, const FpElt& b) { return a.p == b.p && a.value == b.value; }

FpElt FpElt::pow(u64 e) const {
    FpElt base = *this;
    FpElt acc(1, p);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FpElt FpElt::inverse() const {
    if (value == 0) throw NotAUnit("0 has no inverse in F_" + std::to_string(p));
    // extended Euclid on (value, p)
    i64 t = 0, new_t = 1;
    i64 r = p, new_r = value;
    while (new_r != 0) {
        i64 q = r / new_r;
        i64 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p;
    return FpElt(static_cast<u64>(t), p);
}

}  // namespace isoell
