#include "isoell/fq.hpp"

#include <algorithm>

namespace isoell {

namespace {

// dense univariate arithmetic mod p, coefficients low to high, no trailing zeros
using UPoly = std::vector<u32>;

void strip(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b, u32 p) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<u32>((r[i + j] + static_cast<u64>(a[i]) * b[j]) % p);
    strip(r);
    return r;
}

UPoly umod(UPoly a, const UPoly& m, u32 p) {
    strip(a);
    u32 lead_inv = FpElt(m.back(), p).inverse().value;
    while (a.size() >= m.size()) {
        u64 q = static_cast<u64>(a.back()) * lead_inv % p;
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            u64 sub = q * m[i] % p;
            a[shift + i] = static_cast<u32>((a[shift + i] + p - sub) % p);
        }
        strip(a);
    }
    return a;
}

UPoly upowmod(UPoly base, u64 e, const UPoly& m, u32 p) {
    UPoly acc{1};
    base = umod(std::move(base), m, p);
    while (e) {
        if (e & 1) acc = umod(umul(acc, base, p), m, p);
        base = umod(umul(base, base, p), m, p);
        e >>= 1;
    }
    return acc;
}

UPoly ugcd(UPoly a, UPoly b, u32 p) {
    strip(a);
    strip(b);
    while (!b.empty()) {
        UPoly r = umod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// f monic of degree k: irreducible iff x^{p^k} = x mod f and
// gcd(x^{p^{k/l}} - x, f) = 1 for every prime l dividing k.
bool is_irreducible(const UPoly& f, u32 p, unsigned k) {
    auto pow_pk = [&](unsigned j) {
        u64 e = 1;
        for (unsigned i = 0; i < j; ++i) e *= p;
        return upowmod(UPoly{0, 1}, e, f, p);
    };
    UPoly x_pk = pow_pk(k);
    UPoly x{0, 1};
    UPoly diff = x_pk;
    diff.resize(std::max(diff.size(), x.size()), 0);
    for (size_t i = 0; i < x.size(); ++i) diff[i] = (diff[i] + p - x[i]) % p;
    strip(diff);
    if (!diff.empty()) return false;
    for (unsigned l = 2; l <= k; ++l) {
        if (k % l != 0 || !is_prime(l)) continue;
        UPoly xl = pow_pk(k / l);
        UPoly d = xl;
        d.resize(std::max(d.size(), x.size()), 0);
        for (size_t i = 0; i < x.size(); ++i) d[i] = (d[i] + p - x[i]) % p;
        strip(d);
        UPoly g = ugcd(f, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<u32> find_irreducible(u32 p, unsigned k) {
    if (k == 1) return {0, 1};  // F_p itself, modulus g
    u64 combos = 1;
    for (unsigned i = 0; i < k; ++i) combos *= p;
    for (u64 idx = 0; idx < combos; ++idx) {
        std::vector<u32> f(k + 1, 0);
        f[k] = 1;
        u64 t = idx;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = static_cast<u32>(t % p);
            t /= p;
        }
        if (is_irreducible(f, p, k)) return f;
    }
    throw Error("no irreducible polynomial found (unreachable)");
}

}  // namespace

ExtField::ExtField(u32 p, unsigned k, std::vector<u32> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    order_ = 1;
    for (unsigned i = 0; i < k_; ++i) order_ *= p_;
}

ExtFieldPtr ExtField::make(u32 p, unsigned k) {
    require_prime(p);
    if (k == 0) throw InvalidDescriptor("extension degree must be >= 1");
    return ExtFieldPtr(new ExtField(p, k, find_irreducible(p, k)));
}

FqElt ExtField::zero() const { return FqElt{std::vector<u32>(k_, 0), shared_from_this()}; }

FqElt ExtField::one() const { return from_int(1); }

FqElt ExtField::generator() const {
    if (k_ == 1) throw InvalidDescriptor("prime field has no extension generator");
    auto e = zero();
    e.c[1] = 1;
    return e;
}

FqElt ExtField::from_base(const FpElt& a) const {
    if (a.p != p_) throw ModulusMismatch("base element has wrong characteristic");
    auto e = zero();
    e.c[0] = a.value;
    return e;
}

FqElt ExtField::from_int(i64 v) const {
    auto e = zero();
    e.c[0] = FpElt::from_int(v, p_).value;
    return e;
}

FqElt ExtField::element(u64 index) const {
    auto e = zero();
    for (unsigned i = 0; i < k_; ++i) {
        e.c[i] = static_cast<u32>(index % p_);
        index /= p_;
    }
    return e;
}

u64 ExtField::index_of(const FqElt& a) const {
    u64 idx = 0;
    for (unsigned i = k_; i-- > 0;) idx = idx * p_ + a.c[i];
    return idx;
}

FqElt ExtField::add(const FqElt& a, const FqElt& b) const {
    auto e = zero();
    for (unsigned i = 0; i < k_; ++i) {
        u32 s = a.c[i] + b.c[i];
        e.c[i] = s >= p_ ? s - p_ : s;
    }
    return e;
}

FqElt ExtField::sub(const FqElt& a, const FqElt& b) const {
    auto e = zero();
    for (unsigned i = 0; i < k_; ++i)
        e.c[i] = a.c[i] >= b.c[i] ? a.c[i] - b.c[i] : a.c[i] + p_ - b.c[i];
    return e;
}

FqElt ExtField::neg(const FqElt& a) const {
    auto e = zero();
    for (unsigned i = 0; i < k_; ++i) e.c[i] = a.c[i] == 0 ? 0 : p_ - a.c[i];
    return e;
}

FqElt ExtField::mul(const FqElt& a, const FqElt& b) const {
    UPoly prod = umul(UPoly(a.c.begin(), a.c.end()), UPoly(b.c.begin(), b.c.end()), p_);
    prod = umod(std::move(prod), modulus_, p_);
    auto e = zero();
    for (size_t i = 0; i < prod.size(); ++i) e.c[i] = prod[i];
    return e;
}

bool FqElt::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](u32 v) { return v == 0; });
}

bool FqElt::in_prime_field() const {
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

FqElt FqElt::pow(u64 e) const {
    FqElt base = *this;
    FqElt acc = F->one();
    while (e) {
        if (e & 1) acc = F->mul(acc, base);
        base = F->mul(base, base);
        e >>= 1;
    }
    return acc;
}

FqElt FqElt::inverse() const {
    if (is_zero()) throw NotAUnit("0 has no inverse in F_" + std::to_string(F->order()));
    return pow(F->order() - 2);
}

std::string FqElt::str() const {
    std::string out;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c[i]);
        } else {
            if (c[i] != 1) out += std::to_string(c[i]);
            out += "g";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

void check_same_field(const FqElt& a, const FqElt& b) {
    if (!same_field(a.F, b.F)) throw ModulusMismatch("elements of different extension fields");
}

FqElt operator+(const FqElt& a, const FqElt& b) {
    check_same_field(a, b);
    return a.F->add(a, b);
}
FqElt operator-(const FqElt& a, const FqElt& b) {
    check_same_field(a, b);
    return a.F->sub(a, b);
}
FqElt operator*(const FqElt& a, const FqElt& b) {
    check_same_field(a, b);
    return a.F->mul(a, b);
}
FqElt operator-(const FqElt& a) { return a.F->neg(a); }

bool operator==(const FqElt& a, const FqElt& b) { return same_field(a.F, b.F) && a.c == b.c; }

}  // namespace isoell
