#include "isoell/trunc.hpp"

#include <algorithm>

namespace isoell {

TruncatedAlgebra::TruncatedAlgebra(u32 p, std::vector<std::pair<std::string, unsigned>> generators)
    : p_(p) {
    require_prime(p);
    std::sort(generators.begin(), generators.end());
    for (size_t i = 0; i + 1 < generators.size(); ++i)
        if (generators[i].first == generators[i + 1].first)
            throw InvalidDescriptor("duplicate generator " + generators[i].first);
    for (auto& [name, d] : generators) {
        if (d == 0) throw InvalidDescriptor("nilpotency degree must be >= 1");
        vars_.push_back(name);
        bounds_.push_back(d);
    }
}

TruncElt TruncatedAlgebra::reduce(const MultiPoly& f) const {
    if (f.field() != p_) throw ModulusMismatch("polynomial has wrong characteristic");
    MultiPoly aligned = f.aligned_to(vars_);
    MultiPoly r(p_, vars_);
    for (const auto& [e, c] : aligned.terms()) {
        bool kill = false;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] >= bounds_[i]) {
                kill = true;
                break;
            }
        if (!kill) r.set_term(e, c);
    }
    return TruncElt{*this, std::move(r)};
}

TruncElt TruncatedAlgebra::zero() const { return TruncElt{*this, MultiPoly(p_, vars_)}; }

TruncElt TruncatedAlgebra::one() const { return constant(1); }

TruncElt TruncatedAlgebra::constant(i64 v) const {
    return reduce(MultiPoly::constant(p_, v).aligned_to(vars_));
}

TruncElt TruncatedAlgebra::gen(const std::string& name) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name) throw UnknownVariable("no generator named " + name);
    return reduce(MultiPoly::variable(p_, name).aligned_to(vars_));
}

TruncatedAlgebra TruncatedAlgebra::extended(
    std::vector<std::pair<std::string, unsigned>> extra) const {
    for (size_t i = 0; i < vars_.size(); ++i) extra.emplace_back(vars_[i], bounds_[i]);
    return TruncatedAlgebra(p_, std::move(extra));
}

unsigned TruncatedAlgebra::nilpotency_order() const {
    unsigned total = 1;
    for (unsigned d : bounds_) total += d - 1;
    return total;
}

void check_same_algebra(const TruncElt& a, const TruncElt& b) {
    if (a.alg != b.alg) throw ModulusMismatch("elements of different truncated algebras");
}

TruncElt operator+(const TruncElt& a, const TruncElt& b) {
    check_same_algebra(a, b);
    return a.alg.reduce(a.poly + b.poly);
}

TruncElt operator-(const TruncElt& a, const TruncElt& b) {
    check_same_algebra(a, b);
    return a.alg.reduce(a.poly - b.poly);
}

TruncElt operator*(const TruncElt& a, const TruncElt& b) {
    check_same_algebra(a, b);
    return a.alg.reduce(a.poly * b.poly);
}

TruncElt operator-(const TruncElt& a) { return TruncElt{a.alg, -a.poly}; }

bool operator==(const TruncElt& a, const TruncElt& b) {
    return a.alg == b.alg && a.poly == b.poly;
}

TruncElt TruncElt::pow(u64 e) const {
    TruncElt acc = alg.one();
    TruncElt base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

TruncElt TruncElt::inverse() const {
    FpElt c = constant_term();
    if (c.is_zero()) throw NotAUnit("constant term is zero: " + str());
    // a = c(1 - n) with n nilpotent; a^{-1} = c^{-1} (1 + n + n^2 + ...)
    FpElt cinv = c.inverse();
    TruncElt n = alg.one() - TruncElt{alg, poly * MultiPoly::constant(alg.p(), cinv.value)};
    TruncElt acc = alg.one();
    TruncElt term = n;
    unsigned guard = alg.nilpotency_order() + 1;
    while (!term.is_zero() && guard-- > 0) {
        acc = acc + term;
        term = term * n;
    }
    return alg.reduce(acc.poly * MultiPoly::constant(alg.p(), cinv.value));
}

TruncElt embed_into(const TruncElt& a, const TruncatedAlgebra& bigger) {
    if (bigger.p() != a.alg.p()) throw ModulusMismatch("algebras of different characteristic");
    return bigger.reduce(a.poly.aligned_to(bigger.vars()));
}

}  // namespace isoell
