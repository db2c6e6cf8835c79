#ifndef ISOELL_POLY_HPP
#define ISOELL_POLY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "isoell/fp.hpp"
#include "isoell/fq.hpp"

namespace isoell {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order, largest first, so map iteration yields the
/// canonical leading-to-trailing term sequence.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        unsigned da = std::accumulate(a.begin(), a.end(), 0u);
        unsigned db = std::accumulate(b.begin(), b.end(), 0u);
        if (da != db) return da > db;
        return a > b;  // lexicographic on aligned exponent vectors
    }
};

/// Sparse multivariate polynomial over a field K (FpElt or FqElt).
/// Variables are kept sorted; exponent vectors align with them. Zero
/// coefficients are never stored.
template <class K>
class Poly {
  public:
    using Field = decltype(field_of(std::declval<K>()));
    using TermMap = std::map<Exponents, K, GrlexGreater>;

    Poly() = default;

    explicit Poly(Field F, std::vector<std::string> vars = {}) : field_(F), vars_(std::move(vars)) {
        std::sort(vars_.begin(), vars_.end());
        vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    }

    static Poly constant(Field F, const K& c) {
        Poly r(F);
        if (!k_is_zero(c)) r.terms_.emplace(Exponents{}, c);
        return r;
    }

    static Poly constant(Field F, i64 v) { return constant(F, k_from_int(F, v)); }

    static Poly variable(Field F, const std::string& name, unsigned exp = 1) {
        Poly r(F, {name});
        if (exp == 0)
            r.terms_.emplace(Exponents{0}, k_one(F));
        else
            r.terms_.emplace(Exponents{exp}, k_one(F));
        return r;
    }

    Field field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void set_term(const Exponents& e, const K& c) {
        if (e.size() != vars_.size()) throw Error("exponent arity mismatch");
        if (k_is_zero(c))
            terms_.erase(e);
        else
            terms_.insert_or_assign(e, c);
    }

    K coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? k_zero(field_) : it->second;
    }

    K constant_term() const { return coeff(Exponents(vars_.size(), 0)); }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_)
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        unsigned d = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0u);
        for (const auto& [e, c] : terms_)
            if (std::accumulate(e.begin(), e.end(), 0u) != d) return false;
        return true;
    }

    /// Re-express over a variable superset (sorted union performed by callers).
    Poly aligned_to(const std::vector<std::string>& target_vars) const {
        Poly r(field_, target_vars);
        std::vector<size_t> pos(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::lower_bound(r.vars_.begin(), r.vars_.end(), vars_[i]);
            if (it == r.vars_.end() || *it != vars_[i])
                throw UnknownVariable("variable " + vars_[i] + " missing from target set");
            pos[i] = static_cast<size_t>(it - r.vars_.begin());
        }
        for (const auto& [e, c] : terms_) {
            Exponents ne(r.vars_.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
            r.terms_.emplace(std::move(ne), c);
        }
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return combine(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return combine(a, b, true); }

    friend Poly operator-(const Poly& a) {
        Poly r(a.field_, a.vars_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        check_fields(a, b);
        auto uv = merged_vars(a, b);
        Poly A = a.aligned_to(uv), B = b.aligned_to(uv);
        Poly r(a.field_, uv);
        for (const auto& [ea, ca] : A.terms_) {
            for (const auto& [eb, cb] : B.terms_) {
                K c = ca * cb;
                if (k_is_zero(c)) continue;
                Exponents e(ea.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                auto [it, fresh] = r.terms_.emplace(std::move(e), c);
                if (!fresh) {
                    it->second = it->second + c;
                    if (k_is_zero(it->second)) r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    Poly pow(u64 e) const {
        Poly acc = constant(field_, 1).aligned_to(vars_);
        Poly base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (!same_field(a.field_, b.field_)) return false;
        auto uv = merged_vars(a, b);
        return a.aligned_to(uv).terms_ == b.aligned_to(uv).terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Formal partial derivative; exponent multipliers are reduced mod p.
    Poly derivative(const std::string& var) const {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
        if (it == vars_.end() || *it != var)
            throw UnknownVariable("no variable named " + var);
        size_t idx = static_cast<size_t>(it - vars_.begin());
        Poly r(field_, vars_);
        for (const auto& [e, c] : terms_) {
            if (e[idx] == 0) continue;
            K nc = c * k_from_int(field_, static_cast<i64>(e[idx]));
            if (k_is_zero(nc)) continue;
            Exponents ne = e;
            ne[idx] -= 1;
            r.terms_.emplace(std::move(ne), nc);
        }
        return r;
    }

    /// Evaluate at a point given in variable order.
    K eval(const std::vector<K>& point) const {
        if (point.size() != vars_.size()) throw Error("evaluation arity mismatch");
        K acc = k_zero(field_);
        for (const auto& [e, c] : terms_) {
            K t = c;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                K p = point[i];
                K pw = p;
                for (unsigned j = 1; j < e[i]; ++j) pw = pw * p;
                t = t * pw;
            }
            acc = acc + t;
        }
        return acc;
    }

    /// Canonical rendering: graded-lex order, explicit '^' exponents,
    /// '*' between factors, " + " between terms.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            std::string mono;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) {
                out += k_str(c);
            } else if (c == k_one(field_)) {
                out += mono;
            } else {
                out += k_str(c) + "*" + mono;
            }
        }
        return out;
    }

  private:
    static void check_fields(const Poly& a, const Poly& b) {
        if (!same_field(a.field_, b.field_))
            throw ModulusMismatch("polynomials over different fields");
    }

    static std::vector<std::string> merged_vars(const Poly& a, const Poly& b) {
        std::vector<std::string> uv;
        std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                       std::back_inserter(uv));
        return uv;
    }

    static Poly combine(const Poly& a, const Poly& b, bool subtract) {
        check_fields(a, b);
        auto uv = merged_vars(a, b);
        Poly r = a.aligned_to(uv);
        Poly B = b.aligned_to(uv);
        for (const auto& [e, c] : B.terms_) {
            K d = subtract ? -c : c;
            auto [it, fresh] = r.terms_.emplace(e, d);
            if (!fresh) {
                it->second = it->second + d;
                if (k_is_zero(it->second)) r.terms_.erase(it);
            }
        }
        return r;
    }

    Field field_{};
    std::vector<std::string> vars_;
    TermMap terms_;
};

using MultiPoly = Poly<FpElt>;
using MultiPolyQ = Poly<FqElt>;

/// Lift a prime-field polynomial into an extension of the same characteristic.
MultiPolyQ lift_to_extension(const MultiPoly& f, const ExtFieldPtr& F);

/// If every coefficient lies in the prime field, rewrite over FpElt.
bool try_descend_to_prime_field(const MultiPolyQ& f, MultiPoly& out);

// ---- dense univariate helpers (used for squarefreeness and gcd checks) ----

template <class K>
using DensePoly = std::vector<K>;  // low to high, no trailing zeros

template <class K>
void dense_strip(DensePoly<K>& a) {
    while (!a.empty() && k_is_zero(a.back())) a.pop_back();
}

/// Dehomogenize/restrict to a single variable: f must involve only `var`
/// after substituting 1 for `other`.
template <class K>
DensePoly<K> dense_from(const Poly<K>& f, const std::string& var) {
    const auto& vars = f.vars();
    auto it = std::lower_bound(vars.begin(), vars.end(), var);
    size_t idx = static_cast<size_t>(it - vars.begin());
    if (it == vars.end() || *it != var) idx = vars.size();
    DensePoly<K> r;
    for (const auto& [e, c] : f.terms()) {
        unsigned deg = 0;
        for (size_t i = 0; i < e.size(); ++i) {
            if (i == idx) {
                deg = e[i];
            } else if (e[i] != 0) {
                throw Error("polynomial is not univariate in " + var);
            }
        }
        if (r.size() <= deg) r.resize(deg + 1, k_zero(f.field()));
        r[deg] = r[deg] + c;
    }
    dense_strip(r);
    return r;
}

template <class K>
DensePoly<K> dense_derivative(const DensePoly<K>& a) {
    DensePoly<K> r;
    for (size_t i = 1; i < a.size(); ++i) {
        K c = a[i] * k_from_int(field_of(a[i]), static_cast<i64>(i));
        if (r.size() < i) r.resize(i, k_zero(field_of(a[i])));
        r[i - 1] = c;
    }
    dense_strip(r);
    return r;
}

template <class K>
DensePoly<K> dense_mod(DensePoly<K> a, const DensePoly<K>& m) {
    dense_strip(a);
    K lead_inv = m.back().inverse();
    while (a.size() >= m.size()) {
        K q = a.back() * lead_inv;
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) a[shift + i] = a[shift + i] - q * m[i];
        dense_strip(a);
    }
    return a;
}

template <class K>
DensePoly<K> dense_gcd(DensePoly<K> a, DensePoly<K> b) {
    dense_strip(a);
    dense_strip(b);
    while (!b.empty()) {
        DensePoly<K> r = dense_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Squarefree over the algebraic closure: nonzero derivative and trivial gcd.
/// A vanishing derivative in characteristic p means the polynomial is a p-th
/// power, hence not squarefree (unless constant).
template <class K>
bool dense_is_squarefree(const DensePoly<K>& a) {
    if (a.size() <= 1) return true;   // constants
    if (a.size() == 2) return true;   // linear
    DensePoly<K> d = dense_derivative(a);
    if (d.empty()) return false;
    DensePoly<K> g = dense_gcd(a, d);
    return g.size() == 1;
}

}  // namespace isoell

#endif
