#ifndef ISOELL_FQ_HPP
#define ISOELL_FQ_HPP

#include <memory>
#include <string>
#include <vector>

#include "isoell/fp.hpp"

namespace isoell {

class ExtField;
using ExtFieldPtr = std::shared_ptr<const ExtField>;

/// Element of F_{p^k}, stored as coefficients of the residue class
/// c[0] + c[1]g + ... + c[k-1]g^{k-1} modulo the field's irreducible polynomial.
struct FqElt {
    std::vector<u32> c;
    ExtFieldPtr F;

    bool is_zero() const;
    FqElt inverse() const;
    FqElt pow(u64 e) const;
    bool in_prime_field() const;

    std::string str() const;  // compact, e.g. "2g+3", "g^2+1"
};

/// F_{p^k} = F_p[g]/(m(g)) with m the lexicographically smallest monic
/// irreducible of degree k. Construct through ExtField::make so elements can
/// share the descriptor.
class ExtField : public std::enable_shared_from_this<ExtField> {
  public:
    static ExtFieldPtr make(u32 p, unsigned k);

    u32 p() const { return p_; }
    unsigned degree() const { return k_; }
    u64 order() const { return order_; }
    const std::vector<u32>& modulus() const { return modulus_; }

    FqElt zero() const;
    FqElt one() const;
    FqElt generator() const;
    FqElt from_base(const FpElt& a) const;
    FqElt from_int(i64 v) const;
    /// Element with index i in [0, p^k): base-p digits are the coefficients.
    FqElt element(u64 index) const;
    u64 index_of(const FqElt& a) const;

    FqElt add(const FqElt& a, const FqElt& b) const;
    FqElt sub(const FqElt& a, const FqElt& b) const;
    FqElt mul(const FqElt& a, const FqElt& b) const;
    FqElt neg(const FqElt& a) const;

  private:
    ExtField(u32 p, unsigned k, std::vector<u32> modulus);

    u32 p_;
    unsigned k_;
    u64 order_;
    std::vector<u32> modulus_;  // monic, degree k, coefficients low to high (size k+1)
};

void check_same_field(const FqElt& a, const FqElt& b);

FqElt operator+(const FqElt& a, const FqElt& b);
FqElt operator-(const FqElt& a, const FqElt& b);
FqElt operator*(const FqElt& a, const FqElt& b);
FqElt operator-(const FqElt& a);
bool operator==(const FqElt& a, const FqElt& b);
inline bool operator!=(const FqElt& a, const FqElt& b) { return !(a == b); }

// trait shims for the generic polynomial
inline ExtFieldPtr field_of(const FqElt& a) { return a.F; }
inline bool same_field(const ExtFieldPtr& a, const ExtFieldPtr& b) {
    return a == b || (a && b && a->p() == b->p() && a->modulus() == b->modulus());
}
inline FqElt k_zero(const ExtFieldPtr& F) { return F->zero(); }
inline FqElt k_one(const ExtFieldPtr& F) { return F->one(); }
inline FqElt k_from_int(const ExtFieldPtr& F, i64 v) { return F->from_int(v); }
inline bool k_is_zero(const FqElt& a) { return a.is_zero(); }
inline std::string k_str(const FqElt& a) { return a.str(); }
inline u32 k_characteristic(const ExtFieldPtr& F) { return F->p(); }

}  // namespace isoell

#endif
