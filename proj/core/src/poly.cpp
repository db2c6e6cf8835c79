#include "isoell/poly.hpp"

namespace isoell {

MultiPolyQ lift_to_extension(const MultiPoly& f, const ExtFieldPtr& F) {
    if (f.field() != F->p()) throw ModulusMismatch("characteristic mismatch in lift");
    MultiPolyQ r(F, f.vars());
    for (const auto& [e, c] : f.terms()) r.set_term(e, F->from_base(c));
    return r;
}

bool try_descend_to_prime_field(const MultiPolyQ& f, MultiPoly& out) {
    for (const auto& [e, c] : f.terms())
        if (!c.in_prime_field()) return false;
    u32 p = f.field()->p();
    MultiPoly r(p, f.vars());
    for (const auto& [e, c] : f.terms()) r.set_term(e, FpElt(c.c[0], p));
    out = std::move(r);
    return true;
}

}  // namespace isoell
