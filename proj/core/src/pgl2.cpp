#include "isoell/pgl2.hpp"

#include <algorithm>

#include "isoell/fq.hpp"

namespace isoell {

std::string ProjMat2::str() const {
    return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
}

ProjMat2 make_proj_mat(const TruncElt& a, const TruncElt& b, const TruncElt& c,
                       const TruncElt& d) {
    check_same_algebra(a, b);
    check_same_algebra(a, c);
    check_same_algebra(a, d);
    ProjMat2 M{a, b, c, d};
    if (!M.det().is_unit()) throw NotInPGL2("determinant " + M.det().str() + " is not a unit");
    return M;
}

ProjMat2 proj_identity(const TruncatedAlgebra& A) {
    return make_proj_mat(A.one(), A.zero(), A.zero(), A.one());
}

ProjMat2 proj_mul(const ProjMat2& M, const ProjMat2& N) {
    return make_proj_mat(M.a * N.a + M.b * N.c, M.a * N.b + M.b * N.d,
                         M.c * N.a + M.d * N.c, M.c * N.b + M.d * N.d);
}

ProjMat2 proj_scale(const ProjMat2& M, const TruncElt& u) {
    return ProjMat2{M.a * u, M.b * u, M.c * u, M.d * u};
}

bool proj_equal(const ProjMat2& M, const ProjMat2& N) {
    check_same_algebra(M.a, N.a);
    // If M = uN with u a unit, then u = m_e / n_e for any unit entry n_e of N.
    const TruncElt* m[4] = {&M.a, &M.b, &M.c, &M.d};
    const TruncElt* n[4] = {&N.a, &N.b, &N.c, &N.d};
    for (int i = 0; i < 4; ++i) {
        if (!n[i]->is_unit()) continue;
        TruncElt u = *m[i] * n[i]->inverse();
        if (!u.is_unit()) return false;
        bool ok = true;
        for (int j = 0; j < 4 && ok; ++j) ok = (*m[j] == *n[j] * u);
        return ok;
    }
    throw NotInPGL2("matrix " + N.str() + " has no unit entry");
}

ProjMat2 embed_ordinary(int eps, const TruncElt& t) {
    if (eps != 0 && eps != 1) throw InvalidGroupPoint("eps must be 0 or 1");
    const TruncatedAlgebra& A = t.alg;
    if (!(t * t == A.one()))
        throw InvalidGroupPoint("parameter " + t.str() + " is not a mu_2 point (t^2 != 1)");
    if (eps == 0) return make_proj_mat(t, A.zero(), A.zero(), A.one());
    return make_proj_mat(A.zero(), t, A.one(), A.zero());
}

ProjMat2 embed_supersingular(const TruncElt& t) {
    const TruncatedAlgebra& A = t.alg;
    if (A.p() != 2) throw InvalidGroupPoint("supersingular E[2] lives in characteristic 2");
    if (t.is_unit() || !t.power_vanishes(4))
        throw InvalidGroupPoint("parameter " + t.str() + " is not 4-step nilpotent");
    TruncElt t2 = t * t;
    return make_proj_mat(A.one(), t2, t, A.one() + t2 * t);
}

TruncatedAlgebra mu2_algebra(const std::string& var) {
    return TruncatedAlgebra(2, {{var, 2}});
}

TruncElt mu2_generic_point(const TruncatedAlgebra& A, const std::string& var) {
    return A.one() + A.gen(var);
}

namespace {

std::string fresh_var(const std::vector<std::string>& taken, std::string base) {
    while (std::find(taken.begin(), taken.end(), base) != taken.end()) base = "_" + base;
    return base;
}

// The cross product split by algebra monomial: each group carries a list of
// (deg_a, deg_b, coefficient) to evaluate at scan points.
struct CrossGroups {
    std::vector<std::vector<std::tuple<unsigned, unsigned, FpElt>>> groups;
};

CrossGroups cross_product_groups(const ProjMat2& M, const TruncatedAlgebra& ext,
                                 const std::string& va, const std::string& vb,
                                 size_t ia, size_t ib) {
    TruncElt A = ext.gen(va), B = ext.gen(vb);
    TruncElt cross = (embed_into(M.a, ext) * A + embed_into(M.b, ext) * B) * B -
                     (embed_into(M.c, ext) * A + embed_into(M.d, ext) * B) * A;
    std::map<Exponents, std::vector<std::tuple<unsigned, unsigned, FpElt>>> by_monomial;
    for (const auto& [e, c] : cross.poly.terms()) {
        Exponents gen_part = e;
        unsigned da = e[ia], db = e[ib];
        gen_part[ia] = 0;
        gen_part[ib] = 0;
        by_monomial[gen_part].emplace_back(da, db, c);
    }
    CrossGroups out;
    for (auto& [mono, list] : by_monomial) out.groups.push_back(std::move(list));
    return out;
}

}  // namespace

std::vector<P1FixedPoint> scan_fixed_points(const std::vector<ProjMat2>& matrices, u64 q_max) {
    std::vector<P1FixedPoint> found;
    u32 p = 2;
    TruncatedAlgebra base;
    if (!matrices.empty()) {
        base = matrices.front().a.alg;
        p = base.p();
        for (const ProjMat2& M : matrices)
            if (M.a.alg != base) throw ModulusMismatch("matrices over different algebras");
    } else {
        base = TruncatedAlgebra(2, {});
    }

    std::string va = fresh_var(base.vars(), "a");
    std::string vb = fresh_var(base.vars(), "b");
    TruncatedAlgebra ext = base.extended({{va, 4}, {vb, 4}});
    size_t ia = std::lower_bound(ext.vars().begin(), ext.vars().end(), va) - ext.vars().begin();
    size_t ib = std::lower_bound(ext.vars().begin(), ext.vars().end(), vb) - ext.vars().begin();

    std::vector<CrossGroups> crosses;
    for (const ProjMat2& M : matrices)
        crosses.push_back(cross_product_groups(M, ext, va, vb, ia, ib));

    for (unsigned k = 1;; ++k) {
        u64 q = 1;
        bool overflow = false;
        for (unsigned i = 0; i < k; ++i) {
            q *= p;
            if (q > q_max) {
                overflow = true;
                break;
            }
        }
        if (overflow || q > q_max) break;
        ExtFieldPtr F = ExtField::make(p, k);

        auto is_fixed = [&](const FqElt& a0, const FqElt& b0) {
            for (const CrossGroups& cg : crosses) {
                for (const auto& grp : cg.groups) {
                    FqElt acc = F->zero();
                    for (const auto& [da, db, coef] : grp)
                        acc = acc + F->from_base(coef) * a0.pow(da) * b0.pow(db);
                    if (!acc.is_zero()) return false;
                }
            }
            return true;
        };

        if (is_fixed(F->one(), F->zero())) found.push_back({q, "[1:0]"});
        for (u64 idx = 0; idx < F->order(); ++idx) {
            FqElt a0 = F->element(idx);
            if (is_fixed(a0, F->one())) found.push_back({q, "[" + a0.str() + ":1]"});
        }
    }
    return found;
}

}  // namespace isoell
