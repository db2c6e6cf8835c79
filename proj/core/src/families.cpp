#include "isoell/families.hpp"

#include <algorithm>

namespace isoell {

namespace {

u64 int_pow(u64 b, unsigned e) {
    u64 r = 1;
    while (e--) r *= b;
    return r;
}

/// Squarefreeness of a homogeneous binary form, via the dehomogenization:
/// the multiplicity of the root at infinity is deg f - deg f(x,1), and the
/// finite part is squarefree iff its derivative is nonzero with trivial gcd
/// (a vanishing derivative over F_p means a p-th power).
bool binary_form_squarefree(const MultiPoly& f, const std::string& x, const std::string& y) {
    if (f.vars() != std::vector<std::string>{std::min(x, y), std::max(x, y)})
        throw InvalidFamily("expected a binary form in " + x + ", " + y);
    unsigned d = f.total_degree();
    MultiPoly fx1(f.field(), {x});
    for (const auto& [e, c] : f.terms()) {
        // term x^i y^j with i + j = d; substitute y = 1
        unsigned i = 0;
        for (size_t v = 0; v < f.vars().size(); ++v)
            if (f.vars()[v] == x) i = e[v];
        Exponents ne{i};
        fx1.set_term(ne, fx1.coeff(ne) + c);
    }
    DensePoly<FpElt> F = dense_from(fx1, x);
    unsigned inf_mult = d - (F.empty() ? 0 : static_cast<unsigned>(F.size() - 1));
    if (inf_mult > 1) return false;
    return dense_is_squarefree(F);
}

}  // namespace

PlaneCurveFamily make_plane_family(u32 p, unsigned r, const MultiPoly& f,
                                   std::optional<unsigned> s) {
    require_prime(p);
    if (r == 0) throw InvalidFamily("need r >= 1");
    unsigned s_val = s.value_or(r);
    if (s_val == 0 || s_val > r) throw InvalidFamily("acting exponent s must satisfy 1 <= s <= r");
    if (f.field() != p) throw ModulusMismatch("f has the wrong characteristic");
    if (f.vars().size() != 2) throw InvalidFamily("f must be a binary form");
    if (!f.is_homogeneous() || f.is_zero()) throw InvalidFamily("f must be homogeneous and nonzero");
    if (f.total_degree() != int_pow(p, r))
        throw InvalidFamily("f must have degree p^r = " + std::to_string(int_pow(p, r)));
    if (!binary_form_squarefree(f, f.vars()[0], f.vars()[1]))
        throw InvalidFamily("f has a repeated root");
    return PlaneCurveFamily{p, r, s_val, f};
}

PlaneCurveFamily plane_family_from_roots(u32 p, unsigned r, const std::vector<i64>& roots,
                                         bool root_at_infinity, std::optional<unsigned> s) {
    require_prime(p);
    std::vector<u32> seen;
    MultiPoly x = MultiPoly::variable(p, "x"), y = MultiPoly::variable(p, "y");
    MultiPoly f = MultiPoly::constant(p, 1);
    for (i64 a : roots) {
        FpElt av = FpElt::from_int(a, p);
        if (std::find(seen.begin(), seen.end(), av.value) != seen.end())
            throw InvalidFamily("repeated root " + av.str());
        seen.push_back(av.value);
        f = f * (x - MultiPoly::constant(p, av.value) * y);
    }
    if (root_at_infinity) f = f * y;
    return make_plane_family(p, r, f, s);
}

SurfaceData plane_family_to_surface(const PlaneCurveFamily& fam, EType e_type, u64 hom_rank) {
    u64 pr = int_pow(fam.p, fam.r);
    u64 ps = int_pow(fam.p, fam.s);
    SurfaceData d;
    d.p = fam.p;
    d.group = GroupSchemeDesc{fam.p, {Atom::mu(ps)}};
    d.base_genus = 0;
    for (u64 i = 0; i < pr; ++i)
        d.orbits.push_back(OrbitDatum{ps, Character{{1 % ps}}, "root" + std::to_string(i)});
    d.e_type = e_type;
    d.hom_rank = hom_rank;
    long long degree = (-2) * static_cast<long long>(ps) +
                       static_cast<long long>(pr) * (static_cast<long long>(ps) - 1);
    d.x_hint = degree < 0   ? XHint::rational_smooth
               : degree == 0 ? XHint::rational_cuspidal
                             : XHint::higher;
    return d;
}

SpaceCurveFamily make_space_family(u32 p, unsigned n, const ExtFieldPtr& F,
                                   const std::vector<FqElt>& a) {
    require_prime(p);
    if (p < 5) throw InvalidFamily("the space family needs p >= 5");
    if (n == 0) throw InvalidFamily("need n >= 1");
    if (F->p() != p) throw ModulusMismatch("coefficient field has the wrong characteristic");
    u64 expected = int_pow(p, n) - 1;
    if (a.size() != expected)
        throw InvalidFamily("need p^n - 1 = " + std::to_string(expected) + " coefficients, got " +
                            std::to_string(a.size()));
    FqElt zero = F->zero(), one = F->one(), minus_one = -F->one();
    FqElt sum = zero;
    for (size_t i = 0; i < a.size(); ++i) {
        if (!same_field(a[i].F, F)) throw ModulusMismatch("coefficient outside the stated field");
        if (a[i] == zero || a[i] == one || a[i] == minus_one)
            throw InvalidFamily("coefficients must avoid 0, 1 and -1");
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] == a[j]) throw InvalidFamily("coefficients must be pairwise distinct");
        sum = sum + a[i];
    }
    if (!sum.is_zero()) throw InvalidFamily("the coefficients must sum to zero");
    return SpaceCurveFamily{p, n, F, a};
}

SpaceCurveFamily concrete_space_family_p5() {
    ExtFieldPtr F = ExtField::make(5, 2);
    FqElt w = F->generator();  // g^2 = -2: a non-square of F_5, conjugate pair (w, -w)
    std::vector<FqElt> a{F->from_int(2), F->from_int(3), w, -w};
    return make_space_family(5, 1, F, a);
}

MultiPolyQ space_h(const SpaceCurveFamily& fam) {
    MultiPolyQ x = MultiPolyQ::variable(fam.F, "x"), z = MultiPolyQ::variable(fam.F, "z");
    MultiPolyQ h = MultiPolyQ::constant(fam.F, 1);
    for (const FqElt& ai : fam.a) h = h * (MultiPolyQ::constant(fam.F, ai) * x + z);
    return h;
}

MultiPolyQ space_base_cubic(const SpaceCurveFamily& fam) {
    MultiPolyQ x = MultiPolyQ::variable(fam.F, "x"), y = MultiPolyQ::variable(fam.F, "y"),
               z = MultiPolyQ::variable(fam.F, "z");
    return y * y * z - x * (x + z) * (x - z);
}

std::vector<MultiPolyQ> space_curve_equations(const SpaceCurveFamily& fam) {
    MultiPolyQ g = space_base_cubic(fam);
    MultiPolyQ y = MultiPolyQ::variable(fam.F, "y"), z = MultiPolyQ::variable(fam.F, "z"),
               w = MultiPolyQ::variable(fam.F, "w");
    u64 pn = int_pow(fam.p, fam.n);
    MultiPolyQ W = w.pow(pn) - z * space_h(fam) - y.pow(pn);
    return {g, W};
}

SpaceProofChecks space_proof_checks(u32 p, unsigned n, const ExtFieldPtr& F,
                                    const std::vector<FqElt>& a) {
    SpaceCurveFamily fam{p, n, F, a};  // deliberately unvalidated
    MultiPolyQ h = space_h(fam);
    MultiPolyQ hx = h.derivative("x");
    MultiPolyQ hz = h.derivative("z");
    FqElt one = F->one(), minus_one = -F->one();
    auto at = [&](const MultiPolyQ& f, const FqElt& xv, const FqElt& zv) {
        return f.eval({xv, zv});
    };
    SpaceProofChecks out{
        at(hx, F->zero(), one),
        at(hx, one, one) + at(h, one, one) + at(hz, one, one),
        at(hx, one, minus_one) + at(h, one, minus_one) - at(hz, one, minus_one),
    };
    return out;
}

bool verify_calcoli(const SpaceCurveFamily& fam) {
    SpaceProofChecks c = space_proof_checks(fam.p, fam.n, fam.F, fam.a);
    return c.calcoli_first.is_zero() && c.calcoli_second.is_zero();
}

SurfaceData space_family_to_surface(const SpaceCurveFamily& fam, u64 hom_rank) {
    u64 pn = int_pow(fam.p, fam.n);
    SurfaceData d;
    d.p = fam.p;
    d.group = GroupSchemeDesc{fam.p, {Atom::mu(pn)}};
    d.base_genus = 1;
    for (u64 i = 0; i < pn; ++i)
        d.orbits.push_back(OrbitDatum{pn, Character{{1 % pn}}, "fiber" + std::to_string(i)});
    d.x_hint = XHint::higher;
    d.hom_rank = hom_rank;
    return d;
}

std::string ProjPoint::str() const {
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ":";
        s += coords[i];
    }
    return s + ")";
}

namespace {

// Allocation-free F_{p^k} arithmetic for the point scan; elements are fixed
// digit arrays reduced by the same modulus as the ExtField.
struct FqKernel {
    static constexpr unsigned kMaxDeg = 8;
    using E = std::array<u32, kMaxDeg>;

    u32 p = 0;
    unsigned k = 1;
    std::array<u32, kMaxDeg + 1> mod{};

    explicit FqKernel(const ExtField& F) : p(F.p()), k(F.degree()) {
        if (k > kMaxDeg) throw Error("scan kernel supports extension degree <= 8");
        for (unsigned i = 0; i <= k; ++i) mod[i] = F.modulus()[i];
    }

    E zero() const { return E{}; }
    E one() const {
        E e{};
        e[0] = 1 % p;
        return e;
    }
    E from(const FqElt& a) const {
        E e{};
        for (unsigned i = 0; i < k; ++i) e[i] = a.c[i];
        return e;
    }
    bool is_zero(const E& a) const {
        for (unsigned i = 0; i < k; ++i)
            if (a[i]) return false;
        return true;
    }
    E add(const E& a, const E& b) const {
        E r{};
        for (unsigned i = 0; i < k; ++i) {
            u32 s = a[i] + b[i];
            r[i] = s >= p ? s - p : s;
        }
        return r;
    }
    E sub(const E& a, const E& b) const {
        E r{};
        for (unsigned i = 0; i < k; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p - b[i];
        return r;
    }
    E mul(const E& a, const E& b) const {
        u64 acc[2 * kMaxDeg - 1] = {};
        for (unsigned i = 0; i < k; ++i) {
            if (!a[i]) continue;
            for (unsigned j = 0; j < k; ++j) acc[i + j] += static_cast<u64>(a[i]) * b[j];
        }
        for (unsigned i = 2 * k - 1; i-- > k;) {
            u32 c = static_cast<u32>(acc[i] % p);
            if (!c) continue;
            acc[i] = 0;
            for (unsigned j = 0; j < k; ++j) acc[i - k + j] += static_cast<u64>(c) * (p - mod[j]);
        }
        E r{};
        for (unsigned i = 0; i < k; ++i) r[i] = static_cast<u32>(acc[i] % p);
        return r;
    }
    E pow(E b, u64 e) const {
        E r = one();
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    E inv(const E& a, u64 q) const { return pow(a, q - 2); }
};

std::vector<ProjPoint> scan_over_field(const std::vector<MultiPolyQ>& eqs, const ExtFieldPtr& F,
                                       const std::vector<std::string>& coord_order) {
    if (eqs.empty()) return {};
    // common variable set (polynomials keep their variables sorted)
    std::vector<std::string> vars;
    for (const MultiPolyQ& f : eqs)
        for (const std::string& v : f.vars())
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    size_t nv = vars.size();
    if (nv < 2) throw Error("projective scan needs at least two coordinates");
    if (nv > 6) throw Error("projective scan supports at most 6 coordinates");

    // perm[j] = position in `vars` of the j-th display coordinate
    std::vector<size_t> perm(nv);
    if (coord_order.empty()) {
        for (size_t j = 0; j < nv; ++j) perm[j] = j;
    } else {
        std::vector<std::string> check = coord_order;
        std::sort(check.begin(), check.end());
        if (check != vars)
            throw Error("coordinate order must list exactly the equation variables");
        for (size_t j = 0; j < nv; ++j)
            perm[j] = static_cast<size_t>(
                std::lower_bound(vars.begin(), vars.end(), coord_order[j]) - vars.begin());
    }

    FqKernel ker(*F);
    using E = FqKernel::E;
    const u64 q = F->order();

    struct CTerm {
        E coeff;
        std::array<unsigned, 6> exp;
    };
    unsigned max_deg = 0;
    auto compile = [&](const MultiPolyQ& f) {
        std::vector<CTerm> out;
        MultiPolyQ af = f.aligned_to(vars);
        for (const auto& [e, c] : af.terms()) {
            CTerm t{ker.from(c), {}};
            for (size_t i = 0; i < nv; ++i) {
                t.exp[i] = e[i];
                max_deg = std::max(max_deg, e[i]);
            }
            out.push_back(t);
        }
        return out;
    };

    size_t m = eqs.size();
    std::vector<std::vector<CTerm>> compiled;     // equations first ...
    for (const MultiPolyQ& f : eqs) compiled.push_back(compile(f));
    for (const MultiPolyQ& f : eqs) {             // ... then their partials, row-major
        MultiPolyQ af = f.aligned_to(vars);
        for (const std::string& v : vars) compiled.push_back(compile(af.derivative(v)));
    }

    std::vector<E> powtab((max_deg + 1) * nv);  // powtab[v * (max_deg+1) + e]
    auto eval = [&](const std::vector<CTerm>& terms) {
        E acc = ker.zero();
        for (const CTerm& t : terms) {
            E prod = t.coeff;
            for (size_t i = 0; i < nv; ++i)
                if (t.exp[i]) prod = ker.mul(prod, powtab[i * (max_deg + 1) + t.exp[i]]);
            acc = ker.add(acc, prod);
        }
        return acc;
    };

    auto rank_below = [&]() {
        for (size_t i = 0; i < m; ++i)
            if (!ker.is_zero(eval(compiled[i]))) return false;
        std::vector<E> M(m * nv);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < nv; ++j) M[i * nv + j] = eval(compiled[m + i * nv + j]);
        size_t rank = 0;
        for (size_t col = 0; col < nv && rank < m; ++col) {
            size_t pivot = rank;
            while (pivot < m && ker.is_zero(M[pivot * nv + col])) ++pivot;
            if (pivot == m) continue;
            for (size_t j = 0; j < nv; ++j) std::swap(M[pivot * nv + j], M[rank * nv + j]);
            E inv = ker.inv(M[rank * nv + col], q);
            for (size_t i = rank + 1; i < m; ++i) {
                if (ker.is_zero(M[i * nv + col])) continue;
                E factor = ker.mul(M[i * nv + col], inv);
                for (size_t j = col; j < nv; ++j)
                    M[i * nv + j] = ker.sub(M[i * nv + j], ker.mul(factor, M[rank * nv + j]));
            }
            ++rank;
        }
        return rank < m;
    };

    std::vector<ProjPoint> found;
    std::vector<E> pt(nv);
    auto set_powtab = [&]() {
        for (size_t i = 0; i < nv; ++i) {
            powtab[i * (max_deg + 1)] = ker.one();
            for (unsigned e = 1; e <= max_deg; ++e)
                powtab[i * (max_deg + 1) + e] = ker.mul(powtab[i * (max_deg + 1) + e - 1], pt[i]);
        }
    };
    auto record = [&]() {
        ProjPoint P;
        P.q = q;
        for (size_t i = 0; i < nv; ++i) {
            FqElt c = F->zero();
            for (unsigned j = 0; j < ker.k; ++j) c.c[j] = pt[perm[i]][j];
            P.coords.push_back(c.str());
        }
        found.push_back(std::move(P));
    };

    // canonical representatives in display order: leading coordinate 1,
    // earlier ones 0
    for (size_t lead = 0; lead < nv; ++lead) {
        size_t free_coords = nv - lead - 1;
        u64 combos = 1;
        for (size_t i = 0; i < free_coords; ++i) combos *= q;
        for (u64 idx = 0; idx < combos; ++idx) {
            for (size_t i = 0; i < nv; ++i) pt[i] = ker.zero();
            pt[perm[lead]] = ker.one();
            u64 t = idx;
            for (size_t i = lead + 1; i < nv; ++i) {
                u64 v = t % q;
                t /= q;
                E e{};
                for (unsigned j = 0; j < ker.k; ++j) {
                    e[j] = static_cast<u32>(v % ker.p);
                    v /= ker.p;
                }
                pt[perm[i]] = e;
            }
            set_powtab();
            if (rank_below()) record();
        }
    }
    return found;
}

}  // namespace

std::vector<ProjPoint> singular_scan(const std::vector<MultiPolyQ>& equations, u64 q_max,
                                     const std::vector<std::string>& coordinate_order) {
    if (equations.empty()) return {};
    ExtFieldPtr F = equations.front().field();
    for (const MultiPolyQ& f : equations)
        if (!same_field(f.field(), F)) throw ModulusMismatch("equations over different fields");

    // Prime-field coefficients: scan the whole tower q = p, p^2, ... <= q_max.
    std::vector<MultiPoly> descended;
    bool prime_field = true;
    for (const MultiPolyQ& f : equations) {
        MultiPoly g;
        if (!try_descend_to_prime_field(f, g)) {
            prime_field = false;
            break;
        }
        descended.push_back(std::move(g));
    }
    if (prime_field) return singular_scan(descended, q_max, coordinate_order);

    if (F->order() > q_max) return {};
    return scan_over_field(equations, F, coordinate_order);
}

std::vector<ProjPoint> singular_scan(const std::vector<MultiPoly>& equations, u64 q_max,
                                     const std::vector<std::string>& coordinate_order) {
    if (equations.empty()) return {};
    u32 p = equations.front().field();
    std::vector<ProjPoint> found;
    for (unsigned k = 1;; ++k) {
        u64 q = 1;
        bool over = false;
        for (unsigned i = 0; i < k; ++i) {
            q *= p;
            if (q > q_max) {
                over = true;
                break;
            }
        }
        if (over || q > q_max) break;
        ExtFieldPtr F = ExtField::make(p, k);
        std::vector<MultiPolyQ> lifted;
        for (const MultiPoly& f : equations) lifted.push_back(lift_to_extension(f, F));
        auto part = scan_over_field(lifted, F, coordinate_order);
        found.insert(found.end(), part.begin(), part.end());
    }
    return found;
}

}  // namespace isoell
